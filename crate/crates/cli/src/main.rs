use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use minheight::verify::{self, lemmas};
use minheight::{arith, blocks, catalog, chartab, combinat, Error, MatGroup, PermGroup};

/// Exact character tables, p-blocks and minimal heights.
#[derive(Parser)]
#[command(name = "mhcheck", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Character table of a permutation group file.
    Chartab {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// p-block distribution with defects and heights.
    Blocks {
        file: PathBuf,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Minimal heights of the principal block and of a Sylow subgroup.
    Mh {
        file: PathBuf,
        #[arg(short)]
        p: u64,
    },
    /// Whether every orbit on subsets has size prime to p.
    Concealed {
        file: PathBuf,
        #[arg(short)]
        p: u64,
    },
    /// Vector orbits of a matrix group file.
    Exceptional { file: PathBuf },
    /// Partition of n whose degree has p-part exactly p.
    Hooks { n: u32, p: u32 },
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Minimal-height sweep over a catalog.
    Em {
        /// `builtin` or a directory of .pgrp files.
        #[arg(long, default_value = "builtin")]
        catalog: String,
        #[arg(short, conflicts_with = "all_primes")]
        p: Option<u64>,
        #[arg(long)]
        all_primes: bool,
        #[arg(long, env = "EM_MAX_ORDER", default_value_t = 50_000)]
        max_order: u64,
        #[arg(long, env = "EM_JOBS", default_value_t = 1)]
        jobs: usize,
        /// JSON report path; a CSV is written next to it.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lift the order cap to the table size limit.
        #[arg(long)]
        large: bool,
        /// Record per-instance wall time (output is no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Lemma property suites.
    Lemmas {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        large: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Bad input or usage, as opposed to a failed verification.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<bool, InputError>;

fn read(path: &Path) -> std::result::Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}

fn load_perm(path: &Path) -> std::result::Result<PermGroup, InputError> {
    let text = read(path)?;
    catalog::parse_perm_group(&text).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}

fn load_mat(path: &Path) -> std::result::Result<MatGroup, InputError> {
    let text = read(path)?;
    catalog::parse_mat_group(&text).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
}

fn check_prime(p: u64) -> std::result::Result<(), InputError> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(InputError(format!("{} is not prime", p)))
    }
}

fn fmt_mh(h: Option<u32>) -> String {
    h.map(|x| x.to_string())
        .unwrap_or_else(|| "infinity".into())
}

fn cmd_chartab(file: &Path, json: bool) -> CmdResult {
    let g = load_perm(file)?;
    let t = chartab::character_table(&g)?;
    let ok = t.check_orthogonality().all_ok();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&t.to_json()).expect("json")
        );
    } else {
        print!("{}", t);
        println!("orthogonality: {}", if ok { "ok" } else { "FAILED" });
    }
    Ok(ok)
}

fn cmd_blocks(file: &Path, p: u64, json: bool) -> CmdResult {
    check_prime(p)?;
    let g = load_perm(file)?;
    let t = chartab::character_table(&g)?;
    let sylow = chartab::character_table(&g.sylow(p)?)?;
    let part = blocks::block_distribution(&t, p);
    let profile = blocks::height_profile(&t, &part, &sylow);
    if json {
        let doc = blocks::block_report_json(&t, &part, &profile);
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        return Ok(true);
    }
    println!(
        "|G| = {}, p = {}, blocks: {}",
        t.group_order(),
        p,
        part.num_blocks()
    );
    for (id, rows) in part.blocks.iter().enumerate() {
        let degrees: Vec<String> = rows.iter().map(|&r| t.degrees()[r].to_string()).collect();
        let heights: Vec<String> = rows
            .iter()
            .map(|&r| profile.heights[r].to_string())
            .collect();
        println!(
            "B{}{} defect {}: degrees [{}] heights [{}]",
            id,
            if id == part.principal_id {
                " (principal)"
            } else {
                ""
            },
            part.defects[id],
            degrees.join(", "),
            heights.join(", ")
        );
    }
    println!("mh(B0) = {}", fmt_mh(profile.mh_b0));
    Ok(true)
}

fn cmd_mh(file: &Path, p: u64) -> CmdResult {
    check_prime(p)?;
    let g = load_perm(file)?;
    let name = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let r = verify::check_theorem_a(&name, &g, p)?;
    println!("cd(P) = {:?}", r.cd_p);
    println!("mh(B0) = {}", fmt_mh(r.mh_b0));
    println!("mh(P) = {}", fmt_mh(r.mh_p));
    if r.hypothesis_holds {
        println!("two character degrees: yes (a = {})", r.a.unwrap_or(0));
        match r.witness_degree {
            Some(d) => println!("witness degree {}", d),
            None => println!("no witness"),
        }
    } else {
        println!("two character degrees: no");
    }
    if let Some(e) = &r.error {
        println!("error: {}", e);
    }
    println!(
        "theorem holds: {}",
        if r.theorem_holds { "yes" } else { "NO" }
    );
    Ok(!r.is_failure())
}

fn cmd_concealed(file: &Path, p: u64) -> CmdResult {
    check_prime(p)?;
    let g = load_perm(file)?;
    let r = combinat::is_p_concealed(&g, p)?;
    println!("p-concealed: {}", if r.concealed { "yes" } else { "no" });
    if !r.order_divisible {
        println!("{} does not divide |G|", p);
    }
    if let (Some(s), Some(size)) = (&r.offending_subset, r.offending_orbit_size) {
        let pts: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
        println!("orbit of {{{}}} has size {}", pts.join(","), size);
    }
    Ok(true)
}

fn cmd_exceptional(file: &Path) -> CmdResult {
    let m = load_mat(file)?;
    let r = m.is_p_exceptional()?;
    println!("|G| = {}", r.order);
    let sizes: Vec<String> = r.orbit_sizes.iter().map(|s| s.to_string()).collect();
    println!("orbit sizes: {}", sizes.join(","));
    println!(
        "{}-exceptional: {}",
        r.p,
        if r.exceptional { "yes" } else { "no" }
    );
    Ok(true)
}

fn cmd_hooks(n: u32, p: u32) -> CmdResult {
    let lambda = combinat::lemma42_partition(n, p)?;
    let d = combinat::hook_degree(&lambda);
    let parts: Vec<String> = lambda.parts().iter().map(|x| x.to_string()).collect();
    let v = arith::valuation_big(&d, p as u64);
    println!("λ = ({})", parts.join(","));
    println!("degree {}", d);
    println!("{}-part {}", p, (p as u64).pow(v));
    Ok(v == 1)
}

#[allow(clippy::too_many_arguments)]
fn cmd_em(
    catalog_arg: &str,
    p: Option<u64>,
    max_order: u64,
    jobs: usize,
    out: Option<&Path>,
    large: bool,
    timings: bool,
) -> CmdResult {
    if let Some(p) = p {
        check_prime(p)?;
    }
    let entries = if catalog_arg == "builtin" {
        catalog::builtin()?
    } else {
        catalog::load_dir(Path::new(catalog_arg))?
    };
    let max_order = if large {
        max_order.max(chartab::table_limits().0)
    } else {
        max_order
    };
    let cfg = verify::SweepConfig {
        prime: p,
        max_order,
        jobs: jobs.max(1),
        timings,
    };
    let reports = verify::sweep(&entries, &cfg);
    let summary = verify::summarize(&reports);
    if let Some(out) = out {
        let write = |path: &Path, text: String| {
            fs::write(path, text).map_err(|e| InputError(format!("{}: {}", path.display(), e)))
        };
        write(out, verify::reports_json(&reports))?;
        write(&out.with_extension("csv"), verify::reports_csv(&reports))?;
    }
    for r in reports.iter().filter(|r| r.is_failure()) {
        println!(
            "FAIL {} p={}: mh(B0)={} mh(P)={} witness={:?} error={:?}",
            r.group,
            r.p,
            fmt_mh(r.mh_b0),
            fmt_mh(r.mh_p),
            r.witness_degree,
            r.error
        );
    }
    println!(
        "{} instances, {} with two Sylow degrees, {} satisfied, {} failures",
        summary.instances, summary.hypothesis_instances, summary.theorem_holds, summary.failures
    );
    Ok(summary.failures == 0)
}

fn cmd_lemmas(suite: &str, large: bool, json: bool) -> CmdResult {
    let entries = catalog::builtin()?;
    let opts = lemmas::SuiteOptions {
        large,
        ..Default::default()
    };
    let reports = if suite == "all" {
        lemmas::run_all(&entries, &opts)
    } else {
        vec![lemmas::run_suite(suite, &entries, &opts)?]
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("json"));
    } else {
        for r in &reports {
            println!(
                "{} {} ({} checks)",
                if r.passed() { "PASS" } else { "FAIL" },
                r.name,
                r.instances
            );
            for n in &r.notes {
                println!("    {}", n);
            }
            for f in &r.failures {
                println!("    failure: {}", f);
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn run(cli: Cli) -> CmdResult {
    match cli.cmd {
        Cmd::Chartab { file, json } => cmd_chartab(&file, json),
        Cmd::Blocks { file, p, json } => cmd_blocks(&file, p, json),
        Cmd::Mh { file, p } => cmd_mh(&file, p),
        Cmd::Concealed { file, p } => cmd_concealed(&file, p),
        Cmd::Exceptional { file } => cmd_exceptional(&file),
        Cmd::Hooks { n, p } => cmd_hooks(n, p),
        Cmd::Verify(VerifyCmd::Em {
            catalog,
            p,
            all_primes: _,
            max_order,
            jobs,
            out,
            large,
            timings,
        }) => cmd_em(&catalog, p, max_order, jobs, out.as_deref(), large, timings),
        Cmd::Verify(VerifyCmd::Lemmas { suite, large, json }) => cmd_lemmas(&suite, large, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
