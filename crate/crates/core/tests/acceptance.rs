//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use minheight::catalog::{self, builders as b, fixtures, CatalogEntry};
use minheight::verify::lemmas::{self, SuiteOptions, SuiteReport};
use minheight::verify::{self, EmReport, SweepConfig};
use minheight::{blocks, chartab, PermGroup};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn from_suites(suites: &[SuiteReport]) -> Outcome {
    let failures: Vec<String> = suites
        .iter()
        .flat_map(|s| s.failures.iter().cloned())
        .collect();
    let checks: usize = suites.iter().map(|s| s.instances).sum();
    if failures.is_empty() {
        outcome(true, format!("{} checks", checks))
    } else {
        outcome(
            false,
            format!(
                "{} of {} checks failed: {}",
                failures.len(),
                checks,
                failures.join("; ")
            ),
        )
    }
}

fn chartab_orthogonality(entries: &[CatalogEntry]) -> Outcome {
    let mut n = 0;
    let mut bad = Vec::new();
    for e in entries.iter().filter(|e| e.order() <= 2000) {
        n += 1;
        match chartab::character_table(&e.group) {
            Ok(t) => {
                let rep = t.check_orthogonality();
                let squares: u64 = t.degrees().iter().map(|d| d * d).sum();
                let classes = e.group.conjugacy_classes().map(|c| c.len()).unwrap_or(0);
                if !rep.all_ok() || squares != e.order() || t.num_classes() != classes {
                    bad.push(e.name.clone());
                }
            }
            Err(err) => bad.push(format!("{} ({})", e.name, err)),
        }
    }
    outcome(
        n >= 50 && bad.is_empty(),
        format!("{} groups, failures: {:?}", n, bad),
    )
}

fn has(reports: &[EmReport], group: &str, p: u64) -> bool {
    reports
        .iter()
        .any(|r| r.group == group && r.p == p && r.hypothesis_holds && r.theorem_holds)
}

fn theorem_sweep(reports: &[EmReport]) -> Outcome {
    let hyp: Vec<&EmReport> = reports.iter().filter(|r| r.hypothesis_holds).collect();
    let bad: Vec<String> = hyp
        .iter()
        .filter(|r| {
            let le = match (r.mh_b0, r.mh_p) {
                (_, None) => true,
                (None, Some(_)) => false,
                (Some(x), Some(y)) => x <= y,
            };
            !r.theorem_holds || r.witness_degree.is_none() || !le
        })
        .map(|r| format!("{} p={}", r.group, r.p))
        .collect();
    let required = [
        ("S4", 2),
        ("SL2(3)", 2),
        ("D8", 2),
        ("Q8", 2),
        ("3^(1+2)_+", 3),
        ("3^(1+2)_-", 3),
        ("5^(1+2)_+", 5),
        ("5^(1+2)_-", 5),
    ];
    let missing: Vec<String> = required
        .iter()
        .filter(|(g, p)| !has(reports, g, *p))
        .map(|(g, p)| format!("{} p={}", g, p))
        .collect();
    let wreath = hyp.iter().filter(|r| r.group.contains("wr")).count();
    let affine = hyp
        .iter()
        .filter(|r| r.group.starts_with("AGL") || r.group.starts_with("ASL"))
        .count();
    outcome(
        hyp.len() >= 30 && bad.is_empty() && missing.is_empty() && wreath > 0 && affine > 0,
        format!(
            "{} hypothesis instances ({} wreath, {} affine), failures {:?}, missing {:?}",
            hyp.len(),
            wreath,
            affine,
            bad,
            missing
        ),
    )
}

fn solvable_case(reports: &[EmReport]) -> Outcome {
    let solv: Vec<&EmReport> = reports
        .iter()
        .filter(|r| r.solvable && r.hypothesis_holds)
        .collect();
    let bad: Vec<String> = solv
        .iter()
        .filter(|r| {
            !r.theorem_holds
                || r.witness_in_pprime_quotient != Some(true)
                || r.principal_is_pprime_quotient != Some(true)
        })
        .map(|r| format!("{} p={}", r.group, r.p))
        .collect();
    outcome(
        !solv.is_empty() && bad.is_empty(),
        format!("{} solvable instances, failures {:?}", solv.len(), bad),
    )
}

fn abelian_sylow_heights(reports: &[EmReport]) -> Outcome {
    let ab: Vec<&EmReport> = reports
        .iter()
        .filter(|r| r.sylow_abelian && r.order <= 2000)
        .collect();
    let bad: Vec<String> = ab
        .iter()
        .filter(|r| r.bhz_height_zero != Some(true))
        .map(|r| format!("{} p={}", r.group, r.p))
        .collect();
    outcome(
        !ab.is_empty() && bad.is_empty(),
        format!("{} instances, failures {:?}", ab.len(), bad),
    )
}

fn block_fixtures(entries: &[CatalogEntry]) -> Outcome {
    let dist = |g: &PermGroup, p: u64| {
        let t = chartab::character_table(g).unwrap();
        let part = blocks::block_distribution(&t, p);
        (t, part)
    };
    let (t3, s3_2) = dist(&b::sym(3), 2);
    let deg2 = t3.degrees().iter().position(|&d| d == 2).unwrap();
    let s3_2_ok = s3_2.num_blocks() == 2
        && s3_2.defects[s3_2.block_of[deg2]] == 0
        && s3_2.blocks[s3_2.block_of[deg2]] == [deg2];
    let s3_3_ok = dist(&b::sym(3), 3).1.num_blocks() == 1;
    let s4_2_ok = dist(&b::sym(4), 2).1.num_blocks() == 1;
    let opts = SuiteOptions::default();
    let suites = [
        lemmas::covering_suite(entries, &opts),
        lemmas::p_constrained_suite(entries, &opts),
    ];
    let s = from_suites(&suites);
    outcome(
        s3_2_ok && s3_3_ok && s4_2_ok && s.ok,
        format!(
            "S3/2 {}, S3/3 {}, S4/2 {}; covering and p-constrained: {}",
            s3_2_ok, s3_3_ok, s4_2_ok, s.detail
        ),
    )
}

fn exceptional_fixtures() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for f in fixtures::LINEAR_FIXTURES.iter().filter(|f| !f.large) {
        match f.load().and_then(|m| m.is_p_exceptional()) {
            Ok(r) => {
                ok &= r.exceptional && r.orbit_sizes == f.orbit_sizes;
                parts.push(format!("{} {:?}", f.name, r.orbit_sizes));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{}: {}", f.name, e));
            }
        }
    }
    let suite = lemmas::exceptional_suite(&SuiteOptions::default());
    outcome(ok && suite.passed(), parts.join(", "))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let entries = catalog::builtin().expect("builtin catalog");
    let cfg = SweepConfig::default();
    let serial = verify::sweep(&entries, &cfg);
    let parallel = verify::sweep(
        &entries,
        &SweepConfig {
            jobs: 4,
            ..cfg.clone()
        },
    );
    let (js, jp) = (
        verify::reports_json(&serial),
        verify::reports_json(&parallel),
    );

    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            "character tables are exactly orthogonal",
            Box::new(|| chartab_orthogonality(&entries)),
        ),
        (
            "principal block witness and mh(B0) <= mh(P)",
            Box::new(|| theorem_sweep(&serial)),
        ),
        (
            "solvable witness in Irr(G/O_p'(G))",
            Box::new(|| solvable_case(&serial)),
        ),
        (
            "abelian Sylow: principal block of height zero",
            Box::new(|| abelian_sylow_heights(&serial)),
        ),
        (
            "block fixtures, covering, p-constrained",
            Box::new(|| block_fixtures(&entries)),
        ),
        (
            "concealed fixtures",
            Box::new(|| from_suites(&[lemmas::concealed_suite()])),
        ),
        (
            "exceptional linear fixtures",
            Box::new(exceptional_fixtures),
        ),
        (
            "hook partitions with p-part p",
            Box::new(|| from_suites(&[lemmas::hooks_suite()])),
        ),
        (
            "regular orbits on ordered partitions",
            Box::new(|| from_suites(&[lemmas::ordered_partitions_suite()])),
        ),
        (
            "TI Sylow subgroups of SL2/PSL2",
            Box::new(|| from_suites(&[lemmas::ti_sylow_suite()])),
        ),
        (
            "serial and parallel sweeps are byte-identical",
            Box::new(|| {
                outcome(
                    js == jp,
                    format!("{} bytes, {} reports", js.len(), serial.len()),
                )
            }),
        ),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        all &= o.ok;
        println!(
            "criterion {:>2}: {} {} ({}; {:.1}s)",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            name,
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} in {:.1}s",
        if all { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
