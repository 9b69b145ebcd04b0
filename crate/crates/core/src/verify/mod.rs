//! The minimal-height sweep over a catalog and the lemma property suites.
//!
//! Reports are plain data with a fixed field order; a sweep sorts them by
//! `(order, group, p)` so serial and parallel runs serialize identically.

pub mod lemmas;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::blocks;
use crate::catalog::CatalogEntry;
use crate::chartab::{self, CharacterTable};
use crate::error::Result;
use crate::permgroup::PermGroup;

pub const REPORT_SCHEMA: &str = "minheight/em-report/v1";

/// Whether `cd(P) = {1, p^a}` for a Sylow `p`-subgroup `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_abelian: bool,
    pub cd_p: Vec<u64>,
    pub holds: bool,
    pub a: Option<u32>,
}

pub fn check_hypothesis(g: &PermGroup, p: u64) -> Result<HypothesisCheck> {
    let sylow = g.sylow(p)?;
    let table = chartab::character_table(&sylow)?;
    Ok(hypothesis_from_table(&sylow, &table, p))
}

fn hypothesis_from_table(sylow: &PermGroup, table: &CharacterTable, p: u64) -> HypothesisCheck {
    let cd: Vec<u64> = table.degree_data().cd.into_iter().collect();
    let a = match cd.as_slice() {
        [1, d] if arith::is_p_power(*d, p) => Some(arith::valuation(*d, p)),
        _ => None,
    };
    HypothesisCheck {
        p,
        sylow_order: table.group_order(),
        sylow_abelian: sylow.is_abelian(),
        cd_p: cd,
        holds: a.is_some(),
        a,
    }
}

/// One `(G, p)` instance of the sweep. `None` heights mean infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmReport {
    pub group: String,
    pub order: u64,
    pub p: u64,
    pub sylow_order: u64,
    pub cd_p: Vec<u64>,
    pub sylow_abelian: bool,
    pub hypothesis_holds: bool,
    pub a: Option<u32>,
    pub solvable: bool,
    pub table_computed: bool,
    pub num_blocks: Option<usize>,
    pub principal_block_size: Option<usize>,
    pub mh_b0: Option<u32>,
    pub mh_p: Option<u32>,
    /// Degree of the first `χ` in `B_0` with `1 <= v_p(χ(1)) <= a`.
    pub witness_degree: Option<u64>,
    pub theorem_holds: bool,
    pub em_equality_observed: Option<bool>,
    /// Abelian Sylow: every character of `B_0` has height zero.
    pub bhz_height_zero: Option<bool>,
    /// Solvable: `Irr(B_0(G)) = Irr(G / O_{p'}(G))`.
    pub principal_is_pprime_quotient: Option<bool>,
    /// Solvable with the hypothesis: the witness lies in `Irr(G / O_{p'}(G))`.
    pub witness_in_pprime_quotient: Option<bool>,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl EmReport {
    fn empty(name: &str, order: u64, p: u64, solvable: bool) -> Self {
        EmReport {
            group: name.to_string(),
            order,
            p,
            sylow_order: 1,
            cd_p: vec![],
            sylow_abelian: true,
            hypothesis_holds: false,
            a: None,
            solvable,
            table_computed: false,
            num_blocks: None,
            principal_block_size: None,
            mh_b0: None,
            mh_p: None,
            witness_degree: None,
            theorem_holds: true,
            em_equality_observed: None,
            bhz_height_zero: None,
            principal_is_pprime_quotient: None,
            witness_in_pprime_quotient: None,
            error: None,
            elapsed_ms: None,
        }
    }

    /// Any check that was evaluated came out false, or the instance failed
    /// to run.
    pub fn is_failure(&self) -> bool {
        !self.theorem_holds
            || self.error.is_some()
            || self.bhz_height_zero == Some(false)
            || self.principal_is_pprime_quotient == Some(false)
            || self.witness_in_pprime_quotient == Some(false)
    }
}

/// `mh(B_0) <= mh(P)` with `None` as infinity.
fn mh_le(a: Option<u32>, b: Option<u32>) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

/// Theorem A check for one prime, given the table of `G` if available.
fn check_with_table(
    name: &str,
    g: &PermGroup,
    table: Option<&CharacterTable>,
    table_error: Option<&str>,
    p: u64,
) -> Result<EmReport> {
    let order = g.order_u64().expect("sweep groups are small");
    let solvable = g.is_solvable();
    let mut r = EmReport::empty(name, order, p, solvable);
    let sylow = g.sylow(p)?;
    let sylow_table = chartab::character_table(&sylow)?;
    let hyp = hypothesis_from_table(&sylow, &sylow_table, p);
    r.sylow_order = hyp.sylow_order;
    r.cd_p = hyp.cd_p.clone();
    r.sylow_abelian = hyp.sylow_abelian;
    r.hypothesis_holds = hyp.holds;
    r.a = hyp.a;
    r.mh_p = blocks::mh_of_degrees(sylow_table.degrees(), p);

    let Some(table) = table else {
        if hyp.holds {
            r.error = Some(
                table_error
                    .unwrap_or("character table unavailable")
                    .to_string(),
            );
            r.theorem_holds = false;
        }
        return Ok(r);
    };
    r.table_computed = true;
    let part = blocks::block_distribution(table, p);
    let profile = blocks::height_profile(table, &part, &sylow_table);
    let principal = part.principal_block();
    r.num_blocks = Some(part.num_blocks());
    r.principal_block_size = Some(principal.len());
    r.mh_b0 = profile.mh_b0;
    r.em_equality_observed = Some(r.mh_b0 == r.mh_p);
    if hyp.sylow_abelian {
        r.bhz_height_zero = Some(principal.iter().all(|&chi| profile.heights[chi] == 0));
    }
    let witness = hyp.a.and_then(|a| {
        principal.iter().copied().find(|&chi| {
            let v = arith::valuation(table.degrees()[chi], p);
            (1..=a).contains(&v)
        })
    });
    r.witness_degree = witness.map(|chi| table.degrees()[chi]);
    if hyp.holds {
        r.theorem_holds = witness.is_some() && mh_le(r.mh_b0, r.mh_p);
    }
    if solvable {
        let opp = g.p_prime_core(p)?;
        let mut quotient = table.characters_with_kernel_containing(&opp);
        quotient.sort_unstable();
        let mut b0 = principal.to_vec();
        b0.sort_unstable();
        r.principal_is_pprime_quotient = Some(quotient == b0);
        if let Some(chi) = witness {
            r.witness_in_pprime_quotient = Some(quotient.binary_search(&chi).is_ok());
        }
    }
    Ok(r)
}

/// Full report for `(G, p)`.
pub fn check_theorem_a(name: &str, g: &PermGroup, p: u64) -> Result<EmReport> {
    let start = Instant::now();
    let table = chartab::character_table(g);
    let (t, err) = match &table {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut r = check_with_table(name, g, t, err.as_deref(), p)?;
    r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// A single prime, or every prime divisor of `|G|` when `None`.
    pub prime: Option<u64>,
    pub max_order: u64,
    pub jobs: usize,
    /// Record wall-clock time per instance (breaks byte-identical output).
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            prime: None,
            max_order: 50_000,
            jobs: 1,
            timings: false,
        }
    }
}

fn sweep_group(entry: &CatalogEntry, cfg: &SweepConfig) -> Vec<EmReport> {
    let order = entry.order();
    let primes: Vec<u64> = match cfg.prime {
        Some(p) if order % p == 0 => vec![p],
        Some(_) => vec![],
        None => arith::prime_divisors(order),
    };
    if primes.is_empty() {
        return vec![];
    }
    let start = Instant::now();
    let table = chartab::character_table(&entry.group);
    let (t, err) = match &table {
        Ok(t) => (Some(t), None),
        Err(e) => (None, Some(e.to_string())),
    };
    primes
        .into_iter()
        .map(|p| {
            let mut r = check_with_table(&entry.name, &entry.group, t, err.as_deref(), p)
                .unwrap_or_else(|e| {
                    let mut r = EmReport::empty(&entry.name, order, p, entry.group.is_solvable());
                    r.error = Some(e.to_string());
                    r.theorem_holds = false;
                    r
                });
            if cfg.timings {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            r
        })
        .collect()
}

/// Run every `(G, p)` instance of `entries` with `|G| <= max_order`.
pub fn sweep(entries: &[CatalogEntry], cfg: &SweepConfig) -> Vec<EmReport> {
    let selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| e.order() <= cfg.max_order)
        .collect();
    let (limit, classes) = chartab::table_limits();
    if limit < cfg.max_order {
        chartab::set_table_limits(cfg.max_order, classes);
    }
    let run = || -> Vec<EmReport> {
        selected
            .par_iter()
            .flat_map_iter(|e| sweep_group(e, cfg))
            .collect()
    };
    let mut reports = if cfg.jobs <= 1 {
        selected.iter().flat_map(|e| sweep_group(e, cfg)).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run())
    };
    reports.sort_by(|a, b| (a.order, &a.group, a.p).cmp(&(b.order, &b.group, b.p)));
    reports
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub hypothesis_instances: usize,
    pub theorem_holds: usize,
    pub failures: usize,
}

pub fn summarize(reports: &[EmReport]) -> SweepSummary {
    SweepSummary {
        instances: reports.len(),
        hypothesis_instances: reports.iter().filter(|r| r.hypothesis_holds).count(),
        theorem_holds: reports
            .iter()
            .filter(|r| r.hypothesis_holds && r.theorem_holds)
            .count(),
        failures: reports.iter().filter(|r| r.is_failure()).count(),
    }
}

/// The versioned JSON document for a sweep.
pub fn reports_json(reports: &[EmReport]) -> String {
    let doc = serde_json::json!({
        "schema": REPORT_SCHEMA,
        "summary": summarize(reports),
        "reports": reports,
    });
    serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
}

fn csv_opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

/// Flat CSV, one row per report; empty cells stand for null.
pub fn reports_csv(reports: &[EmReport]) -> String {
    let mut out = String::from(
        "group,order,p,sylow_order,cd_p,sylow_abelian,hypothesis_holds,a,solvable,table_computed,\
         num_blocks,principal_block_size,mh_b0,mh_p,witness_degree,theorem_holds,em_equality_observed,\
         bhz_height_zero,principal_is_pprime_quotient,witness_in_pprime_quotient,error\n",
    );
    for r in reports {
        let cd: Vec<String> = r.cd_p.iter().map(|d| d.to_string()).collect();
        let fields = [
            format!("\"{}\"", r.group),
            r.order.to_string(),
            r.p.to_string(),
            r.sylow_order.to_string(),
            format!("\"{}\"", cd.join(" ")),
            r.sylow_abelian.to_string(),
            r.hypothesis_holds.to_string(),
            csv_opt(&r.a),
            r.solvable.to_string(),
            r.table_computed.to_string(),
            csv_opt(&r.num_blocks),
            csv_opt(&r.principal_block_size),
            csv_opt(&r.mh_b0),
            csv_opt(&r.mh_p),
            csv_opt(&r.witness_degree),
            r.theorem_holds.to_string(),
            csv_opt(&r.em_equality_observed),
            csv_opt(&r.bhz_height_zero),
            csv_opt(&r.principal_is_pprime_quotient),
            csv_opt(&r.witness_in_pprime_quotient),
            r.error
                .as_ref()
                .map(|e| format!("\"{}\"", e.replace('"', "'")))
                .unwrap_or_default(),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}
