//! Case enumeration and cross-checks over many cases.

mod cases;
mod checks;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use cases::{enumerate_cases, sample_cases, Case, EXHAUSTIVE_GUARD};
pub use checks::CaseData;

use crate::error::{Error, Result};

/// Largest `n` for the per-`n` minor identity sweep.
pub const MINOR_IDENTITY_GUARD: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// Run once per case.
    Case,
    /// Run once per `n`.
    Size,
}

#[derive(Debug, Clone, Copy)]
pub struct CheckInfo {
    pub name: &'static str,
    pub scope: Scope,
    pub description: &'static str,
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo { name: "pds", scope: Scope::Case, description: "greedy subexpression is the lexicographic maximum" },
    CheckInfo {
        name: "structure",
        scope: Scope::Case,
        description: "variable counts, unitriangular appearance, exact inverse, factor labelling",
    },
    CheckInfo {
        name: "pivot-monotone",
        scope: Scope::Case,
        description: "pivots increase in Gale order along the word",
    },
    CheckInfo {
        name: "appearance",
        scope: Scope::Case,
        description: "both constructions give the same appearance matrix and frozen set",
    },
    CheckInfo {
        name: "variables",
        scope: Scope::Case,
        description: "path endpoints, truncations and minors correspond",
    },
    CheckInfo { name: "quiver", scope: Scope::Case, description: "quivers agree, without loops or 2-cycles" },
    CheckInfo { name: "base-case", scope: Scope::Case, description: "index conditions decide the corner entry" },
    CheckInfo { name: "stability", scope: Scope::Case, description: "one-letter truncations keep appearance entries" },
    CheckInfo { name: "hollow-relation", scope: Scope::Case, description: "three-term relations at hollow crossings" },
    CheckInfo { name: "strip-maps", scope: Scope::Case, description: "generic maps between chamber modules" },
    CheckInfo {
        name: "spread-boundary",
        scope: Scope::Case,
        description: "shape of the region where a variable appears",
    },
    CheckInfo {
        name: "exchange-ratio",
        scope: Scope::Case,
        description: "exchange ratios from crossings match the quiver",
    },
    CheckInfo {
        name: "factor-evaluation",
        scope: Scope::Case,
        description: "chamber minors factor into variables numerically",
    },
    CheckInfo { name: "unipeak-existence", scope: Scope::Size, description: "every permutation has a unipeak word" },
    CheckInfo {
        name: "minor-identities",
        scope: Scope::Size,
        description: "factorization, translation and separation of minors",
    },
];

pub fn check_info(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: usize,
    /// Every case for each size up to `n`; otherwise `sample` cases of size `n`.
    pub exhaustive: bool,
    pub sample: usize,
    pub seed: u64,
    pub trials: usize,
    /// `None` runs every check.
    pub checks: Option<Vec<String>>,
    /// Restricts the run to a single case.
    pub only: Option<Case>,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n: 3,
            exhaustive: true,
            sample: 200,
            seed: 1,
            trials: 100,
            checks: None,
            only: None,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub v: String,
    pub word: Vec<usize>,
    pub mask: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub cases_run: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u128>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.into(),
            cases_run: 0,
            passed: 0,
            failed: 0,
            first_counterexample: None,
            elapsed_ms: None,
        }
    }

    fn record(&mut self, outcome: &std::result::Result<(), String>, witness: impl FnOnce(String) -> Counterexample) {
        self.cases_run += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(detail) => {
                self.failed += 1;
                if self.first_counterexample.is_none() {
                    self.first_counterexample = Some(witness(detail.clone()));
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub n: usize,
    pub exhaustive: bool,
    pub seed: u64,
    pub trials: usize,
    pub cases: usize,
    pub checks: Vec<CheckResult>,
    pub all_passed: bool,
}

fn per_case_seed(seed: u64, i: usize) -> u64 {
    seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn run_case_check(name: &str, d: &CaseData, trials: usize, seed: u64) -> std::result::Result<(), String> {
    match name {
        "pds" => checks::pds(d),
        "structure" => checks::structure(d),
        "pivot-monotone" => checks::pivot_monotone(d),
        "appearance" => checks::appearance(d),
        "variables" => checks::variables(d),
        "quiver" => checks::quiver(d),
        "base-case" => checks::base_case(d),
        "stability" => checks::stability(d),
        "hollow-relation" => checks::hollow_relation(d, trials, seed),
        "strip-maps" => checks::strip_maps(d, seed),
        "spread-boundary" => checks::spread_boundary(d),
        "exchange-ratio" => checks::exchange_ratio(d),
        "factor-evaluation" => checks::factor_evaluation(d, trials.min(10), seed),
        other => Err(format!("unknown check {other}")),
    }
}

fn case_witness(case: &Case) -> impl FnOnce(String) -> Counterexample + '_ {
    move |detail| {
        let mask = case.diagram().map(|d| d.mask().to_string()).unwrap_or_default();
        Counterexample { n: case.v.n(), v: case.v.to_string(), word: case.word.letters().to_vec(), mask, detail }
    }
}

/// Outcome of each selected per-case check on one case, with elapsed time.
type CaseOutcomes = Vec<(std::result::Result<(), String>, Duration)>;

fn run_one_case(case: &Case, names: &[&'static CheckInfo], trials: usize, seed: u64) -> CaseOutcomes {
    match CaseData::new(case) {
        Ok(d) => names
            .iter()
            .map(|c| {
                let start = Instant::now();
                let out = run_case_check(c.name, &d, trials, seed);
                (out, start.elapsed())
            })
            .collect(),
        Err(e) => names.iter().map(|_| (Err(format!("construction failed: {e}")), Duration::ZERO)).collect(),
    }
}

fn run_size_check(name: &str, n: usize, trials: usize, seed: u64) -> Option<std::result::Result<(), String>> {
    match name {
        "unipeak-existence" => (n <= EXHAUSTIVE_GUARD).then(|| checks::unipeak_existence(n)),
        "minor-identities" => (n <= MINOR_IDENTITY_GUARD).then(|| checks::minor_identities(n, trials, seed)),
        _ => None,
    }
}

/// The cases a configuration covers, in a fixed order.
pub fn cases_for(config: &VerifyConfig) -> Result<Vec<Case>> {
    if let Some(case) = &config.only {
        return Ok(vec![case.clone()]);
    }
    if config.exhaustive {
        let mut all = Vec::new();
        for k in 1..=config.n {
            all.extend(enumerate_cases(k)?);
        }
        Ok(all)
    } else {
        sample_cases(config.n, config.sample, config.seed)
    }
}

fn selected(config: &VerifyConfig) -> Result<Vec<&'static CheckInfo>> {
    let Some(names) = &config.checks else {
        return Ok(CHECKS.iter().collect());
    };
    names.iter().map(|n| check_info(n).ok_or_else(|| Error::Parse(format!("unknown check {n}")))).collect()
}

/// Runs the selected checks. The report is deterministic unless `timing` is set.
pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let infos = selected(config)?;
    let case_checks: Vec<&'static CheckInfo> = infos.iter().copied().filter(|c| c.scope == Scope::Case).collect();
    let cases = if case_checks.is_empty() { Vec::new() } else { cases_for(config)? };
    let outcomes: Vec<CaseOutcomes> = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| run_one_case(case, &case_checks, config.trials, per_case_seed(config.seed, i)))
        .collect();

    let mut results = Vec::new();
    for info in &infos {
        let mut r = CheckResult::new(info.name);
        let mut elapsed = Duration::ZERO;
        match info.scope {
            Scope::Case => {
                let j = case_checks.iter().position(|c| c.name == info.name).expect("selected");
                for (case, outs) in cases.iter().zip(&outcomes) {
                    r.record(&outs[j].0, case_witness(case));
                    elapsed += outs[j].1;
                }
            }
            Scope::Size => {
                let sizes = match &config.only {
                    Some(case) => case.v.n()..=case.v.n(),
                    None if config.exhaustive => 1..=config.n,
                    None => config.n..=config.n,
                };
                for k in sizes {
                    let start = Instant::now();
                    if let Some(out) = run_size_check(info.name, k, config.trials, per_case_seed(config.seed, k)) {
                        r.record(&out, |detail| Counterexample {
                            n: k,
                            v: String::new(),
                            word: Vec::new(),
                            mask: String::new(),
                            detail,
                        });
                    }
                    elapsed += start.elapsed();
                }
            }
        }
        if config.timing {
            r.elapsed_ms = Some(elapsed.as_millis());
        }
        results.push(r);
    }
    let all_passed = results.iter().all(|r| r.failed == 0);
    Ok(VerifyReport {
        schema: 1,
        n: config.n,
        exhaustive: config.exhaustive,
        seed: config.seed,
        trials: config.trials,
        cases: cases.len(),
        checks: results,
        all_passed,
    })
}
