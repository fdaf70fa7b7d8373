//! Acceptance suite. Every criterion is checked with exact arithmetic and
//! reported on one line; the process fails if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;

use richardson_core::harness::{verify, CheckResult, VerifyConfig};
use richardson_core::ingermanson::{appearance_matrix, label_set, pivot};
use richardson_core::{pds, IndexSet, Permutation, ReducedWord, WiringDiagram};

const SEED: u64 = 2024;
const SAMPLED_N: usize = 5;
const SAMPLED: usize = 200;
const TRIALS: usize = 100;

fn run(n: usize, exhaustive: bool, checks: &[&str]) -> Vec<CheckResult> {
    let config = VerifyConfig {
        n,
        exhaustive,
        sample: SAMPLED,
        seed: SEED,
        trials: TRIALS,
        checks: Some(checks.iter().map(|s| s.to_string()).collect()),
        ..VerifyConfig::default()
    };
    verify(&config).expect("verification runs").checks
}

/// Totals per check over several runs.
fn merge(runs: &[Vec<CheckResult>]) -> BTreeMap<String, (usize, usize, Option<String>)> {
    let mut out: BTreeMap<String, (usize, usize, Option<String>)> = BTreeMap::new();
    for r in runs.iter().flatten() {
        let e = out.entry(r.name.clone()).or_default();
        e.0 += r.cases_run;
        e.1 += r.failed;
        if e.2.is_none() {
            e.2 = r.first_counterexample.as_ref().map(|c| format!("{} {:?} {}: {}", c.v, c.word, c.mask, c.detail));
        }
    }
    out
}

fn fixtures() -> Result<usize, String> {
    let perm = |s: &str| Permutation::from_digits(s).map_err(|e| e.to_string());
    let word = |n: usize, l: &[usize]| ReducedWord::new(n, l.to_vec()).map_err(|e| e.to_string());
    let set = |l: &[usize]| IndexSet::new(l.iter().copied());
    let mut checked = 0;
    let mut expect = |ok: bool, what: &str| -> Result<(), String> {
        checked += 1;
        if ok {
            Ok(())
        } else {
            Err(what.to_string())
        }
    };

    let m = pds(&perm("3214")?, &word(4, &[1, 2, 1, 3, 2, 1])?).map_err(|e| e.to_string())?;
    expect(m.hollow_positions() == vec![3, 5, 6], "hollow positions for 3214")?;

    let (v, w) = (perm("12534")?, word(5, &[4, 3, 2, 1, 4, 3, 2, 3, 4])?);
    let m = pds(&v, &w).map_err(|e| e.to_string())?;
    expect(m.hollow_positions() == vec![5, 8], "hollow positions for 12534")?;

    let u = Permutation::from_word(5, &[4, 3]).map_err(|e| e.to_string())?;
    expect(pivot(&set(&[1, 3, 4]), &u).map_err(|e| e.to_string())? == set(&[1, 2, 3]), "pivot under s4 s3")?;
    let u = Permutation::from_word(5, &[4, 3, 4]).map_err(|e| e.to_string())?;
    expect(pivot(&set(&[1, 3, 4]), &u).map_err(|e| e.to_string())? == set(&[1, 2, 4]), "pivot under s4 s3 s4")?;

    let d = WiringDiagram::new(&v, &w).map_err(|e| e.to_string())?;
    expect(label_set(&d, 6, 9) == set(&[1, 3, 4]), "label set of chamber 6 at crossing 9")?;
    expect(appearance_matrix(&d).map_err(|e| e.to_string())?.get(6, 9) == 1, "entry (6, 9)")?;
    Ok(checked)
}

fn main() -> ExitCode {
    let per_case = ["appearance", "variables", "quiver", "structure", "stability"];
    let exhaustive_only = ["base-case", "hollow-relation", "exchange-ratio"];
    let all: Vec<&str> = per_case.iter().chain(&exhaustive_only).copied().collect();
    let totals = merge(&[run(4, true, &all), run(SAMPLED_N, false, &per_case), run(6, true, &["minor-identities"])]);

    let line = |k: usize, title: &str, names: &[&str]| -> bool {
        let (mut cases, mut failed, mut witness) = (0, 0, None);
        for n in names {
            let (c, f, w) = &totals[*n];
            cases += c;
            failed += f;
            if witness.is_none() {
                witness.clone_from(w);
            }
        }
        let ok = failed == 0 && cases > 0;
        println!("criterion {k} {title}: {} ({cases} runs, {failed} failed)", if ok { "PASS" } else { "FAIL" });
        if let Some(w) = witness {
            println!("    first counterexample: {w}");
        }
        ok
    };

    let mut ok = true;
    ok &= line(1, "appearance agreement", &["appearance"]);
    ok &= line(2, "variable correspondence", &["variables"]);
    ok &= line(3, "quiver equality", &["quiver"]);
    ok &= line(4, "base case", &["base-case"]);
    ok &= line(5, "exact identities", &["minor-identities", "hollow-relation"]);
    match fixtures() {
        Ok(k) => println!("criterion 6 regression fixtures: PASS ({k} values)"),
        Err(what) => {
            println!("criterion 6 regression fixtures: FAIL ({what})");
            ok = false;
        }
    }
    ok &= line(7, "structural counts", &["structure"]);
    ok &= line(8, "stability", &["stability"]);
    ok &= line(9, "exchange ratios", &["exchange-ratio"]);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
