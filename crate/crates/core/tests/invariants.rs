use richardson_core::harness::{verify, VerifyConfig, CHECKS};

#[test]
fn every_check_passes_up_to_four() {
    let report = verify(&VerifyConfig { n: 4, trials: 20, ..VerifyConfig::default() }).unwrap();
    assert_eq!(report.checks.len(), CHECKS.len());
    for c in &report.checks {
        assert!(c.cases_run > 0, "{} never ran", c.name);
        assert_eq!(c.failed, 0, "{}: {:?}", c.name, c.first_counterexample);
    }
}

#[test]
fn every_check_passes_on_sampled_fives() {
    let report =
        verify(&VerifyConfig { n: 5, exhaustive: false, sample: 40, seed: 7, trials: 5, ..VerifyConfig::default() })
            .unwrap();
    for c in &report.checks {
        assert_eq!(c.failed, 0, "{}: {:?}", c.name, c.first_counterexample);
    }
}
