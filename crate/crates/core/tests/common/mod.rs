use paraspace::harness::{verify_reduction, Status, VerifyOptions};
use proptest::test_runner::TestCaseError;

/// Runs one generated case of `name` and fails on disagreement or error.
/// Budget skips pass.
pub fn one_case(name: &str, kind: Option<&str>, seed: u64) -> Result<(), TestCaseError> {
    let mut opts = VerifyOptions::new(1, seed);
    opts.budget = 1_000_000;
    opts.kind = kind.map(String::from);
    let r = verify_reduction(name, &opts).map_err(|e| TestCaseError::fail(e.to_string()))?.remove(0);
    match r.status {
        Status::Agree | Status::Skipped => Ok(()),
        _ => Err(TestCaseError::fail(format!("{name} seed {seed}: {r:?}"))),
    }
}
