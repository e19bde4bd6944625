//! Driver for sextic-core: the classification run with its JSON report,
//! seeded property suites, and the acceptance checks used by both the CLI
//! and the test harness.

pub mod acceptance;
pub mod config;
pub mod dump;
pub mod error;
pub mod report;
pub mod suites;

use serde::Serialize;

pub use config::RunConfig;
pub use error::ForgeError;
pub use report::{run_classification, ClassificationReport};

use acceptance::{run_criteria, Criterion};
use suites::{reference_fixtures, TableFixture};

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutcome {
    pub seed: u64,
    pub criteria: Vec<Criterion>,
    /// Every failure, criteria first, then report rows.
    pub failures: Vec<String>,
    pub passed: bool,
}

impl VerifyOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            2
        }
    }
}

/// Built-in tables with any fixture of the same group swapped in.
pub fn tables_with(overrides: &[TableFixture]) -> Vec<TableFixture> {
    reference_fixtures()
        .into_iter()
        .map(|fx| overrides.iter().find(|o| o.group == fx.group).cloned().unwrap_or(fx))
        .collect()
}

/// Every property suite and the full classification, checked against the
/// ten acceptance criteria.
pub fn verify_all(cfg: &RunConfig, seed: u64, overrides: &[TableFixture]) -> Result<VerifyOutcome, ForgeError> {
    let report = run_classification(cfg)?;
    Ok(verify_with_report(seed, overrides, &report))
}

pub fn verify_with_report(seed: u64, overrides: &[TableFixture], report: &ClassificationReport) -> VerifyOutcome {
    let criteria = run_criteria(seed, &tables_with(overrides), report);
    let mut failures: Vec<String> =
        criteria.iter().filter(|c| !c.passed).map(|c| format!("criterion {} {}: {}", c.id, c.name, c.detail)).collect();
    failures.extend(report.failures());
    let passed = failures.is_empty();
    VerifyOutcome { seed, criteria, failures, passed }
}
