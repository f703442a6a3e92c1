//! Scenario runner and validation suites behind the `chordprop` binary.

pub mod error;
pub mod run;
pub mod scenario;
pub mod validate;

pub use error::{CliError, CliResult};
pub use run::{run_scenario, RunSummary};
pub use scenario::{Output, Scenario, TimeGrid, WignerWindow};
pub use validate::{run_suite, write_report, Report, Suite};
