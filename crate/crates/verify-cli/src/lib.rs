//! Scenario verifier for the exact homological algebra engine: a small DSL
//! for declaring rings, ideals, modules and assertions; bundled example
//! scenarios; seeded property suites; and structured pass/fail reports.

pub mod builtin;
pub mod eval;
pub mod properties;
pub mod report;
pub mod scenario;
pub mod thm23;

pub use builtin::run_paper_example;
pub use eval::{run_scenario, run_scenario_source};
pub use properties::run_property_suite;
pub use report::{FieldChoice, Report, RunConfig};
