//! Structured verification reports with a stable JSON schema.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

/// Field selection for a run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldChoice {
    Gf32003,
    Qq,
}

impl FieldChoice {
    pub fn name(self) -> &'static str {
        match self {
            FieldChoice::Gf32003 => "gf32003",
            FieldChoice::Qq => "qq",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "gf32003" => Some(FieldChoice::Gf32003),
            "qq" => Some(FieldChoice::Qq),
            _ => None,
        }
    }
}

/// Engine configuration for one run.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub field: FieldChoice,
    /// Degree bound for Hilbert windows; `None` means "max twist + 10" per
    /// computation.
    pub max_degree: Option<i64>,
    pub max_res: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { field: FieldChoice::Gf32003, max_degree: None, max_res: 8, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigOut {
    pub field: String,
    #[serde(rename = "maxDegree")]
    pub max_degree: Option<i64>,
    #[serde(rename = "maxRes")]
    pub max_res: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Advisory,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Advisory => "advisory",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: String,
    pub expected: String,
    pub computed: String,
    pub status: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub config: ConfigOut,
    pub checks: Vec<Check>,
    pub verdict: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the timing fields nulled, for byte-comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.millis = 0;
        }
        copy.to_json()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "scenario: {}", self.scenario);
        let _ = writeln!(
            s,
            "config: field={} maxDegree={} maxRes={} seed={}",
            self.config.field,
            self.config
                .max_degree
                .map(|d| d.to_string())
                .unwrap_or_else(|| "auto".into()),
            self.config.max_res,
            self.config.seed
        );
        let _ = writeln!(
            s,
            "note: power-series rings are modeled as standard graded polynomial quotients; \
             every invariant checked here agrees with its completion"
        );
        let mut advisories = Vec::new();
        for c in &self.checks {
            if c.status == "advisory" {
                advisories.push(c);
                continue;
            }
            if c.kind == "note" {
                let _ = writeln!(s, "[NOTE] {}: {}", c.name, c.computed);
                continue;
            }
            let _ = writeln!(
                s,
                "[{}] ({}) {}  [expected {}, computed {}, {} ms]",
                c.status.to_uppercase(),
                c.kind,
                c.name,
                c.expected,
                c.computed,
                c.millis
            );
        }
        for c in &advisories {
            let _ = writeln!(
                s,
                "[ADVISORY] ({}) {}  [expected {}, computed {}, {} ms]",
                c.kind, c.name, c.expected, c.computed, c.millis
            );
        }
        let _ = writeln!(s, "verdict: {}", self.verdict);
        s
    }
}

/// Incrementally assembled report; checks keep their insertion order.
pub struct ReportBuilder {
    scenario: String,
    config: ConfigOut,
    checks: Vec<Check>,
}

impl ReportBuilder {
    pub fn new(scenario: &str, cfg: &RunConfig) -> Self {
        ReportBuilder {
            scenario: scenario.to_string(),
            config: ConfigOut {
                field: cfg.field.name().to_string(),
                max_degree: cfg.max_degree,
                max_res: cfg.max_res,
                seed: cfg.seed,
            },
            checks: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        name: &str,
        kind: &str,
        expected: &str,
        computed: &str,
        status: Status,
        started: Instant,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            kind: kind.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status: status.name().to_string(),
            millis: started.elapsed().as_millis() as u64,
        });
    }

    /// Record a plain pass/fail comparison.
    pub fn check(
        &mut self,
        name: &str,
        kind: &str,
        expected: &str,
        computed: &str,
        pass: bool,
        started: Instant,
    ) {
        self.push(
            name,
            kind,
            expected,
            computed,
            if pass { Status::Pass } else { Status::Fail },
            started,
        );
    }

    pub fn note(&mut self, name: &str, text: &str) {
        self.checks.push(Check {
            name: name.to_string(),
            kind: "note".to_string(),
            expected: text.to_string(),
            computed: text.to_string(),
            status: "pass".to_string(),
            millis: 0,
        });
    }

    pub fn all_passed_so_far(&self) -> bool {
        self.checks.iter().all(|c| c.status != "fail")
    }

    pub fn finish(self) -> Report {
        let verdict = if self.checks.iter().all(|c| c.status != "fail") {
            "pass"
        } else {
            "fail"
        };
        Report {
            scenario: self.scenario,
            config: self.config,
            checks: self.checks,
            verdict: verdict.to_string(),
        }
    }
}
