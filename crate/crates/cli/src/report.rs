use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Unstabilized,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub name: String,
    /// What mathematical statement the check exercises, or "plumbing".
    pub anchor: String,
    pub status: Status,
    pub witnesses: Value,
}

impl Record {
    pub fn new(name: impl Into<String>, anchor: &str, status: Status, witnesses: Value) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            status,
            witnesses,
        }
    }
}

/// The run configuration as echoed in the report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    /// `None` means each check uses its own default budget.
    pub max_degree: Option<usize>,
    pub stage_budget: usize,
    pub seed: u64,
    pub out: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(config: RunConfig, records: Vec<Record>) -> Self {
        Self {
            tool: "eqgc",
            version: env!("CARGO_PKG_VERSION"),
            config,
            records,
        }
    }

    pub fn has_failure(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
