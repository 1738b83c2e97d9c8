use serde::Serialize;
use serde_json::Value;
use uqpath_core::cyclotomic::BackendInfo;
use uqpath_core::hopf::IdentityCheck;

use crate::RunConfig;

#[derive(Debug, Serialize)]
pub struct Instance {
    #[serde(rename = "type")]
    pub name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    pub n: u32,
    pub t: usize,
    pub e: u32,
    pub scalars: BackendInfo,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub citation: &'static str,
    /// informational checks never affect the exit status
    pub required: bool,
    pub holds: bool,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, citation: &'static str, holds: bool) -> Self {
        Self { name: name.into(), citation, required: true, holds, checked: 1, failures: usize::from(!holds), first_failure: None }
    }

    pub fn from_identity(name: impl Into<String>, citation: &'static str, c: &IdentityCheck) -> Self {
        Self { name: name.into(), citation, required: true, holds: c.holds(), checked: c.checked, failures: c.failures, first_failure: c.first_failure.clone() }
    }

    pub fn counted(name: impl Into<String>, citation: &'static str, checked: usize, failures: usize, first_failure: Option<String>) -> Self {
        Self { name: name.into(), citation, required: true, holds: failures == 0, checked, failures, first_failure }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.first_failure = Some(d.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub config: &'a RunConfig,
    pub instance: Instance,
    pub results: Vec<Value>,
    pub checks: Vec<Check>,
}

impl Report<'_> {
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| c.required).all(|c| c.holds)
    }
}
