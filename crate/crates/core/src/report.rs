//! Structured results of verification checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub q_exp: u32,
    pub colour_exps: BTreeMap<String, u32>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            first_discrepancy: None,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Compares two series up to `q^{up_to}`. Only the first failing
    /// comparison is recorded; `label` says which one it was.
    pub fn compare(&mut self, label: &str, lhs: &Series, rhs: &Series, up_to: u32) -> Result<bool> {
        let found = lhs.first_discrepancy(rhs, up_to)?;
        let Some((m, l, r)) = found else {
            return Ok(true);
        };
        if self.passed() {
            self.status = Status::Fail;
            self.first_discrepancy = Some(Discrepancy {
                q_exp: m.q_exp(),
                colour_exps: lhs
                    .vars()
                    .names()
                    .iter()
                    .cloned()
                    .zip(m.colour_exps().iter().copied())
                    .collect(),
                lhs: l.to_string(),
                rhs: r.to_string(),
            });
            self.notes.push(format!("first failure: {label}"));
        }
        Ok(false)
    }

    /// Records a failed boolean condition.
    pub fn require(&mut self, label: &str, ok: bool) -> bool {
        if !ok && self.passed() {
            self.status = Status::Fail;
            self.notes.push(format!("first failure: {label}"));
        }
        ok
    }
}

/// Everything checked for one identity case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: String,
    pub n_max: u32,
    pub truncation: u32,
    pub checks: Vec<CheckReport>,
    /// Coefficient sums at `q^0 ..= q^{n_max}` for each computed side.
    pub totals: BTreeMap<String, Vec<String>>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Variables;

    #[test]
    fn first_failure_is_kept() {
        let vars = Variables::acd();
        let one = Series::one(&vars, 4);
        let two = Series::constant(&vars, 4, 2);
        let mut rep = CheckReport::new("demo").param("n", 4);
        assert!(rep.compare("same", &one, &one, 4).unwrap());
        assert!(!rep.compare("differs", &one, &two, 4).unwrap());
        assert!(!rep.compare("again", &two, &one, 4).unwrap());
        let d = rep.first_discrepancy.as_ref().unwrap();
        assert_eq!((d.q_exp, d.lhs.as_str(), d.rhs.as_str()), (0, "1", "2"));
        assert_eq!(rep.notes, vec!["first failure: differs"]);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["status"], "fail");
    }
}
