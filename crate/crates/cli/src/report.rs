//! The JSON verification report.

use std::time::Duration;

use psho_core::identity::SuiteResult;
use serde::{Deserialize, Serialize};

pub const PARAMETER_MODE: &str = "symbolic in lam, g over Q(I)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub suite: String,
    pub id: String,
    pub status: String,
    pub residual: String,
    pub anchor: String,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub parameters: String,
}

impl Default for Environment {
    fn default() -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters: PARAMETER_MODE.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub verified: usize,
    pub failed: usize,
    pub ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub failed: usize,
    pub suites: Vec<SuiteSummary>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub environment: Environment,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    /// Builds a report from suite results. Times are only kept when `timings`
    /// is set; otherwise every `ms` is zero so reruns are byte-identical.
    pub fn from_suites(results: &[(SuiteResult, Duration)], timings: bool) -> Self {
        let mut records = Vec::new();
        let mut times = Vec::new();
        for (suite, elapsed) in results {
            let ms = if timings { elapsed.as_millis() as u64 } else { 0 };
            times.push((suite.suite.clone(), ms));
            records.extend(suite.records.iter().map(|r| Record {
                suite: suite.suite.clone(),
                id: r.id.clone(),
                status: r.status().as_str().to_string(),
                residual: r.residual.render(),
                anchor: r.anchor.clone(),
                ms,
                note: r.note.clone(),
            }));
        }
        let mut report = Report {
            environment: Environment::default(),
            summary: Summary::default(),
            records,
        };
        report.summarize(&times);
        report
    }

    /// Recomputes the summary from the records; suite order follows first appearance.
    fn summarize(&mut self, times: &[(String, u64)]) {
        let mut suites: Vec<SuiteSummary> = Vec::new();
        for r in &self.records {
            let pos = match suites.iter().position(|s| s.suite == r.suite) {
                Some(p) => p,
                None => {
                    let ms = times.iter().find(|(s, _)| *s == r.suite).map_or(0, |t| t.1);
                    suites.push(SuiteSummary {
                        suite: r.suite.clone(),
                        ms,
                        ..SuiteSummary::default()
                    });
                    suites.len() - 1
                }
            };
            if r.status == "verified" {
                suites[pos].verified += 1;
            } else {
                suites[pos].failed += 1;
            }
        }
        let verified = suites.iter().map(|s| s.verified).sum();
        let failed = suites.iter().map(|s| s.failed).sum();
        self.summary = Summary {
            total: self.records.len(),
            verified,
            failed,
            suites,
        };
    }

    /// Combines several reports. A record whose `(suite, id)` appears again
    /// is replaced in place by the later copy.
    pub fn merge(reports: &[Report]) -> Report {
        let mut records: Vec<Record> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut times: Vec<(String, u64)> = Vec::new();
        for report in reports {
            for s in &report.summary.suites {
                match times.iter_mut().find(|(name, _)| *name == s.suite) {
                    Some(t) => t.1 = s.ms,
                    None => times.push((s.suite.clone(), s.ms)),
                }
            }
            for r in &report.records {
                match index.get(&(r.suite.clone(), r.id.clone())) {
                    Some(&i) => records[i] = r.clone(),
                    None => {
                        index.insert((r.suite.clone(), r.id.clone()), records.len());
                        records.push(r.clone());
                    }
                }
            }
        }
        let mut out = Report {
            environment: Environment::default(),
            summary: Summary::default(),
            records,
        };
        out.summarize(&times);
        out
    }

    pub fn all_verified(&self) -> bool {
        self.summary.failed == 0
    }

    /// True when the stored summary matches the record tallies.
    pub fn is_consistent(&self) -> bool {
        let mut fresh = self.clone();
        let times: Vec<(String, u64)> = self.summary.suites.iter().map(|s| (s.suite.clone(), s.ms)).collect();
        fresh.summarize(&times);
        fresh.summary == self.summary
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use psho_core::identity::{IdentityRecord, Residual};

    fn suite(name: &str, ok: &[bool]) -> SuiteResult {
        let records = ok
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let residual = if v { None } else { Some("1".to_string()) };
                IdentityRecord::new(format!("{name}.{i}"), "x = x", Residual::Rendered(residual))
            })
            .collect();
        SuiteResult::new(name, records)
    }

    #[test]
    fn summary_counts_match_records() {
        let r = Report::from_suites(&[(suite("a", &[true, false]), Duration::from_millis(5))], false);
        assert_eq!((r.summary.total, r.summary.verified, r.summary.failed), (2, 1, 1));
        assert!(r.records.iter().all(|x| x.ms == 0));
        assert!(r.is_consistent());
    }

    #[test]
    fn merge_replaces_repeated_ids() {
        let first = Report::from_suites(&[(suite("a", &[false]), Duration::ZERO)], false);
        let second = Report::from_suites(&[(suite("a", &[true]), Duration::ZERO), (suite("b", &[true]), Duration::ZERO)], false);
        let merged = Report::merge(&[first, second]);
        assert_eq!(merged.records.len(), 2);
        assert!(merged.all_verified());
        assert!(merged.is_consistent());
    }
}
