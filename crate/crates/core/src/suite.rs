//! Batch suites: input parsing, the default desk-scale instance set, the
//! (optionally parallel) runner, and the exit-code contract.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::caps::Caps;
use crate::instance::Instance;
use crate::report::{analyze, AnalysisReport, Checks};

/// Exit codes: 0 all claims verified, 2 a claim failed, 3 validation error,
/// 4 caps prevented a required check.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_CAPPED: i32 = 4;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("cannot read suite file: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed suite file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("instance {index}: declared m = {declared} but a has length {actual}")]
    BadM { index: usize, declared: usize, actual: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteInstance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteSpec {
    pub instances: Vec<SuiteInstance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Checks>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permissive: Option<bool>,
}

impl SuiteSpec {
    /// Parse a suite file: either `{"instances": [...], ...}` or a bare
    /// array of instances.
    pub fn parse(text: &str) -> Result<Self, SuiteError> {
        let trimmed = text.trim_start();
        let spec = if trimmed.starts_with('[') {
            SuiteSpec {
                instances: serde_json::from_str(text)?,
                ..SuiteSpec::default()
            }
        } else {
            serde_json::from_str(text)?
        };
        for (index, inst) in spec.instances.iter().enumerate() {
            if let Some(declared) = inst.m {
                if declared != inst.a.len() {
                    return Err(SuiteError::BadM { index, declared, actual: inst.a.len() });
                }
            }
        }
        Ok(spec)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, SuiteError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

/// Outcome for one instance: a report, or the validation error that stopped
/// it.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceOutcome {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<AnalysisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation_error: Option<String>,
    /// A resource cap stopped the basis computation itself.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine_error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteSummary {
    pub instances: usize,
    pub passed: usize,
    pub claim_failures: usize,
    pub validation_errors: usize,
    pub capped: usize,
    pub flagged: usize,
    /// `instance-index: claim — detail` lines for every hard failure.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteOutcome {
    pub summary: SuiteSummary,
    pub reports: Vec<InstanceOutcome>,
}

impl SuiteOutcome {
    pub fn exit_code(&self) -> i32 {
        if self.summary.claim_failures > 0 {
            EXIT_CLAIM_FAILED
        } else if self.summary.validation_errors > 0 {
            EXIT_VALIDATION
        } else if self.summary.capped > 0 {
            EXIT_CAPPED
        } else {
            EXIT_OK
        }
    }
}

fn run_one(spec: &SuiteSpec, inst: &SuiteInstance, defaults: (&Checks, &Caps)) -> InstanceOutcome {
    let checks = inst.checks.as_ref().or(spec.checks.as_ref()).unwrap_or(defaults.0);
    let caps = inst.caps.as_ref().or(spec.caps.as_ref()).unwrap_or(defaults.1);
    let permissive = spec.permissive.unwrap_or(false);
    match Instance::new(inst.a.clone(), inst.b.clone(), permissive) {
        Ok(validated) => match analyze(&validated, checks, caps) {
            Ok(report) => InstanceOutcome {
                a: inst.a.clone(),
                b: inst.b.clone(),
                report: Some(report),
                validation_error: None,
                engine_error: None,
            },
            Err(err) => InstanceOutcome {
                a: inst.a.clone(),
                b: inst.b.clone(),
                report: None,
                validation_error: None,
                engine_error: Some(err.to_string()),
            },
        },
        Err(err) => InstanceOutcome {
            a: inst.a.clone(),
            b: inst.b.clone(),
            report: None,
            validation_error: Some(err.to_string()),
            engine_error: None,
        },
    }
}

/// Run every instance of the suite; `jobs = 1` is fully sequential, larger
/// values use a local thread pool.  Report order always follows input order.
pub fn run_suite(spec: &SuiteSpec, jobs: usize, checks: &Checks, caps: &Caps) -> SuiteOutcome {
    let reports: Vec<InstanceOutcome> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            spec.instances
                .par_iter()
                .map(|inst| run_one(spec, inst, (checks, caps)))
                .collect()
        })
    } else {
        spec.instances.iter().map(|inst| run_one(spec, inst, (checks, caps))).collect()
    };

    let mut summary = SuiteSummary {
        instances: reports.len(),
        passed: 0,
        claim_failures: 0,
        validation_errors: 0,
        capped: 0,
        flagged: 0,
        failures: Vec::new(),
    };
    for (idx, outcome) in reports.iter().enumerate() {
        match (&outcome.report, &outcome.validation_error) {
            (None, None) => {
                debug_assert!(outcome.engine_error.is_some());
                summary.capped += 1;
            }
            (Some(report), _) => {
                let failed = report.failed_claims();
                if failed.is_empty() {
                    summary.passed += 1;
                } else {
                    summary.claim_failures += failed.len();
                    for claim in failed {
                        summary.failures.push(format!(
                            "{idx} (a={:?}, b={:?}): {} — {}",
                            outcome.a,
                            outcome.b,
                            claim.name,
                            claim.detail.as_deref().unwrap_or("")
                        ));
                    }
                }
                if report.caps_were_hit() {
                    summary.capped += 1;
                }
                summary.flagged +=
                    report.claims.iter().filter(|c| c.flagged && c.ok == Some(false)).count();
            }
            (None, Some(_)) => summary.validation_errors += 1,
        }
    }
    summary.failures.sort();
    SuiteOutcome { summary, reports }
}

/// The default desk-scale suite: every valid `m = 3` instance with
/// `a_i <= 5` (the named instances of the structural results are all among
/// them).
pub fn default_desk_suite() -> Vec<SuiteInstance> {
    let mut out = Vec::new();
    for a1 in 1..=5u64 {
        for a2 in 1..=5u64 {
            for a3 in 1..=5u64 {
                let a = [a1, a2, a3];
                for b1 in 0..a1 {
                    for b2 in 0..a2 {
                        for b3 in 0..a3 {
                            let b = [b1, b2, b3];
                            if b.iter().filter(|&&x| x > 0).count() < 2 {
                                continue;
                            }
                            out.push(SuiteInstance {
                                m: Some(3),
                                a: a.to_vec(),
                                b: b.to_vec(),
                                caps: None,
                                checks: None,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_both_layouts() {
        let bare = r#"[{"a": [3,3,3], "b": [1,1,1]}]"#;
        let spec = SuiteSpec::parse(bare).unwrap();
        assert_eq!(spec.instances.len(), 1);
        let with_overrides = r#"{
            "instances": [{"m": 3, "a": [3,3,3], "b": [1,1,1]}],
            "caps": {"maxSpairs": 1000},
            "checks": {"homology": false}
        }"#;
        let spec = SuiteSpec::parse(with_overrides).unwrap();
        assert_eq!(spec.caps.as_ref().unwrap().max_spairs, 1000);
        assert!(!spec.checks.as_ref().unwrap().homology);
        assert!(SuiteSpec::parse("{").is_err());
        assert!(SuiteSpec::parse(r#"[{"m": 4, "a": [3,3,3], "b": [1,1,1]}]"#).is_err());
    }

    #[test]
    fn empty_suite_passes() {
        let outcome = run_suite(&SuiteSpec::default(), 1, &Checks::default(), &Caps::default());
        assert_eq!(outcome.summary.instances, 0);
        assert_eq!(outcome.exit_code(), EXIT_OK);
    }

    #[test]
    fn invalid_instance_sets_exit_code() {
        let spec = SuiteSpec::parse(r#"[{"a": [3,3,3], "b": [0,0,1]}]"#).unwrap();
        let outcome = run_suite(&spec, 1, &Checks::default(), &Caps::default());
        assert_eq!(outcome.summary.validation_errors, 1);
        assert_eq!(outcome.exit_code(), EXIT_VALIDATION);
    }

    #[test]
    fn default_suite_size_and_membership() {
        let suite = default_desk_suite();
        // sum over a of (prod a_i - 1 - sum (a_i - 1)) = 3375 - 875
        assert_eq!(suite.len(), 2500);
        assert!(suite
            .iter()
            .any(|i| i.a == vec![3, 3, 3] && i.b == vec![1, 1, 1]));
        assert!(suite
            .iter()
            .any(|i| i.a == vec![3, 3, 3] && i.b == vec![0, 1, 1]));
        assert!(suite
            .iter()
            .any(|i| i.a == vec![4, 4, 4] && i.b == vec![1, 1, 2]));
    }

    #[test]
    fn named_instance_through_the_runner() {
        let spec = SuiteSpec::parse(r#"[{"a": [3,3,3], "b": [1,1,1]}]"#).unwrap();
        let outcome = run_suite(&spec, 1, &Checks::default(), &Caps::default());
        assert_eq!(outcome.exit_code(), EXIT_OK);
        assert_eq!(outcome.summary.passed, 1);
        let report = outcome.reports[0].report.as_ref().unwrap();
        assert_eq!(report.numbers.multiplicity_computed, Some(13));
    }
}
