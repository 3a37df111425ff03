//! Line-delimited JSON report: one record per case.

use serde::Serialize;

use crate::adjoint::VerificationReport;
use crate::cartan::IParams;

use super::config::RunConfig;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ParamsRecord {
    pub datum: String,
    pub varsigma: Vec<String>,
    pub serre_mode: String,
    pub degree_cap: usize,
    pub split: String,
}

impl ParamsRecord {
    pub fn new(datum: String, params: &IParams, degree_cap: usize) -> Self {
        Self {
            datum,
            varsigma: params.varsigmas().iter().map(|v| v.to_string()).collect(),
            serre_mode: params.serre_mode.to_string(),
            degree_cap,
            split: "all".into(),
        }
    }

    pub fn of_config(config: &RunConfig) -> Self {
        Self::new(config.datum.to_string(), &config.params, config.degree_cap)
    }
}

/// Field names and order are fixed.
#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub case: String,
    pub claim: String,
    pub params: ParamsRecord,
    pub outcome: String,
    pub witness: String,
    pub elapsed_ms: f64,
}

impl CaseRecord {
    pub fn from_report(report: &VerificationReport, params: ParamsRecord) -> Self {
        Self {
            case: report.case.clone(),
            claim: report.claim.clone(),
            params,
            outcome: report.outcome().to_string(),
            witness: report.witness(),
            elapsed_ms: (report.elapsed.as_secs_f64() * 1e6).round() / 1e3,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}
