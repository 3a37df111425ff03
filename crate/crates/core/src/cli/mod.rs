//! Batch verification: configuration, the case catalog, and the report.

pub mod catalog;
pub mod config;
pub mod report;

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;

use crate::adjoint::{serre_type_sum, Outcome, VerificationReport};
use crate::error::{Error, Result};
use crate::idivided::{idiv_of, t_component, Parity};
use crate::uq::QuantumGroup;

pub use catalog::{describe, expand, run_instance, CaseInstance, CATALOG_IDS};
pub use config::{parse_config, CaseRequest, RunConfig};
pub use report::{CaseRecord, ParamsRecord};

/// The outcome of a whole run.
#[derive(Debug)]
pub struct RunSummary {
    pub records: Vec<CaseRecord>,
    pub reports: Vec<VerificationReport>,
}

impl RunSummary {
    pub fn all_verified(&self) -> bool {
        self.reports.iter().all(|r| r.outcome() == Outcome::Verified)
    }

    pub fn count(&self, outcome: Outcome) -> usize {
        self.reports.iter().filter(|r| r.outcome() == outcome).count()
    }

    /// The report document, one JSON object per line.
    pub fn document(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }

    pub fn write_to(&self, w: &mut impl Write) -> Result<()> {
        w.write_all(self.document().as_bytes())
            .map_err(|e| Error::Io(e.to_string()))
    }
}

/// What `show` can print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShowKind {
    /// `B_{i,p}^{(n)}`; arguments `i n parity`.
    Idiv,
    /// `T_{i,n,r}`; arguments `i n r`.
    Tcomp,
    /// The Serre-type sum with `B_j^n` in the middle; arguments `i j [n]`.
    Serre,
}

fn show_arg(args: &BTreeMap<String, String>, key: &str, default: Option<i64>) -> Result<i64> {
    match args.get(key) {
        Some(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("bad value {v:?} for {key}"))),
        None => default.ok_or_else(|| Error::Parse(format!("missing argument {key}"))),
    }
}

fn show_index(qg: &QuantumGroup, args: &BTreeMap<String, String>, key: &str) -> Result<usize> {
    let i = show_arg(args, key, None)?;
    if i < 1 || i as usize > qg.rank() {
        return Err(Error::UnknownIndex {
            index: i.max(0) as usize,
            rank: qg.rank(),
        });
    }
    Ok(i as usize - 1)
}

fn show_natural(args: &BTreeMap<String, String>, key: &str, default: Option<i64>) -> Result<usize> {
    usize::try_from(show_arg(args, key, default)?).map_err(|_| Error::Parse(format!("{key} must be nonnegative")))
}

/// Parses `key=value` words.
pub fn parse_show_args(words: &[String]) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for w in words {
        let (k, v) = w
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {w:?}")))?;
        out.insert(k.to_string(), v.to_string());
    }
    Ok(out)
}

/// The normal form of the requested element, in printer syntax.
pub fn show(qg: &QuantumGroup, kind: ShowKind, args: &BTreeMap<String, String>) -> Result<String> {
    let i = show_index(qg, args, "i")?;
    let element = match kind {
        ShowKind::Idiv => {
            let n = show_natural(args, "n", None)?;
            let p = Parity::of(show_arg(args, "parity", Some(0))?);
            idiv_of(qg, i, n, p)?
        }
        ShowKind::Tcomp => {
            let n = show_natural(args, "n", None)?;
            let r = show_natural(args, "r", None)?;
            t_component(qg, i, n, r)?
        }
        ShowKind::Serre => {
            let j = show_index(qg, args, "j")?;
            let n = show_natural(args, "n", Some(1))?;
            let na = n as i64 * qg.datum().a(i, j);
            let middle = qg.pow(&qg.b(j), n)?;
            serre_type_sum(qg, i, (1 - na) as usize, Parity::of(na), &middle)?
        }
    };
    Ok(element.to_string())
}

/// Expands every requested case in config order.
pub fn plan(qg: &QuantumGroup, config: &RunConfig) -> Result<Vec<CaseInstance>> {
    let mut out = Vec::new();
    for req in &config.cases {
        out.extend(expand(qg, req)?);
    }
    Ok(out)
}

/// Runs all cases of `config` on `jobs` worker threads (0 = rayon default).
/// Records come back in plan order whatever the completion order.
pub fn run(config: &RunConfig, jobs: usize) -> Result<RunSummary> {
    let qg = QuantumGroup::new(config.datum.clone(), config.params.clone(), config.degree_cap)?;
    let cases = plan(&qg, config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config {
            line: 0,
            msg: e.to_string(),
        })?;
    let reports: Vec<VerificationReport> = pool.install(|| cases.par_iter().map(|c| run_instance(&qg, c)).collect());
    let params = ParamsRecord::of_config(config);
    let records = reports
        .iter()
        .map(|r| CaseRecord::from_report(r, params.clone()))
        .collect();
    Ok(RunSummary { records, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn records_have_fixed_fields() {
        let config = parse_config("type = A2\ncase = thm42 i=1 j=2\n").unwrap();
        let summary = run(&config, 1).unwrap();
        assert!(summary.all_verified());
        let line = summary.document();
        let v: Value = serde_json::from_str(line.trim()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut expected = vec!["case", "claim", "params", "outcome", "witness", "elapsed_ms"];
        expected.sort();
        assert_eq!(keys, expected);
        assert_eq!(v["outcome"], "verified");
        assert_eq!(v["witness"], "0");
        assert_eq!(v["params"]["datum"], "[2 -1; -1 2]");
    }

    #[test]
    fn off_mode_refutes() {
        let config = parse_config("type = A2\nserre_mode = off\ncase = thm42 i=1 j=2\n").unwrap();
        let summary = run(&config, 2).unwrap();
        assert!(!summary.all_verified());
        let r = &summary.records[0];
        assert_eq!(r.outcome, "refuted");
        assert!(r.witness.starts_with("serre_sum: ") && r.witness != "serre_sum: 0");
    }

    #[test]
    fn show_elements() {
        let qg = QuantumGroup::with_defaults(crate::cartan::CartanDatum::of_type("A2").unwrap());
        let args = |s: &str| parse_show_args(&s.split_whitespace().map(String::from).collect::<Vec<_>>()).unwrap();
        assert_eq!(
            show(&qg, ShowKind::Idiv, &args("i=1 n=1")).unwrap(),
            qg.b(0).to_string()
        );
        assert_eq!(show(&qg, ShowKind::Serre, &args("i=1 j=2")).unwrap(), "0");
        assert_eq!(show(&qg, ShowKind::Tcomp, &args("i=1 n=2 r=0")).unwrap(), "K1^-2");
        assert!(show(&qg, ShowKind::Idiv, &args("i=3 n=1")).is_err());
        assert!(show(&qg, ShowKind::Tcomp, &args("i=1 n=2")).is_err());
    }

    #[test]
    fn cap_errors_are_recorded() {
        let config = parse_config("type = A2\ndegree_cap = 3\ncase = lemma41 i=1 n=3\n").unwrap();
        let summary = run(&config, 1).unwrap();
        assert_eq!(summary.count(Outcome::Error), 1);
        assert!(summary.records[0].witness.contains("cap"));
    }
}
