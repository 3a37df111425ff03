//! The built-in case catalog.
//!
//! Each catalog id names one family of identities. A [`CaseRequest`] picks an
//! id and optionally pins some of its arguments (`i`, `j`, `n`, `k`, `a`, `u`,
//! `js`); the unpinned ones range over defaults chosen for the datum. Indices
//! are 1-based on the command line, and a value may be a comma list.

use std::collections::BTreeMap;

use crate::adjoint::{
    verify_ad_idiv, verify_classical_serre_adjoint, verify_iserre, verify_mixed, verify_serre_lusztig, Check, Residual,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::idivided::{antipode_identity_residuals, verify_comult_defn, verify_comult_thm32};
use crate::repmod::{verify_annihilation, verify_mixed_annihilation};
use crate::uq::{QuantumGroup, UElement};

use super::config::CaseRequest;

pub const CATALOG_IDS: [&str; 13] = [
    "lemma31", "thm32", "prop33", "eq11", "prop34", "thm35", "prop36", "thm37", "thm42", "lemma41", "lemma43", "thm44",
    "thm45",
];

/// One-line summary of what a catalog id checks.
pub fn describe(id: &str) -> Option<&'static str> {
    Some(match id {
        "lemma31" => "antipode of F_i^{(n)}, Ech_i^{(n)} and [h; a; n]_i in closed form",
        "thm32" => "coproduct of B_{i,1-n}^{(n)} via T_{i,n,r} and via the antipode",
        "prop33" => "adjoint action of B_{i,1-n}^{(n)} as a two-sided sum",
        "eq11" => "adjoint form of the q-Serre relation in the F's",
        "prop34" => "iSerre sum equals its adjoint form (no Serre relations needed)",
        "thm35" => "iSerre relation together with its adjoint form",
        "prop36" => "Serre-Lusztig sum equals its adjoint form (no Serre relations needed)",
        "thm37" => "Serre-Lusztig relation together with its adjoint form",
        "thm42" => "iSerre relation",
        "lemma41" => "B_{i,n}^{(n+1)} annihilates L(n)",
        "lemma43" => "B_{i,kn}^{(kn+1)} annihilates L(n)^{(x)k}",
        "thm44" => "Serre-Lusztig relation of minimal degree",
        "thm45" => {
            "relation with B_{j_1} B_{j_2} in the middle, n read as sum_t a_{i j_t}, and the matching annihilation"
        }
        _ => return None,
    })
}

/// The four test elements of the adjoint-action family.
const AD_INPUTS: [&str; 4] = ["E", "FK", "BK", "B2K"];

fn ad_input(qg: &QuantumGroup, label: &str, j: usize) -> Result<UElement> {
    let k = qg.kt(j, 1);
    match label {
        "E" => Ok(qg.e(j)),
        "FK" => qg.mul(&qg.f(j), &k),
        "BK" => qg.mul(&qg.b(j), &k),
        "B2K" => qg.product(&[&qg.b(j), &qg.b(j), &k, &k]),
        _ => Err(Error::Parse(format!(
            "u must be one of {}, got {label:?}",
            AD_INPUTS.join(", ")
        ))),
    }
}

/// One concrete case, ready to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Antipode {
        i: usize,
        n: usize,
        a: i64,
    },
    Coproduct {
        i: usize,
        n: usize,
    },
    AdIdiv {
        i: usize,
        n: usize,
        j: usize,
        u: String,
    },
    ClassicalAdjoint {
        i: usize,
        j: usize,
    },
    ISerre {
        i: usize,
        j: usize,
        checks: &'static [&'static str],
    },
    SerreLusztig {
        i: usize,
        j: usize,
        n: usize,
        checks: &'static [&'static str],
    },
    Annihilation {
        i: usize,
        n: usize,
        k: usize,
    },
    Mixed {
        i: usize,
        js: Vec<usize>,
    },
}

const BRIDGE: &[&str] = &["bridge"];
const ALL_SERRE: &[&str] = &["serre_sum", "adjoint_form", "bridge"];
const SUM: &[&str] = &["serre_sum"];

/// A job with the label it is reported under.
#[derive(Clone, Debug)]
pub struct CaseInstance {
    pub id: String,
    pub label: String,
    pub job: Job,
}

struct Args<'a> {
    id: &'a str,
    map: &'a BTreeMap<String, String>,
}

impl Args<'_> {
    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for k in self.map.keys() {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::Parse(format!(
                    "{}: unknown argument {k:?} (expected one of {})",
                    self.id,
                    allowed.join(", ")
                )));
            }
        }
        Ok(())
    }

    fn ints(&self, key: &str) -> Result<Option<Vec<i64>>> {
        let Some(v) = self.map.get(key) else {
            return Ok(None);
        };
        v.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("{}: bad value {x:?} for {key}", self.id)))
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    fn naturals(&self, key: &str, default: impl FnOnce() -> Vec<usize>) -> Result<Vec<usize>> {
        match self.ints(key)? {
            None => Ok(default()),
            Some(v) => v
                .into_iter()
                .map(|x| {
                    usize::try_from(x).map_err(|_| Error::Parse(format!("{}: {key} must be nonnegative", self.id)))
                })
                .collect(),
        }
    }

    /// 1-based indices on input, 0-based out.
    fn indices(&self, key: &str, rank: usize, default: impl FnOnce() -> Vec<usize>) -> Result<Vec<usize>> {
        match self.ints(key)? {
            None => Ok(default()),
            Some(v) => v
                .into_iter()
                .map(|x| {
                    if x >= 1 && (x as usize) <= rank {
                        Ok(x as usize - 1)
                    } else {
                        Err(Error::UnknownIndex {
                            index: x.max(0) as usize,
                            rank,
                        })
                    }
                })
                .collect(),
        }
    }
}

fn pairs(is: &[usize], js: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &i in is {
        for &j in js {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Expands a request into concrete cases for a datum of the given rank.
pub fn expand(qg: &QuantumGroup, req: &CaseRequest) -> Result<Vec<CaseInstance>> {
    let rank = qg.rank();
    let id = req.id.as_str();
    let args = Args { id, map: &req.args };
    let all: Vec<usize> = (0..rank).collect();
    let is = args.indices("i", rank, || all.clone())?;
    let mut out = Vec::new();
    let mut push = |label: String, job: Job| {
        out.push(CaseInstance {
            id: id.to_string(),
            label: format!("{id} {label}"),
            job,
        })
    };
    match id {
        "lemma31" => {
            args.check_keys(&["i", "n", "a"])?;
            let ns = args.naturals("n", || (0..=3).collect())?;
            let as_ = args.ints("a")?.unwrap_or_else(|| vec![-1, 0, 1]);
            for &i in &is {
                for &n in &ns {
                    for &a in &as_ {
                        push(format!("i={} n={n} a={a}", i + 1), Job::Antipode { i, n, a });
                    }
                }
            }
        }
        "thm32" => {
            args.check_keys(&["i", "n"])?;
            let ns = args.naturals("n", || (1..=3).collect())?;
            for &i in &is {
                for &n in &ns {
                    push(format!("i={} n={n}", i + 1), Job::Coproduct { i, n });
                }
            }
        }
        "prop33" => {
            args.check_keys(&["i", "n", "j", "u"])?;
            let ns = args.naturals("n", || (1..=2).collect())?;
            let js = args.indices("j", rank, || all.clone())?;
            let us: Vec<String> = match req.args.get("u") {
                Some(v) => v.split(',').map(|s| s.trim().to_string()).collect(),
                None => AD_INPUTS.iter().map(|s| s.to_string()).collect(),
            };
            for &i in &is {
                let targets: Vec<usize> = if rank == 1 {
                    vec![i]
                } else {
                    js.iter()
                        .copied()
                        .filter(|&j| j != i || req.args.contains_key("j"))
                        .collect()
                };
                for &n in &ns {
                    for &j in &targets {
                        for u in &us {
                            push(
                                format!("i={} n={n} j={} u={u}", i + 1, j + 1),
                                Job::AdIdiv { i, n, j, u: u.clone() },
                            );
                        }
                    }
                }
            }
        }
        "eq11" | "prop34" | "thm35" | "thm42" => {
            args.check_keys(&["i", "j"])?;
            let js = args.indices("j", rank, || all.clone())?;
            for (i, j) in pairs(&is, &js) {
                let label = format!("i={} j={}", i + 1, j + 1);
                let job = match id {
                    "eq11" => Job::ClassicalAdjoint { i, j },
                    "prop34" => Job::ISerre { i, j, checks: BRIDGE },
                    "thm35" => Job::ISerre {
                        i,
                        j,
                        checks: ALL_SERRE,
                    },
                    _ => Job::ISerre { i, j, checks: SUM },
                };
                push(label, job);
            }
        }
        "prop36" | "thm37" | "thm44" => {
            args.check_keys(&["i", "j", "n"])?;
            let js = args.indices("j", rank, || all.clone())?;
            let ns = args.naturals("n", || vec![2])?;
            let checks = match id {
                "prop36" => BRIDGE,
                "thm37" => ALL_SERRE,
                _ => SUM,
            };
            for (i, j) in pairs(&is, &js) {
                for &n in &ns {
                    push(
                        format!("i={} j={} n={n}", i + 1, j + 1),
                        Job::SerreLusztig { i, j, n, checks },
                    );
                }
            }
        }
        "lemma41" => {
            args.check_keys(&["i", "n"])?;
            let ns = args.naturals("n", || (1..=4).collect())?;
            for &i in &is {
                for &n in &ns {
                    push(format!("i={} n={n}", i + 1), Job::Annihilation { i, n, k: 1 });
                }
            }
        }
        "lemma43" => {
            args.check_keys(&["i", "n", "k"])?;
            let nk: Vec<(usize, usize)> = match (args.naturals("n", Vec::new)?, args.naturals("k", Vec::new)?) {
                (ns, ks) if ns.is_empty() && ks.is_empty() => vec![(1, 2), (1, 3), (2, 2)],
                (ns, ks) => {
                    let ns = if ns.is_empty() { vec![1] } else { ns };
                    let ks = if ks.is_empty() { vec![2] } else { ks };
                    ns.iter().flat_map(|&n| ks.iter().map(move |&k| (n, k))).collect()
                }
            };
            for &i in &is {
                for &(n, k) in &nk {
                    push(format!("i={} n={n} k={k}", i + 1), Job::Annihilation { i, n, k });
                }
            }
        }
        "thm45" => {
            args.check_keys(&["i", "js"])?;
            let given = args.indices("js", rank, Vec::new)?;
            for &i in &is {
                let lists: Vec<Vec<usize>> = if !given.is_empty() {
                    vec![given.clone()]
                } else {
                    let others: Vec<usize> = (0..rank).filter(|&j| j != i).collect();
                    let mut v = Vec::new();
                    for (x, &j1) in others.iter().enumerate() {
                        for &j2 in &others[x + 1..] {
                            v.push(vec![j1, j2]);
                        }
                    }
                    v
                };
                for js in lists {
                    let names: Vec<String> = js.iter().map(|j| (j + 1).to_string()).collect();
                    push(format!("i={} js={}", i + 1, names.join(",")), Job::Mixed { i, js });
                }
            }
        }
        _ => return Err(Error::Parse(format!("unknown case id {id:?}"))),
    }
    Ok(out)
}

fn failed(qg: &QuantumGroup, claim: &str, e: Error) -> VerificationReport {
    VerificationReport::run("", claim, qg, || Err(e))
}

/// Runs one case. Errors (cap exceeded, bad index, ...) become an errored
/// report rather than a failure of the whole run.
pub fn run_instance(qg: &QuantumGroup, inst: &CaseInstance) -> VerificationReport {
    let claim = describe(&inst.id).unwrap_or_default();
    let report = match &inst.job {
        Job::Antipode { i, n, a } => Ok(VerificationReport::run("", claim, qg, || {
            let [f, e, h] = antipode_identity_residuals(qg, *i, *n, *a)?;
            Ok(vec![
                Check::element("antipode_f", f),
                Check::element("antipode_echeck", e),
                Check::element("antipode_kbracket", h),
            ])
        })),
        Job::Coproduct { i, n } => Ok(VerificationReport::run("", claim, qg, || {
            Ok(vec![
                Check::new(
                    "coproduct_components",
                    Residual::Tensor(verify_comult_defn(qg, *i, *n)?),
                ),
                Check::new(
                    "coproduct_antipode_form",
                    Residual::Tensor(verify_comult_thm32(qg, *i, *n)?),
                ),
            ])
        })),
        Job::AdIdiv { i, n, j, u } => ad_input(qg, u, *j).and_then(|x| verify_ad_idiv(qg, *i, *n, &x, u)),
        Job::ClassicalAdjoint { i, j } => verify_classical_serre_adjoint(qg, *i, *j),
        Job::ISerre { i, j, checks } => verify_iserre(qg, *i, *j).map(|r| r.restrict(checks)),
        Job::SerreLusztig { i, j, n, checks } => verify_serre_lusztig(qg, *i, *j, *n).map(|r| r.restrict(checks)),
        Job::Annihilation { i, n, k } => verify_annihilation(qg, *i, *n, *k),
        Job::Mixed { i, js } => mixed_with_annihilation(qg, *i, js),
    };
    let mut report = report.unwrap_or_else(|e| failed(qg, claim, e));
    report.case = inst.label.clone();
    report.claim = claim.to_string();
    report
}

/// The mixed relation, plus the annihilation of `L(-a_{i j_1}) (x) ...` by
/// the matching idivided power.
fn mixed_with_annihilation(qg: &QuantumGroup, i: usize, js: &[usize]) -> Result<VerificationReport> {
    let mut report = verify_mixed(qg, i, js)?;
    if report.error.is_some() {
        return Ok(report);
    }
    let weights: Vec<usize> = js.iter().map(|&j| (-qg.datum().a(i, j)) as usize).collect();
    let ann = verify_mixed_annihilation(qg, i, &weights)?;
    report.elapsed += ann.elapsed;
    match ann.error {
        Some(e) => report.error = Some(e),
        None => report.checks.extend(ann.checks),
    }
    Ok(report)
}
