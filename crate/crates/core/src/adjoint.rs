//! The adjoint action `ad(u)(v) = sum u_(1) v S(u_(2))`, its expression on
//! idivided powers, and the verifiers for the iSerre family of relations.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::idivided::{idiv_of, Parity};
use crate::qfield::RatFunc;
use crate::repmod::Mat;
use crate::uq::{QuantumGroup, TensorElement, UElement};

/// The quantity that must vanish for one check.
#[derive(Clone, Debug)]
pub enum Residual {
    Element(UElement),
    Tensor(TensorElement),
    Matrix(Mat),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Element(u) => u.is_zero(),
            Residual::Tensor(t) => t.is_zero(),
            Residual::Matrix(m) => m.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Element(u) => write!(f, "{u}"),
            Residual::Tensor(t) => write!(f, "{t}"),
            Residual::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// One named identity, recorded as `lhs - rhs`.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub residual: Residual,
}

impl Check {
    pub fn new(name: &str, residual: Residual) -> Self {
        Self {
            name: name.to_string(),
            residual,
        }
    }

    pub fn element(name: &str, u: UElement) -> Self {
        Self::new(name, Residual::Element(u))
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Refuted,
    Error,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Verified => "verified",
            Outcome::Refuted => "refuted",
            Outcome::Error => "error",
        })
    }
}

/// Result of checking one claim at one datum and parameter choice.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub case: String,
    pub claim: String,
    pub datum: String,
    pub params: String,
    pub checks: Vec<Check>,
    pub error: Option<Error>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// Runs `body` and records its checks (or its error) and wall time.
    pub fn run(
        case: impl Into<String>,
        claim: impl Into<String>,
        qg: &QuantumGroup,
        body: impl FnOnce() -> Result<Vec<Check>>,
    ) -> Self {
        let start = Instant::now();
        let result = body();
        let elapsed = start.elapsed();
        let (checks, error) = match result {
            Ok(c) => (c, None),
            Err(e) => (Vec::new(), Some(e)),
        };
        Self {
            case: case.into(),
            claim: claim.into(),
            datum: qg.datum().to_string(),
            params: qg.params().to_string(),
            checks,
            error,
            notes: Vec::new(),
            elapsed,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn outcome(&self) -> Outcome {
        if self.error.is_some() {
            Outcome::Error
        } else if self.checks.iter().all(Check::holds) {
            Outcome::Verified
        } else {
            Outcome::Refuted
        }
    }

    pub fn is_verified(&self) -> bool {
        self.outcome() == Outcome::Verified
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Keeps only the named checks, in the given order.
    pub fn restrict(mut self, names: &[&str]) -> Self {
        let mut kept = Vec::new();
        for n in names {
            if let Some(pos) = self.checks.iter().position(|c| c.name == *n) {
                kept.push(self.checks.remove(pos));
            }
        }
        self.checks = kept;
        self
    }

    /// `0` when verified; otherwise every failing residual in full, or the
    /// error message.
    pub fn witness(&self) -> String {
        if let Some(e) = &self.error {
            return e.to_string();
        }
        let failing: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.holds())
            .map(|c| format!("{}: {}", c.name, c.residual))
            .collect();
        if failing.is_empty() {
            "0".to_string()
        } else {
            failing.join("; ")
        }
    }
}

fn sign(k: usize) -> RatFunc {
    if k.is_multiple_of(2) {
        RatFunc::one()
    } else {
        -RatFunc::one()
    }
}

/// `ad(u)(v)`.
pub fn ad(qg: &QuantumGroup, u: &UElement, v: &UElement) -> Result<UElement> {
    let delta = qg.comult(u)?;
    let mut out = UElement::zero();
    for (left, right) in delta.by_left() {
        let l = UElement::from_mono(left, RatFunc::one());
        let s = qg.antipode(&right)?;
        out = &out + &qg.product(&[&l, v, &s])?;
    }
    Ok(out)
}

/// `ad(x)(yz) - sum ad(x_(1))(y) ad(x_(2))(z)`.
pub fn ad_multiplicativity_residual(qg: &QuantumGroup, x: &UElement, y: &UElement, z: &UElement) -> Result<UElement> {
    let lhs = ad(qg, x, &qg.mul(y, z)?)?;
    let mut rhs = UElement::zero();
    for (a, b, c) in qg.comult(x)?.terms() {
        let xa = UElement::from_mono(a.clone(), RatFunc::one());
        let xb = UElement::from_mono(b.clone(), RatFunc::one());
        let t = qg.mul(&ad(qg, &xa, y)?, &ad(qg, &xb, z)?)?;
        rhs = &rhs + &t.scale(c);
    }
    Ok(&lhs - &rhs)
}

pub fn ad_multiplicativity_check(qg: &QuantumGroup, x: &UElement, y: &UElement, z: &UElement) -> Result<bool> {
    Ok(ad_multiplicativity_residual(qg, x, y, z)?.is_zero())
}

/// Both sides of
/// `ad(B_{i,1-n}^{(n)})(u) = sum_{r+s=n} (-1)^r B_{i,1-n}^{(s)} u xi_{q_i^{n-1}}(B_{i,0}^{(r)}) Kt_i^n`.
pub fn ad_idiv_formula(qg: &QuantumGroup, i: usize, n: usize, u: &UElement) -> Result<(UElement, UElement)> {
    let p = Parity::of(1 - n as i64);
    let lhs = ad(qg, &idiv_of(qg, i, n, p)?, u)?;
    let lambda = qg.q_i_pow(i, n as i64 - 1);
    let kn = qg.kt(i, n as i32);
    let mut rhs = UElement::zero();
    for r in 0..=n {
        let right = qg.xi(&lambda, &idiv_of(qg, i, r, Parity::Even)?)?;
        let t = qg.product(&[&idiv_of(qg, i, n - r, p)?, u, &right, &kn])?;
        rhs = &rhs + &t.scale(&sign(r));
    }
    Ok((lhs, rhs))
}

/// `sum_{r+s=top} (-1)^r B_{i,p}^{(s)} middle B_{i,0}^{(r)}`.
pub fn serre_type_sum(qg: &QuantumGroup, i: usize, top: usize, p: Parity, middle: &UElement) -> Result<UElement> {
    let mut out = UElement::zero();
    for r in 0..=top {
        let t = qg.product(&[&idiv_of(qg, i, top - r, p)?, middle, &idiv_of(qg, i, r, Parity::Even)?])?;
        out = &out + &t.scale(&sign(r));
    }
    Ok(out)
}

fn check_pair(qg: &QuantumGroup, i: usize, j: usize) -> Result<()> {
    qg.datum().check_index(i)?;
    qg.datum().check_index(j)?;
    if i == j {
        return Err(Error::InvalidParameter("the two indices must differ".into()));
    }
    Ok(())
}

/// The three checks shared by the iSerre and Serre-Lusztig verifiers:
/// the relation among `B`'s, its adjoint form, and the identity linking them.
fn serre_checks(
    qg: &QuantumGroup,
    i: usize,
    top: usize,
    parity: Parity,
    middle: &UElement,
    middle_torus: &UElement,
) -> Result<Vec<Check>> {
    let sum = serre_type_sum(qg, i, top, parity, middle)?;
    let adj = ad(qg, &idiv_of(qg, i, top, parity)?, &qg.mul(middle, middle_torus)?)?;
    let moved = qg.product(&[&sum, middle_torus, &qg.kt(i, top as i32)])?;
    Ok(vec![
        Check::element("serre_sum", sum),
        Check::element("adjoint_form", adj.clone()),
        Check::element("bridge", &adj - &moved),
    ])
}

/// iSerre relation for `(i, j)`: checks `serre_sum`, `adjoint_form` and
/// `bridge` (the last holds with or without the q-Serre relations).
pub fn verify_iserre(qg: &QuantumGroup, i: usize, j: usize) -> Result<VerificationReport> {
    check_pair(qg, i, j)?;
    let a = qg.datum().a(i, j);
    let top = (1 - a) as usize;
    Ok(VerificationReport::run(
        format!("iserre i={} j={}", i + 1, j + 1),
        "sum_{r+s=1-a_ij} (-1)^r B_{i,a_ij}^{(s)} B_j B_{i,0}^{(r)} = 0, equivalently ad(B_{i,a_ij}^{(1-a_ij)})(B_j Kt_j) = 0",
        qg,
        || serre_checks(qg, i, top, Parity::of(a), &qg.b(j), &qg.kt(j, 1)),
    ))
}

/// Serre-Lusztig relation of minimal degree with `B_j^n` in the middle.
pub fn verify_serre_lusztig(qg: &QuantumGroup, i: usize, j: usize, n: usize) -> Result<VerificationReport> {
    check_pair(qg, i, j)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let na = n as i64 * qg.datum().a(i, j);
    let top = (1 - na) as usize;
    if top > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: top,
        });
    }
    Ok(VerificationReport::run(
        format!("serre_lusztig i={} j={} n={n}", i + 1, j + 1),
        "sum_{r+s=1-n a_ij} (-1)^r B_{i,n a_ij}^{(s)} B_j^n B_{i,0}^{(r)} = 0, equivalently ad(B_{i,n a_ij}^{(1-n a_ij)})(B_j^n Kt_j^n) = 0",
        qg,
        || {
            let bj = qg.pow(&qg.b(j), n)?;
            serre_checks(qg, i, top, Parity::of(na), &bj, &qg.kt(j, n as i32))
        },
    ))
}

/// Relation with the product `B_{j_1} ... B_{j_k}` in the middle and
/// `n = sum_t a_{i j_t}`.
pub fn verify_mixed(qg: &QuantumGroup, i: usize, js: &[usize]) -> Result<VerificationReport> {
    if js.is_empty() {
        return Err(Error::InvalidParameter("need at least one middle index".into()));
    }
    for &j in js {
        check_pair(qg, i, j)?;
    }
    let n: i64 = js.iter().map(|&j| qg.datum().a(i, j)).sum();
    let top = (1 - n) as usize;
    if top > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: top,
        });
    }
    let names: Vec<String> = js.iter().map(|j| (j + 1).to_string()).collect();
    Ok(VerificationReport::run(
        format!("mixed i={} js={}", i + 1, names.join(",")),
        "sum_{r+s=1-n} (-1)^r B_{i,n}^{(s)} B_{j_1}...B_{j_k} B_{i,0}^{(r)} = 0 with n = sum_t a_{i j_t}",
        qg,
        || {
            let bs: Vec<UElement> = js.iter().map(|&j| qg.b(j)).collect();
            let refs: Vec<&UElement> = bs.iter().collect();
            let middle = qg.product(&refs)?;
            Ok(vec![Check::element(
                "serre_sum",
                serre_type_sum(qg, i, top, Parity::of(n), &middle)?,
            )])
        },
    )
    .with_note("n is read as the sum of a_{i j_t} over the middle indices"))
}

/// The classical adjoint form of the q-Serre relation in the F's: checks
/// the identity and that both sides vanish.
pub fn verify_classical_serre_adjoint(qg: &QuantumGroup, i: usize, j: usize) -> Result<VerificationReport> {
    check_pair(qg, i, j)?;
    let top = (1 - qg.datum().a(i, j)) as usize;
    Ok(VerificationReport::run(
        format!("classical_adjoint i={} j={}", i + 1, j + 1),
        "ad(F_i^{(1-a_ij)})(F_j Kt_j) = sum_{r+s=1-a_ij} (-1)^r F_i^{(s)} F_j F_i^{(r)} Kt_j Kt_i^{1-a_ij}, and both sides vanish",
        qg,
        || {
            let lhs = ad(qg, &qg.f_div(i, top)?, &qg.mul(&qg.f(j), &qg.kt(j, 1))?)?;
            let mut rhs = UElement::zero();
            let tail = qg.mul(&qg.kt(j, 1), &qg.kt(i, top as i32))?;
            for r in 0..=top {
                let t = qg.product(&[&qg.f_div(i, top - r)?, &qg.f(j), &qg.f_div(i, r)?, &tail])?;
                rhs = &rhs + &t.scale(&sign(r));
            }
            Ok(vec![
                Check::element("identity", &lhs - &rhs),
                Check::element("vanishing", lhs),
            ])
        },
    ))
}

/// The adjoint formula for `B_{i,1-n}^{(n)}` acting on `u`.
pub fn verify_ad_idiv(qg: &QuantumGroup, i: usize, n: usize, u: &UElement, label: &str) -> Result<VerificationReport> {
    qg.datum().check_index(i)?;
    Ok(VerificationReport::run(
        format!("ad_idiv i={} n={n} u={label}", i + 1),
        "ad(B_{i,1-n}^{(n)})(u) = sum_{r+s=n} (-1)^r B_{i,1-n}^{(s)} u xi_{q_i^{n-1}}(B_{i,0}^{(r)}) Kt_i^n",
        qg,
        || {
            let (l, r) = ad_idiv_formula(qg, i, n, u)?;
            Ok(vec![Check::element("formula", &l - &r)])
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{CartanDatum, IParams, SerreMode};

    fn qg(name: &str) -> QuantumGroup {
        QuantumGroup::with_defaults(CartanDatum::of_type(name).unwrap())
    }

    #[test]
    fn ad_examples() {
        let g = qg("A2");
        let v = &g.e(1) + &g.f(0);
        // conjugation by the torus
        let k = g.kt(0, 1);
        let conj = g.product(&[&k, &v, &g.kt(0, -1)]).unwrap();
        assert_eq!(ad(&g, &k, &v).unwrap(), conj);
        // ad(F_i)(x) = (F_i x - x F_i) Kt_i
        let x = g.mul(&g.e(1), &g.f(1)).unwrap();
        let comm = &g.mul(&g.f(0), &x).unwrap() - &g.mul(&x, &g.f(0)).unwrap();
        assert_eq!(ad(&g, &g.f(0), &x).unwrap(), g.mul(&comm, &g.kt(0, 1)).unwrap());
        // ad(B_i)(u) = (B_i u - u B_i) Kt_i
        let comm = &g.mul(&g.b(0), &x).unwrap() - &g.mul(&x, &g.b(0)).unwrap();
        assert_eq!(ad(&g, &g.b(0), &x).unwrap(), g.mul(&comm, &g.kt(0, 1)).unwrap());
    }

    #[test]
    fn ad_is_multiplicative() {
        let g = qg("A2");
        let y = g.e(1);
        let z = g.f(1);
        assert!(ad_multiplicativity_check(&g, &g.kt(0, 1), &y, &z).unwrap());
        assert!(ad_multiplicativity_check(&g, &g.e(0), &y, &z).unwrap());
        let fk = g.mul(&g.f(1), &g.kt(1, 1)).unwrap();
        let x = idiv_of(&g, 0, 2, Parity::Odd).unwrap();
        assert!(ad_multiplicativity_check(&g, &x, &fk, &fk).unwrap());
    }

    #[test]
    fn iserre_a2() {
        let g = qg("A2");
        let rep = verify_iserre(&g, 0, 1).unwrap();
        assert!(rep.is_verified(), "{}", rep.witness());
        assert_eq!(rep.witness(), "0");
        assert!(verify_iserre(&g, 1, 1).is_err());

        let off = g
            .reparametrize(IParams::default_for(g.datum()).with_serre_mode(SerreMode::Off))
            .unwrap();
        let rep = verify_iserre(&off, 0, 1).unwrap();
        assert_eq!(rep.outcome(), Outcome::Refuted);
        assert!(rep.check("bridge").unwrap().holds());
        assert!(!rep.check("serre_sum").unwrap().holds());
        assert!(!rep.check("adjoint_form").unwrap().holds());
    }

    #[test]
    fn classical_form() {
        let g = qg("A2");
        assert!(verify_classical_serre_adjoint(&g, 0, 1).unwrap().is_verified());
    }

    #[test]
    fn ad_formula_low_degree() {
        let g = qg("A2");
        for n in 0..=2 {
            let (l, r) = ad_idiv_formula(&g, 0, n, &g.e(1)).unwrap();
            assert_eq!(l, r, "n={n}");
        }
    }
}
