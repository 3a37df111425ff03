//! The idivided powers `B_{i,p}^{(n)}` of both parities, their closed
//! expansion in the even case, the coproduct components `T_{i,n,r}` and the
//! two descriptions of `Delta(B_{i,1-n}^{(n)})`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qfield::{qfact, RatFunc};
use crate::uq::{QuantumGroup, TensorElement, UElement};

/// Parity class `0` or `1` selecting one of the two families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// The class of an arbitrary integer.
    pub fn of(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "0",
            Parity::Odd => "1",
        })
    }
}

/// Index, degree and parity of one idivided power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IDividedSpec {
    pub i: usize,
    pub n: usize,
    pub parity: Parity,
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn sign(k: i64) -> RatFunc {
    if k.rem_euclid(2) == 0 {
        RatFunc::one()
    } else {
        -RatFunc::one()
    }
}

/// `[n]_i! * B_{i,p}^{(n)}`, built two degrees at a time.
fn idiv_product(qg: &QuantumGroup, i: usize, n: usize, parity: Parity) -> Result<Arc<UElement>> {
    if n == 0 {
        return Ok(Arc::new(UElement::one()));
    }
    if n == 1 {
        return Ok(Arc::new(qg.b(i)));
    }
    qg.idiv_products.get_or_compute(&(i, n, parity), || {
        let prev = idiv_product(qg, i, n - 2, parity)?;
        // even parity: [2j-2] (n even) or [2j] (n odd); odd parity: [2j-1]
        let m = match (parity, n.is_multiple_of(2)) {
            (Parity::Even, true) => n as i64 - 2,
            (Parity::Even, false) => n as i64 - 1,
            (Parity::Odd, _) => {
                let j = (n / 2) as i64;
                2 * j - 1
            }
        };
        let qint = qg.qint_i(i, m);
        let shift = &(&qg.q_i(i) * qg.varsigma(i)) * &(&qint * &qint);
        let b = qg.b(i);
        let b2 = qg.mul(&b, &b)?;
        let factor = &b2 - &UElement::scalar(shift);
        Ok(Arc::new(qg.mul(&prev, &factor)?))
    })
}

/// `B_{i,p}^{(n)}` from the product formulas, normalized by `[n]_i!`.
pub fn idiv(qg: &QuantumGroup, spec: IDividedSpec) -> Result<UElement> {
    let IDividedSpec { i, n, parity } = spec;
    qg.datum().check_index(i)?;
    if n > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: n,
        });
    }
    let p = idiv_product(qg, i, n, parity)?;
    Ok(p.scale(&qfact(n as i64, qg.eps(i))?.inv()?))
}

/// Shorthand for [`idiv`].
pub fn idiv_of(qg: &QuantumGroup, i: usize, n: usize, parity: Parity) -> Result<UElement> {
    idiv(qg, IDividedSpec { i, n, parity })
}

/// The closed expansion of `B_{i,0}^{(n)}`:
/// `sum_{a+2c<=n} k F_i^{(n-2c-a)} [h; 1-c+floor((n-1)/2); c]_i Ech_i^{(a)}`.
pub fn idiv_closed_even(qg: &QuantumGroup, i: usize, n: usize) -> Result<UElement> {
    qg.datum().check_index(i)?;
    if n > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: n,
        });
    }
    let n_ = n as i64;
    let qs = &qg.q_i(i) * qg.varsigma(i);
    let half = (n_ - 1).div_euclid(2);
    let mut out = UElement::zero();
    for c in 0..=n_ / 2 {
        for a in 0..=(n_ - 2 * c) {
            let base = if n.is_multiple_of(2) { 3 * c } else { c };
            let k = &(&sign(c) * &qg.q_i_pow(i, base + a * (n_ - 2 * c - a))) * &qs.pow(c)?;
            let term = qg.product(&[
                &qg.f_div(i, (n_ - 2 * c - a) as usize)?,
                &qg.kbracket(i, 1 - c + half, c as usize)?,
                &qg.echeck_div(i, a as usize)?,
            ])?;
            out = &out + &term.scale(&k);
        }
    }
    Ok(out)
}

/// `T_{i,n,r} = sum_{a+2c<=r} t Ech_i^{(a)} [h; -floor((r-1)/2); c]_i Kt_i^{r-n} F_i^{(r-2c-a)}`.
pub fn t_component(qg: &QuantumGroup, i: usize, n: usize, r: usize) -> Result<UElement> {
    qg.datum().check_index(i)?;
    if r > n {
        return Err(Error::InvalidParameter(format!("component r = {r} exceeds n = {n}")));
    }
    let (n_, r_) = (n as i64, r as i64);
    let qs = &qg.q_i(i) * qg.varsigma(i);
    let bracket_a = -(r_ - 1).div_euclid(2);
    let mut out = UElement::zero();
    for c in 0..=r_ / 2 {
        for a in 0..=(r_ - 2 * c) {
            let e = binom2(2 * c + 1) + (r_ - 2 * c) * (r_ - n_) - a * (r_ - 2 * c - a);
            let t = &qg.q_i_pow(i, e) * &qs.pow(c)?;
            let term = qg.product(&[
                &qg.echeck_div(i, a as usize)?,
                &qg.kbracket(i, bracket_a, c as usize)?,
                &qg.kt(i, (r_ - n_) as i32),
                &qg.f_div(i, (r_ - 2 * c - a) as usize)?,
            ])?;
            out = &out + &term.scale(&t);
        }
    }
    Ok(out)
}

/// `Delta(B_{i,1-n}^{(n)})` and the sum `sum_{r+s=n} B_{i,1-n}^{(s)} (x) T_{i,n,r}`.
pub fn comult_defn_sides(qg: &QuantumGroup, i: usize, n: usize) -> Result<(TensorElement, TensorElement)> {
    let p = Parity::of(1 - n as i64);
    let lhs = qg.comult(&idiv_of(qg, i, n, p)?)?;
    let mut rhs = TensorElement::zero();
    for r in 0..=n {
        let t = TensorElement::outer(&idiv_of(qg, i, n - r, p)?, &t_component(qg, i, n, r)?);
        rhs = &rhs + &t;
    }
    Ok((lhs, rhs))
}

/// `Delta(B_{i,1-n}^{(n)})` and
/// `sum_{r+s=n} (-1)^r B_{i,1-n}^{(s)} (x) Kt_i^-n xi_{q_i^{n+1}}(S(B_{i,0}^{(r)}))`.
pub fn comult_antipode_sides(qg: &QuantumGroup, i: usize, n: usize) -> Result<(TensorElement, TensorElement)> {
    let p = Parity::of(1 - n as i64);
    let lhs = qg.comult(&idiv_of(qg, i, n, p)?)?;
    let lambda = qg.q_i_pow(i, n as i64 + 1);
    let kinv = qg.kt(i, -(n as i32));
    let mut rhs = TensorElement::zero();
    for r in 0..=n {
        let s = qg.antipode(&idiv_of(qg, i, r, Parity::Even)?)?;
        let right = qg.mul(&kinv, &qg.xi(&lambda, &s)?)?.scale(&sign(r as i64));
        rhs = &rhs + &TensorElement::outer(&idiv_of(qg, i, n - r, p)?, &right);
    }
    Ok((lhs, rhs))
}

/// Residual of the defining coproduct identity (zero when it holds).
pub fn verify_comult_defn(qg: &QuantumGroup, i: usize, n: usize) -> Result<TensorElement> {
    let (l, r) = comult_defn_sides(qg, i, n)?;
    Ok(&l - &r)
}

/// Residual of the antipode form of the coproduct (zero when it holds).
pub fn verify_comult_thm32(qg: &QuantumGroup, i: usize, n: usize) -> Result<TensorElement> {
    let (l, r) = comult_antipode_sides(qg, i, n)?;
    Ok(&l - &r)
}

/// Residuals of the antipode closed forms on `F_i^{(n)}`, `Ech_i^{(n)}`
/// and `[h; a; n]_i`, in that order:
///
/// ```text
/// S(F^{(n)})    = (-1)^n q_i^{2 C(n+1,2)} Kt^n F^{(n)}
/// S(Ech^{(n)})  = (-1)^n q_i^{2 C(n,2)} Ech^{(n)} Kt^n
/// S([h; a; n]) = (-1)^n q_i^{2n(n+2a-1)} Kt^{2n} [h; 1-n-a; n]
/// ```
pub fn antipode_identity_residuals(qg: &QuantumGroup, i: usize, n: usize, a: i64) -> Result<[UElement; 3]> {
    let n_ = n as i64;
    let f = qg.f_div(i, n)?;
    let f_rhs = qg
        .mul(&qg.kt(i, n as i32), &f)?
        .scale(&(&sign(n_) * &qg.q_i_pow(i, 2 * binom2(n_ + 1))));
    let e = qg.echeck_div(i, n)?;
    let e_rhs = qg
        .mul(&e, &qg.kt(i, n as i32))?
        .scale(&(&sign(n_) * &qg.q_i_pow(i, 2 * binom2(n_))));
    let h = qg.kbracket(i, a, n)?;
    let h_rhs = qg
        .mul(&qg.kt(i, 2 * n as i32), &qg.kbracket(i, 1 - n_ - a, n)?)?
        .scale(&(&sign(n_) * &qg.q_i_pow(i, 2 * n_ * (n_ + 2 * a - 1))));
    Ok([
        &qg.antipode(&f)? - &f_rhs,
        &qg.antipode(&e)? - &e_rhs,
        &qg.antipode(&h)? - &h_rhs,
    ])
}
