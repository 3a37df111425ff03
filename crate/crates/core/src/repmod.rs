//! Matrix models of the rank one subalgebra `U_i` on the simple modules
//! `L(n)` and their tensor products, and the annihilation checks for
//! idivided powers.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::adjoint::{Check, Residual, VerificationReport};
use crate::error::{Error, Result};
use crate::idivided::{idiv_of, Parity};
use crate::qfield::{qfact, qint, LaurentPoly, RatFunc};
use crate::uq::{QuantumGroup, UElement};

/// A dense matrix over `Q(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, RatFunc::one());
        }
        m
    }

    pub fn diagonal(entries: Vec<RatFunc>) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (k, v) in entries.into_iter().enumerate() {
            m.set(k, k, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFunc) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RatFunc::is_zero)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product; the left factor indexes the outer blocks.
    pub fn kron(&self, other: &Mat) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            m.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// The column vector `M e_c`.
    pub fn column(&self, c: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
}

impl Add<&Mat> for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Mat> for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut m = Mat::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let v = m.get(r, c) + &(a * b);
                        m.set(r, c, v);
                    }
                }
            }
        }
        m
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let cells: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite-dimensional module over `U_i` given by matrices for `E_i`,
/// `F_i`, `Kt_i` and `Kt_i^-1`.
#[derive(Clone, Debug)]
pub struct Rep {
    pub index: usize,
    pub eps: i64,
    pub e: Mat,
    pub f: Mat,
    pub k: Mat,
    pub kinv: Mat,
    /// Formal character: the term `q^m` counts eigenvectors of `Kt_i`
    /// with eigenvalue `q_i^m`.
    pub character: LaurentPoly,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.k.rows()
    }

    /// Checks the torus, commutation and commutator relations.
    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        let qi2 = RatFunc::q_pow(2 * self.eps as i32);
        let id = Mat::identity(d);
        let bad = |what: &str| Err(Error::InvalidRep(format!("{what} fails in dimension {d}")));
        if &self.k * &self.kinv != id || &self.kinv * &self.k != id {
            return bad("Kt Kt^-1 = 1");
        }
        if &(&self.k * &self.e) * &self.kinv != self.e.scale(&qi2) {
            return bad("Kt E Kt^-1 = q_i^2 E");
        }
        if &(&self.k * &self.f) * &self.kinv != self.f.scale(&qi2.inv()?) {
            return bad("Kt F Kt^-1 = q_i^-2 F");
        }
        let qi = RatFunc::q_pow(self.eps as i32);
        let denom = (&qi - &qi.inv()?).inv()?;
        let comm = &(&self.e * &self.f) - &(&self.f * &self.e);
        if comm != (&self.k - &self.kinv).scale(&denom) {
            return bad("E F - F E = (Kt - Kt^-1)/(q_i - q_i^-1)");
        }
        Ok(())
    }
}

/// The simple module `L(n)` of highest weight `q_i^n` in the basis
/// `v_k = F_i^{(k)} v_0`, validated before it is returned.
pub fn module_l(i: usize, eps: i64, n: usize) -> Result<Rep> {
    let d = n + 1;
    let mut e = Mat::zeros(d, d);
    let mut f = Mat::zeros(d, d);
    for k in 0..n {
        // F v_k = [k+1] v_{k+1},  E v_{k+1} = [n-k] v_k
        f.set(k + 1, k, qint(k as i64 + 1, eps));
        e.set(k, k + 1, qint((n - k) as i64, eps));
    }
    let weights: Vec<i32> = (0..d).map(|k| (n as i32 - 2 * k as i32) * eps as i32).collect();
    let k = Mat::diagonal(weights.iter().map(|&w| RatFunc::q_pow(w)).collect());
    let kinv = Mat::diagonal(weights.iter().map(|&w| RatFunc::q_pow(-w)).collect());
    let character = LaurentPoly::from_terms(
        (0..d).map(|k| (n as i32 - 2 * k as i32, crate::qfield::Coeff::from_integer(1.into()))),
    );
    let rep = Rep {
        index: i,
        eps,
        e,
        f,
        k,
        kinv,
        character,
    };
    rep.validate()?;
    // highest weight vector and divided-power basis
    if !rep.e.column(0).iter().all(RatFunc::is_zero) {
        return Err(Error::InvalidRep("E v_0 != 0".into()));
    }
    if rep.k.get(0, 0) != &RatFunc::q_pow((n as i64 * eps) as i32) {
        return Err(Error::InvalidRep("Kt v_0 != q_i^n v_0".into()));
    }
    for j in 0..d {
        let fj = rep.f.pow(j).scale(&qfact(j as i64, eps)?.inv()?);
        let col = fj.column(0);
        for (r, v) in col.iter().enumerate() {
            let expect = if r == j { RatFunc::one() } else { RatFunc::zero() };
            if *v != expect {
                return Err(Error::InvalidRep(format!("v_{j} != F^({j}) v_0")));
            }
        }
    }
    Ok(rep)
}

/// `a (x) b` with the action through the coproduct.
pub fn tensor(a: &Rep, b: &Rep) -> Result<Rep> {
    if a.index != b.index || a.eps != b.eps {
        return Err(Error::IndexMismatch(a.index, b.index));
    }
    let ia = Mat::identity(a.dim());
    let ib = Mat::identity(b.dim());
    let rep = Rep {
        index: a.index,
        eps: a.eps,
        e: &a.e.kron(&ib) + &a.k.kron(&b.e),
        f: &a.f.kron(&b.kinv) + &ia.kron(&b.f),
        k: a.k.kron(&b.k),
        kinv: a.kinv.kron(&b.kinv),
        character: &a.character * &b.character,
    };
    rep.validate()?;
    Ok(rep)
}

/// `L(w_1) (x) ... (x) L(w_k)` (the trivial module for an empty list).
pub fn tensor_of_simples(i: usize, eps: i64, weights: &[usize]) -> Result<Rep> {
    let mut acc = module_l(i, eps, 0)?;
    for (t, &w) in weights.iter().enumerate() {
        let l = module_l(i, eps, w)?;
        acc = if t == 0 { l } else { tensor(&acc, &l)? };
    }
    Ok(acc)
}

/// The matrix of `u` on `rep`; `u` may only involve the index of `rep`.
pub fn act(u: &UElement, rep: &Rep) -> Result<Mat> {
    let i = rep.index;
    let mut fpow: HashMap<usize, Mat> = HashMap::new();
    let mut epow: HashMap<usize, Mat> = HashMap::new();
    let mut kpow: HashMap<i32, Mat> = HashMap::new();
    let mut out = Mat::zeros(rep.dim(), rep.dim());
    for (m, c) in u.terms() {
        for l in m.f.letters().chain(m.e.letters()) {
            if l != i {
                return Err(Error::ForeignIndex { expected: i, found: l });
            }
        }
        for (j, &x) in m.k.iter().enumerate() {
            if j != i && x != 0 {
                return Err(Error::ForeignIndex { expected: i, found: j });
            }
        }
        let fm = fpow.entry(m.f.len()).or_insert_with(|| rep.f.pow(m.f.len())).clone();
        let em = epow.entry(m.e.len()).or_insert_with(|| rep.e.pow(m.e.len())).clone();
        let x = m.k[i];
        let km = kpow
            .entry(x)
            .or_insert_with(|| {
                if x >= 0 {
                    rep.k.pow(x as usize)
                } else {
                    rep.kinv.pow((-x) as usize)
                }
            })
            .clone();
        out = &out + &(&(&fm * &km) * &em).scale(c);
    }
    Ok(out)
}

/// `B_{i,kn}^{(kn+1)}` acting on `L(n)^{(x) k}`.
pub fn verify_annihilation(qg: &QuantumGroup, i: usize, n: usize, k: usize) -> Result<VerificationReport> {
    qg.datum().check_index(i)?;
    let top = k * n + 1;
    if top > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: top,
        });
    }
    let weights = vec![n; k];
    Ok(VerificationReport::run(
        format!("annihilation i={} n={n} k={k}", i + 1),
        "B_{i,kn}^{(kn+1)} acts as zero on L(n)^{(x)k}",
        qg,
        || {
            let rep = tensor_of_simples(i, qg.eps(i), &weights)?;
            let x = idiv_of(qg, i, top, Parity::of((k * n) as i64))?;
            Ok(vec![Check::new("action", Residual::Matrix(act(&x, &rep)?))])
        },
    ))
}

/// `B_{i,n}^{(n+1)}` acting on `L(w_1) (x) ... (x) L(w_k)` with `n = sum w_t`.
pub fn verify_mixed_annihilation(qg: &QuantumGroup, i: usize, weights: &[usize]) -> Result<VerificationReport> {
    qg.datum().check_index(i)?;
    let n: usize = weights.iter().sum();
    if n + 1 > qg.cap() {
        return Err(Error::CapExceeded {
            cap: qg.cap(),
            needed: n + 1,
        });
    }
    let names: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    Ok(VerificationReport::run(
        format!("mixed_annihilation i={} weights={}", i + 1, names.join(",")),
        "B_{i,n}^{(n+1)} acts as zero on L(w_1)(x)...(x)L(w_k) with n = sum w_t",
        qg,
        || {
            let rep = tensor_of_simples(i, qg.eps(i), weights)?;
            let x = idiv_of(qg, i, n + 1, Parity::of(n as i64))?;
            Ok(vec![Check::new("action", Residual::Matrix(act(&x, &rep)?))])
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn chars(n: usize) -> LaurentPoly {
        module_l(0, 1, n).unwrap().character
    }

    #[test]
    fn small_modules() {
        let l0 = module_l(0, 1, 0).unwrap();
        assert!(l0.e.is_zero() && l0.f.is_zero());
        assert_eq!(l0.k, Mat::identity(1));
        let l1 = module_l(0, 1, 1).unwrap();
        assert_eq!(l1.k, Mat::diagonal(vec![RatFunc::q_pow(1), RatFunc::q_pow(-1)]));
        let l2 = module_l(0, 2, 2).unwrap();
        assert_eq!(
            l2.k,
            Mat::diagonal(vec![RatFunc::q_pow(4), RatFunc::one(), RatFunc::q_pow(-4)])
        );
    }

    #[test]
    fn clebsch_gordan_characters() {
        let l1 = module_l(0, 1, 1).unwrap();
        let l2 = module_l(0, 1, 2).unwrap();
        let t = tensor(&l1, &l1).unwrap();
        assert_eq!(t.character, &chars(2) + &chars(0));
        assert_eq!(t.character.to_string(), "q^2+2+q^-2");
        assert_eq!(tensor(&l1, &l2).unwrap().character, &chars(3) + &chars(1));
        let l0 = module_l(0, 1, 0).unwrap();
        let m = tensor(&l0, &l2).unwrap();
        assert_eq!(m.e, l2.e);
        assert_eq!(m.f, l2.f);
        assert!(tensor(&l1, &module_l(1, 1, 1).unwrap()).is_err());
    }

    #[test]
    fn act_basics() {
        let g = QuantumGroup::with_defaults(CartanDatum::of_type("A2").unwrap());
        let l = module_l(0, 1, 3).unwrap();
        assert_eq!(act(&UElement::one(), &l).unwrap(), Mat::identity(4));
        let comm = &g.mul(&g.e(0), &g.f(0)).unwrap() - &g.mul(&g.f(0), &g.e(0)).unwrap();
        let denom = (&g.q_i(0) - &g.q_i(0).inv().unwrap()).inv().unwrap();
        assert_eq!(act(&comm, &l).unwrap(), (&l.k - &l.kinv).scale(&denom));
        assert!(matches!(act(&g.e(1), &l), Err(Error::ForeignIndex { .. })));
    }

    #[test]
    fn annihilation_small() {
        let g = QuantumGroup::with_defaults(CartanDatum::of_type("A2").unwrap());
        assert!(verify_annihilation(&g, 0, 1, 1).unwrap().is_verified());
        assert!(verify_annihilation(&g, 0, 1, 3).unwrap().is_verified());
        assert!(verify_mixed_annihilation(&g, 0, &[1, 2]).unwrap().is_verified());
        assert!(verify_mixed_annihilation(&g, 0, &[0]).unwrap().is_verified());
        // a smaller divided power does not kill L(2)
        let rep = module_l(0, 1, 2).unwrap();
        let x = idiv_of(&g, 0, 2, Parity::Even).unwrap();
        assert!(!act(&x, &rep).unwrap().is_zero());
    }
}
