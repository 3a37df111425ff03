//! Laurent polynomials in `q` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Ground field of coefficients.
pub type Coeff = BigRational;

/// A Laurent polynomial `sum_t c_t q^t`.
///
/// Stored densely from the lowest to the highest nonzero exponent. Both end
/// coefficients are nonzero; the zero polynomial has no coefficients and
/// `low == 0`, so derived equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Coeff>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Coeff::from_integer(BigInt::from(n)))
    }

    pub fn monomial(c: Coeff, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(Coeff::one(), exp)
    }

    /// Builds `sum_k coeffs[k] q^(low + k)`, trimming zero ends.
    pub fn from_coeffs(low: i32, coeffs: Vec<Coeff>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, Coeff)>>(terms: I) -> Self {
        let terms: Vec<(i32, Coeff)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c q^t` with a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn low(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn high(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> Coeff {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Coeff::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Coefficient of the highest power; zero for the zero polynomial.
    pub fn lead(&self) -> Coeff {
        self.coeffs.last().cloned().unwrap_or_else(Coeff::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Coeff)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// Multiplies by `q^t`.
    pub fn shift(&self, t: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + t,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(hi) => Self {
                low: -hi,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// The substitution `q -> q^k` for `k >= 1`.
    pub fn dilate(&self, k: i32) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Polynomial part with the lowest exponent shifted to zero.
    fn shifted_coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Greatest common divisor in `Q[q, q^-1]`, normalized monic with lowest
    /// exponent zero. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic_part();
        }
        if other.is_zero() {
            return self.monic_part();
        }
        if self.is_monomial() || other.is_monomial() {
            return Self::one();
        }
        let g = poly_gcd(self.shifted_coeffs(), other.shifted_coeffs());
        Self::from_coeffs(0, g)
    }

    /// The unit-normalized associate: lowest exponent zero, leading coefficient one.
    pub fn monic_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.lead();
        Self {
            low: 0,
            coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
        }
    }

    /// Exact quotient `self / d`. Panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if d.is_monomial() {
            let inv = d.coeffs[0].recip();
            return Self {
                low: self.low - d.low,
                coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
            };
        }
        let (quot, rem) = poly_div_rem(&self.coeffs, &d.coeffs);
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_coeffs(self.low - d.low, quot)
    }

    /// Divides when `d` divides `self` in `Q[q, q^-1]`, else returns `None`.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            return Some(self.div_exact(d));
        }
        let (quot, rem) = poly_div_rem(&self.coeffs, &d.coeffs);
        rem.iter()
            .all(|c| c.is_zero())
            .then(|| Self::from_coeffs(self.low - d.low, quot))
    }
}

fn poly_div_rem(a: &[Coeff], b: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let mut rem: Vec<Coeff> = a.to_vec();
    if a.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut quot = vec![Coeff::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (t, bt) in b.iter().enumerate() {
            if !bt.is_zero() {
                rem[k + t] -= &c * bt;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    (quot, rem)
}

fn make_monic(mut p: Vec<Coeff>) -> Vec<Coeff> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c /= &lead;
            }
        }
    }
    p
}

/// Monic Euclidean gcd of ordinary polynomials with nonzero constant terms.
fn poly_gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let (mut x, mut y) = if a.len() >= b.len() {
        (make_monic(a.to_vec()), make_monic(b.to_vec()))
    } else {
        (make_monic(b.to_vec()), make_monic(a.to_vec()))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![Coeff::one()];
        }
        let (_, r) = poly_div_rem(&x, &y);
        x = y;
        y = make_monic(strip_low_zeros(r));
    }
    x
}

/// Removes factors of `q` (units in the Laurent ring) from a remainder.
fn strip_low_zeros(mut p: Vec<Coeff>) -> Vec<Coeff> {
    let k = p.iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        p.drain(..k);
    }
    p
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high().unwrap().max(rhs.high().unwrap());
        let mut coeffs = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + k] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Coeff::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Formats a rational coefficient as `n` or `n/d`.
pub(crate) fn fmt_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            let body = match (e, abs.is_one()) {
                (0, _) => fmt_coeff(&abs),
                (1, true) => "q".to_string(),
                (_, true) => format!("q^{e}"),
                (1, false) => format!("{}*q", fmt_coeff(&abs)),
                (_, false) => format!("{}*q^{e}", fmt_coeff(&abs)),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, "+{body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
