//! Reduced rational functions in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{Coeff, LaurentPoly};
use crate::error::{Error, Result};

/// An element `num / den` of `Q(q)` in canonical form.
///
/// `den` is a monic polynomial with nonzero constant term (all powers of `q`
/// live in `num`) and `gcd(num, den) = 1`. Zero is `0 / 1`. Under these rules
/// structural equality coincides with equality in the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from(LaurentPoly::from_int(n))
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn from_coeff(c: Coeff) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    /// `n / d` for integers; `d` must be nonzero.
    pub fn ratio(n: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coeff(Coeff::new(BigInt::from(n), BigInt::from(d))))
    }

    /// `q^t`.
    pub fn q_pow(t: i32) -> Self {
        Self::from(LaurentPoly::q_pow(t))
    }

    /// Canonicalizes an arbitrary fraction.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            // den = c q^t is a unit
            let c = den.lead();
            let t = den.low().unwrap();
            return Self::from(num.shift(-t).scale(&c.recip()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let t = den.low().unwrap();
        let lead = den.lead();
        let inv = lead.recip();
        Self {
            num: num.shift(-t).scale(&inv),
            den: den.shift(-t).scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Q[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplies by `q^t`.
    pub fn mul_q_pow(&self, t: i32) -> Self {
        if t == 0 {
            return self.clone();
        }
        Self {
            num: self.num.shift(t),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return RatFunc::normalize(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only gcd(numerator, g) can be nontrivial.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc { num, den };
        }
        let b1 = self.den.div_exact(&g);
        let d1 = rhs.den.div_exact(&g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g2 = num.gcd(&g);
        let (num, g) = if g2.is_one() {
            (num, g)
        } else {
            (num.div_exact(&g2), g.div_exact(&g2))
        };
        let den = &(&b1 * &d1) * &g;
        // den is a product of monic constant-term-free factors: already canonical
        RatFunc { num, den }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        // cross-cancel: gcd(a, d) and gcd(c, b)
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        RatFunc {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl std::str::FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}
