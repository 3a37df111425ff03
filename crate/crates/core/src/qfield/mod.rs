//! Exact arithmetic in `Q(q)`: Laurent polynomials, reduced rational
//! functions, quantum integers and quantum factorials.

mod laurent;
mod parse;
mod ratfunc;

pub use laurent::{Coeff, LaurentPoly};
pub use parse::parse_ratfunc;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

/// `q^t`.
pub fn qpow(t: i32) -> RatFunc {
    RatFunc::q_pow(t)
}

/// The quantum integer `[n]` at `q_i = q^eps`, i.e.
/// `(q_i^n - q_i^-n) / (q_i - q_i^-1)`, expanded as a Laurent polynomial.
pub fn qint(n: i64, eps: i64) -> RatFunc {
    RatFunc::from(qint_poly(n, eps))
}

pub(crate) fn qint_poly(n: i64, eps: i64) -> LaurentPoly {
    if n < 0 {
        return -qint_poly(-n, eps);
    }
    // q_i^(n-1) + q_i^(n-3) + ... + q_i^(1-n)
    LaurentPoly::from_terms((0..n).map(|k| (((n - 1 - 2 * k) * eps) as i32, Coeff::from_integer(1.into()))))
}

/// The quantum factorial `[n]! = [n][n-1]...[1]` at `q_i = q^eps`.
pub fn qfact(n: i64, eps: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    let mut acc = LaurentPoly::one();
    for k in 2..=n {
        acc = &acc * &qint_poly(k, eps);
    }
    Ok(RatFunc::from(acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn qpow_examples() {
        assert!(qpow(0).is_one());
        assert_eq!(qpow(3), parse("q^3"));
        assert_eq!(qpow(-2), parse("q^-2"));
    }

    #[test]
    fn qint_examples() {
        assert!(qint(1, 1).is_one());
        assert_eq!(qint(2, 1), parse("q+q^-1"));
        assert_eq!(qint(3, 2), parse("q^4+1+q^-4"));
        assert_eq!(qint(-2, 1), parse("-q-q^-1"));
        assert!(qint(0, 3).is_zero());
    }

    #[test]
    fn qfact_examples() {
        assert!(qfact(0, 1).unwrap().is_one());
        assert_eq!(qfact(2, 1).unwrap(), parse("q+q^-1"));
        assert_eq!(qfact(3, 1).unwrap(), parse("(q+q^-1)*(q^2+1+q^-2)"));
        assert_eq!(qfact(-1, 1), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn qint_matches_defining_quotient() {
        for eps in 1..=3 {
            let qi = qpow(eps as i32);
            let qi_inv = qpow(-(eps as i32));
            let denom = &qi - &qi_inv;
            for n in -12..=12i64 {
                let lhs = &qint(n, eps) * &denom;
                let rhs = &qi.pow(n).unwrap() - &qi.pow(-n).unwrap();
                assert_eq!(lhs, rhs, "n={n} eps={eps}");
            }
        }
    }

    #[test]
    fn qint_is_bar_invariant() {
        for n in -8..=8 {
            for eps in 1..=3 {
                assert_eq!(qint(n, eps).bar(), qint(n, eps));
            }
        }
    }
}
