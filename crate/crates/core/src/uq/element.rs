//! Elements of the quantum group and of its tensor square, stored in
//! triangular normal form `F-word * Kt^mu * E-word`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::cartan::MAX_RANK;
use crate::pbw::Word;
use crate::qfield::RatFunc;

/// Exponent vector `mu` of the torus monomial `Kt^mu = prod_i Kt_i^{mu_i}`.
pub type KExp = [i32; MAX_RANK];

/// One triangular monomial `F_{f} Kt^{k} E_{e}`.
///
/// The derived order compares the F-word (degree-lexicographic), then the
/// torus exponent (lexicographic), then the E-word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Mono {
    pub f: Word,
    pub k: KExp,
    pub e: Word,
}

impl Mono {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(f: Word, k: KExp, e: Word) -> Self {
        Self { f, k, e }
    }

    pub fn torus(k: KExp) -> Self {
        Self { k, ..Self::default() }
    }

    pub fn is_torus(&self) -> bool {
        self.f.is_empty() && self.e.is_empty()
    }

    /// Number of E letters minus number of F letters.
    pub fn e_minus_f(&self) -> i64 {
        self.e.len() as i64 - self.f.len() as i64
    }

    fn factors(&self) -> String {
        let mut parts = Vec::new();
        if !self.f.is_empty() {
            parts.push(self.f.render("F"));
        }
        for (i, &x) in self.k.iter().enumerate() {
            match x {
                0 => {}
                1 => parts.push(format!("K{}", i + 1)),
                _ => parts.push(format!("K{}^{}", i + 1, x)),
            }
        }
        if !self.e.is_empty() {
            parts.push(self.e.render("E"));
        }
        parts.join("*")
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.factors();
        f.write_str(if s.is_empty() { "1" } else { &s })
    }
}

pub(crate) fn add_kexp(a: &KExp, b: &KExp) -> KExp {
    let mut out = *a;
    for k in 0..MAX_RANK {
        out[k] += b[k];
    }
    out
}

pub(crate) fn neg_kexp(a: &KExp) -> KExp {
    a.map(|x| -x)
}

pub(crate) fn unit_kexp(i: usize, power: i32) -> KExp {
    let mut k = [0; MAX_RANK];
    k[i] = power;
    k
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, RatFunc>, key: K, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// Renders a coefficient so that it can be followed by `*factor`.
fn render_coeff(c: &RatFunc) -> String {
    let s = c.to_string();
    let body = s.strip_prefix('-').unwrap_or(&s);
    let bytes = body.as_bytes();
    let compound = body.contains('/')
        || bytes
            .iter()
            .enumerate()
            .any(|(k, &b)| (b == b'+' || b == b'-') && k > 0 && bytes[k - 1] != b'^');
    if compound {
        format!("({s})")
    } else {
        s
    }
}

fn render_term(c: &RatFunc, factors: &str) -> String {
    if factors.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        factors.to_string()
    } else if (-c).is_one() {
        format!("-{factors}")
    } else {
        format!("{}*{factors}", render_coeff(c))
    }
}

fn join_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = String>) -> fmt::Result {
    let mut first = true;
    for t in terms {
        if first {
            f.write_str(&t)?;
            first = false;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(f, " - {rest}")?;
        } else {
            write!(f, " + {t}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A finite linear combination of triangular monomials.
///
/// Values produced by [`QuantumGroup`](super::QuantumGroup) operations have
/// Serre-reduced words; values assembled by hand through
/// [`UElement::from_mono`] are taken as given.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<Mono, RatFunc>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::from_mono(Mono::one(), c)
    }

    pub fn from_mono(m: Mono, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, m, c);
        Self { terms }
    }

    pub fn torus(k: KExp) -> Self {
        Self::from_mono(Mono::torus(k), RatFunc::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, RatFunc)>) -> Self {
        let mut u = Self::zero();
        for (m, c) in terms {
            u.add_term(m, c);
        }
        u
    }

    pub fn add_term(&mut self, m: Mono, c: RatFunc) {
        add_into(&mut self.terms, m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Mono::one()).is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Largest number of E plus F letters over all terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.f.len() + m.e.len()).max().unwrap_or(0)
    }

    /// Generator indices occurring in any word or torus exponent.
    pub fn indices(&self) -> Vec<usize> {
        let mut seen = [false; MAX_RANK];
        for m in self.terms.keys() {
            for l in m.f.letters().chain(m.e.letters()) {
                seen[l] = true;
            }
            for (i, &x) in m.k.iter().enumerate() {
                if x != 0 {
                    seen[i] = true;
                }
            }
        }
        (0..MAX_RANK).filter(|&i| seen[i]).collect()
    }
}

impl Add<&UElement> for &UElement {
    type Output = UElement;
    fn add(self, rhs: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&UElement> for &UElement {
    type Output = UElement;
    fn sub(self, rhs: &UElement) -> UElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for UElement {
    type Output = UElement;
    fn add(self, rhs: UElement) -> UElement {
        &self + &rhs
    }
}

impl Sub for UElement {
    type Output = UElement;
    fn sub(self, rhs: UElement) -> UElement {
        &self - &rhs
    }
}

impl Neg for UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        -&self
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_terms(f, self.terms.iter().map(|(m, c)| render_term(c, &m.factors())))
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite linear combination of `mono (x) mono`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(Mono, Mono), RatFunc>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `u (x) v`.
    pub fn outer(u: &UElement, v: &UElement) -> Self {
        let mut t = Self::zero();
        for (a, x) in u.terms() {
            for (b, y) in v.terms() {
                t.add_term(a.clone(), b.clone(), x * y);
            }
        }
        t
    }

    pub fn add_term(&mut self, left: Mono, right: Mono, c: RatFunc) {
        add_into(&mut self.terms, (left, right), c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Mono, &RatFunc)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Groups terms by their left factor: `sum_L L (x) R_L`.
    pub fn by_left(&self) -> BTreeMap<Mono, UElement> {
        let mut out: BTreeMap<Mono, UElement> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
        }
        out
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            add_into(&mut out.terms, k.clone(), -c);
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_terms(
            f,
            self.terms
                .iter()
                .map(|((a, b), c)| render_term(c, &format!("[{a} (x) {b}]"))),
        )
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(f: &[usize], k: KExp, e: &[usize]) -> Mono {
        Mono::new(Word::from_letters(f), k, Word::from_letters(e))
    }

    #[test]
    fn printing() {
        let mut u = UElement::zero();
        assert_eq!(u.to_string(), "0");
        u.add_term(mono(&[0], [0; 4], &[]), RatFunc::one());
        u.add_term(mono(&[], [-1, 0, 0, 0], &[0]), "q^-1".parse().unwrap());
        u.add_term(Mono::one(), "-(q+1)".parse().unwrap());
        assert_eq!(u.to_string(), "q^-1*K1^-1*E1 - q-1 + F1");
        let v = UElement::from_mono(mono(&[1, 0], [0, 2, 0, 0], &[1]), "(q^2+1)/(q)".parse().unwrap());
        assert_eq!(v.to_string(), "(q+q^-1)*F2*F1*K2^2*E2");
        let w = UElement::from_mono(mono(&[], [0; 4], &[0]), "1/(q^2+1)".parse().unwrap());
        assert_eq!(w.to_string(), "((1)/(q^2+1))*E1");
    }

    #[test]
    fn term_order() {
        // F-word first, then torus, then E-word
        let a = mono(&[], [5, 0, 0, 0], &[0, 0]);
        let b = mono(&[0], [-3, 0, 0, 0], &[]);
        let c = mono(&[0], [-3, 0, 0, 0], &[1]);
        assert!(a < b && b < c);
    }

    #[test]
    fn cancellation() {
        let x = UElement::from_mono(mono(&[0], [0; 4], &[]), RatFunc::q_pow(2));
        assert!((&x - &x).is_zero());
        assert_eq!((&x + &x).len(), 1);
    }
}
