//! The quantum group `U` in triangular normal form: multiplication by
//! straightening, the Hopf structure maps, the rescaling automorphisms
//! `xi_lambda` and the torus brackets `[h; a; n]_i`.
//!
//! Throughout, `K` in printed output and `Kt` in names denote the torus
//! generators `Kt_i`. Relations used:
//!
//! ```text
//! Kt_i E_j Kt_i^-1 = q^{i.j} E_j        Kt_i F_j Kt_i^-1 = q^{-i.j} F_j
//! E_i F_j - F_j E_i = delta_ij (Kt_i - Kt_i^-1) / (q_i - q_i^-1)
//! ```

mod element;

use std::collections::BTreeMap;
use std::sync::Arc;

pub(crate) use element::{add_kexp, neg_kexp, unit_kexp};
pub use element::{KExp, Mono, TensorElement, UElement};

use crate::cartan::{CartanDatum, IParams, SerreMode, MAX_RANK};
use crate::error::{Error, Result};
use crate::idivided::Parity;
use crate::memo::Memo;
use crate::pbw::{Pbw, Word, DEFAULT_DEGREE_CAP};
use crate::qfield::{qfact, qint, LaurentPoly, RatFunc};

/// Named generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E,
    F,
    Ktilde,
    KtildeInv,
    /// `B_i = F_i + varsigma_i E_i Kt_i^-1`
    B,
    /// `Ech_i = varsigma_i E_i Kt_i^-1`
    Echeck,
}

type Terms = Arc<Vec<(Mono, RatFunc)>>;

/// The parameter-independent part of the algebra: normal forms and the
/// caches for straightening, antipode and coproduct of monomials.
pub struct Algebra {
    datum: CartanDatum,
    pbw: Pbw,
    straighten: Memo<(Word, Word), Terms>,
    antipode: Memo<Mono, Result<Arc<UElement>>>,
    comult: Memo<Mono, Result<Arc<TensorElement>>>,
}

impl Algebra {
    pub fn new(datum: CartanDatum, mode: SerreMode, cap: usize) -> Self {
        Self {
            pbw: Pbw::new(datum.clone(), mode, cap),
            datum,
            straighten: Memo::new(),
            antipode: Memo::new(),
            comult: Memo::new(),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn pbw(&self) -> &Pbw {
        &self.pbw
    }

    pub fn mode(&self) -> SerreMode {
        self.pbw.mode()
    }

    pub fn cap(&self) -> usize {
        self.pbw.cap()
    }

    /// `sum_{j in word} sum_i mu_i (i.j)`: the exponent of `q` picked up by
    /// `Kt^mu` when it passes an E-word of this content.
    fn pairing_with(&self, mu: &KExp, word: &Word) -> i32 {
        let rank = self.datum.rank();
        let mut total = 0i64;
        for j in word.letters() {
            for (i, &m) in mu.iter().enumerate().take(rank) {
                if m != 0 {
                    total += m as i64 * self.datum.pairing(i, j);
                }
            }
        }
        total as i32
    }

    fn pair(&self, a: usize, b: usize) -> i32 {
        self.datum.pairing(a, b) as i32
    }

    /// `E_e * F_f = sum c F_{f'} Kt^{k'} E_{e'}` with unreduced words.
    fn straighten(&self, e: &Word, f: &Word) -> Terms {
        if e.is_empty() || f.is_empty() {
            return Arc::new(vec![(Mono::new(f.clone(), [0; MAX_RANK], e.clone()), RatFunc::one())]);
        }
        self.straighten.get_or_compute(&(e.clone(), f.clone()), || {
            let a = e.get(0);
            let rest = self.straighten(&e.suffix_from(1), f);
            let qa = self.datum.q_i(a);
            let denom = (&qa - &qa.inv().unwrap()).inv().unwrap();
            let ea = Word::letter(a);
            let mut out: BTreeMap<Mono, RatFunc> = BTreeMap::new();
            let mut push = |m: Mono, c: RatFunc| {
                if c.is_zero() {
                    return;
                }
                let s = match out.get(&m) {
                    Some(v) => v + &c,
                    None => c,
                };
                if s.is_zero() {
                    out.remove(&m);
                } else {
                    out.insert(m, s);
                }
            };
            for (m, c) in rest.iter() {
                // E_a F_{f'} = F_{f'} E_a + sum over letters equal to a
                let fl: Vec<usize> = m.f.letters().collect();
                for t in 0..fl.len() {
                    if fl[t] != a {
                        continue;
                    }
                    let tail: i32 = fl[t + 1..].iter().map(|&b| self.pair(a, b)).sum();
                    let fw = m.f.without(t);
                    let plus = c.mul_q_pow(-tail);
                    let minus = -c.mul_q_pow(tail);
                    push(
                        Mono::new(fw.clone(), add_kexp(&m.k, &unit_kexp(a, 1)), m.e.clone()),
                        &plus * &denom,
                    );
                    push(
                        Mono::new(fw, add_kexp(&m.k, &unit_kexp(a, -1)), m.e.clone()),
                        &minus * &denom,
                    );
                }
                // E_a Kt^k = q^{-sum k_i (i.a)} Kt^k E_a
                let shift = -self.pairing_with(&m.k, &ea);
                push(Mono::new(m.f.clone(), m.k, ea.concat(&m.e)), c.mul_q_pow(shift));
            }
            Arc::new(out.into_iter().collect())
        })
    }

    /// Serre-reduces both words of every monomial.
    fn normalize(&self, raw: BTreeMap<Mono, RatFunc>) -> Result<UElement> {
        let mut out = UElement::zero();
        for (m, c) in raw {
            let rf = self.pbw.reduce_word(&m.f)?;
            let re = self.pbw.reduce_word(&m.e)?;
            for (fw, x) in rf.coords() {
                let cx = &c * x;
                for (ew, y) in re.coords() {
                    out.add_term(Mono::new(fw.clone(), m.k, ew.clone()), &cx * y);
                }
            }
        }
        Ok(out)
    }

    fn accumulate(raw: &mut BTreeMap<Mono, RatFunc>, m: Mono, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match raw.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    raw.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                raw.insert(m, c);
            }
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.cap() {
            Err(Error::CapExceeded {
                cap: self.cap(),
                needed: len,
            })
        } else {
            Ok(())
        }
    }

    /// Product in normal form.
    pub fn mul(&self, a: &UElement, b: &UElement) -> Result<UElement> {
        let mut raw: BTreeMap<Mono, RatFunc> = BTreeMap::new();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                self.check_len(m1.f.len() + m2.f.len())?;
                self.check_len(m1.e.len() + m2.e.len())?;
                let c12 = c1 * c2;
                for (m, c) in self.straighten(&m1.e, &m2.f).iter() {
                    let shift = -self.pairing_with(&m1.k, &m.f) - self.pairing_with(&m2.k, &m.e);
                    let k = add_kexp(&add_kexp(&m1.k, &m.k), &m2.k);
                    Self::accumulate(
                        &mut raw,
                        Mono::new(m1.f.concat(&m.f), k, m.e.concat(&m2.e)),
                        (&c12 * c).mul_q_pow(shift),
                    );
                }
            }
        }
        self.normalize(raw)
    }

    /// Normal form of an element given with arbitrary words.
    pub fn reduce(&self, u: &UElement) -> Result<UElement> {
        self.normalize(u.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
    }

    fn antipode_mono(&self, m: &Mono) -> Result<Arc<UElement>> {
        self.antipode.get_or_compute(m, || {
            // S(E_{a1..ak}) = (-1)^k q^{sum_{s>t} a_s.a_t} Kt^{-wt} E_{ak..a1}
            let al: Vec<usize> = m.e.letters().collect();
            let mut exp = 0i32;
            for t in 0..al.len() {
                for s in t + 1..al.len() {
                    exp += self.pair(al[s], al[t]);
                }
            }
            // S(F_{b1..bm}) = (-1)^m q^{-sum_{s<t} b_s.b_t} F_{bm..b1} Kt^{wt}
            let bl: Vec<usize> = m.f.letters().collect();
            for t in 0..bl.len() {
                for s in 0..t {
                    exp -= self.pair(bl[s], bl[t]);
                }
            }
            let mut wt_e = [0; MAX_RANK];
            for &a in &al {
                wt_e[a] -= 1;
            }
            let mut wt_f = [0; MAX_RANK];
            for &b in &bl {
                wt_f[b] += 1;
            }
            let sign = if (al.len() + bl.len()).is_multiple_of(2) {
                RatFunc::one()
            } else {
                -RatFunc::one()
            };
            let se = UElement::from_mono(Mono::new(Word::empty(), wt_e, m.e.reversed()), sign.mul_q_pow(exp));
            let sk = UElement::torus(neg_kexp(&m.k));
            let sf = UElement::torus(wt_f);
            let sf = self.mul(
                &UElement::from_mono(Mono::new(m.f.reversed(), [0; MAX_RANK], Word::empty()), RatFunc::one()),
                &sf,
            )?;
            let out = self.mul(&self.mul(&se, &sk)?, &sf)?;
            Ok(Arc::new(out))
        })
    }

    pub fn antipode(&self, u: &UElement) -> Result<UElement> {
        let mut out = UElement::zero();
        for (m, c) in u.terms() {
            for (m2, c2) in self.antipode_mono(m)?.terms() {
                out.add_term(m2.clone(), c * c2);
            }
        }
        Ok(out)
    }

    fn comult_mono(&self, m: &Mono) -> Result<Arc<TensorElement>> {
        self.comult.get_or_compute(m, || {
            let bl: Vec<usize> = m.f.letters().collect();
            let al: Vec<usize> = m.e.letters().collect();
            // F side: letter t goes left (F_b (x) Kt_b^-1) when bit t is set
            let mut fparts = Vec::with_capacity(1 << bl.len());
            for mask in 0u32..(1u32 << bl.len()) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut kr = [0; MAX_RANK];
                let mut exp = 0i32;
                for t in 0..bl.len() {
                    if mask >> t & 1 == 1 {
                        left.push(bl[t]);
                        kr[bl[t]] -= 1;
                        for s in t + 1..bl.len() {
                            if mask >> s & 1 == 0 {
                                exp += self.pair(bl[t], bl[s]);
                            }
                        }
                    } else {
                        right.push(bl[t]);
                    }
                }
                fparts.push((Word::from_letters(&left), Word::from_letters(&right), kr, exp));
            }
            // E side: letter t goes right (Kt_a (x) E_a) when bit t is set
            let mut eparts = Vec::with_capacity(1 << al.len());
            for mask in 0u32..(1u32 << al.len()) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut kl = [0; MAX_RANK];
                let mut exp = 0i32;
                for t in 0..al.len() {
                    if mask >> t & 1 == 1 {
                        right.push(al[t]);
                        kl[al[t]] += 1;
                        for s in 0..t {
                            if mask >> s & 1 == 0 {
                                exp -= self.pair(al[s], al[t]);
                            }
                        }
                    } else {
                        left.push(al[t]);
                    }
                }
                eparts.push((Word::from_letters(&left), Word::from_letters(&right), kl, exp));
            }
            let mut raw: BTreeMap<(Mono, Mono), RatFunc> = BTreeMap::new();
            for (fl, fr, kr, ef) in &fparts {
                for (el, er, kl, ee) in &eparts {
                    let left = Mono::new(fl.clone(), add_kexp(&m.k, kl), el.clone());
                    let right = Mono::new(fr.clone(), add_kexp(&m.k, kr), er.clone());
                    let c = RatFunc::q_pow(ef + ee);
                    let key = (left, right);
                    let s = match raw.remove(&key) {
                        Some(v) => &v + &c,
                        None => c,
                    };
                    if !s.is_zero() {
                        raw.insert(key, s);
                    }
                }
            }
            let mut out = TensorElement::zero();
            for ((l, r), c) in raw {
                let lu = self.normalize(BTreeMap::from([(l, RatFunc::one())]))?;
                let ru = self.normalize(BTreeMap::from([(r, RatFunc::one())]))?;
                for (lm, lc) in lu.terms() {
                    let lcc = &c * lc;
                    for (rm, rc) in ru.terms() {
                        out.add_term(lm.clone(), rm.clone(), &lcc * rc);
                    }
                }
            }
            Ok(Arc::new(out))
        })
    }

    pub fn comult(&self, u: &UElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (m, c) in u.terms() {
            for (l, r, x) in self.comult_mono(m)?.terms() {
                out.add_term(l.clone(), r.clone(), c * x);
            }
        }
        Ok(out)
    }

    /// `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (a, b, c1) in x.terms() {
            for (c, d, c2) in y.terms() {
                let ac = self.mul(
                    &UElement::from_mono(a.clone(), RatFunc::one()),
                    &UElement::from_mono(c.clone(), RatFunc::one()),
                )?;
                let bd = self.mul(
                    &UElement::from_mono(b.clone(), RatFunc::one()),
                    &UElement::from_mono(d.clone(), RatFunc::one()),
                )?;
                let t = TensorElement::outer(&ac, &bd).scale(&(c1 * c2));
                out = &out + &t;
            }
        }
        Ok(out)
    }
}

/// The quantum group of a Cartan datum with the iquantum parameters
/// `varsigma_i`.
pub struct QuantumGroup {
    alg: Arc<Algebra>,
    params: IParams,
    pub(crate) idiv_products: Memo<(usize, usize, Parity), Result<Arc<UElement>>>,
}

impl QuantumGroup {
    /// Builds the algebra with the Serre mode taken from `params`.
    pub fn new(datum: CartanDatum, params: IParams, cap: usize) -> Result<Self> {
        if params.rank() != datum.rank() {
            return Err(Error::InvalidParameter(format!(
                "{} parameters for a rank {} datum",
                params.rank(),
                datum.rank()
            )));
        }
        let alg = Arc::new(Algebra::new(datum, params.serre_mode, cap));
        Ok(Self::from_algebra(alg, params))
    }

    /// Default parameters and degree cap.
    pub fn with_defaults(datum: CartanDatum) -> Self {
        let params = IParams::default_for(&datum);
        Self::new(datum, params, DEFAULT_DEGREE_CAP).expect("default parameters fit the datum")
    }

    /// Shares an existing algebra (and its caches) under new parameters.
    pub fn from_algebra(alg: Arc<Algebra>, mut params: IParams) -> Self {
        params.serre_mode = alg.mode();
        Self {
            alg,
            params,
            idiv_products: Memo::new(),
        }
    }

    /// Same algebra and caches, different `varsigma`.
    pub fn reparametrize(&self, params: IParams) -> Result<Self> {
        if params.serre_mode != self.mode() {
            return Self::new(self.datum().clone(), params, self.cap());
        }
        Ok(Self::from_algebra(self.alg.clone(), params))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.alg.datum
    }

    pub fn params(&self) -> &IParams {
        &self.params
    }

    pub fn varsigma(&self, i: usize) -> &RatFunc {
        self.params.varsigma(i)
    }

    pub fn mode(&self) -> SerreMode {
        self.alg.mode()
    }

    pub fn cap(&self) -> usize {
        self.alg.cap()
    }

    pub fn rank(&self) -> usize {
        self.datum().rank()
    }

    pub fn q_i(&self, i: usize) -> RatFunc {
        self.datum().q_i(i)
    }

    pub fn eps(&self, i: usize) -> i64 {
        self.datum().eps(i)
    }

    pub fn gen(&self, kind: Gen, i: usize) -> Result<UElement> {
        self.datum().check_index(i)?;
        let w = Word::letter(i);
        let zero = [0; MAX_RANK];
        Ok(match kind {
            Gen::E => UElement::from_mono(Mono::new(Word::empty(), zero, w), RatFunc::one()),
            Gen::F => UElement::from_mono(Mono::new(w, zero, Word::empty()), RatFunc::one()),
            Gen::Ktilde => UElement::torus(unit_kexp(i, 1)),
            Gen::KtildeInv => UElement::torus(unit_kexp(i, -1)),
            Gen::Echeck => {
                // E_i Kt_i^-1 = q^{i.i} Kt_i^-1 E_i
                let c = self.varsigma(i).mul_q_pow(self.datum().pairing(i, i) as i32);
                UElement::from_mono(Mono::new(Word::empty(), unit_kexp(i, -1), w), c)
            }
            Gen::B => &self.gen(Gen::F, i)? + &self.gen(Gen::Echeck, i)?,
        })
    }

    pub fn e(&self, i: usize) -> UElement {
        self.gen(Gen::E, i).expect("index in range")
    }

    pub fn f(&self, i: usize) -> UElement {
        self.gen(Gen::F, i).expect("index in range")
    }

    pub fn b(&self, i: usize) -> UElement {
        self.gen(Gen::B, i).expect("index in range")
    }

    pub fn echeck(&self, i: usize) -> UElement {
        self.gen(Gen::Echeck, i).expect("index in range")
    }

    /// `Kt_i^power`.
    pub fn kt(&self, i: usize, power: i32) -> UElement {
        UElement::torus(unit_kexp(i, power))
    }

    pub fn mul(&self, a: &UElement, b: &UElement) -> Result<UElement> {
        self.alg.mul(a, b)
    }

    /// Left-to-right product of several factors.
    pub fn product(&self, factors: &[&UElement]) -> Result<UElement> {
        let mut acc = UElement::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &UElement, n: usize) -> Result<UElement> {
        let mut acc = UElement::one();
        for _ in 0..n {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn reduce(&self, u: &UElement) -> Result<UElement> {
        self.alg.reduce(u)
    }

    pub fn antipode(&self, u: &UElement) -> Result<UElement> {
        self.alg.antipode(u)
    }

    pub fn comult(&self, u: &UElement) -> Result<TensorElement> {
        self.alg.comult(u)
    }

    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        self.alg.tensor_mul(x, y)
    }

    /// `epsilon(E_i) = epsilon(F_i) = 0`, `epsilon(Kt^mu) = 1`.
    pub fn counit(&self, u: &UElement) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (m, c) in u.terms() {
            if m.is_torus() {
                acc = &acc + c;
            }
        }
        acc
    }

    /// `xi_lambda`: scales each term by `lambda^{#E - #F}`.
    pub fn xi(&self, lambda: &RatFunc, u: &UElement) -> Result<UElement> {
        if lambda.is_zero() {
            return Err(Error::InvalidParameter("xi needs a nonzero scalar".into()));
        }
        let mut out = UElement::zero();
        for (m, c) in u.terms() {
            out.add_term(m.clone(), c * &lambda.pow(m.e_minus_f())?);
        }
        Ok(out)
    }

    /// `[h; a; n]_i = prod_{t=1}^n (q_i^{4a+4t-4} Kt_i^-2 - 1) / (q_i^{4t} - 1)`.
    pub fn kbracket(&self, i: usize, a: i64, n: usize) -> Result<UElement> {
        self.datum().check_index(i)?;
        let eps = self.eps(i);
        let mut acc = UElement::one();
        for t in 1..=n as i64 {
            let den = (RatFunc::q_pow((4 * t * eps) as i32) - RatFunc::one()).inv()?;
            let mut factor =
                UElement::torus(unit_kexp(i, -2)).scale(&RatFunc::q_pow(((4 * a + 4 * t - 4) * eps) as i32));
            factor.add_term(Mono::one(), -RatFunc::one());
            acc = self.mul(&acc, &factor.scale(&den))?;
        }
        Ok(acc)
    }

    /// `F_i^{(n)}`.
    pub fn f_div(&self, i: usize, n: usize) -> Result<UElement> {
        let c = qfact(n as i64, self.eps(i))?.inv()?;
        Ok(UElement::from_mono(
            Mono::new(Word::repeat(i, n), [0; MAX_RANK], Word::empty()),
            c,
        ))
    }

    /// `E_i^{(n)}`.
    pub fn e_div(&self, i: usize, n: usize) -> Result<UElement> {
        let c = qfact(n as i64, self.eps(i))?.inv()?;
        Ok(UElement::from_mono(
            Mono::new(Word::empty(), [0; MAX_RANK], Word::repeat(i, n)),
            c,
        ))
    }

    /// `Ech_i^{(n)} = Ech_i^n / [n]_i!`.
    pub fn echeck_div(&self, i: usize, n: usize) -> Result<UElement> {
        let c = qfact(n as i64, self.eps(i))?.inv()?;
        Ok(self.pow(&self.echeck(i), n)?.scale(&c))
    }

    /// `[n]_i` as a scalar.
    pub fn qint_i(&self, i: usize, n: i64) -> RatFunc {
        qint(n, self.eps(i))
    }

    /// `q_i^t`.
    pub fn q_i_pow(&self, i: usize, t: i64) -> RatFunc {
        RatFunc::from(LaurentPoly::q_pow((t * self.eps(i)) as i32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qg(name: &str) -> QuantumGroup {
        QuantumGroup::with_defaults(CartanDatum::of_type(name).unwrap())
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn commutator_relation() {
        for name in ["A2", "B2", "G2"] {
            let g = qg(name);
            for i in 0..2 {
                let ef = g.mul(&g.e(i), &g.f(i)).unwrap();
                let fe = g.mul(&g.f(i), &g.e(i)).unwrap();
                let qi = g.q_i(i);
                let k = (&g.kt(i, 1) - &g.kt(i, -1)).scale(&(&qi - &qi.inv().unwrap()).inv().unwrap());
                assert!((&(&ef - &fe) - &k).is_zero(), "{name} {i}");
                let j = 1 - i;
                assert_eq!(g.mul(&g.e(i), &g.f(j)).unwrap(), g.mul(&g.f(j), &g.e(i)).unwrap());
            }
        }
    }

    #[test]
    fn torus_commutation() {
        let g = qg("B2");
        // Kt_1 E_2 = q_1^{a_12} E_2 Kt_1 = q^{-2} E_2 Kt_1
        let lhs = g.mul(&g.kt(0, 1), &g.e(1)).unwrap();
        let rhs = g.mul(&g.e(1), &g.kt(0, 1)).unwrap().scale(&r("q^-2"));
        assert_eq!(lhs, rhs);
        assert!(g.mul(&g.kt(0, 1), &g.kt(0, -1)).unwrap().is_one());
    }

    #[test]
    fn serre_relation_vanishes_only_with_serre_on() {
        let g = qg("A2");
        let e1 = g.e(0);
        let e2 = g.e(1);
        let half = qint(2, 1).inv().unwrap();
        let s = &(&g.product(&[&e1, &e1, &e2]).unwrap().scale(&half) - &g.product(&[&e1, &e2, &e1]).unwrap())
            + &g.product(&[&e2, &e1, &e1]).unwrap().scale(&half);
        assert!(s.is_zero());
        let off = QuantumGroup::new(
            g.datum().clone(),
            IParams::default_for(g.datum()).with_serre_mode(SerreMode::Off),
            12,
        )
        .unwrap();
        let (e1, e2) = (off.e(0), off.e(1));
        let s = &(&off.product(&[&e1, &e1, &e2]).unwrap().scale(&half) - &off.product(&[&e1, &e2, &e1]).unwrap())
            + &off.product(&[&e2, &e1, &e1]).unwrap().scale(&half);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn generator_examples() {
        let g = qg("A2");
        assert_eq!(g.echeck(0).to_string(), "q*K1^-1*E1");
        assert_eq!(g.b(0).to_string(), "q*K1^-1*E1 + F1");
        // Ech = varsigma E Kt^-1 as a product
        let direct = g.mul(&g.e(0), &g.kt(0, -1)).unwrap().scale(&r("q^-1"));
        assert_eq!(direct, g.echeck(0));
        assert!(g.gen(Gen::E, 2).is_err());
    }

    #[test]
    fn antipode_examples() {
        let g = qg("A2");
        let s = g.antipode(&g.e(0)).unwrap();
        assert_eq!(s, g.mul(&g.kt(0, -1), &g.e(0)).unwrap().scale(&r("-1")));
        let s = g.antipode(&g.f(0)).unwrap();
        assert_eq!(s, g.mul(&g.f(0), &g.kt(0, 1)).unwrap().scale(&r("-1")));
        // S(F^{(2)}) = q^6 Kt^2 F^{(2)}
        let s = g.antipode(&g.f_div(0, 2).unwrap()).unwrap();
        let rhs = g.mul(&g.kt(0, 2), &g.f_div(0, 2).unwrap()).unwrap().scale(&r("q^6"));
        assert_eq!(s, rhs);
        // S(B) = -B Kt
        let s = g.antipode(&g.b(0)).unwrap();
        assert_eq!(s, -g.mul(&g.b(0), &g.kt(0, 1)).unwrap());
    }

    #[test]
    fn comult_examples() {
        let g = qg("B2");
        for i in 0..2 {
            let d = g.comult(&g.b(i)).unwrap();
            let rhs = &TensorElement::outer(&g.b(i), &g.kt(i, -1)) + &TensorElement::outer(&UElement::one(), &g.b(i));
            assert_eq!(d, rhs);
            assert_eq!(
                g.comult(&g.kt(i, 1)).unwrap(),
                TensorElement::outer(&g.kt(i, 1), &g.kt(i, 1))
            );
        }
        let ef = g.mul(&g.e(0), &g.f(0)).unwrap();
        let prod = g
            .tensor_mul(&g.comult(&g.e(0)).unwrap(), &g.comult(&g.f(0)).unwrap())
            .unwrap();
        assert_eq!(g.comult(&ef).unwrap(), prod);
    }

    #[test]
    fn counit_and_xi() {
        let g = qg("A2");
        assert!(g.counit(&UElement::one()).is_one());
        assert!(g.counit(&g.e(0)).is_zero());
        let u = &g.kt(0, 1) + &g.mul(&g.e(0), &g.f(0)).unwrap();
        // E F = F E + (Kt - Kt^-1)/(q - q^-1) has counit 0
        assert!(g.counit(&u).is_one());
        let lam = r("q^3");
        assert_eq!(g.xi(&lam, &g.e(1)).unwrap(), g.e(1).scale(&lam));
        assert_eq!(g.xi(&lam, &g.f(1)).unwrap(), g.f(1).scale(&r("q^-3")));
        assert!(g.xi(&RatFunc::zero(), &g.e(0)).is_err());
    }

    #[test]
    fn kbracket_examples() {
        let g = qg("B2");
        assert!(g.kbracket(0, 3, 0).unwrap().is_one());
        let k1 = g.kbracket(0, 2, 1).unwrap();
        let mut expect = g.kt(0, -2).scale(&r("q^16"));
        expect.add_term(Mono::one(), r("-1"));
        assert_eq!(k1, expect.scale(&r("1/(q^8-1)")));
    }

    #[test]
    fn cap_is_enforced() {
        let g = QuantumGroup::new(
            CartanDatum::of_type("A2").unwrap(),
            IParams::default_for(&CartanDatum::of_type("A2").unwrap()),
            3,
        )
        .unwrap();
        let e3 = g.pow(&g.e(0), 3).unwrap();
        assert!(matches!(
            g.mul(&e3, &g.e(1)),
            Err(Error::CapExceeded { cap: 3, needed: 4 })
        ));
    }
}
