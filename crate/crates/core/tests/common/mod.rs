//! Oracles and helpers shared by the integration tests. They are written
//! against the public API only and avoid the engine's own shortcuts.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use iquantum::cartan::{CartanDatum, IParams};
use iquantum::pbw::Word;
use iquantum::qfield::RatFunc;
use iquantum::uq::{KExp, Mono, QuantumGroup, UElement};

pub fn datum(name: &str) -> CartanDatum {
    CartanDatum::of_type(name).unwrap()
}

pub fn group(name: &str) -> QuantumGroup {
    QuantumGroup::with_defaults(datum(name))
}

pub fn q(t: i32) -> RatFunc {
    RatFunc::q_pow(t)
}

pub fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

/// The same algebra with `varsigma_i = q_i^t` for every `i`.
pub fn with_varsigma_power(qg: &QuantumGroup, t: i64) -> QuantumGroup {
    let mut p = IParams::default_for(qg.datum()).with_serre_mode(qg.mode());
    for i in 0..qg.rank() {
        p.set_varsigma(i, qg.q_i_pow(i, t)).unwrap();
    }
    qg.reparametrize(p).unwrap()
}

/// Positive roots in simple-root coordinates, generated by simple
/// reflections from the simple roots (finite type only).
pub fn positive_roots(d: &CartanDatum) -> Vec<Vec<i64>> {
    let r = d.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    while let Some(beta) = stack.pop() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..r {
            // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            let pairing: i64 = (0..r).map(|j| beta[j] * d.a(i, j)).sum();
            let mut img = beta.clone();
            img[i] -= pairing;
            if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) {
                stack.push(img);
            }
        }
        assert!(seen.len() < 1000, "root system is not finite");
    }
    seen.into_iter().collect()
}

/// Number of multisets of positive roots summing to `weight`.
pub fn kostant_count(roots: &[Vec<i64>], weight: &[i64]) -> usize {
    fn go(roots: &[Vec<i64>], start: usize, rest: &mut Vec<i64>) -> usize {
        if rest.iter().all(|&c| c == 0) {
            return 1;
        }
        let mut total = 0;
        for k in start..roots.len() {
            let root = &roots[k];
            if root.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
                for (x, a) in rest.iter_mut().zip(root) {
                    *x -= a;
                }
                total += go(roots, k, rest);
                for (x, a) in rest.iter_mut().zip(root) {
                    *x += a;
                }
            }
        }
        total
    }
    go(roots, 0, &mut weight.to_vec())
}

pub fn mono_elem(m: &Mono) -> UElement {
    UElement::from_mono(m.clone(), RatFunc::one())
}

/// Three-slot tensor, used only to compare the two iterated coproducts.
pub type Triple = BTreeMap<(Mono, Mono, Mono), RatFunc>;

fn add3(t: &mut Triple, key: (Mono, Mono, Mono), c: RatFunc) {
    let entry = t.entry(key.clone()).or_insert_with(RatFunc::zero);
    *entry = &*entry + &c;
    if entry.is_zero() {
        t.remove(&key);
    }
}

/// `(Delta (x) id) Delta(u)`.
pub fn comult_left(qg: &QuantumGroup, u: &UElement) -> Triple {
    let mut out = Triple::new();
    for (a, b, c) in qg.comult(u).unwrap().terms() {
        for (a1, a2, c2) in qg.comult(&mono_elem(a)).unwrap().terms() {
            add3(&mut out, (a1.clone(), a2.clone(), b.clone()), c * c2);
        }
    }
    out
}

/// `(id (x) Delta) Delta(u)`.
pub fn comult_right(qg: &QuantumGroup, u: &UElement) -> Triple {
    let mut out = Triple::new();
    for (a, b, c) in qg.comult(u).unwrap().terms() {
        for (b1, b2, c2) in qg.comult(&mono_elem(b)).unwrap().terms() {
            add3(&mut out, (a.clone(), b1.clone(), b2.clone()), c * c2);
        }
    }
    out
}

/// `m (S (x) id) Delta(u)` and `m (id (x) S) Delta(u)`.
pub fn antipode_axiom_sides(qg: &QuantumGroup, u: &UElement) -> (UElement, UElement) {
    let mut left = UElement::zero();
    let mut right = UElement::zero();
    for (a, b, c) in qg.comult(u).unwrap().terms() {
        let (a, b) = (mono_elem(a), mono_elem(b));
        left = &left + &qg.mul(&qg.antipode(&a).unwrap(), &b).unwrap().scale(c);
        right = &right + &qg.mul(&a, &qg.antipode(&b).unwrap()).unwrap().scale(c);
    }
    (left, right)
}

/// All words of length at most `len` over `alphabet`, as products.
pub fn words_up_to(qg: &QuantumGroup, alphabet: &[UElement], len: usize) -> Vec<UElement> {
    let mut layer = vec![UElement::one()];
    let mut out = layer.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for g in alphabet {
                next.push(qg.mul(w, g).unwrap());
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A small random coefficient: `c q^t` with `c` in `-3..=3`, nonzero.
pub fn random_coeff(rng: &mut impl Rng) -> RatFunc {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-3i64..=3);
    }
    &RatFunc::ratio(c, 1).unwrap() * &q(rng.gen_range(-3..=3))
}

/// A random element of the rank-1 part at index `i`: a few terms
/// `F_i^a Kt_i^k E_i^b` with `a + b <= max_degree`.
pub fn random_rank_one(rng: &mut impl Rng, i: usize, max_degree: usize) -> UElement {
    let mut u = UElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(0..=max_degree);
        let b = rng.gen_range(0..=max_degree - a);
        let mut k: KExp = Default::default();
        k[i] = rng.gen_range(-2..=2);
        u.add_term(Mono::new(Word::repeat(i, a), k, Word::repeat(i, b)), random_coeff(rng));
    }
    u
}

/// A random product of up to `len` generators drawn from `alphabet`.
pub fn random_word(rng: &mut impl Rng, qg: &QuantumGroup, alphabet: &[UElement], len: usize) -> UElement {
    let mut u = UElement::one();
    for _ in 0..rng.gen_range(1..=len) {
        u = qg.mul(&u, &alphabet[rng.gen_range(0..alphabet.len())]).unwrap();
    }
    u
}

/// `E_i, F_i, Kt_i^{+-1}` for every index.
pub fn chevalley(qg: &QuantumGroup) -> Vec<UElement> {
    let mut out = Vec::new();
    for i in 0..qg.rank() {
        out.extend([qg.e(i), qg.f(i), qg.kt(i, 1), qg.kt(i, -1)]);
    }
    out
}
