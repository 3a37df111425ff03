mod common;

use common::*;
use iquantum::cartan::{IParams, SerreMode};
use iquantum::idivided::{antipode_identity_residuals, idiv_of, Parity};
use iquantum::pbw::Word;
use iquantum::qfield::RatFunc;
use iquantum::uq::{Mono, QuantumGroup};

fn pure_f(i: usize, n: usize) -> Mono {
    Mono::new(Word::repeat(i, n), Default::default(), Word::empty())
}

#[test]
fn leading_coefficient() {
    for name in ["A2", "B2"] {
        let g = group(name);
        for i in 0..g.rank() {
            let fact_inv = |n: usize| g.f_div(i, n).unwrap().coeff(&pure_f(i, n));
            for p in [Parity::Even, Parity::Odd] {
                for n in 0..=6 {
                    let b = idiv_of(&g, i, n, p).unwrap();
                    // coefficient 1 on F^{(n)} = F^n / [n]!
                    assert_eq!(b.coeff(&pure_f(i, n)), fact_inv(n), "{name} i={i} n={n} p={p}");
                }
            }
        }
    }
}

/// `[n+1] B^{(n+1)} - B B^{(n)} = c B^{(n-1)}`; returns `c`.
fn recursion_multiplier(g: &QuantumGroup, i: usize, n: usize, p: Parity) -> RatFunc {
    let next = idiv_of(g, i, n + 1, p).unwrap().scale(&g.qint_i(i, n as i64 + 1));
    let diff = &next - &g.mul(&g.b(i), &idiv_of(g, i, n, p).unwrap()).unwrap();
    let prev = idiv_of(g, i, n - 1, p).unwrap();
    let m = pure_f(i, n - 1);
    let c = diff.coeff(&m).div(&prev.coeff(&m)).unwrap();
    assert_eq!(diff, prev.scale(&c), "i={i} n={n} p={p}");
    c
}

#[test]
fn parity_recursion() {
    let g = group("B2");
    let h = with_varsigma_power(&g, 3);
    for i in 0..2 {
        for p in [Parity::Even, Parity::Odd] {
            for n in 1..=4 {
                // the multiplier is linear in q_i varsigma_i
                let per = |x: &QuantumGroup| {
                    recursion_multiplier(x, i, n, p)
                        .div(&(&x.q_i(i) * x.varsigma(i)))
                        .unwrap()
                };
                assert_eq!(per(&g), per(&h), "i={i} n={n} p={p}");
            }
        }
    }
}

#[test]
fn rank_one_identities_without_serre() {
    let on = group("A2");
    let off = QuantumGroup::new(
        on.datum().clone(),
        IParams::default_for(on.datum()).with_serre_mode(SerreMode::Off),
        on.cap(),
    )
    .unwrap();
    for n in 0..=4 {
        for a in -1..=1 {
            for r in antipode_identity_residuals(&off, 0, n, a).unwrap() {
                assert!(r.is_zero());
            }
        }
        assert_eq!(
            idiv_of(&off, 0, n, Parity::Odd).unwrap(),
            idiv_of(&on, 0, n, Parity::Odd).unwrap()
        );
    }
}

#[test]
fn low_degrees_by_hand() {
    let g = group("A2");
    let b = g.b(0);
    assert_eq!(idiv_of(&g, 0, 1, Parity::Odd).unwrap(), b);
    let half = RatFunc::from(1).div(&g.qint_i(0, 2)).unwrap();
    // B^{(2)}_{odd} = (B^2 - q varsigma) / [2]
    let want = (&g.mul(&b, &b).unwrap() - &iquantum::uq::UElement::scalar(&g.q_i(0) * g.varsigma(0))).scale(&half);
    assert_eq!(idiv_of(&g, 0, 2, Parity::Odd).unwrap(), want);
    assert_eq!(
        idiv_of(&g, 0, 2, Parity::Even).unwrap(),
        g.mul(&b, &b).unwrap().scale(&half)
    );
}
