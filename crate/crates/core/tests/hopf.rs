mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use iquantum::cartan::IParams;
use iquantum::idivided::{idiv_of, Parity};
use iquantum::uq::{Gen, QuantumGroup, UElement};

#[test]
fn multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["A2", "B2", "G2"] {
        let g = group(name);
        let gens = chevalley(&g);
        for _ in 0..40 {
            let a = random_word(&mut rng, &g, &gens, 2);
            let b = random_word(&mut rng, &g, &gens, 2);
            let c = random_word(&mut rng, &g, &gens, 2);
            let left = g.mul(&g.mul(&a, &b).unwrap(), &c).unwrap();
            let right = g.mul(&a, &g.mul(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right, "{name}: ({a})({b})({c})");
        }
    }
}

#[test]
fn coassociativity_detects_a_wrong_coproduct() {
    // an element and a different one with the same first slot structure
    let g = group("A2");
    let u = g.e(0);
    let mut bad = comult_left(&g, &u);
    let key = bad.keys().next().unwrap().clone();
    bad.insert(key, rf("2"));
    assert_ne!(bad, comult_right(&g, &u));
}

#[test]
fn antipode_axiom_on_products() {
    let g = group("B2");
    let u = g.product(&[&g.e(0), &g.f(1), &g.b(0)]).unwrap();
    let unit = UElement::scalar(g.counit(&u));
    let (l, r) = antipode_axiom_sides(&g, &u);
    assert_eq!(l, unit);
    assert_eq!(r, unit);
}

#[test]
fn square_of_antipode_is_not_the_inverse_rescaling() {
    // negative control for the S^2 check: the exponent sign matters
    let g = group("A2");
    let u = g.mul(&g.e(0), &g.e(0)).unwrap();
    let s2 = g.antipode(&g.antipode(&u).unwrap()).unwrap();
    assert_eq!(s2, g.xi(&g.q_i_pow(0, -2), &u).unwrap());
    assert_ne!(s2, g.xi(&g.q_i_pow(0, 2), &u).unwrap());
}

#[test]
fn rescaling_relates_parameters() {
    // with varsigma_i = q_i^3, z = q_i^2 satisfies z^2 = q_i varsigma_i
    for name in ["A2", "B2"] {
        let tilde = group(name);
        let g = with_varsigma_power(&tilde, 3);
        for i in 0..g.rank() {
            let z = g.q_i_pow(i, 2);
            assert_eq!(&z * &z, &g.q_i(i) * g.varsigma(i));
            for p in [Parity::Even, Parity::Odd] {
                for n in 0..=4 {
                    let lhs = g.xi(&z, &idiv_of(&tilde, i, n, p).unwrap()).unwrap();
                    let rhs = idiv_of(&g, i, n, p).unwrap().scale(&z.pow(-(n as i64)).unwrap());
                    assert_eq!(lhs, rhs, "{name} i={i} n={n} p={p}");
                }
            }
        }
    }
}

#[test]
fn generators_by_kind() {
    let g = group("A2");
    assert_eq!(g.gen(Gen::B, 1).unwrap(), g.b(1));
    assert_eq!(g.gen(Gen::Ktilde, 0).unwrap(), g.kt(0, 1));
    assert_eq!(g.gen(Gen::KtildeInv, 0).unwrap(), g.kt(0, -1));
    assert!(g.gen(Gen::E, 2).is_err());
    let sum = &g.f(0) + &g.mul(&g.e(0), &g.kt(0, -1)).unwrap().scale(g.varsigma(0));
    assert_eq!(g.b(0), sum);
}

#[test]
fn algebra_is_shared_between_parameters() {
    let g = group("B2");
    let p = IParams::default_for(g.datum()).with_varsigma(0, rf("q^5")).unwrap();
    let h = g.reparametrize(p).unwrap();
    assert!(std::sync::Arc::ptr_eq(g.algebra(), h.algebra()));
    assert_ne!(g.b(0), h.b(0));
    let x = QuantumGroup::from_algebra(g.algebra().clone(), IParams::default_for(g.datum()));
    assert_eq!(x.b(0), g.b(0));
}
