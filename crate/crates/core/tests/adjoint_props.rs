mod common;

use common::*;
use iquantum::adjoint::{ad, ad_multiplicativity_check};
use iquantum::idivided::{idiv_of, Parity};
use iquantum::repmod::{act, module_l};

#[test]
fn ad_is_an_algebra_action() {
    for name in ["A2", "B2"] {
        let g = group(name);
        let mut gens = chevalley(&g);
        gens.extend((0..g.rank()).map(|i| g.b(i)));
        let targets = [
            g.e(0),
            g.mul(&g.f(1), &g.kt(1, 1)).unwrap(),
            g.mul(&g.b(1), &g.e(0)).unwrap(),
        ];
        for u in &gens {
            for v in &gens {
                let uv = g.mul(u, v).unwrap();
                for w in &targets {
                    let lhs = ad(&g, &uv, w).unwrap();
                    let rhs = ad(&g, u, &ad(&g, v, w).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{name}: u={u} v={v} w={w}");
                }
            }
        }
        for x in &gens {
            assert!(ad_multiplicativity_check(&g, x, &targets[0], &targets[2]).unwrap());
        }
    }
}

#[test]
fn extremal_vectors() {
    for name in ["A2", "B2", "G2"] {
        let g = group(name);
        for i in 0..2 {
            let j = 1 - i;
            let fk = g.mul(&g.f(j), &g.kt(j, 1)).unwrap();
            assert!(ad(&g, &g.e(i), &fk).unwrap().is_zero());
            let top = (2 - g.datum().a(i, j)) as usize;
            assert!(ad(&g, &g.e_div(i, top).unwrap(), &fk).unwrap().is_zero());
            assert!(ad(&g, &g.f(i), &g.e(j)).unwrap().is_zero());
            // the classical Serre element is the first power that kills F_j Kt_j
            let top = (1 - g.datum().a(i, j)) as usize;
            assert!(ad(&g, &g.f_div(i, top).unwrap(), &fk).unwrap().is_zero());
            assert!(!ad(&g, &g.f_div(i, top - 1).unwrap(), &fk).unwrap().is_zero());
        }
    }
}

#[test]
fn larger_divided_powers_kill_smaller_modules() {
    let g = group("A1");
    for n in 0..=4usize {
        let x = idiv_of(&g, 0, n + 1, Parity::of(n as i64)).unwrap();
        for t in 0..=n / 2 {
            let rep = module_l(0, 1, n - 2 * t).unwrap();
            assert!(act(&x, &rep).unwrap().is_zero(), "n={n} m={}", n - 2 * t);
        }
        // the wrong parity does not annihilate L(n)
        if n > 0 {
            let y = idiv_of(&g, 0, n + 1, Parity::of(n as i64 + 1)).unwrap();
            assert!(!act(&y, &module_l(0, 1, n).unwrap()).unwrap().is_zero(), "n={n}");
        }
    }
}
