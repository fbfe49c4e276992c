//! The antipode against an independent solver: `1/X(t) = Σ_k (X(t) - 1)^k`
//! over `F_2`, so the coefficient of `t^n` is the sum over all compositions
//! of `n` of `X_{a_1} ... X_{a_k}`.

use std::collections::BTreeSet;

use bordiscope_core::hopf::BoSpec;
use bordiscope_core::{BigRingSpec, GradedPolynomial};

const N: u32 = 12;

/// Exponent vectors (index `i - 1` holds the power of `X_i`), mod 2.
fn brute_force(n: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    // compositions of n <-> subsets of the n - 1 cut points
    for cuts in 0u32..(1 << (n - 1)) {
        let mut exps = vec![0u32; N as usize];
        let mut last = 0;
        for k in 1..=n {
            if k == n || cuts & (1 << (k - 1)) != 0 {
                exps[(k - last - 1) as usize] += 1;
                last = k;
            }
        }
        if !out.remove(&exps) {
            out.insert(exps);
        }
    }
    out
}

fn as_exponent_set(p: &GradedPolynomial) -> BTreeSet<Vec<u32>> {
    p.terms()
        .iter()
        .map(|m| {
            let mut exps = vec![0u32; N as usize];
            for &(v, e) in m.exponents() {
                let name = &p.spec().variable(v).name;
                let i: usize = name[1..name.find('@').unwrap()].parse().unwrap();
                exps[i - 1] = e as u32;
            }
            exps
        })
        .collect()
}

#[test]
fn antipode_matches_composition_solver() {
    let bo = BoSpec::new(1, N, 4).unwrap();
    for n in 1..=N {
        let s = bo.antipode().of_x("c1", n).unwrap();
        assert_eq!(as_exponent_set(&s), brute_force(n), "S(X_{n})");
    }
}

#[test]
fn convolution_vanishes() {
    let bo = BoSpec::new(2, N, 4).unwrap();
    for c in bo.characters() {
        for n in 1..=N {
            let mut acc = GradedPolynomial::one(bo.ring()).mul(&bo.x(n, c).unwrap()).unwrap();
            for i in 1..=n {
                let s = bo.antipode().of_x(&c.label(), i).unwrap();
                let x = if i == n { GradedPolynomial::one(bo.ring()) } else { bo.x(n - i, c).unwrap() };
                acc = acc.add(&s.mul(&x).unwrap()).unwrap();
            }
            assert!(acc.is_zero(), "n = {n}, c = {c}");
        }
    }
}

#[test]
fn fixed_values() {
    let bo = BoSpec::new(1, 3, 4).unwrap();
    let a = bo.antipode();
    assert_eq!(a.of_x("c1", 2).unwrap().to_text(), "X2@c1 + X1@c1^2");
    assert_eq!(a.of_x("c1", 3).unwrap().to_text(), "X3@c1 + X1@c1^3");
}

#[test]
fn antipode_is_an_involution() {
    let spec = BigRingSpec::with_x_max(1, 2, 4, 10).unwrap();
    let a = spec.antipode();
    for n in 1..=10 {
        let x = spec.var_poly(spec.x_var(n, 0).unwrap(), 1).unwrap();
        let once = a.apply(&x).unwrap();
        assert_eq!(a.apply(&once).unwrap(), x, "S(S(X_{n}))");
    }
}
