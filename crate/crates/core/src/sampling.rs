//! Random elements for property tests and benchmarks. Callers supply the RNG,
//! so seeded generators give reproducible samples.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::geometric::{FixedPointDatum, GeometricClass};
use crate::group::Character;
use crate::poly::{GradedPolynomial, Monomial};
use crate::rings::{AoElement, BigRingSpec, VarKind};

/// A monomial in `x_i`, `Y_{d,V}` with positive part of degree at most
/// `max_degree`, times e-powers with exponents in `[-e_range, e_range]`.
pub fn y_monomial<R: Rng + ?Sized>(
    spec: &BigRingSpec,
    rng: &mut R,
    max_degree: i64,
    e_range: i64,
) -> Monomial {
    let positive: Vec<u32> = spec
        .y_presentation_vars()
        .filter(|&v| !matches!(spec.kind(v), VarKind::Euler(_)))
        .collect();
    let mut exps = Vec::new();
    let mut budget = rng.random_range(0..=max_degree.max(0));
    while budget > 0 {
        let fits: Vec<u32> = positive
            .iter()
            .copied()
            .filter(|&v| spec.ring().variable(v).degree <= budget)
            .collect();
        let Some(&v) = fits.choose(rng) else { break };
        budget -= spec.ring().variable(v).degree;
        exps.push((v, 1));
    }
    for ch in 0..spec.characters().len() {
        if rng.random_bool(0.5) {
            exps.push((spec.euler_var(ch), rng.random_range(-e_range..=e_range)));
        }
    }
    spec.monomial(exps).expect("sampled exponents are valid")
}

/// A sum of up to `max_terms` random monomials in the Y-presentation.
pub fn y_polynomial<R: Rng + ?Sized>(
    spec: &BigRingSpec,
    rng: &mut R,
    max_terms: usize,
    max_degree: i64,
    e_range: i64,
) -> GradedPolynomial {
    let n = rng.random_range(0..=max_terms);
    GradedPolynomial::from_terms(
        spec.ring(),
        (0..n).map(|_| y_monomial(spec, rng, max_degree, e_range)),
    )
}

/// A homogeneous polynomial of degree `degree` in the Y-presentation with
/// e-exponents in `[-e_range, e_range]`.
pub fn homogeneous_y_polynomial<R: Rng + ?Sized>(
    spec: &BigRingSpec,
    rng: &mut R,
    degree: i64,
    max_terms: usize,
    e_range: i64,
) -> GradedPolynomial {
    let mut terms = Vec::new();
    for _ in 0..max_terms * 8 {
        if terms.len() >= max_terms {
            break;
        }
        let m = y_monomial(spec, rng, degree + e_range * spec.characters().len() as i64, e_range);
        if m.degree() == degree {
            terms.push(m);
        }
    }
    GradedPolynomial::from_terms(spec.ring(), terms)
}

pub fn ao_element<R: Rng + ?Sized>(spec: &BigRingSpec, rng: &mut R, range: i64) -> AoElement {
    AoElement::new(
        spec.characters()
            .iter()
            .map(|c| (*c, rng.random_range(-range..=range))),
    )
}

/// A monomial of degree exactly `degree` in `x_i` and X-variables, using at
/// most `ranks[ch]` X-factors of character `ch`. `None` if the attempt
/// painted itself into a corner.
fn bounded_x_monomial<R: Rng + ?Sized>(
    spec: &BigRingSpec,
    rng: &mut R,
    degree: i64,
    ranks: &[u32],
) -> Option<Monomial> {
    let mut used = vec![0u32; ranks.len()];
    let mut exps = Vec::new();
    let mut rest = degree;
    while rest > 0 {
        let mut choices: Vec<u32> = Vec::new();
        for v in 0..spec.ring().len() as u32 {
            let d = spec.ring().variable(v).degree;
            if d <= 0 || d > rest {
                continue;
            }
            match spec.kind(v) {
                VarKind::Mo(_) => choices.push(v),
                VarKind::X { ch, .. } if used[ch] < ranks[ch] => choices.push(v),
                _ => {}
            }
        }
        let &v = choices.choose(rng)?;
        if let VarKind::X { ch, .. } = spec.kind(v) {
            used[ch] += 1;
        }
        rest -= spec.ring().variable(v).degree;
        exps.push((v, 1));
    }
    spec.monomial(exps).ok()
}

/// A closed geometric class of dimension at most `max_dim` that passes
/// [`GeometricClass::validate`].
pub fn geometric_class<R: Rng + ?Sized>(
    spec: &BigRingSpec,
    rng: &mut R,
    max_dim: i64,
) -> GeometricClass {
    let n = rng.random_range(0..=max_dim);
    let j = spec.characters().len();
    let count = rng.random_range(1..=4);
    let mut components = Vec::with_capacity(count);
    for _ in 0..count {
        let mut ranks = vec![0u32; j];
        let codim = rng.random_range(0..=n);
        for _ in 0..codim {
            ranks[rng.random_range(0..j)] += 1;
        }
        let base_degree = n - codim;
        let mut terms = Vec::new();
        for _ in 0..rng.random_range(1..=4) {
            if let Some(m) = bounded_x_monomial(spec, rng, base_degree, &ranks) {
                terms.push(m);
            }
        }
        let base = if terms.is_empty() {
            // fall back to a point-like component of full codimension
            ranks = vec![0; j];
            for _ in 0..n {
                ranks[rng.random_range(0..j)] += 1;
            }
            spec.one()
        } else {
            GradedPolynomial::from_terms(spec.ring(), terms)
        };
        let chars: Vec<Character> = spec.characters().to_vec();
        components.push(FixedPointDatum::new(
            base,
            chars.into_iter().zip(ranks),
        ));
    }
    GeometricClass::new(n, components, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_classes_validate() {
        let spec = BigRingSpec::new(2, 8, 10).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = geometric_class(&spec, &mut rng, 10);
            assert!(g.validate(&spec).is_empty(), "{:?}", g.validate(&spec));
        }
    }

    #[test]
    fn sampled_homogeneous() {
        let spec = BigRingSpec::new(1, 6, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in -2..6 {
            let p = homogeneous_y_polynomial(&spec, &mut rng, d, 4, 2);
            assert!(p.is_homogeneous());
            assert!(!spec.has_x_variables(&p));
        }
    }
}
