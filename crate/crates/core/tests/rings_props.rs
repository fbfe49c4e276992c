use bordiscope_core::pullback::monomial_frame;
use bordiscope_core::rings::Direction;
use bordiscope_core::sampling::{ao_element, y_polynomial};
use bordiscope_core::{BigRingSpec, GradedPolynomial, TruncationWindow};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mono(spec: &BigRingSpec, m: &bordiscope_core::Monomial) -> GradedPolynomial {
    GradedPolynomial::from_monomial(spec.ring(), m.clone())
}

#[test]
fn iota_is_an_involutive_homomorphism() {
    let spec = BigRingSpec::new(2, 6, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let p = y_polynomial(&spec, &mut rng, 4, 6, 2);
        let q = y_polynomial(&spec, &mut rng, 4, 6, 2);
        let ip = spec.iota(&p).unwrap();
        assert_eq!(spec.iota(&ip).unwrap(), p);
        let iq = spec.iota(&q).unwrap();
        assert_eq!(spec.iota(&p.mul(&q).unwrap()).unwrap(), ip.mul(&iq).unwrap());
        assert_eq!(spec.iota(&p.add(&q).unwrap()).unwrap(), ip.add(&iq).unwrap());
        for (d, h) in p.degree_decompose() {
            let ih = spec.iota(&h).unwrap();
            assert!(ih.is_zero() || ih.homogeneous_degree() == Some(d));
        }
    }
}

#[test]
fn iota_fixes_mo_and_euler_classes() {
    let spec = BigRingSpec::new(2, 4, 8).unwrap();
    for v in spec.y_presentation_vars() {
        let p = spec.var_poly(v, 1).unwrap();
        let name = &spec.ring().variable(v).name;
        if name.starts_with('x') || name.starts_with('e') {
            assert_eq!(spec.iota(&p).unwrap(), p, "{name}");
        }
    }
}

#[test]
fn iota_on_low_y_generators() {
    let spec = BigRingSpec::new(1, 4, 4).unwrap();
    let y2 = spec.parse("Y2@c1").unwrap();
    assert_eq!(spec.iota(&y2).unwrap(), y2);
    assert_eq!(spec.iota(&spec.parse("Y3@c1").unwrap()).unwrap().to_text(), "Y3@c1 + Y2@c1^2*e@c1");
}

#[test]
fn ao_embed_is_a_homomorphism() {
    let spec = BigRingSpec::new(3, 2, 2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a = ao_element(&spec, &mut rng, 4);
        let b = ao_element(&spec, &mut rng, 4);
        let lhs = spec.ao_embed(&a.add(&b)).unwrap();
        let rhs = spec.ao_embed(&a).unwrap().mul(&spec.ao_embed(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.homogeneous_degree(), Some(a.add(&b).degree()));
        assert_eq!(lhs.len(), 1);
    }
}

#[test]
fn rewrite_round_trips_on_small_monomials() {
    let spec = BigRingSpec::new(2, 6, 6).unwrap();
    for d in 0..=10 {
        for m in monomial_frame(&spec, &TruncationWindow::new(d, 1, 1)).unwrap() {
            let p = mono(&spec, &m);
            let x = spec.rewrite(&p, Direction::YToX).unwrap();
            assert!(!spec.has_y_variables(&x));
            assert_eq!(spec.rewrite(&x, Direction::XToY).unwrap(), p);
            assert_eq!(x.homogeneous_degree(), Some(d));
        }
    }
}

#[test]
fn positive_part_is_a_subring() {
    let spec = BigRingSpec::new(2, 5, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 200 {
        let p = y_polynomial(&spec, &mut rng, 3, 6, 2);
        let q = y_polynomial(&spec, &mut rng, 3, 6, 2);
        let pos = |g: &GradedPolynomial| spec.is_in_positive_part(g).unwrap().is_positive();
        if pos(&p) && pos(&q) {
            assert!(pos(&p.mul(&q).unwrap()));
            assert!(pos(&p.add(&q).unwrap()));
            checked += 1;
        }
    }
}
