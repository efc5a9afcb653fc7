mod common;

use std::sync::Arc;

use common::{q, ring, ring_with};
use idealpow_core::constructions::{form_ideal, leading_form, sharp_ideal};
use idealpow_core::ideal_ops::{
    colon_ideal, colon_poly, intersection, power, product, saturate_by_colon_chain, saturate_ideal, saturate_poly, sum,
};
use idealpow_core::{
    equal_ideals, normal_form, FieldElement, FieldSpec, Ideal, Monomial, MonomialOrder, Poly, Ring,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn field_element(field: FieldSpec) -> impl Strategy<Value = FieldElement> {
    match field {
        FieldSpec::Rationals => (-20i64..=20, 1i64..=9)
            .prop_map(|(n, d)| FieldElement::Rational(BigRational::new(BigInt::from(n), BigInt::from(d))))
            .boxed(),
        FieldSpec::Prime(p) => (0..p).prop_map(move |v| FieldSpec::Prime(p).from_i64(i64::from(v))).boxed(),
    }
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(2)), Just(FieldSpec::Prime(5)), Just(FieldSpec::Prime(7919))]
}

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

/// Polynomials with small integer coefficients and bounded exponents.
fn poly(r: Arc<Ring>, terms: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
    let n = r.nvars();
    proptest::collection::vec((-4i64..=4, monomial(n, max_exp)), 0..=terms).prop_map(move |ts| {
        let mut acc = Poly::zero(&r);
        for (c, m) in ts {
            acc = acc.add(&Poly::term(&r, r.field().from_i64(c), m)).unwrap();
        }
        acc
    })
}

/// Polynomials of total degree at most `max_degree`. Lex bases of three random
/// generators in three variables occasionally carry coefficients of hundreds of digits
/// from degree 4 on, which makes checking every S-pair too slow for a test.
fn bounded_poly(r: Arc<Ring>, terms: usize, max_degree: u32) -> impl Strategy<Value = Poly> {
    let n = r.nvars();
    let mono = monomial(n, max_degree).prop_filter("degree bound", move |m| m.degree() <= max_degree);
    proptest::collection::vec((-4i64..=4, mono), 0..=terms).prop_map(move |ts| {
        let mut acc = Poly::zero(&r);
        for (c, m) in ts {
            acc = acc.add(&Poly::term(&r, r.field().from_i64(c), m)).unwrap();
        }
        acc
    })
}

/// Polynomials vanishing at the origin.
fn local_poly(r: Arc<Ring>, terms: usize, max_exp: u32) -> impl Strategy<Value = Poly> {
    poly(r, terms, max_exp).prop_filter("nonzero without constant term", |p| !p.is_zero() && p.min_degree() != Some(0))
}

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Lex), Just(MonomialOrder::DegRevLex), Just(MonomialOrder::Elimination { block: 1 })]
}

fn xy() -> Arc<Ring> {
    q(&["x", "y"])
}

fn xyz() -> Arc<Ring> {
    q(&["x", "y", "z"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(
        (field, a, b, c) in fields().prop_flat_map(|f| (Just(f), field_element(f), field_element(f), field_element(f)))
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&field.zero()), a.clone());
        prop_assert_eq!(a.mul(&field.one()), a.clone());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.checked_div(&a).unwrap().mul(&a), b.clone());
        }
    }

    #[test]
    fn rational_arithmetic_matches_big_rational(a in (-30i64..30, 1i64..10), b in (-30i64..30, 1i64..10)) {
        let ra = BigRational::new(a.0.into(), a.1.into());
        let rb = BigRational::new(b.0.into(), b.1.into());
        let fa = FieldSpec::Rationals.from_rational(&ra).unwrap();
        let fb = FieldSpec::Rationals.from_rational(&rb).unwrap();
        prop_assert_eq!(fa.add(&fb), FieldElement::Rational(&ra + &rb));
        prop_assert_eq!(fa.mul(&fb), FieldElement::Rational(&ra * &rb));
    }

    #[test]
    fn polynomial_ring_axioms(
        (f, g, h) in (poly(xyz(), 4, 3), poly(xyz(), 4, 3), poly(xyz(), 4, 3))
    ) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.pow(3), f.mul(&f).unwrap().mul(&f).unwrap());
        if !f.is_zero() && !g.is_zero() {
            prop_assert_eq!(f.mul(&g).unwrap().total_degree().unwrap(), f.total_degree().unwrap() + g.total_degree().unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().div_exact(&g).unwrap(), Some(f.clone()));
        }
    }

    #[test]
    fn frobenius_in_characteristic_p(
        (p, f, g) in prop_oneof![Just(2u32), Just(3), Just(5)].prop_flat_map(|p| {
            let r = ring(FieldSpec::Prime(p), &["x", "y"]);
            (Just(p), poly(r.clone(), 3, 2), poly(r, 3, 2))
        })
    ) {
        let sum = f.add(&g).unwrap();
        prop_assert_eq!(sum.pow(p), f.pow(p).add(&g.pow(p)).unwrap());
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        order in orders(), a in monomial(3, 4), b in monomial(3, 4), c in monomial(3, 4)
    ) {
        let ab = order.cmp(&a, &b);
        prop_assert_eq!(order.cmp(&b, &a), ab.reverse());
        prop_assert_eq!(ab == std::cmp::Ordering::Equal, a == b);
        prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
        // a global order: every monomial dominates 1
        prop_assert!(order.cmp(&a, &Monomial::one(3)) != std::cmp::Ordering::Less);
        if order.cmp(&b, &c) == ab && ab != std::cmp::Ordering::Equal {
            prop_assert_eq!(order.cmp(&a, &c), ab);
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        (f, g) in (poly(xy(), 4, 3), poly(xy(), 4, 3)),
        images in proptest::collection::vec(poly(xyz(), 3, 2), 2)
    ) {
        let target = xyz();
        let eval = |p: &Poly| p.evaluate(&images, &target).unwrap();
        prop_assert_eq!(eval(&f.add(&g).unwrap()), eval(&f).add(&eval(&g)).unwrap());
        prop_assert_eq!(eval(&f.mul(&g).unwrap()), eval(&f).mul(&eval(&g)).unwrap());
    }

    #[test]
    fn groebner_bases_reduce_generators_and_s_polynomials(
        order in orders(),
        gens in proptest::collection::vec(bounded_poly(xyz(), 3, 3), 1..=3)
    ) {
        let r = ring_with(FieldSpec::Rationals, &["x", "y", "z"], order);
        let gens: Vec<Poly> = gens.iter().map(|g| g.remap(&r, &[0, 1, 2])).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap().with_basis();
        let basis = ideal.groebner_basis().into_owned();
        for g in &gens {
            prop_assert!(normal_form(g, &ideal).unwrap().is_zero());
        }
        for (i, a) in basis.iter().enumerate() {
            prop_assert!(a.leading_term().unwrap().coeff.is_one());
            for b in &basis[i + 1..] {
                let s = idealpow_core::groebner::s_polynomial(a, b).unwrap();
                prop_assert!(normal_form(&s, &ideal).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn normal_forms_are_idempotent_and_linear(
        gens in proptest::collection::vec(bounded_poly(xyz(), 3, 4), 1..=3),
        (f, g) in (poly(xyz(), 5, 4), poly(xyz(), 5, 4)),
        c in -5i64..=5
    ) {
        let r = xyz();
        let ideal = Ideal::new(&r, gens).unwrap().with_basis();
        let nf = |p: &Poly| normal_form(p, &ideal).unwrap();
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
        let c = r.field().from_i64(c);
        let combo = f.scale(&c).add(&g).unwrap();
        prop_assert_eq!(nf(&combo), nf(&f).scale(&c).add(&nf(&g)).unwrap());
        // f - nf(f) lies in the ideal
        prop_assert!(ideal.contains(&f.sub(&nf(&f)).unwrap()).unwrap());
    }

    #[test]
    fn saturation_invariants(
        gens in proptest::collection::vec(poly(xy(), 3, 3), 1..=2),
        by in proptest::collection::vec(local_poly(xy(), 2, 2), 1..=2)
    ) {
        let r = xy();
        let i = Ideal::new(&r, gens).unwrap();
        let j = Ideal::new(&r, by).unwrap();
        let sat = saturate_ideal(&i, &j).unwrap();
        prop_assert!(sat.contains_ideal(&i).unwrap());
        // saturated: one more colon changes nothing
        prop_assert!(equal_ideals(&colon_ideal(&sat, &j).unwrap(), &sat).unwrap());
        prop_assert!(equal_ideals(&saturate_by_colon_chain(&i, &j).unwrap(), &sat).unwrap());
        prop_assert!(colon_ideal(&i, &j).unwrap().contains_ideal(&i).unwrap());
    }

    #[test]
    fn rabinowitsch_matches_colon_chain_for_one_polynomial(
        gens in proptest::collection::vec(poly(xy(), 3, 3), 1..=2),
        f in local_poly(xy(), 2, 2)
    ) {
        let r = xy();
        let i = Ideal::new(&r, gens).unwrap();
        let sat = saturate_poly(&i, &f).unwrap();
        let chain = saturate_by_colon_chain(&i, &Ideal::new(&r, vec![f.clone()]).unwrap()).unwrap();
        prop_assert!(equal_ideals(&sat, &chain).unwrap());
        prop_assert!(equal_ideals(&colon_poly(&sat, &f).unwrap(), &sat).unwrap());
    }

    #[test]
    fn intersections_and_products(
        a in proptest::collection::vec(poly(xy(), 3, 2), 1..=2),
        b in proptest::collection::vec(poly(xy(), 3, 2), 1..=2)
    ) {
        let r = xy();
        let (a, b) = (Ideal::new(&r, a).unwrap(), Ideal::new(&r, b).unwrap());
        let cap = intersection(&a, &b).unwrap();
        prop_assert!(equal_ideals(&cap, &intersection(&b, &a).unwrap()).unwrap());
        prop_assert!(a.contains_ideal(&cap).unwrap() && b.contains_ideal(&cap).unwrap());
        prop_assert!(cap.contains_ideal(&product(&a, &b).unwrap()).unwrap());
        prop_assert!(sum(&a, &b).unwrap().contains_ideal(&a).unwrap());
    }

    #[test]
    fn powers_are_additive(
        gens in proptest::collection::vec(poly(xy(), 2, 2), 1..=3), a in 1u32..=2, b in 1u32..=2
    ) {
        let r = xy();
        let i = Ideal::new(&r, gens).unwrap();
        prop_assert!(equal_ideals(&product(&power(&i, a), &power(&i, b)).unwrap(), &power(&i, a + b)).unwrap());
    }

    #[test]
    fn leading_forms_multiply(f in local_poly(xy(), 4, 3), g in local_poly(xy(), 4, 3)) {
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(leading_form(&fg).unwrap(), leading_form(&f).unwrap().mul(&leading_form(&g).unwrap()).unwrap());
        prop_assert!(leading_form(&f).unwrap().is_homogeneous());
    }

    #[test]
    fn form_ideals_contain_leading_forms(gens in proptest::collection::vec(local_poly(xy(), 3, 3), 1..=2)) {
        let r = xy();
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let star = form_ideal(&i).unwrap();
        prop_assert!(star.is_homogeneous() || star.groebner_basis().iter().all(Poly::is_homogeneous));
        for g in &gens {
            prop_assert!(star.contains(&leading_form(g).unwrap()).unwrap());
        }
        let sharp = sharp_ideal(&i).unwrap();
        let s = Poly::variable(sharp.ring(), 2);
        prop_assert!(equal_ideals(&colon_poly(&sharp, &s).unwrap(), &sharp).unwrap());
    }
}
