//! Box-oracle properties of the exact ideal arithmetic: every composite
//! operation agrees pointwise with monomial membership on a bounding box.

mod common;

use common::{box_points, ideal, pt};
use multishell::{Exponent, MonomialIdeal};
use proptest::prelude::*;

fn arb_gens(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=5)
}

fn arb_ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, Vec<u32>)> {
    (1usize..=4).prop_flat_map(|n| {
        (arb_gens(n), arb_gens(n), proptest::collection::vec(0u32..=3, n)).prop_map(
            move |(g1, g2, b)| {
                (
                    MonomialIdeal::from_generators(n, g1.into_iter().map(Exponent::new)),
                    MonomialIdeal::from_generators(n, g2.into_iter().map(Exponent::new)),
                    b,
                )
            },
        )
    })
}

fn is_antichain(i: &MonomialIdeal) -> bool {
    i.gens()
        .iter()
        .all(|g| !i.gens().iter().any(|h| h != g && h.divides(g)))
}

proptest! {
    #[test]
    fn sum_and_intersection_match_membership((i, j, _) in arb_ideal_pair()) {
        let sum = i.sum(&j);
        let meet = i.intersection(&j);
        prop_assert!(is_antichain(&sum));
        prop_assert!(is_antichain(&meet));
        for b in box_points(&vec![4; i.n()]) {
            prop_assert_eq!(
                sum.contains_monomial(&b),
                i.contains_monomial(&b) || j.contains_monomial(&b)
            );
            prop_assert_eq!(
                meet.contains_monomial(&b),
                i.contains_monomial(&b) && j.contains_monomial(&b)
            );
        }
    }

    #[test]
    fn colon_matches_shifted_membership((i, _, shift) in arb_ideal_pair()) {
        let shift = Exponent::new(shift);
        let colon = i.colon_monomial(&shift);
        prop_assert!(is_antichain(&colon));
        for b in box_points(&vec![4; i.n()]) {
            prop_assert_eq!(
                colon.contains_monomial(&b),
                i.contains_monomial(&(&b + &shift))
            );
        }
    }

    #[test]
    fn saturation_is_idempotent((i, _, _) in arb_ideal_pair()) {
        for k in 0..i.n() {
            let once = i.saturation_var(k);
            prop_assert_eq!(once.saturation_var(k), once);
        }
    }

    #[test]
    fn radical_is_idempotent_and_primary_chain((i, _, _) in arb_ideal_pair()) {
        let rad = i.radical();
        prop_assert_eq!(rad.radical(), rad.clone());
        if i.is_proper() && !i.is_zero() {
            if let Some(p) = i.is_prime().unwrap() {
                prop_assert!(i.is_primary().unwrap());
                prop_assert_eq!(i.clone(), p.as_ideal());
            }
            if i.is_primary().unwrap() {
                prop_assert!(rad.is_prime().unwrap().is_some());
            }
        }
    }

    #[test]
    fn colon_ideal_is_intersection_of_monomial_colons((i, j, _) in arb_ideal_pair()) {
        let colon = i.colon_ideal(&j);
        let expected = j.gens().iter().fold(MonomialIdeal::unit(i.n()), |acc, h| {
            acc.intersection(&i.colon_monomial(h))
        });
        prop_assert_eq!(colon, expected);
    }
}

#[test]
fn printed_intersection_identity_for_the_four_variable_fixture() {
    // The four printed primary components intersect to the five printed
    // generators; confirmed by membership over the box [0,3]^4 and by
    // structural equality of the canonical forms.
    let i = ideal(
        4,
        &[
            &[2, 0, 0, 0],
            &[1, 2, 1, 0],
            &[1, 0, 2, 0],
            &[0, 2, 0, 2],
            &[0, 1, 2, 1],
        ],
    );
    let product = ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])
        .intersection(&ideal(4, &[&[1, 0, 0, 0], &[0, 0, 0, 1]]))
        .intersection(&ideal(4, &[&[2, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 2, 0]]))
        .intersection(&ideal(
            4,
            &[&[2, 0, 0, 0], &[1, 0, 1, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]],
        ));
    for b in box_points(&[3, 3, 3, 3]) {
        assert_eq!(i.contains_monomial(&b), product.contains_monomial(&b), "at {b}");
    }
    assert_eq!(i, product);
    assert!(i.contains_monomial(&pt(&[1, 2, 1, 0])));
}

#[test]
fn substitution_models_localization() {
    // Inverting x2 in (x1^3, x1x2) leaves (x1).
    let i = ideal(2, &[&[3, 0], &[1, 1]]);
    assert_eq!(i.substitute_ones(&[1].into()), ideal(2, &[&[1, 0]]));
}
