//! Shared fixtures and brute-force helpers for the integration suites.
//!
//! The helpers here deliberately avoid the library's own enumeration
//! internals: box iteration and membership scans are reimplemented so the
//! oracles stay independent of the code paths they check.

#![allow(dead_code)]

use multishell::{Exponent, ExtExp, Face, MonomialIdeal, Multicomplex};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pt(coords: &[u32]) -> Exponent {
    Exponent::new(coords.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_generators(n, gens.iter().map(|g| pt(g)))
}

pub fn face(s: &str) -> Face {
    Face::new(
        s.split(',')
            .map(|t| match t.trim() {
                "inf" => ExtExp::Inf,
                v => ExtExp::Fin(v.parse().expect("face entry")),
            })
            .collect(),
    )
}

pub fn mc(n: usize, faces: &[&str]) -> Multicomplex {
    Multicomplex::from_faces(n, faces.iter().map(|s| face(s))).expect("multicomplex")
}

/// Visits every vector with `0 <= v[k] <= bounds[k]`.
pub fn for_each_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let n = bounds.len();
    let mut v = vec![0u32; n];
    loop {
        f(&v);
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            if v[k] < bounds[k] {
                v[k] += 1;
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

/// All points of the box as exponent vectors.
pub fn box_points(bounds: &[u32]) -> Vec<Exponent> {
    let mut out = Vec::new();
    for_each_box(bounds, |v| out.push(Exponent::new(v.to_vec())));
    out
}

/// A random proper nonzero monomial ideal.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_exp: u32,
    max_gens: usize,
) -> MonomialIdeal {
    loop {
        let count = rng.gen_range(1..=max_gens);
        let gens: Vec<Exponent> = (0..count)
            .map(|_| Exponent::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .collect();
        let candidate = MonomialIdeal::from_generators(n, gens);
        if !candidate.is_zero() && !candidate.is_unit() {
            return candidate;
        }
    }
}

/// The five-generator ideal in four variables whose associated primes sit in
/// two different dimensions.
pub fn mixed_dimension_ideal() -> MonomialIdeal {
    ideal(
        4,
        &[
            &[2, 0, 0, 0],
            &[1, 2, 1, 0],
            &[1, 0, 2, 0],
            &[0, 2, 0, 2],
            &[0, 1, 2, 1],
        ],
    )
}

/// Intersection of (x1,x2) and (x3,x4): minimal primes in disjoint
/// variables; the quotient admits no pretty clean filtration.
pub fn two_prime_ideal() -> MonomialIdeal {
    ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).intersection(&ideal(
        4,
        &[&[0, 0, 1, 0], &[0, 0, 0, 1]],
    ))
}
