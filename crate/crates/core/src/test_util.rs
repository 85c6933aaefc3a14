//! Small constructors shared by the unit tests.

use crate::exponent::{Exponent, ExtExp, Face};
use crate::ideal::MonomialIdeal;
use crate::multicomplex::Multicomplex;

pub fn pt(coords: &[u32]) -> Exponent {
    Exponent::new(coords.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_generators(n, gens.iter().map(|g| pt(g)))
}

/// Parses a face from entries like `"0,inf,2"`.
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
