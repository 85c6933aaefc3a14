//! Multicomplexes: downward-closed subsets of `ℕ∞ⁿ` presented by their
//! maximal facets, in bijection with monomial ideals.
//!
//! A face is any point lying under a maximal facet. A *facet* is a face
//! whose infinite part agrees with that of every maximal facet above it;
//! there are finitely many, and their number equals the arithmetic degree of
//! the quotient by the corresponding ideal.

use std::collections::{BTreeMap, BTreeSet};

use crate::decomposition::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, ExtExp, Face};
use crate::ideal::{MonomialIdeal, MonomialPrime};

impl Face {
    /// Coordinates with an infinite entry.
    pub fn infinite_part(&self) -> BTreeSet<usize> {
        self.coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_finite())
            .map(|(k, _)| k)
            .collect()
    }

    /// The monomial prime on the variables outside the infinite part.
    pub fn prime(&self) -> MonomialPrime {
        let n = self.len();
        MonomialPrime::new(
            n,
            (0..n).filter(|&k| self.coord(k).is_finite()),
        )
    }

    /// Replaces infinite entries by zero.
    pub fn flatten(&self) -> Exponent {
        Exponent::new(
            self.coords()
                .iter()
                .map(|c| c.finite().unwrap_or(0))
                .collect(),
        )
    }
}

/// A multicomplex, normalized to the antichain of its maximal facets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multicomplex {
    n: usize,
    maximal_facets: Vec<Face>,
}

/// The set of facets of a multicomplex, grouped by their primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSet {
    pub facets: Vec<Face>,
    pub by_prime: BTreeMap<MonomialPrime, Vec<Face>>,
}

/// A translate `offset + Γ(m)` where `m` is infinite exactly on
/// `directions`; its dimension is the number of directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleySet {
    pub offset: Exponent,
    pub directions: BTreeSet<usize>,
}

impl StanleySet {
    pub fn dimension(&self) -> usize {
        self.directions.len()
    }
}

/// Facet counts per associated prime; the total is the arithmetic degree of
/// the quotient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticDegree {
    pub total: usize,
    pub by_prime: BTreeMap<MonomialPrime, usize>,
}

fn maximal_antichain(faces: Vec<Face>) -> Vec<Face> {
    let mut sorted = faces;
    sorted.sort();
    sorted.dedup();
    let mut keep: Vec<Face> = Vec::with_capacity(sorted.len());
    'outer: for f in &sorted {
        for g in &sorted {
            if g != f && f.leq(g) {
                continue 'outer;
            }
        }
        keep.push(f.clone());
    }
    keep
}

impl Multicomplex {
    /// The multicomplex generated by `faces`: dominated generators are
    /// dropped and the maximal antichain is kept, canonically sorted.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        let faces: Vec<Face> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(Error::Invariant("multicomplex needs at least one face".into()));
        }
        for f in &faces {
            if f.len() != n {
                return Err(Error::Invariant(format!(
                    "face {f} has length {} in ambient {n}",
                    f.len()
                )));
            }
        }
        Ok(Multicomplex {
            n,
            maximal_facets: maximal_antichain(faces),
        })
    }

    /// The multicomplex of faces `a` with `x^a` outside the ideal.
    ///
    /// Each irreducible component with pure powers `x_j^{e_j}` on variable
    /// set `J` contributes the maximal facet with entry `e_j - 1` on `J` and
    /// infinity elsewhere. The zero ideal maps to the full multicomplex; the
    /// unit ideal has no counterpart.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::ImproperIdeal);
        }
        let n = ideal.n();
        if ideal.is_zero() {
            return Multicomplex::from_faces(n, [Face::all_infinite(n)]);
        }
        let mut faces = Vec::new();
        for comp in irreducible_decomposition(ideal)? {
            let powers = comp
                .pure_power_exponents()
                .ok_or_else(|| Error::Invariant("non-irreducible component".into()))?;
            let mut coords = vec![ExtExp::Inf; n];
            for (k, e) in powers {
                coords[k] = ExtExp::Fin(e - 1);
            }
            faces.push(Face::new(coords));
        }
        Multicomplex::from_faces(n, faces)
    }

    /// The monomial ideal spanned by the monomials outside the multicomplex:
    /// the intersection over maximal facets `m` of `(x_j^{m(j)+1} : m(j) < ∞)`.
    pub fn ideal(&self) -> MonomialIdeal {
        self.maximal_facets
            .iter()
            .map(|m| {
                MonomialIdeal::from_generators(
                    self.n,
                    m.coords().iter().enumerate().filter_map(|(k, c)| {
                        c.finite().map(|e| Exponent::unit(self.n, k, e + 1))
                    }),
                )
            })
            .fold(MonomialIdeal::unit(self.n), |acc, i| acc.intersection(&i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn maximal_facets(&self) -> &[Face] {
        &self.maximal_facets
    }

    /// Membership: the face lies under some maximal facet.
    pub fn is_face(&self, face: &Face) -> bool {
        assert_eq!(face.len(), self.n, "ambient dimension mismatch");
        self.maximal_facets.iter().any(|m| face.leq(m))
    }

    /// Membership of a finite point.
    pub fn contains_point(&self, b: &Exponent) -> bool {
        assert_eq!(b.len(), self.n, "ambient dimension mismatch");
        self.maximal_facets.iter().any(|m| m.geq_exponent(b))
    }

    /// Intersection of face sets, realized by the maximal antichain of
    /// pairwise componentwise minima of maximal facets.
    pub fn intersect(&self, other: &Multicomplex) -> Multicomplex {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        let mut mins = Vec::with_capacity(self.maximal_facets.len() * other.maximal_facets.len());
        for u in &self.maximal_facets {
            for v in &other.maximal_facets {
                mins.push(u.meet(v));
            }
        }
        Multicomplex {
            n: self.n,
            maximal_facets: maximal_antichain(mins),
        }
    }

    /// Enumerates all facets.
    ///
    /// A facet's infinite part must equal that of every maximal facet above
    /// it, so candidates are generated per infinite part `F` occurring among
    /// the maximal facets, with each finite coordinate bounded by the
    /// largest entry of the maximal facets carrying `F`. A candidate is a
    /// facet iff it lies under some maximal facet and every maximal facet
    /// above it carries exactly `F`.
    pub fn enumerate_facets(&self) -> FacetSet {
        let mut facets: Vec<Face> = Vec::new();
        let classes: BTreeSet<BTreeSet<usize>> = self
            .maximal_facets
            .iter()
            .map(|m| m.infinite_part())
            .collect();
        for class in classes {
            let carriers: Vec<&Face> = self
                .maximal_facets
                .iter()
                .filter(|m| m.infinite_part() == class)
                .collect();
            let finite_coords: Vec<usize> =
                (0..self.n).filter(|k| !class.contains(k)).collect();
            let bounds: Vec<u32> = finite_coords
                .iter()
                .map(|&k| {
                    carriers
                        .iter()
                        .filter_map(|m| m.coord(k).finite())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            crate::exponent::for_each_in_box(&bounds, |v| {
                let mut coords = vec![ExtExp::Inf; self.n];
                for (i, &k) in finite_coords.iter().enumerate() {
                    coords[k] = ExtExp::Fin(v[i]);
                }
                let candidate = Face::new(coords);
                let mut under_some = false;
                let mut class_match = true;
                for m in &self.maximal_facets {
                    if candidate.leq(m) {
                        under_some = true;
                        if m.infinite_part() != class {
                            class_match = false;
                            break;
                        }
                    }
                }
                if under_some && class_match {
                    facets.push(candidate);
                }
            });
        }
        facets.sort();
        let mut by_prime: BTreeMap<MonomialPrime, Vec<Face>> = BTreeMap::new();
        for f in &facets {
            by_prime.entry(f.prime()).or_default().push(f.clone());
        }
        FacetSet { facets, by_prime }
    }

    /// The algebraic facet test: `u` is a facet iff the colon of the ideal
    /// by the flattened face, taken in the localization inverting the
    /// variables of the infinite part, is primary to the face's prime —
    /// i.e. contains a pure power of every remaining variable.
    pub fn facet_test_algebraic(&self, u: &Face) -> Result<bool> {
        if !self.is_face(u) {
            return Err(Error::NotAFace(u.to_string()));
        }
        let colon = self.ideal().colon_monomial(&u.flatten());
        let localized = colon.substitute_ones(&u.infinite_part());
        Ok((0..self.n)
            .filter(|&k| u.coord(k).is_finite())
            .all(|k| {
                localized
                    .gens()
                    .iter()
                    .any(|g| g.support().all(|j| j == k))
            }))
    }

    /// Facet counts per prime. The key set equals the associated primes of
    /// the quotient by the ideal, and the total is its arithmetic degree.
    pub fn arithmetic_degree_report(&self) -> ArithmeticDegree {
        let facet_set = self.enumerate_facets();
        ArithmeticDegree {
            total: facet_set.facets.len(),
            by_prime: facet_set
                .by_prime
                .into_iter()
                .map(|(p, fs)| (p, fs.len()))
                .collect(),
        }
    }
}

impl std::fmt::Display for Multicomplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, m) in self.maximal_facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ">")
    }
}
