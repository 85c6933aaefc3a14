//! Monomial ideals in `K[x1,…,xn]` represented by their exponent
//! combinatorics, together with monomial primes.
//!
//! The coefficient field never materializes: every operation here is exact
//! arithmetic on antichains of exponent vectors. Ideals are kept in a
//! canonical form (the unique minimal generating set, sorted
//! lexicographically), so ideal equality is structural equality.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// A monomial prime ideal, generated by a subset of the variables.
///
/// Variables are indexed from `0`; rendering uses the usual `x1..xn` names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    n: usize,
    vars: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        assert!(vars.iter().all(|&v| v < n), "variable index out of range");
        MonomialPrime { n, vars }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    /// Number of generating variables.
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// Krull dimension of the quotient, `n - height`.
    pub fn dimension(&self) -> usize {
        self.n - self.vars.len()
    }

    pub fn contains_var(&self, k: usize) -> bool {
        self.vars.contains(&k)
    }

    /// Inclusion of primes, i.e. inclusion of variable sets.
    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.is_subset(&other.vars)
    }

    pub fn as_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.n,
            self.vars.iter().map(|&k| Exponent::unit(self.n, k, 1)),
        )
    }

    /// Whether the monomial ideal `ideal` is contained in this prime.
    ///
    /// A monomial lies in a prime exactly when its support meets the
    /// generating variables, so containment only inspects supports.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .gens()
            .iter()
            .all(|g| g.support().any(|k| self.vars.contains(&k)))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal, stored as the antichain of its minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by the zero
/// vector. Both representation invariants are restored by every operation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

/// Antichain reduction: keeps the `≤`-minimal vectors, sorted and deduplicated.
fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort();
    gens.dedup();
    let mut keep: Vec<Exponent> = Vec::with_capacity(gens.len());
    'outer: for g in &gens {
        for h in &gens {
            if h != g && h.divides(g) {
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }
    keep
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to its minimal
    /// generating set.
    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Exponent>) -> Self {
        let gens: Vec<Exponent> = gens.into_iter().collect();
        for g in &gens {
            assert_eq!(g.len(), n, "generator length differs from ambient count");
        }
        if gens.iter().any(|g| g.is_zero()) {
            return MonomialIdeal::unit(n);
        }
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Exponent::zero(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() || self.is_unit() {
            Err(Error::ImproperIdeal)
        } else {
            Ok(())
        }
    }

    /// Membership of the monomial `x^b`: some generator divides it.
    pub fn contains_monomial(&self, b: &Exponent) -> bool {
        assert_eq!(b.len(), self.n, "ambient dimension mismatch");
        self.gens.iter().any(|g| g.divides(b))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        MonomialIdeal::from_generators(
            self.n,
            self.gens.iter().chain(&other.gens).cloned(),
        )
    }

    /// Adjoins a single monomial generator.
    pub fn plus_monomial(&self, b: &Exponent) -> MonomialIdeal {
        assert_eq!(b.len(), self.n, "ambient dimension mismatch");
        MonomialIdeal::from_generators(
            self.n,
            self.gens.iter().cloned().chain(std::iter::once(b.clone())),
        )
    }

    /// Intersection, via pairwise lcm of generators.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        if self.is_zero() || other.is_zero() {
            return MonomialIdeal::zero(self.n);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.join(h));
            }
        }
        MonomialIdeal::from_generators(self.n, gens)
    }

    /// The colon ideal `(self : x^b)`.
    pub fn colon_monomial(&self, b: &Exponent) -> MonomialIdeal {
        assert_eq!(b.len(), self.n, "ambient dimension mismatch");
        MonomialIdeal::from_generators(self.n, self.gens.iter().map(|g| g.saturating_sub(b)))
    }

    /// The colon ideal `(self : other)`, the intersection of the colons by
    /// the generators of `other`. By convention `(I : (0)) = S`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        other
            .gens
            .iter()
            .map(|h| self.colon_monomial(h))
            .fold(MonomialIdeal::unit(self.n), |acc, i| acc.intersection(&i))
    }

    /// The saturation `(self : x_k^∞)`: the `k`-th exponent of every
    /// generator drops to zero.
    pub fn saturation_var(&self, k: usize) -> MonomialIdeal {
        assert!(k < self.n, "variable index out of range");
        MonomialIdeal::from_generators(self.n, self.gens.iter().map(|g| g.with_coord(k, 0)))
    }

    /// The saturation `(self : J^∞)` for a monomial ideal `J`; the
    /// intersection over generators `x^h` of `J` of `(self : (x^h)^∞)`.
    /// By convention saturation by the zero ideal is the unit ideal.
    pub fn saturation_ideal(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        other
            .gens
            .iter()
            .map(|h| self.substitute_ones(&h.support().collect()))
            .fold(MonomialIdeal::unit(self.n), |acc, i| acc.intersection(&i))
    }

    /// The radical: every exponent capped at one.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.n,
            self.gens.iter().map(|g| {
                Exponent::new(g.coords().iter().map(|&c| c.min(1)).collect())
            }),
        )
    }

    /// Whether the ideal is irreducible: every minimal generator is a pure
    /// power of a single variable.
    pub fn is_irreducible(&self) -> Result<bool> {
        self.require_proper_nonzero()?;
        Ok(self.gens.iter().all(|g| g.support().count() == 1))
    }

    /// Whether the ideal is primary: every variable occurring in a generator
    /// also occurs as a pure power generator.
    pub fn is_primary(&self) -> Result<bool> {
        self.require_proper_nonzero()?;
        let occurring = self.occurring_vars();
        let pure: BTreeSet<usize> = self
            .gens
            .iter()
            .filter_map(|g| {
                let mut supp = g.support();
                match (supp.next(), supp.next()) {
                    (Some(k), None) => Some(k),
                    _ => None,
                }
            })
            .collect();
        Ok(occurring.is_subset(&pure))
    }

    /// Whether the ideal is prime, returning its variable set if so.
    pub fn is_prime(&self) -> Result<Option<MonomialPrime>> {
        self.require_proper_nonzero()?;
        let mut vars = BTreeSet::new();
        for g in &self.gens {
            let supp: Vec<usize> = g.support().collect();
            if supp.len() != 1 || g.coord(supp[0]) != 1 {
                return Ok(None);
            }
            vars.insert(supp[0]);
        }
        Ok(Some(MonomialPrime::new(self.n, vars)))
    }

    /// Models extension to the localization inverting the variables in
    /// `vars`: their exponents drop to zero in every generator.
    pub fn substitute_ones(&self, vars: &BTreeSet<usize>) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.n,
            self.gens.iter().map(|g| {
                Exponent::new(
                    g.coords()
                        .iter()
                        .enumerate()
                        .map(|(k, &c)| if vars.contains(&k) { 0 } else { c })
                        .collect(),
                )
            }),
        )
    }

    /// Variables occurring in some generator.
    pub fn occurring_vars(&self) -> BTreeSet<usize> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    /// For an irreducible ideal, the map variable -> pure power exponent.
    pub(crate) fn pure_power_exponents(&self) -> Option<Vec<(usize, u32)>> {
        let mut out = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let supp: Vec<usize> = g.support().collect();
            if supp.len() != 1 {
                return None;
            }
            out.push((supp[0], g.coord(supp[0])));
        }
        Some(out)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{ideal, pt};

    #[test]
    fn membership_examples() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        assert!(i.contains_monomial(&pt(&[1, 1])));
        assert!(!i.contains_monomial(&pt(&[2, 0])));

        let q = ideal(
            4,
            &[
                &[2, 0, 0, 0],
                &[1, 2, 1, 0],
                &[1, 0, 2, 0],
                &[0, 2, 0, 2],
                &[0, 1, 2, 1],
            ],
        );
        assert!(q.contains_monomial(&pt(&[1, 2, 1, 0])));
    }

    #[test]
    fn minimalization_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[3, 0]]);
        assert_eq!(i.gens(), &[pt(&[1, 1]), pt(&[2, 0])]);

        assert!(ideal(2, &[]).is_zero());
        assert!(ideal(2, &[&[0, 0]]).is_unit());
        assert!(ideal(2, &[&[0, 0], &[1, 0]]).is_unit());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let x1 = ideal(2, &[&[1, 0]]);
        let j = ideal(2, &[&[3, 0], &[0, 1]]);
        assert_eq!(x1.intersection(&j), ideal(2, &[&[3, 0], &[1, 1]]));

        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.intersection(&MonomialIdeal::unit(2)), i);
        assert_eq!(i.sum(&MonomialIdeal::zero(2)), i);
        assert_eq!(i.intersection(&MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
    }

    #[test]
    fn colon_examples() {
        // ((x^2, xy) : x) = (x, y)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon_monomial(&pt(&[1, 0])), ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(i.colon_monomial(&Exponent::zero(2)), i);

        let j = ideal(2, &[&[3, 0], &[1, 1]]);
        assert_eq!(j.colon_monomial(&pt(&[2, 0])), ideal(2, &[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.saturation_var(1), ideal(2, &[&[1, 0]]));
        assert!(i.saturation_var(0).is_unit());
        let p = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(i.saturation_ideal(&p), ideal(2, &[&[1, 0]]));
    }

    #[test]
    fn colon_ideal_against_zero_is_unit() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.colon_ideal(&MonomialIdeal::zero(2)).is_unit());
        assert_eq!(i.colon_ideal(&MonomialIdeal::unit(2)), i);
    }

    #[test]
    fn radical_and_predicates() {
        let q = ideal(4, &[&[2, 0, 0, 0], &[1, 0, 1, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        assert_eq!(q.is_primary(), Ok(true));
        assert_eq!(q.is_irreducible(), Ok(false));
        assert_eq!(
            q.radical(),
            ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );

        let i = ideal(2, &[&[3, 0], &[0, 1]]);
        assert_eq!(i.is_irreducible(), Ok(true));

        let j = ideal(2, &[&[1, 1]]);
        assert_eq!(j.is_primary(), Ok(false));

        assert_eq!(MonomialIdeal::unit(2).is_primary(), Err(Error::ImproperIdeal));
        assert_eq!(MonomialIdeal::zero(2).is_prime(), Err(Error::ImproperIdeal));

        let p = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(p.is_prime(), Ok(Some(MonomialPrime::new(3, [0, 2]))));
        assert_eq!(ideal(2, &[&[2, 0]]).is_prime(), Ok(None));
    }

    #[test]
    fn substitute_ones_examples() {
        let i = ideal(2, &[&[3, 0], &[1, 1]]);
        assert_eq!(i.substitute_ones(&[1].into()), ideal(2, &[&[1, 0]]));
        assert_eq!(i.substitute_ones(&BTreeSet::new()), i);
        let j = ideal(4, &[&[0, 2, 0, 2]]);
        assert!(j.substitute_ones(&[1, 3].into()).is_unit());
    }

    #[test]
    fn prime_display_and_dimension() {
        let p = MonomialPrime::new(4, [0, 2]);
        assert_eq!(p.to_string(), "(x1,x3)");
        assert_eq!(p.height(), 2);
        assert_eq!(p.dimension(), 2);
        assert_eq!(MonomialPrime::new(3, []).to_string(), "(0)");
    }
}
