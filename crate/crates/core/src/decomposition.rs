//! Irreducible and irredundant primary decomposition of monomial ideals,
//! associated primes stratified by dimension, the dimension filtration, and
//! several sufficiency criteria for the existence of pretty clean
//! filtrations.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::{MonomialIdeal, MonomialPrime};

/// Everything the primary decomposition yields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Irredundant irreducible components, canonically sorted.
    pub irreducible_components: Vec<MonomialIdeal>,
    /// Irredundant primary components with their radicals, ordered by
    /// descending height (ties broken lexicographically on variable sets).
    pub primary_components: Vec<(MonomialIdeal, MonomialPrime)>,
    pub ass: BTreeSet<MonomialPrime>,
    pub min_primes: BTreeSet<MonomialPrime>,
    /// Associated primes grouped by the dimension of their quotient.
    pub ass_by_dim: BTreeMap<usize, BTreeSet<MonomialPrime>>,
}

/// One row of the pretty-cleanness criterion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PretRow {
    pub dim: usize,
    /// Union of the variable sets of the associated primes in this dimension.
    pub union_vars: BTreeSet<usize>,
    pub bound: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PretReport {
    pub holds: bool,
    pub rows: Vec<PretRow>,
}

/// The dimension filtration: ascending ideals `U_i` whose quotients `U_i/I`
/// are the largest submodules of dimension at most `d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionFiltration {
    /// `(d_i, U_i)` with `d_i` strictly increasing; `U_i` is the
    /// intersection of the primary components of dimension `> d_i`, so the
    /// last level is the unit ideal.
    pub levels: Vec<(usize, MonomialIdeal)>,
}

/// Splits until every generator is a pure power: picks the lexicographically
/// first generator with at least two variables in its support, separates the
/// lowest-variable part, and recurses on both enlarged ideals.
fn split_into_irreducibles(ideal: &MonomialIdeal, out: &mut BTreeSet<MonomialIdeal>) {
    let split = ideal.gens().iter().find_map(|g| {
        let supp: Vec<usize> = g.support().collect();
        if supp.len() >= 2 {
            Some((g.clone(), supp[0]))
        } else {
            None
        }
    });
    match split {
        None => {
            out.insert(ideal.clone());
        }
        Some((g, j)) => {
            let n = ideal.n();
            let var_part = Exponent::unit(n, j, g.coord(j));
            let rest = g.with_coord(j, 0);
            split_into_irreducibles(&ideal.plus_monomial(&var_part), out);
            split_into_irreducibles(&ideal.plus_monomial(&rest), out);
        }
    }
}

fn intersect_all(n: usize, components: &[MonomialIdeal]) -> MonomialIdeal {
    components
        .iter()
        .fold(MonomialIdeal::unit(n), |acc, c| acc.intersection(c))
}

/// Removes components containing another component, then sweeps out any
/// component implied by the intersection of the others.
fn prune_redundant(components: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
    let mut kept: Vec<MonomialIdeal> = Vec::new();
    'outer: for c in &components {
        for d in &components {
            if d != c && c.contains_ideal(d) {
                continue 'outer;
            }
        }
        kept.push(c.clone());
    }
    let n = match kept.first() {
        Some(c) => c.n(),
        None => return kept,
    };
    let mut i = 0;
    while i < kept.len() {
        let others: Vec<MonomialIdeal> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.clone())
            .collect();
        if !others.is_empty() && kept[i].contains_ideal(&intersect_all(n, &others)) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Irredundant irreducible decomposition. The components intersect to the
/// input ideal exactly and each is generated by pure powers.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ImproperIdeal);
    }
    let mut leaves = BTreeSet::new();
    split_into_irreducibles(ideal, &mut leaves);
    let components = prune_redundant(leaves.into_iter().collect());
    debug_assert_eq!(&intersect_all(ideal.n(), &components), ideal);
    Ok(components)
}

/// Sort key for component listings: descending height, then the variable set.
fn component_order(a: &MonomialPrime, b: &MonomialPrime) -> std::cmp::Ordering {
    b.height()
        .cmp(&a.height())
        .then_with(|| a.vars().cmp(b.vars()))
}

/// Irredundant primary decomposition, grouping irreducible components by
/// their radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<DecompositionReport> {
    let irreducible = irreducible_decomposition(ideal)?;
    let n = ideal.n();

    let mut by_radical: BTreeMap<MonomialPrime, Vec<MonomialIdeal>> = BTreeMap::new();
    for c in &irreducible {
        let prime = c
            .radical()
            .is_prime()?
            .ok_or_else(|| Error::Invariant("irreducible component with non-prime radical".into()))?;
        by_radical.entry(prime).or_default().push(c.clone());
    }
    let mut primary: Vec<(MonomialIdeal, MonomialPrime)> = by_radical
        .into_iter()
        .map(|(p, group)| (intersect_all(n, &group), p))
        .collect();

    // The grouped intersection can still contain redundant members.
    let pruned = prune_redundant(primary.iter().map(|(q, _)| q.clone()).collect());
    primary.retain(|(q, _)| pruned.contains(q));
    primary.sort_by(|(_, p), (_, q)| component_order(p, q));

    let ass: BTreeSet<MonomialPrime> = primary.iter().map(|(_, p)| p.clone()).collect();
    let min_primes: BTreeSet<MonomialPrime> = ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect();
    let mut ass_by_dim: BTreeMap<usize, BTreeSet<MonomialPrime>> = BTreeMap::new();
    for p in &ass {
        ass_by_dim.entry(p.dimension()).or_default().insert(p.clone());
    }

    Ok(DecompositionReport {
        irreducible_components: irreducible,
        primary_components: primary,
        ass,
        min_primes,
        ass_by_dim,
    })
}

/// Checks, for every positive dimension `d` with associated primes, that the
/// union of their variable sets has at most `n - d + 1` elements. Holding
/// for all `d` is sufficient for the quotient to be pretty clean.
pub fn pret_criterion(ideal: &MonomialIdeal) -> Result<PretReport> {
    let report = primary_decomposition(ideal)?;
    let n = ideal.n();
    let mut rows = Vec::new();
    for (&dim, primes) in &report.ass_by_dim {
        if dim == 0 {
            continue;
        }
        let union_vars: BTreeSet<usize> =
            primes.iter().flat_map(|p| p.vars().iter().copied()).collect();
        let bound = n - dim + 1;
        let holds = union_vars.len() <= bound;
        rows.push(PretRow {
            dim,
            union_vars,
            bound,
            holds,
        });
    }
    Ok(PretReport {
        holds: rows.iter().all(|r| r.holds),
        rows,
    })
}

/// The dimension filtration of the quotient by `ideal`.
pub fn dimension_filtration(ideal: &MonomialIdeal) -> Result<DimensionFiltration> {
    let report = primary_decomposition(ideal)?;
    let n = ideal.n();
    let dims: BTreeSet<usize> = report.ass.iter().map(|p| p.dimension()).collect();
    let levels = dims
        .into_iter()
        .map(|d| {
            let above: Vec<MonomialIdeal> = report
                .primary_components
                .iter()
                .filter(|(_, p)| p.dimension() > d)
                .map(|(q, _)| q.clone())
                .collect();
            (d, intersect_all(n, &above))
        })
        .collect();
    Ok(DimensionFiltration { levels })
}

/// Whether the ideal is of Borel type: saturating by `x_j` equals saturating
/// by `(x_1, …, x_j)` for every `j`.
pub fn is_borel_type(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ImproperIdeal);
    }
    let n = ideal.n();
    for j in 0..n {
        let prefix = MonomialIdeal::from_generators(
            n,
            (0..=j).map(|k| Exponent::unit(n, k, 1)),
        );
        if ideal.saturation_var(j) != ideal.saturation_ideal(&prefix) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the associated primes form a chain under inclusion.
pub fn ass_totally_ordered(ideal: &MonomialIdeal) -> Result<bool> {
    let report = primary_decomposition(ideal)?;
    let mut primes: Vec<&MonomialPrime> = report.ass.iter().collect();
    primes.sort_by_key(|p| p.height());
    Ok(primes.windows(2).all(|w| w[0].is_subset_of(w[1])))
}

/// The chain of partial intersections of the primary components, ordered so
/// that a prime properly containing another comes first. Each consecutive
/// quotient is coprimary to the component being intersected in.
///
/// Returns the ascending ideals from the input up to the unit ideal.
pub fn almost_clean_chain(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let report = primary_decomposition(ideal)?;
    let n = ideal.n();
    // primary_components are already sorted by descending height.
    let mut chain = Vec::with_capacity(report.primary_components.len() + 1);
    for j in (0..=report.primary_components.len()).rev() {
        chain.push(intersect_all(
            n,
            &report.primary_components[..j]
                .iter()
                .map(|(q, _)| q.clone())
                .collect::<Vec<_>>(),
        ));
    }
    Ok(chain)
}
