//! Deciders for shellability of multicomplexes.
//!
//! An order `a_1, …, a_r` of all facets is a shelling when
//!
//! 1. `a_1` has every entry `0` or infinite,
//! 2. for `i ≥ 2` every maximal facet of `⟨a_1,…,a_{i−1}⟩ ∩ ⟨a_i⟩` is a
//!    lower neighbour of `a_i`,
//! 3. for every coordinate `k` outside the infinite part of `a_i` with
//!    `a_i(k) > 0`, some maximal facet `w` of that intersection has
//!    `w(k) < a_i(k)`, and
//! 4. for `j < i`, the infinite part of `a_j` is contained in that of `a_i`
//!    only when the two are equal.
//!
//! Conditions (1)–(3) say exactly that each set difference
//! `Γ(a_i) ∖ Γ(a_1,…,a_{i−1})` is a Stanley set, which the independent
//! truncated-box oracle below checks directly.
//!
//! A *maximal shelling* orders only the maximal facets: an initial segment
//! of length `s` shares one infinite part, every later facet meets the span
//! of its predecessors in maximal facets differing from it in exactly one
//! coordinate (with arbitrary gap), and infinite parts from position `s` on
//! satisfy the same inclusion condition as (4).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exponent::{for_each_in_box, Exponent, ExtExp, Face};
use crate::multicomplex::{Multicomplex, StanleySet};

/// Outcome of a single condition at a single position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CondStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CondStatus {
    pub fn passed(self) -> bool {
        !matches!(self, CondStatus::Fail)
    }
}

/// Per-position diagnostics of a shelling check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingIndexReport {
    pub face: Face,
    /// Maximal facets of the intersection with the span of the earlier
    /// faces; empty at the first position.
    pub intersection: Vec<Face>,
    pub cond1: CondStatus,
    pub cond2: CondStatus,
    /// Intersection facets that are not lower neighbours.
    pub cond2_offenders: Vec<Face>,
    pub cond3: CondStatus,
    /// Coordinates with no intersection facet strictly below.
    pub cond3_offenders: Vec<usize>,
    pub cond4: CondStatus,
    /// First violating pair of positions `(j, i)`, zero-based.
    pub cond4_offender: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingVerdict {
    pub order: Vec<Face>,
    pub per_index: Vec<ShellingIndexReport>,
    pub overall: bool,
}

/// Per-position diagnostics of a maximal-shelling check, for positions past
/// the split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIndexReport {
    /// Zero-based position in the order.
    pub position: usize,
    pub face: Face,
    pub intersection: Vec<Face>,
    pub cond2: CondStatus,
    /// Intersection facets differing from the face in more than one
    /// coordinate.
    pub cond2_offenders: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalShellingVerdict {
    pub order: Vec<Face>,
    /// Length of the initial segment with common infinite part.
    pub split: usize,
    pub cond1: CondStatus,
    /// First position in the initial segment with a differing infinite part.
    pub cond1_offender: Option<usize>,
    pub per_index: Vec<MaximalIndexReport>,
    pub cond3: CondStatus,
    pub cond3_offender: Option<(usize, usize)>,
    pub overall: bool,
}

/// Caps and parallelism knobs for the exhaustive searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Largest facet count `find_shelling` will attempt.
    pub max_facets: usize,
    /// Largest maximal-facet count `find_maximal_shelling` will attempt.
    pub max_perms: usize,
    /// Worker threads for the first-branch parallel mode; `1` is sequential.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_facets: 9,
            max_perms: 9,
            threads: 1,
        }
    }
}

/// Search strategies for `find_shelling`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// All facet orders.
    Exhaustive,
    /// Only orders with nonincreasing Stanley-set dimension, which is still
    /// a complete search space.
    Dimension,
}

/// Whether `a` is a lower neighbour of `b`: the two agree except in one
/// coordinate `k`, where either `a(k) + 1 = b(k)` finitely or `a(k)` is
/// finite and `b(k)` infinite.
pub fn is_lower_neighbour(a: &Face, b: &Face) -> bool {
    assert_eq!(a.len(), b.len(), "ambient dimension mismatch");
    let mut diff = None;
    for k in 0..a.len() {
        if a.coord(k) != b.coord(k) {
            if diff.is_some() {
                return false;
            }
            diff = Some(k);
        }
    }
    match diff {
        None => false,
        Some(k) => match (a.coord(k), b.coord(k)) {
            (ExtExp::Fin(x), ExtExp::Fin(y)) => x + 1 == y,
            (ExtExp::Fin(_), ExtExp::Inf) => true,
            _ => false,
        },
    }
}

fn differs_in_exactly_one(w: &Face, u: &Face) -> bool {
    let mut count = 0;
    for k in 0..w.len() {
        if w.coord(k) != u.coord(k) {
            count += 1;
            if count > 1 {
                return false;
            }
        }
    }
    count == 1
}

/// Maximal facets of `⟨prefix⟩ ∩ ⟨c⟩`.
fn intersection_with_prefix(n: usize, prefix: &[Face], c: &Face) -> Vec<Face> {
    let span = Multicomplex::from_faces(n, prefix.iter().cloned()).expect("nonempty prefix");
    let single = Multicomplex::from_faces(n, [c.clone()]).expect("singleton");
    span.intersect(&single).maximal_facets().to_vec()
}

fn cond2_offenders(intersection: &[Face], c: &Face) -> Vec<Face> {
    intersection
        .iter()
        .filter(|w| !is_lower_neighbour(w, c))
        .cloned()
        .collect()
}

fn cond3_offenders(intersection: &[Face], c: &Face) -> Vec<usize> {
    (0..c.len())
        .filter(|&k| match c.coord(k) {
            ExtExp::Fin(v) => {
                v > 0 && !intersection.iter().any(|w| w.coord(k) < ExtExp::Fin(v))
            }
            ExtExp::Inf => false,
        })
        .collect()
}

fn cond4_offender(prefix: &[Face], c: &Face) -> Option<usize> {
    let ip_c = c.infinite_part();
    prefix.iter().position(|p| {
        let ip_p = p.infinite_part();
        ip_p.is_subset(&ip_c) && ip_p != ip_c
    })
}

fn is_zero_inf(face: &Face) -> bool {
    face.coords()
        .iter()
        .all(|e| matches!(e, ExtExp::Inf | ExtExp::Fin(0)))
}

fn same_multiset(order: &[Face], expected: &[Face]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort();
    sorted == expected
}

/// Evaluates the four shelling conditions for `order`, which must be a
/// permutation of the facet set.
pub fn check_shelling_order(gamma: &Multicomplex, order: &[Face]) -> Result<ShellingVerdict> {
    let facets = gamma.enumerate_facets().facets;
    if !same_multiset(order, &facets) {
        return Err(Error::NotAPermutation {
            expected: facets.len(),
        });
    }
    let n = gamma.n();
    let mut per_index = Vec::with_capacity(order.len());
    for (i, c) in order.iter().enumerate() {
        let report = if i == 0 {
            ShellingIndexReport {
                face: c.clone(),
                intersection: vec![],
                cond1: if is_zero_inf(c) {
                    CondStatus::Pass
                } else {
                    CondStatus::Fail
                },
                cond2: CondStatus::NotApplicable,
                cond2_offenders: vec![],
                cond3: CondStatus::NotApplicable,
                cond3_offenders: vec![],
                cond4: CondStatus::Pass,
                cond4_offender: None,
            }
        } else {
            let intersection = intersection_with_prefix(n, &order[..i], c);
            let c2 = cond2_offenders(&intersection, c);
            let c3 = cond3_offenders(&intersection, c);
            let c4 = cond4_offender(&order[..i], c);
            ShellingIndexReport {
                face: c.clone(),
                cond1: CondStatus::NotApplicable,
                cond2: if c2.is_empty() {
                    CondStatus::Pass
                } else {
                    CondStatus::Fail
                },
                cond2_offenders: c2,
                cond3: if c3.is_empty() {
                    CondStatus::Pass
                } else {
                    CondStatus::Fail
                },
                cond3_offenders: c3,
                cond4: if c4.is_none() {
                    CondStatus::Pass
                } else {
                    CondStatus::Fail
                },
                cond4_offender: c4.map(|j| (j, i)),
                intersection,
            }
        };
        per_index.push(report);
    }
    let overall = per_index.iter().all(|r| {
        r.cond1.passed() && r.cond2.passed() && r.cond3.passed() && r.cond4.passed()
    });
    Ok(ShellingVerdict {
        order: order.to_vec(),
        per_index,
        overall,
    })
}

/// One beyond the largest finite entry of the maximal facets, per
/// coordinate. One sentinel layer distinguishes a genuinely infinite ray
/// from a bounded coordinate when sets are materialized in the box.
fn truncation_bounds(gamma: &Multicomplex) -> Vec<u32> {
    (0..gamma.n())
        .map(|k| {
            gamma
                .maximal_facets()
                .iter()
                .filter_map(|m| m.coord(k).finite())
                .max()
                .unwrap_or(0)
                + 1
        })
        .collect()
}

/// Outcome of materializing `Γ(a_i) ∖ Γ(a_1,…,a_{i−1})` inside the
/// truncated box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StanleyOutcome {
    Set(StanleySet),
    Empty,
    NotStanley,
}

/// Decides whether the `i`-th set difference of the order is a Stanley set
/// by materializing it inside the truncated box and testing for the product
/// shape: a fixed value per bounded coordinate, a full tail per direction.
///
/// `i` is a zero-based position into `order`.
pub fn stanley_oracle(gamma: &Multicomplex, order: &[Face], i: usize) -> StanleyOutcome {
    let bounds = truncation_bounds(gamma);
    let target = &order[i];
    let mut points: Vec<Exponent> = Vec::new();
    for_each_in_box(&bounds, |v| {
        let b = Exponent::new(v.to_vec());
        if target.geq_exponent(&b) && !order[..i].iter().any(|a| a.geq_exponent(&b)) {
            points.push(b);
        }
    });
    if points.is_empty() {
        return StanleyOutcome::Empty;
    }
    let n = gamma.n();
    let directions = target.infinite_part();
    let mut value_sets: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for p in &points {
        for (k, values) in value_sets.iter_mut().enumerate() {
            values.insert(p.coord(k));
        }
    }
    let mut product_size: u64 = 1;
    for (k, values) in value_sets.iter().enumerate() {
        let lo = *values.iter().next().unwrap();
        let hi = *values.iter().last().unwrap();
        if directions.contains(&k) {
            // Full tail up to the sentinel layer.
            let contiguous = values.len() as u64 == u64::from(hi - lo) + 1;
            if !contiguous || hi != bounds[k] {
                return StanleyOutcome::NotStanley;
            }
        } else if values.len() != 1 {
            return StanleyOutcome::NotStanley;
        }
        product_size *= values.len() as u64;
    }
    if product_size != points.len() as u64 {
        return StanleyOutcome::NotStanley;
    }
    let offset = Exponent::new(
        value_sets
            .iter()
            .map(|values| *values.iter().next().unwrap())
            .collect(),
    );
    StanleyOutcome::Set(StanleySet { offset, directions })
}

/// Runs the Stanley oracle at every position; all must pass.
pub fn stanley_sets_of_order(gamma: &Multicomplex, order: &[Face]) -> Result<Vec<StanleySet>> {
    let facets = gamma.enumerate_facets().facets;
    if !same_multiset(order, &facets) {
        return Err(Error::NotAPermutation {
            expected: facets.len(),
        });
    }
    let mut sets = Vec::with_capacity(order.len());
    for i in 0..order.len() {
        match stanley_oracle(gamma, order, i) {
            StanleyOutcome::Set(s) => sets.push(s),
            StanleyOutcome::Empty => {
                return Err(Error::NotStanleySet {
                    step: i,
                    empty: true,
                })
            }
            StanleyOutcome::NotStanley => {
                return Err(Error::NotStanleySet {
                    step: i,
                    empty: false,
                })
            }
        }
    }
    Ok(sets)
}

/// Whether appending `c` keeps the prefix a partial shelling.
fn shelling_extension_ok(n: usize, prefix: &[Face], c: &Face) -> bool {
    if prefix.is_empty() {
        return is_zero_inf(c);
    }
    if cond4_offender(prefix, c).is_some() {
        return false;
    }
    let intersection = intersection_with_prefix(n, prefix, c);
    cond2_offenders(&intersection, c).is_empty() && cond3_offenders(&intersection, c).is_empty()
}

fn shelling_dfs(
    n: usize,
    facets: &[Face],
    strategy: Strategy,
    prefix: &mut Vec<Face>,
    used: &mut Vec<bool>,
) -> Option<Vec<Face>> {
    if prefix.len() == facets.len() {
        return Some(prefix.clone());
    }
    // A nonincreasing dimension order must always consume a facet of the
    // largest remaining dimension.
    let dim_required = match strategy {
        Strategy::Dimension => facets
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(_, f)| f.infinite_part().len())
            .max(),
        Strategy::Exhaustive => None,
    };
    for i in 0..facets.len() {
        if used[i] {
            continue;
        }
        let c = &facets[i];
        if let Some(d) = dim_required {
            if c.infinite_part().len() != d {
                continue;
            }
        }
        if !shelling_extension_ok(n, prefix, c) {
            continue;
        }
        used[i] = true;
        prefix.push(c.clone());
        if let Some(found) = shelling_dfs(n, facets, strategy, prefix, used) {
            return Some(found);
        }
        prefix.pop();
        used[i] = false;
    }
    None
}

/// Searches for a shelling order by pruned backtracking over facet
/// permutations. Facets are tried in canonical order, so the first order
/// found is the lexicographically least passing one; the parallel mode
/// preserves that contract by selecting the earliest first branch that
/// succeeds.
pub fn find_shelling(
    gamma: &Multicomplex,
    strategy: Strategy,
    opts: &SearchOptions,
) -> Result<Option<(Vec<Face>, ShellingVerdict)>> {
    let facets = gamma.enumerate_facets().facets;
    if facets.len() > opts.max_facets {
        return Err(Error::CapExceeded {
            size: facets.len(),
            cap: opts.max_facets,
        });
    }
    let n = gamma.n();
    let found = if opts.threads > 1 && facets.len() > 1 {
        find_shelling_parallel(n, &facets, strategy, opts.threads)
    } else {
        let mut prefix = Vec::new();
        let mut used = vec![false; facets.len()];
        shelling_dfs(n, &facets, strategy, &mut prefix, &mut used)
    };
    match found {
        None => Ok(None),
        Some(order) => {
            let verdict = check_shelling_order(gamma, &order)?;
            debug_assert!(verdict.overall);
            Ok(Some((order, verdict)))
        }
    }
}

/// First-branch parallelism: each admissible first facet roots an
/// independent sequential search; results are inspected in candidate order.
fn find_shelling_parallel(
    n: usize,
    facets: &[Face],
    strategy: Strategy,
    threads: usize,
) -> Option<Vec<Face>> {
    let first_dim = match strategy {
        Strategy::Dimension => facets.iter().map(|f| f.infinite_part().len()).max(),
        Strategy::Exhaustive => None,
    };
    let candidates: Vec<usize> = (0..facets.len())
        .filter(|&i| {
            is_zero_inf(&facets[i])
                && first_dim.is_none_or(|d| facets[i].infinite_part().len() == d)
        })
        .collect();
    for chunk in candidates.chunks(threads.max(1)) {
        let results: Vec<Option<Vec<Face>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&i| {
                    scope.spawn(move || {
                        let mut prefix = vec![facets[i].clone()];
                        let mut used = vec![false; facets.len()];
                        used[i] = true;
                        shelling_dfs(n, facets, strategy, &mut prefix, &mut used)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        if let Some(order) = results.into_iter().flatten().next() {
            return Some(order);
        }
    }
    None
}

/// Evaluates the maximal-shelling conditions for `order` (a permutation of
/// the maximal facets) with split index `s` (the length of the initial
/// segment, `1..=r`).
pub fn check_maximal_shelling(
    gamma: &Multicomplex,
    order: &[Face],
    s: usize,
) -> Result<MaximalShellingVerdict> {
    let maximal = gamma.maximal_facets().to_vec();
    if !same_multiset(order, &maximal) {
        return Err(Error::NotAPermutation {
            expected: maximal.len(),
        });
    }
    let r = order.len();
    if s == 0 || s > r {
        return Err(Error::SplitOutOfRange { split: s, len: r });
    }
    let n = gamma.n();

    let ip0 = order[0].infinite_part();
    let cond1_offender = (0..s).find(|&j| order[j].infinite_part() != ip0);

    let mut per_index = Vec::new();
    for i in s..r {
        let intersection = intersection_with_prefix(n, &order[..i], &order[i]);
        let offenders: Vec<Face> = intersection
            .iter()
            .filter(|w| !differs_in_exactly_one(w, &order[i]))
            .cloned()
            .collect();
        per_index.push(MaximalIndexReport {
            position: i,
            face: order[i].clone(),
            cond2: if offenders.is_empty() {
                CondStatus::Pass
            } else {
                CondStatus::Fail
            },
            cond2_offenders: offenders,
            intersection,
        });
    }

    let mut cond3_offender = None;
    'outer: for j in (s - 1)..r {
        for i in (j + 1)..r {
            let ip_j = order[j].infinite_part();
            let ip_i = order[i].infinite_part();
            if ip_j.is_subset(&ip_i) && ip_j != ip_i {
                cond3_offender = Some((j, i));
                break 'outer;
            }
        }
    }

    let cond1 = if cond1_offender.is_none() {
        CondStatus::Pass
    } else {
        CondStatus::Fail
    };
    let cond3 = if cond3_offender.is_none() {
        CondStatus::Pass
    } else {
        CondStatus::Fail
    };
    let overall = cond1.passed()
        && cond3.passed()
        && per_index.iter().all(|x| x.cond2.passed());
    Ok(MaximalShellingVerdict {
        order: order.to_vec(),
        split: s,
        cond1,
        cond1_offender,
        per_index,
        cond3,
        cond3_offender,
        overall,
    })
}

/// Split of a (partial) order: the length of the maximal initial segment
/// with one common infinite part.
fn equal_ip_prefix_len(faces: &[&Face]) -> usize {
    let ip0 = faces[0].infinite_part();
    faces
        .iter()
        .take_while(|f| f.infinite_part() == ip0)
        .count()
}

/// Incremental admissibility for the maximal-shelling search: checks only
/// the conditions the new last element introduces. Taking the split maximal
/// is complete because a larger split only weakens the conditions.
fn maximal_extension_ok(n: usize, prefix: &[Face], cand: &Face) -> bool {
    let all: Vec<&Face> = prefix.iter().chain(std::iter::once(cand)).collect();
    let s = equal_ip_prefix_len(&all);
    let pos = all.len() - 1;
    if pos < s {
        return true;
    }
    // Condition on infinite parts, for pairs ending at the new element.
    let ip_c = cand.infinite_part();
    for earlier in &all[(s - 1)..pos] {
        let ip_j = earlier.infinite_part();
        if ip_j.is_subset(&ip_c) && ip_j != ip_c {
            return false;
        }
    }
    let intersection = intersection_with_prefix(n, prefix, cand);
    intersection.iter().all(|w| differs_in_exactly_one(w, cand))
}

fn maximal_dfs(
    n: usize,
    facets: &[Face],
    prefix: &mut Vec<Face>,
    used: &mut Vec<bool>,
) -> Option<Vec<Face>> {
    if prefix.len() == facets.len() {
        return Some(prefix.clone());
    }
    for i in 0..facets.len() {
        if used[i] {
            continue;
        }
        if !prefix.is_empty() && !maximal_extension_ok(n, prefix, &facets[i]) {
            continue;
        }
        used[i] = true;
        prefix.push(facets[i].clone());
        if let Some(found) = maximal_dfs(n, facets, prefix, used) {
            return Some(found);
        }
        prefix.pop();
        used[i] = false;
    }
    None
}

/// Exhaustive search for a maximal shelling. For each candidate order the
/// split is the maximal initial segment with common infinite part.
pub fn find_maximal_shelling(
    gamma: &Multicomplex,
    opts: &SearchOptions,
) -> Result<Option<(Vec<Face>, usize, MaximalShellingVerdict)>> {
    let facets = gamma.maximal_facets().to_vec();
    if facets.len() > opts.max_perms {
        return Err(Error::CapExceeded {
            size: facets.len(),
            cap: opts.max_perms,
        });
    }
    let n = gamma.n();
    let mut prefix = Vec::new();
    let mut used = vec![false; facets.len()];
    match maximal_dfs(n, &facets, &mut prefix, &mut used) {
        None => Ok(None),
        Some(order) => {
            let refs: Vec<&Face> = order.iter().collect();
            let s = equal_ip_prefix_len(&refs);
            let verdict = check_maximal_shelling(gamma, &order, s)?;
            debug_assert!(verdict.overall);
            Ok(Some((order, s, verdict)))
        }
    }
}
