//! Multigraded prime filtrations: construction, search and verification.
//!
//! A prime filtration of the quotient by an ideal `I` is an ascending chain
//! of monomial ideals from `I` to the unit ideal in which every step
//! adjoins one monomial witness whose colon against the previous ideal is a
//! monomial prime — the step quotient is then cyclic with that prime as its
//! annihilator. The chain is *clean* when every step prime is minimal over
//! `I`, and *pretty clean* when a step prime properly contains a later one
//! only, never an earlier one.

use std::collections::{BTreeSet, HashSet};

use crate::decomposition::{irreducible_decomposition, primary_decomposition};
use crate::error::{Error, Result};
use crate::exponent::{for_each_in_box, Exponent, ExtExp, Face};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::multicomplex::Multicomplex;
use crate::shellability::{check_maximal_shelling, check_shelling_order, SearchOptions};

/// One step of a prime filtration: adjoining `x^witness` to `ideal_before`
/// produces a cyclic quotient isomorphic to the quotient by `prime`, shifted
/// by the multidegree `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub ideal_before: MonomialIdeal,
    pub witness: Exponent,
    pub prime: MonomialPrime,
    pub shift: Exponent,
}

impl FiltrationStep {
    pub fn ideal_after(&self) -> MonomialIdeal {
        self.ideal_before.plus_monomial(&self.witness)
    }
}

/// Classification flags of a filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiltrationClass {
    /// Every step has a prime colon and the chain ascends from the base to
    /// the unit ideal.
    pub prime: bool,
    /// All step primes are minimal primes of the base.
    pub clean: bool,
    /// A proper inclusion between step primes only points backwards.
    pub pretty_clean: bool,
    /// All step primes are associated primes of the base.
    pub almost_clean: bool,
}

/// An ascending prime filtration of the quotient by `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFiltration {
    pub base: MonomialIdeal,
    pub steps: Vec<FiltrationStep>,
    pub classification: FiltrationClass,
}

impl PrimeFiltration {
    /// Assembles a filtration and computes its classification; no validity
    /// requirement is imposed, so this also represents broken candidate
    /// chains handed to [`verify_filtration`].
    pub fn from_parts(base: MonomialIdeal, steps: Vec<FiltrationStep>) -> Self {
        let classification = classify(&base, &steps);
        PrimeFiltration {
            base,
            steps,
            classification,
        }
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// The primes of the steps, in chain order.
    pub fn supp(&self) -> Vec<MonomialPrime> {
        self.steps.iter().map(|s| s.prime.clone()).collect()
    }
}

fn chain_is_valid(base: &MonomialIdeal, steps: &[FiltrationStep]) -> bool {
    if steps.is_empty() {
        return base.is_unit();
    }
    if steps[0].ideal_before != *base {
        return false;
    }
    let mut cur = base.clone();
    for step in steps {
        if step.ideal_before != cur
            || cur.contains_monomial(&step.witness)
            || cur.colon_monomial(&step.witness) != step.prime.as_ideal()
            || step.shift != step.witness
        {
            return false;
        }
        cur = step.ideal_after();
    }
    cur.is_unit()
}

/// Pretty-clean pair condition over the primes in chain order.
fn pretty_clean_pairs(primes: &[MonomialPrime]) -> bool {
    for i in 0..primes.len() {
        for j in (i + 1)..primes.len() {
            if primes[i].is_subset_of(&primes[j]) && primes[i] != primes[j] {
                return false;
            }
        }
    }
    true
}

fn classify(base: &MonomialIdeal, steps: &[FiltrationStep]) -> FiltrationClass {
    let prime = chain_is_valid(base, steps);
    let primes: Vec<MonomialPrime> = steps.iter().map(|s| s.prime.clone()).collect();
    let (clean, almost_clean) = match primary_decomposition(base) {
        Ok(report) => (
            prime && primes.iter().all(|p| report.min_primes.contains(p)),
            prime && primes.iter().all(|p| report.ass.contains(p)),
        ),
        Err(_) => (false, false),
    };
    FiltrationClass {
        prime,
        clean,
        pretty_clean: prime && pretty_clean_pairs(&primes),
        almost_clean,
    }
}

/// A chain whose quotients are cyclic with primary annihilators, as built
/// from a maximal shelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryStep {
    pub ideal_before: MonomialIdeal,
    pub witness: Exponent,
    /// The colon of the chain member by the witness.
    pub primary: MonomialIdeal,
    pub prime: MonomialPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryFiltration {
    pub base: MonomialIdeal,
    pub steps: Vec<PrimaryStep>,
}

/// The monomial attached to position `i` of a maximal-facet order: one
/// factor `x_λ^{w(λ)+1}` for every maximal facet `w` of the intersection
/// with the span of the earlier facets, where `λ` is the unique coordinate
/// in which `w` drops below the facet at `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMonomial {
    pub exponent: Exponent,
    /// Accepted intersection facets with their differing coordinate.
    pub factors: Vec<(Face, usize)>,
    /// Intersection facets differing in more than one coordinate; empty on
    /// orders passing the maximal-shelling conditions.
    pub rejected: Vec<Face>,
}

fn single_face_ideal(n: usize, u: &Face) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        n,
        u.coords()
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.finite().map(|e| Exponent::unit(n, k, e + 1))),
    )
}

fn span_intersection(n: usize, prefix: &[Face], u: &Face) -> Vec<Face> {
    let span = Multicomplex::from_faces(n, prefix.iter().cloned()).expect("nonempty prefix");
    let single = Multicomplex::from_faces(n, [u.clone()]).expect("singleton");
    span.intersect(&single).maximal_facets().to_vec()
}

/// Computes the step monomial at zero-based position `i >= 1` of `order`.
///
/// Usable diagnostically on arbitrary orders: facets of the intersection
/// that differ in more than one coordinate contribute nothing and are
/// reported in `rejected`.
pub fn f_monomial(gamma: &Multicomplex, order: &[Face], i: usize) -> FMonomial {
    assert!(i >= 1, "the first position carries no step monomial");
    let n = gamma.n();
    let u = &order[i];
    let mut exponent = Exponent::zero(n);
    let mut factors = Vec::new();
    let mut rejected = Vec::new();
    for w in span_intersection(n, &order[..i], u) {
        let diffs: Vec<usize> = (0..n).filter(|&k| w.coord(k) != u.coord(k)).collect();
        if diffs.len() != 1 {
            rejected.push(w);
            continue;
        }
        let lambda = diffs[0];
        let value = w
            .coord(lambda)
            .finite()
            .expect("a coordinate below another is finite");
        exponent = &exponent + &Exponent::unit(n, lambda, value + 1);
        factors.push((w, lambda));
    }
    FMonomial {
        exponent,
        factors,
        rejected,
    }
}

/// Checks the identity between the two presentations of the step quotient:
/// the intersection of the earlier facet ideals plus the ideal at `i`
/// equals the ideal at `i` plus the step monomial.
pub fn verify_colon_identity(gamma: &Multicomplex, order: &[Face], i: usize) -> bool {
    let n = gamma.n();
    let lhs = order[..i]
        .iter()
        .map(|u| single_face_ideal(n, u))
        .fold(MonomialIdeal::unit(n), |acc, j| acc.intersection(&j))
        .sum(&single_face_ideal(n, &order[i]));
    let f = f_monomial(gamma, order, i);
    let rhs = single_face_ideal(n, &order[i]).plus_monomial(&f.exponent);
    lhs == rhs
}

/// Builds the primary filtration attached to a maximal shelling: the chain
/// of partial intersections of the single-facet ideals, each step adjoining
/// the step monomial, with the colon of the facet ideal as its primary
/// annihilator; the terminal step is the primary ideal of the split
/// segment.
pub fn build_maximal_shelling_filtration(
    gamma: &Multicomplex,
    order: &[Face],
    s: usize,
) -> Result<PrimaryFiltration> {
    let verdict = check_maximal_shelling(gamma, order, s)?;
    if !verdict.overall {
        return Err(Error::NotAMaximalShelling);
    }
    let n = gamma.n();
    let r = order.len();
    // chain[k] = intersection of the first k single-facet ideals
    let mut chain = vec![MonomialIdeal::unit(n)];
    for u in order {
        let next = chain.last().unwrap().intersection(&single_face_ideal(n, u));
        chain.push(next);
    }
    debug_assert_eq!(chain[r], gamma.ideal());

    let mut steps = Vec::with_capacity(r - s + 1);
    for k in ((s + 1)..=r).rev() {
        let position = k - 1;
        let f = f_monomial(gamma, order, position);
        if !f.rejected.is_empty() {
            return Err(Error::Invariant(format!(
                "intersection facet at position {position} differs in more than one coordinate"
            )));
        }
        if chain[k].plus_monomial(&f.exponent) != chain[k - 1] {
            return Err(Error::Invariant(format!(
                "step monomial at position {position} does not span the quotient"
            )));
        }
        let primary = single_face_ideal(n, &order[position]).colon_monomial(&f.exponent);
        if !primary.is_irreducible()? {
            return Err(Error::Invariant(format!(
                "colon at position {position} is not irreducible"
            )));
        }
        let prime = order[position].prime();
        if primary.radical().is_prime()? != Some(prime.clone()) {
            return Err(Error::Invariant(format!(
                "colon at position {position} is not primary to the facet prime"
            )));
        }
        steps.push(PrimaryStep {
            ideal_before: chain[k].clone(),
            witness: f.exponent,
            primary,
            prime,
        });
    }
    // Terminal step: the split segment is itself primary.
    let terminal = chain[s].clone();
    if !terminal.is_primary()? {
        return Err(Error::Invariant("split segment is not primary".into()));
    }
    steps.push(PrimaryStep {
        ideal_before: terminal.clone(),
        witness: Exponent::zero(n),
        primary: terminal,
        prime: order[0].prime(),
    });
    Ok(PrimaryFiltration {
        base: chain[r].clone(),
        steps,
    })
}

/// Refines the quotient by a primary ideal into prime steps: adjoins the
/// monomial basis of the quotient restricted to the variables of the
/// radical, largest total degree first, so every colon equals the radical.
pub fn refine_primary_to_clean(q: &MonomialIdeal) -> Result<Vec<FiltrationStep>> {
    if !q.is_primary()? {
        return Err(Error::NotPrimary);
    }
    let n = q.n();
    let prime = q
        .radical()
        .is_prime()?
        .ok_or_else(|| Error::Invariant("primary ideal with non-prime radical".into()))?;
    let vars: Vec<usize> = q.occurring_vars().into_iter().collect();
    let bounds: Vec<u32> = vars
        .iter()
        .map(|&v| {
            q.gens()
                .iter()
                .filter(|g| g.support().all(|k| k == v))
                .map(|g| g.coord(v))
                .min()
                .expect("primary ideal has a pure power per occurring variable")
                - 1
        })
        .collect();
    let mut basis: Vec<Exponent> = Vec::new();
    for_each_in_box(&bounds, |slice| {
        let mut coords = vec![0; n];
        for (i, &v) in vars.iter().enumerate() {
            coords[v] = slice[i];
        }
        let b = Exponent::new(coords);
        if !q.contains_monomial(&b) {
            basis.push(b);
        }
    });
    basis.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));

    let prime_ideal = prime.as_ideal();
    let mut steps = Vec::with_capacity(basis.len());
    let mut cur = q.clone();
    for b in basis {
        if cur.colon_monomial(&b) != prime_ideal {
            return Err(Error::Invariant(format!(
                "colon by basis monomial {b} is not the radical"
            )));
        }
        steps.push(FiltrationStep {
            ideal_before: cur.clone(),
            witness: b.clone(),
            prime: prime.clone(),
            shift: b.clone(),
        });
        cur = cur.plus_monomial(&b);
    }
    debug_assert!(cur.is_unit());
    Ok(steps)
}

impl PrimaryFiltration {
    /// Refines every primary step into prime steps. The witnesses of an
    /// inner refinement lift by multiplication with the step monomial.
    pub fn refine(&self) -> Result<PrimeFiltration> {
        let mut steps = Vec::new();
        let mut cur = self.base.clone();
        for step in &self.steps {
            if cur != step.ideal_before {
                return Err(Error::Invariant("primary chain is not contiguous".into()));
            }
            for inner in refine_primary_to_clean(&step.primary)? {
                let witness = &step.witness + &inner.witness;
                if cur.colon_monomial(&witness) != inner.prime.as_ideal() {
                    return Err(Error::Invariant(format!(
                        "lifted witness {witness} has a non-prime colon"
                    )));
                }
                steps.push(FiltrationStep {
                    ideal_before: cur.clone(),
                    witness: witness.clone(),
                    prime: inner.prime.clone(),
                    shift: witness.clone(),
                });
                cur = cur.plus_monomial(&witness);
            }
        }
        if !cur.is_unit() {
            return Err(Error::Invariant("refinement does not reach the unit ideal".into()));
        }
        Ok(PrimeFiltration::from_parts(self.base.clone(), steps))
    }
}

/// Per-coordinate inclusive candidate bound for the pretty-clean search:
/// the largest pure-power exponent of the coordinate over all irreducible
/// components.
///
/// Witnesses of a chain derived from a shelling are the offsets of its
/// Stanley sets. Off the directions an offset is a flattened facet entry,
/// strictly below the component exponent; along a direction it can sit one
/// past the largest facet entry, i.e. exactly at the component exponent, so
/// the bound must be inclusive.
fn witness_bounds(ideal: &MonomialIdeal) -> Result<Vec<u32>> {
    let n = ideal.n();
    let mut bounds = vec![0u32; n];
    for comp in irreducible_decomposition(ideal)? {
        for (k, e) in comp
            .pure_power_exponents()
            .ok_or_else(|| Error::Invariant("non-irreducible component".into()))?
        {
            bounds[k] = bounds[k].max(e);
        }
    }
    Ok(bounds)
}

/// Candidate steps out of `cur`: monomials in the box, outside the ideal,
/// with a prime colon that does not properly contain a previously used
/// prime. Ordered by descending prime height, then descending witness
/// degree, with lexicographic tiebreaks.
fn admissible_steps(
    cur: &MonomialIdeal,
    used: &[MonomialPrime],
    candidates: &[Exponent],
) -> Vec<(MonomialPrime, Exponent)> {
    let mut options: Vec<(MonomialPrime, Exponent)> = Vec::new();
    for b in candidates {
        if cur.contains_monomial(b) {
            continue;
        }
        let colon = cur.colon_monomial(b);
        let Some(p) = colon
            .is_prime()
            .expect("colon of a proper ideal by a non-member is proper")
        else {
            continue;
        };
        if used.iter().any(|q| q != &p && q.is_subset_of(&p)) {
            continue;
        }
        options.push((p, b.clone()));
    }
    options.sort_by(|(p1, b1), (p2, b2)| {
        p2.height()
            .cmp(&p1.height())
            .then_with(|| p1.vars().cmp(p2.vars()))
            .then_with(|| b2.degree().cmp(&b1.degree()))
            .then_with(|| b1.cmp(b2))
    });
    options
}

/// Search states proven fruitless. Reaching the same chain ideal with the
/// same set of used primes by a different step order spans an identical
/// subtree, so dead ends are cached to cut the permutation blowup.
type DeadStates = HashSet<(MonomialIdeal, BTreeSet<MonomialPrime>)>;

fn pretty_clean_dfs(
    cur: &MonomialIdeal,
    used: &mut Vec<MonomialPrime>,
    steps: &mut Vec<FiltrationStep>,
    candidates: &[Exponent],
    dead: &mut DeadStates,
) -> bool {
    if cur.is_unit() {
        return true;
    }
    let state = (cur.clone(), used.iter().cloned().collect::<BTreeSet<_>>());
    if dead.contains(&state) {
        return false;
    }
    for (p, b) in admissible_steps(cur, used, candidates) {
        steps.push(FiltrationStep {
            ideal_before: cur.clone(),
            witness: b.clone(),
            prime: p.clone(),
            shift: b.clone(),
        });
        used.push(p);
        let next = cur.plus_monomial(&b);
        if pretty_clean_dfs(&next, used, steps, candidates, dead) {
            return true;
        }
        used.pop();
        steps.pop();
    }
    dead.insert(state);
    false
}

/// Backtracking search for a multigraded pretty clean filtration.
///
/// Witnesses range over the box bounded by the irreducible-component
/// exponents; admissibility keeps the chain pretty clean throughout, so any
/// complete chain is a certificate. `None` means the bounded search space
/// is exhausted.
pub fn find_pretty_clean_filtration(
    ideal: &MonomialIdeal,
    opts: &SearchOptions,
) -> Result<Option<PrimeFiltration>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ImproperIdeal);
    }
    let bounds = witness_bounds(ideal)?;
    let mut candidates: Vec<Exponent> = Vec::new();
    for_each_in_box(&bounds, |v| candidates.push(Exponent::new(v.to_vec())));

    let steps = if opts.threads > 1 {
        pretty_clean_parallel(ideal, &candidates, opts.threads)
    } else {
        let mut used = Vec::new();
        let mut steps = Vec::new();
        let mut dead = DeadStates::new();
        pretty_clean_dfs(ideal, &mut used, &mut steps, &candidates, &mut dead).then_some(steps)
    };
    Ok(steps.map(|steps| {
        let filtration = PrimeFiltration::from_parts(ideal.clone(), steps);
        debug_assert!(filtration.classification.pretty_clean);
        filtration
    }))
}

/// First-branch parallelism over the root candidates, inspected in
/// candidate order so the result matches the sequential search.
fn pretty_clean_parallel(
    ideal: &MonomialIdeal,
    candidates: &[Exponent],
    threads: usize,
) -> Option<Vec<FiltrationStep>> {
    let roots = admissible_steps(ideal, &[], candidates);
    for chunk in roots.chunks(threads.max(1)) {
        let results: Vec<Option<Vec<FiltrationStep>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|(p, b)| {
                    scope.spawn(move || {
                        let first = FiltrationStep {
                            ideal_before: ideal.clone(),
                            witness: b.clone(),
                            prime: p.clone(),
                            shift: b.clone(),
                        };
                        let next = ideal.plus_monomial(b);
                        let mut used = vec![p.clone()];
                        let mut steps = vec![first];
                        let mut dead = DeadStates::new();
                        pretty_clean_dfs(&next, &mut used, &mut steps, candidates, &mut dead)
                            .then_some(steps)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        if let Some(steps) = results.into_iter().flatten().next() {
            return Some(steps);
        }
    }
    None
}

/// A violated filtration invariant, with the zero-based step it occurred at
/// when applicable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub step: Option<usize>,
    pub message: String,
}

/// The outcome of re-checking a filtration from scratch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub classification: FiltrationClass,
    pub length: usize,
    /// Facet count of the multicomplex of the base, when the base is proper.
    pub expected_length: Option<usize>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    /// No structural invariant is violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-checks every step invariant of a filtration, recomputes the
/// classification, checks that the associated primes are covered by the
/// step primes and all step primes occur in the support, and compares the
/// length of a pretty clean filtration against the facet count of the base.
pub fn verify_filtration(filtration: &PrimeFiltration) -> VerificationReport {
    let base = &filtration.base;
    let steps = &filtration.steps;
    let mut violations = Vec::new();

    if steps.is_empty() {
        if !base.is_unit() {
            violations.push(Violation {
                step: None,
                message: "empty filtration over a proper base".into(),
            });
        }
    } else if steps[0].ideal_before != *base {
        violations.push(Violation {
            step: Some(0),
            message: "first step does not start at the base ideal".into(),
        });
    }
    let mut cur = base.clone();
    for (i, step) in steps.iter().enumerate() {
        if step.ideal_before != cur {
            violations.push(Violation {
                step: Some(i),
                message: "chain is not contiguous".into(),
            });
            cur = step.ideal_before.clone();
        }
        if cur.contains_monomial(&step.witness) {
            violations.push(Violation {
                step: Some(i),
                message: format!("witness {} already lies in the ideal", step.witness),
            });
        }
        if cur.colon_monomial(&step.witness) != step.prime.as_ideal() {
            violations.push(Violation {
                step: Some(i),
                message: format!(
                    "colon by {} is not the recorded prime {}",
                    step.witness, step.prime
                ),
            });
        }
        if step.shift != step.witness {
            violations.push(Violation {
                step: Some(i),
                message: "shift differs from the witness multidegree".into(),
            });
        }
        cur = step.ideal_after();
    }
    if !cur.is_unit() {
        violations.push(Violation {
            step: None,
            message: "chain does not reach the unit ideal".into(),
        });
    }

    let classification = classify(base, steps);

    if let Ok(report) = primary_decomposition(base) {
        let supp_f: BTreeSet<MonomialPrime> = steps.iter().map(|s| s.prime.clone()).collect();
        for p in &report.ass {
            if !supp_f.contains(p) {
                violations.push(Violation {
                    step: None,
                    message: format!("associated prime {p} missing from the filtration support"),
                });
            }
        }
        for (i, step) in steps.iter().enumerate() {
            if !step.prime.contains_ideal(base) {
                violations.push(Violation {
                    step: Some(i),
                    message: format!("step prime {} is not in the support of the base", step.prime),
                });
            }
        }
    }

    let expected_length = Multicomplex::from_ideal(base)
        .ok()
        .map(|gamma| gamma.enumerate_facets().facets.len());
    if classification.pretty_clean {
        if let Some(expected) = expected_length {
            if expected != steps.len() {
                violations.push(Violation {
                    step: None,
                    message: format!(
                        "pretty clean filtration of length {}, facet count {expected}",
                        steps.len()
                    ),
                });
            }
        }
    }

    VerificationReport {
        classification,
        length: steps.len(),
        expected_length,
        violations,
    }
}

/// A simplicial complex on vertices `0..n`, given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: Vec<BTreeSet<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::Invariant("simplicial complex needs at least one facet".into()));
        }
        for f in &facets {
            for &v in f {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
            }
        }
        for f in &facets {
            for g in &facets {
                if f != g && f.is_subset(g) {
                    return Err(Error::NotAnAntichain(format!(
                        "facet {f:?} is contained in {g:?}"
                    )));
                }
            }
        }
        let mut sorted = facets.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != facets.len() {
            return Err(Error::NotAnAntichain("duplicate facet".into()));
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    /// The prime on the variables outside the facet.
    pub fn facet_prime(&self, facet: &BTreeSet<usize>) -> MonomialPrime {
        MonomialPrime::new(self.n, (0..self.n).filter(|v| !facet.contains(v)))
    }

    /// The ideal of non-faces: the intersection of the facet primes.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        self.facets
            .iter()
            .map(|f| self.facet_prime(f).as_ideal())
            .fold(MonomialIdeal::unit(self.n), |acc, p| acc.intersection(&p))
    }

    /// The squarefree translation: one maximal facet per simplicial facet,
    /// infinite on its vertices and zero elsewhere.
    pub fn to_multicomplex(&self) -> Multicomplex {
        Multicomplex::from_faces(self.n, self.facets.iter().map(|f| self.face_of(f)))
            .expect("nonempty facet list")
    }

    fn face_of(&self, facet: &BTreeSet<usize>) -> Face {
        Face::new(
            (0..self.n)
                .map(|v| {
                    if facet.contains(&v) {
                        ExtExp::Inf
                    } else {
                        ExtExp::Fin(0)
                    }
                })
                .collect(),
        )
    }
}

/// Number of facets of the intersection of the span of the earlier facets
/// with the facet at `k`: the distinct maximal sets among the pairwise
/// intersections.
fn shelling_number(order: &[BTreeSet<usize>], k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    let mut meets: Vec<BTreeSet<usize>> = order[..k]
        .iter()
        .map(|f| f.intersection(&order[k]).copied().collect())
        .collect();
    meets.sort();
    meets.dedup();
    meets
        .iter()
        .filter(|m| !meets.iter().any(|other| *m != other && m.is_subset(other)))
        .count()
}

/// Builds the clean filtration attached to a shelling order of a simplicial
/// complex: the chain of partial intersections of the facet primes, each
/// step generated by a squarefree witness monomial found by search. The
/// witness degree is checked against the facet count of the intersection
/// with the earlier span.
pub fn simplicial_clean_filtration(
    complex: &SimplicialComplex,
    order: &[BTreeSet<usize>],
) -> Result<PrimeFiltration> {
    let mut sorted_order = order.to_vec();
    sorted_order.sort();
    let mut sorted_facets = complex.facets().to_vec();
    sorted_facets.sort();
    if sorted_order != sorted_facets {
        return Err(Error::NotAPermutation {
            expected: complex.facets().len(),
        });
    }
    let gamma = complex.to_multicomplex();
    let translated: Vec<Face> = order.iter().map(|f| complex.face_of(f)).collect();
    let verdict = check_shelling_order(&gamma, &translated)?;
    if !verdict.overall {
        return Err(Error::NotAShelling);
    }

    let n = complex.n();
    let r = order.len();
    let primes: Vec<MonomialPrime> = order.iter().map(|f| complex.facet_prime(f)).collect();
    // chain[t] = intersection of the first t facet primes
    let mut chain = vec![MonomialIdeal::unit(n)];
    for p in &primes {
        let next = chain.last().unwrap().intersection(&p.as_ideal());
        chain.push(next);
    }

    let mut squarefree: Vec<Exponent> = Vec::new();
    for_each_in_box(&vec![1u32; n], |v| squarefree.push(Exponent::new(v.to_vec())));
    squarefree.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));

    let mut steps = Vec::with_capacity(r);
    for t in (0..r).rev() {
        let before = &chain[t + 1];
        let target = &chain[t];
        let prime_ideal = primes[t].as_ideal();
        let step_index = r - 1 - t;
        let witness = squarefree
            .iter()
            .find(|b| {
                !before.contains_monomial(b)
                    && before.plus_monomial(b) == *target
                    && before.colon_monomial(b) == prime_ideal
            })
            .cloned()
            .ok_or(Error::WitnessSearchFailed { step: step_index })?;
        let expected = shelling_number(order, t);
        if witness.degree() != expected as u64 {
            return Err(Error::ShiftDegreeMismatch {
                step: step_index,
                got: witness.degree(),
                expected,
            });
        }
        steps.push(FiltrationStep {
            ideal_before: before.clone(),
            witness: witness.clone(),
            prime: primes[t].clone(),
            shift: witness,
        });
    }
    Ok(PrimeFiltration::from_parts(chain[r].clone(), steps))
}
