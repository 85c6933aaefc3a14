//! Exact combinatorics of monomial ideals and multicomplexes.
//!
//! A multicomplex is a downward-closed subset of `ℕ∞ⁿ`; multicomplexes
//! correspond bijectively to monomial ideals of `K[x1,…,xn]`. This crate
//! decides shellability of a multicomplex, decides whether the quotient by
//! a monomial ideal admits a (multigraded) pretty clean prime filtration,
//! constructs and verifies such filtrations, and computes the supporting
//! invariants: irreducible and primary decompositions, associated primes,
//! dimension filtrations, facet enumeration and arithmetic degree.
//!
//! Everything is exact integer combinatorics on exponent vectors; the
//! coefficient field never appears. All values are immutable after
//! construction and the operations are pure functions, so the types are
//! safe to share across threads.
//!
//! The exhaustive deciders ([`find_shelling`], [`find_maximal_shelling`])
//! are backtracking searches with caps configured through
//! [`SearchOptions`]; they fail loudly instead of running unbounded.

pub mod decomposition;
mod error;
pub mod exponent;
pub mod filtration;
pub mod ideal;
pub mod multicomplex;
pub mod shellability;

#[cfg(test)]
pub(crate) mod test_util;

pub use error::{Error, Result};
pub use exponent::{Exponent, ExtExp, Face};
pub use ideal::{MonomialIdeal, MonomialPrime};

pub use decomposition::{
    almost_clean_chain, ass_totally_ordered, dimension_filtration, irreducible_decomposition,
    is_borel_type, pret_criterion, primary_decomposition, DecompositionReport,
    DimensionFiltration, PretReport, PretRow,
};
pub use filtration::{
    build_maximal_shelling_filtration, f_monomial, find_pretty_clean_filtration,
    refine_primary_to_clean, simplicial_clean_filtration, verify_colon_identity,
    verify_filtration, FiltrationClass, FiltrationStep, FMonomial, PrimaryFiltration,
    PrimaryStep, PrimeFiltration, SimplicialComplex, VerificationReport, Violation,
};
pub use multicomplex::{ArithmeticDegree, FacetSet, Multicomplex, StanleySet};
pub use shellability::{
    check_maximal_shelling, check_shelling_order, find_maximal_shelling, find_shelling,
    is_lower_neighbour, stanley_oracle, stanley_sets_of_order, CondStatus,
    MaximalIndexReport, MaximalShellingVerdict, SearchOptions, ShellingIndexReport,
    ShellingVerdict, StanleyOutcome, Strategy,
};
