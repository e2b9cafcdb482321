//! Exact-arithmetic toolkit for vector-spread Borel ideals.
//!
//! The crate constructs t-spread strongly stable monomial ideals (Borel
//! closures, Veronese ideals) and computes their homological invariants:
//! graded Betti tables, bigraded Poincare polynomials, regularity,
//! projective dimension, extremal Betti numbers, height, depth and the
//! Cohen-Macaulay classification. Every closed formula is backed by an
//! independent brute-force oracle (Taylor-complex strand homology over the
//! rationals, minimal vertex covers) so results can be cross-checked at
//! desk scale.

pub mod cm;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod resolution;
pub mod sampling;

pub use cm::{
    cm_report, cm_witness_monomial, cm_witness_scan, ideal_height, veronese_betti, CmReport,
};
pub use error::{Error, Result};
pub use ideal::{
    borel_closure, is_spread_strongly_stable, pure_lex_cmp, standard_decomposition, veronese_ideal,
    GeneratorRepr, IdealDocument, MonomialIdeal,
};
pub use monomial::{binomial, count_spread, enumerate_spread, Monomial, SpreadVector};
pub use oracle::{
    membership, minimal_primes, taylor_betti, taylor_betti_with, taylor_strands, OracleField,
    TaylorStrand, DEFAULT_GENERATOR_CAP,
};
pub use resolution::{
    betti_table, betti_table_via_sets, colon_set_oracle, extremal_betti, extremal_from_generators,
    extremal_from_table, formula_set, homological_invariants, linear_quotient_sets,
    poincare_series, BettiTable, ColonQuotient, ExtremalBettiNumber, HomologicalInvariants,
    LinearQuotientData, PoincarePolynomial, Subject,
};
