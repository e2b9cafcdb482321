//! Fixture ideals shared by the benchmarks.

use tspread_core::{borel_closure, veronese_ideal, Monomial, MonomialIdeal, SpreadVector};

/// The running three-generator example over four variables.
pub fn small_ideal() -> (MonomialIdeal, SpreadVector) {
    let n = 4;
    let gens = ["x1*x2", "x1*x3", "x1*x4^2"]
        .iter()
        .map(|s| Monomial::parse(s, n).expect("fixture parses"))
        .collect();
    let ideal = MonomialIdeal::from_generators(gens, n).expect("fixture is canonical");
    (ideal, SpreadVector::new(vec![1, 0]).expect("nonempty"))
}

/// A mid-size Borel closure: fourteen generators over nine variables,
/// sitting exactly at the oracle cap.
pub fn medium_ideal() -> (MonomialIdeal, SpreadVector) {
    let t = SpreadVector::new(vec![2, 1, 0]).expect("nonempty");
    let seeds = vec![Monomial::from_indices(vec![1, 4, 6, 7])];
    let ideal = borel_closure(&seeds, &t, 9).expect("seeds are t-spread");
    (ideal, t)
}

/// A dense Veronese layer used by the closed-form benchmarks.
pub fn large_veronese() -> (MonomialIdeal, SpreadVector) {
    let t = SpreadVector::new(vec![1, 1, 1]).expect("nonempty");
    (veronese_ideal(12, 4, &t), t)
}
