//! Random t-spread Borel ideals for the verification grid: seeds are drawn
//! uniformly through the shift bijection and closed under Borel exchanges.
//! Distribution is immaterial; determinism comes from the caller's RNG.

use rand::Rng;

use crate::ideal::{borel_closure, MonomialIdeal};
use crate::monomial::{Monomial, SpreadVector};

/// Bounds for the random grid.
#[derive(Debug, Clone, Copy)]
pub struct GridParams {
    pub max_n: u32,
    /// Largest spread arity `d`; spread vectors get `d - 1` entries.
    pub max_arity: usize,
    pub max_gap: u32,
    pub max_generators: usize,
    pub max_seeds: usize,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            max_n: 9,
            max_arity: 4,
            max_gap: 3,
            max_generators: 12,
            max_seeds: 3,
        }
    }
}

/// A random spread vector within the bounds.
pub fn sample_spread_vector<R: Rng>(rng: &mut R, params: &GridParams) -> SpreadVector {
    let arity = rng.gen_range(2..=params.max_arity.max(2));
    let entries = (0..arity - 1)
        .map(|_| rng.gen_range(0..=params.max_gap))
        .collect();
    SpreadVector::new(entries).expect("arity >= 2")
}

/// A uniformly random t-spread monomial of the given degree, through the
/// shift bijection; `None` when there are none.
pub fn sample_spread_monomial<R: Rng>(
    rng: &mut R,
    n: u32,
    degree: usize,
    t: &SpreadVector,
) -> Option<Monomial> {
    if degree > t.arity() {
        return None;
    }
    let shrunk = n.checked_sub(t.gap_sum(degree))?;
    if shrunk < 1 && degree > 0 {
        return None;
    }
    let raw: Vec<u32> = (0..degree).map(|_| rng.gen_range(1..=shrunk)).collect();
    Some(
        Monomial::from_indices(raw)
            .shift_to_spread(t)
            .expect("degree <= arity"),
    )
}

/// Draws seeds and closes them under Borel exchanges until the generator
/// count lands in `1..=max_generators`.
pub fn sample_borel_ideal<R: Rng>(
    rng: &mut R,
    params: &GridParams,
) -> (MonomialIdeal, SpreadVector) {
    loop {
        let t = sample_spread_vector(rng, params);
        let n = rng.gen_range(2..=params.max_n.max(2));
        let seed_count = rng.gen_range(1..=params.max_seeds.max(1));
        let mut seeds = Vec::with_capacity(seed_count);
        for _ in 0..seed_count {
            let degree = rng.gen_range(1..=t.arity());
            if let Some(seed) = sample_spread_monomial(rng, n, degree, &t) {
                seeds.push(seed);
            }
        }
        if seeds.is_empty() {
            continue;
        }
        let ideal = borel_closure(&seeds, &t, n).expect("sampled seeds are t-spread");
        let count = ideal.generators().len();
        if count >= 1 && count <= params.max_generators {
            return (ideal, t);
        }
    }
}
