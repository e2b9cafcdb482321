//! Acceptance suite: one test per verification criterion, each printing a
//! pass line and enforcing its runtime budget. Run with
//! `cargo test -p tspread-core --test acceptance -- --nocapture` to see the
//! per-criterion report.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use num::bigint::BigUint;
use num::traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tspread_core::monomial::{binomial, count_spread, enumerate_spread};
use tspread_core::resolution::formula_set;
use tspread_core::sampling::{sample_borel_ideal, GridParams};
use tspread_core::{
    betti_table, cm_report, cm_witness_scan, colon_set_oracle, extremal_betti,
    extremal_from_generators, extremal_from_table, homological_invariants, ideal_height,
    minimal_primes, poincare_series, taylor_betti, veronese_betti, veronese_ideal, Monomial,
    MonomialIdeal, SpreadVector, DEFAULT_GENERATOR_CAP,
};

const GRID_SIZE: usize = 200;

/// The shared random grid: seeds drawn, closed under Borel exchanges, with
/// n <= 9, arity <= 4, gaps <= 3 and at most 12 generators.
fn grid() -> &'static [(MonomialIdeal, SpreadVector)] {
    static GRID: OnceLock<Vec<(MonomialIdeal, SpreadVector)>> = OnceLock::new();
    GRID.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CA5E);
        let params = GridParams::default();
        (0..GRID_SIZE)
            .map(|_| sample_borel_ideal(&mut rng, &params))
            .collect()
    })
}

/// Every spread vector with the given arity bound and entries up to
/// `max_gap`.
fn all_spread_vectors(max_arity: usize, max_gap: u32) -> Vec<SpreadVector> {
    let mut out = Vec::new();
    for arity in 2..=max_arity {
        let len = arity - 1;
        let mut entries = vec![0u32; len];
        loop {
            out.push(SpreadVector::new(entries.clone()).unwrap());
            let mut pos = len;
            while pos > 0 {
                if entries[pos - 1] < max_gap {
                    entries[pos - 1] += 1;
                    break;
                }
                entries[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

fn pass(criterion: &str, detail: &str) {
    println!("criterion {criterion}: PASS ({detail})");
}

fn running_example() -> (MonomialIdeal, SpreadVector) {
    let n = 4;
    let gens = ["x1*x2", "x1*x3", "x1*x4^2"]
        .iter()
        .map(|s| Monomial::parse(s, n).unwrap())
        .collect();
    let ideal = MonomialIdeal::from_generators(gens, n).unwrap();
    let t = SpreadVector::new(vec![1, 0]).unwrap();
    (ideal, t)
}

#[test]
fn criterion_1_worked_example_reproduction() {
    let start = Instant::now();
    let (ideal, t) = running_example();

    let table = betti_table(&ideal, &t).unwrap();
    let expected: Vec<(usize, usize, u32)> =
        vec![(0, 2, 2), (0, 3, 1), (1, 3, 1), (1, 4, 2), (2, 5, 1)];
    let actual: Vec<(usize, usize, u32)> = table
        .iter()
        .map(|(i, j, v)| (i, j, u32::try_from(v).unwrap()))
        .collect();
    assert_eq!(actual, expected, "graded Betti entries");
    assert_eq!(table.total(0), BigUint::from(3u32));
    assert_eq!(table.total(1), BigUint::from(3u32));
    assert_eq!(table.total(2), BigUint::from(1u32));

    let invariants = homological_invariants(&ideal, &t).unwrap();
    assert_eq!(invariants.regularity, 3);
    assert_eq!(invariants.projective_dimension, 2);

    let extremals = extremal_betti(&ideal, &t).unwrap();
    assert_eq!(extremals.len(), 1, "unique extremal Betti number");
    assert_eq!(extremals[0].homological, 2);
    assert_eq!(extremals[0].degree, 3);
    assert_eq!(extremals[0].value, BigUint::one());

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "budget 1s, took {elapsed:?}"
    );
    pass(
        "1",
        &format!("table, reg, pd and extremal corner in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_formula_vs_taylor_oracle() {
    let start = Instant::now();
    for (ideal, t) in grid() {
        let formula = betti_table(ideal, t).unwrap().to_quotient();
        let oracle = taylor_betti(ideal).unwrap();
        assert_eq!(
            formula,
            oracle,
            "Betti mismatch for {:?} with t = {t}",
            ideal.generators()
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "budget 5min, took {elapsed:?}"
    );
    pass(
        "2",
        &format!("{GRID_SIZE} random Borel ideals, entry-for-entry, in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_linear_quotients() {
    let mut checked = 0usize;
    for (ideal, t) in grid() {
        for k in 2..=ideal.generators().len() {
            let colon = colon_set_oracle(ideal, k).unwrap();
            assert!(
                colon.is_variable_generated,
                "colon ({k}) not variable-generated for {:?}",
                ideal.generators()
            );
            let u_k = &ideal.generators()[k - 1];
            assert_eq!(colon.variables, formula_set(u_k, t).unwrap());
            checked += 1;
        }
    }
    pass("3", &format!("{checked} colon ideals, zero mismatches"));
}

#[test]
fn criterion_4_counting_and_round_trips() {
    let start = Instant::now();
    let mut sets = 0usize;
    for t in all_spread_vectors(5, 3) {
        for n in 1..=12u32 {
            for l in 0..=t.arity() {
                let listed = enumerate_spread(n, l, &t);
                assert_eq!(
                    BigUint::from(listed.len()),
                    count_spread(n, l, &t),
                    "count mismatch at n={n} l={l} t={t}"
                );
                let zero = t.zero_like();
                let shrunk = n.saturating_sub(t.gap_sum(l));
                let preimages = enumerate_spread(shrunk, l, &zero);
                assert_eq!(preimages.len(), listed.len());
                for (u, preimage) in listed.iter().zip(&preimages) {
                    let down = u.shift_from_spread(&t).unwrap();
                    assert_eq!(&down, preimage, "shift bijection order");
                    assert_eq!(down.shift_to_spread(&t).unwrap(), *u, "round trip");
                }
                sets += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "budget 30s, took {elapsed:?}"
    );
    pass(
        "4",
        &format!("{sets} (n, l, t) cells counted and round-tripped in {elapsed:?}"),
    );
}

#[test]
fn criterion_5_height() {
    for (ideal, t) in grid() {
        let primes = minimal_primes(ideal).unwrap();
        let min_cover = primes.iter().map(|p| p.len()).min().unwrap() as u32;
        assert_eq!(
            ideal_height(ideal, t).unwrap(),
            min_cover,
            "height mismatch for {:?}",
            ideal.generators()
        );
    }
    let mut veronese_cases = 0usize;
    for t in all_spread_vectors(4, 3) {
        let d = t.arity();
        for n in 1..=9u32 {
            let v = veronese_ideal(n, d, &t);
            if v.is_zero() {
                continue;
            }
            assert_eq!(ideal_height(&v, &t).unwrap(), n - t.gap_sum(d));
            veronese_cases += 1;
        }
    }
    pass(
        "5",
        &format!("{GRID_SIZE} cover checks and {veronese_cases} Veronese heights"),
    );
}

#[test]
fn criterion_6_cm_classification() {
    for (ideal, t) in grid() {
        // the classifying-witness scan on one side ...
        let witness_found = cm_witness_scan(ideal, t).unwrap().is_some();
        // ... and on the other, depth = dim in the effective ambient from
        // the projective-dimension formula, Auslander-Buchsbaum and the
        // height formula
        let effective_n = ideal.effective_n().unwrap();
        let pd_quotient = ideal
            .generators()
            .iter()
            .map(|u| u.max_index().unwrap() - t.gap_sum(u.degree()))
            .max()
            .unwrap();
        let height = ideal
            .generators()
            .iter()
            .map(|u| u.min_index().unwrap())
            .max()
            .unwrap();
        let depth = effective_n - pd_quotient;
        let dim = effective_n - height;
        assert!(depth <= dim);
        assert_eq!(
            witness_found,
            depth == dim,
            "CM mismatch for {:?} with t = {t}",
            ideal.generators()
        );
        let report = cm_report(ideal, t).unwrap();
        assert_eq!(report.is_cm, depth == dim);
        assert_eq!(report.is_cm, report.witness.is_some());
    }
    pass(
        "6",
        &format!("{GRID_SIZE} witness-vs-depth checks, zero mismatches"),
    );
}

#[test]
fn criterion_7_veronese_pure_resolution() {
    let mut formula_checks = 0usize;
    let mut oracle_checks = 0usize;
    for t in all_spread_vectors(4, 3) {
        let d = t.arity();
        for n in 1..=8u32 {
            let v = veronese_ideal(n, d, &t);
            if v.is_zero() {
                continue;
            }
            assert_eq!(
                veronese_betti(n, d, &t, 1).unwrap(),
                count_spread(n, d, &t),
                "beta_1 is the generator count"
            );
            let table = betti_table(&v, &t).unwrap();
            let pd = table.max_homological().unwrap();
            for i in 1..=(pd + 2) {
                assert_eq!(
                    veronese_betti(n, d, &t, i).unwrap(),
                    table.total(i - 1),
                    "pure-resolution formula vs graded table at n={n} d={d} t={t} i={i}"
                );
                formula_checks += 1;
            }
            if v.generators().len() <= DEFAULT_GENERATOR_CAP {
                let oracle = taylor_betti(&v).unwrap();
                for i in 1..=(pd + 2) {
                    assert_eq!(
                        veronese_betti(n, d, &t, i).unwrap(),
                        oracle.total(i),
                        "pure-resolution formula vs Taylor oracle at n={n} d={d} t={t} i={i}"
                    );
                    oracle_checks += 1;
                }
            }
        }
    }
    pass(
        "7",
        &format!("{formula_checks} formula checks, {oracle_checks} oracle checks within cap"),
    );
}

#[test]
fn criterion_8_poincare_consistency() {
    for (ideal, t) in grid() {
        let table = betti_table(ideal, t).unwrap();
        let poincare = poincare_series(ideal, t).unwrap();
        assert_eq!(poincare.constant_term(), BigUint::one());
        for (i, j, value) in table.iter() {
            let row = j - i;
            assert_eq!(
                poincare.coefficient(i + 1, row),
                value.clone(),
                "coefficient (i+1, row) vs table cell"
            );
        }
        for (y, z, value) in poincare.iter() {
            if y == 0 {
                assert_eq!(value, &BigUint::one());
                assert_eq!(z, 0);
            } else {
                assert_eq!(table.entry(y - 1, y - 1 + z), value.clone());
            }
        }
    }
    pass(
        "8",
        &format!("{GRID_SIZE} Poincare expansions, zero mismatches"),
    );
}

#[test]
fn criterion_9_extremal_betti() {
    for (ideal, t) in grid() {
        let table = betti_table(ideal, t).unwrap();
        let scanned = extremal_from_table(&table);
        let characterized = extremal_from_generators(ideal, t).unwrap();
        assert_eq!(scanned, characterized, "two extremal routes");
        let combined = extremal_betti(ideal, t).unwrap();
        assert_eq!(combined, scanned);
        assert!(!combined.is_empty(), "a nonzero table has a corner");

        for extremal in &combined {
            let bound = binomial(
                extremal.homological as i64 + extremal.degree as i64 - 1,
                extremal.degree as i64 - 1,
            );
            assert!(
                extremal.value <= bound && !extremal.value.is_zero(),
                "value bound C(k+l-1, l-1)"
            );
        }

        // row connectivity: a nonzero entry pulls the whole row prefix along
        for (i, j, _) in table.iter() {
            let row = j - i;
            for k in 0..i {
                assert!(
                    !table.entry(k, k + row).is_zero(),
                    "row {row} disconnected at {k} < {i}"
                );
            }
        }
    }
    pass(
        "9",
        &format!("{GRID_SIZE} tables: routes equal, bounds and connectivity hold"),
    );
}
