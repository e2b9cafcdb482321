//! Independent brute-force ground truth at desk scale: Betti numbers via
//! multigraded Taylor-complex strand homology with exact arithmetic,
//! minimal primes via minimal vertex covers, and definitional membership.
//!
//! Everything here works for arbitrary monomial ideals, not only Borel
//! ones, which is what makes it usable as an oracle for the closed
//! formulas elsewhere in the crate.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::resolution::{BettiTable, Subject};

/// Default bound on `|G(I)|`; the oracle enumerates all `2^m` generator
/// subsets, so this keeps worst-case work at desk scale.
pub const DEFAULT_GENERATOR_CAP: usize = 14;

/// Coefficient field for the homology ranks. Ranks over the rationals are
/// the default; the two-element field is exposed as a cross-check switch.
/// For ideals with linear quotients the Betti numbers are
/// characteristic-independent, so the two agree there; no such claim is
/// made for arbitrary inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleField {
    Rationals,
    Gf2,
}

/// Membership by divisibility against the minimal generators.
pub fn membership(w: &Monomial, ideal: &MonomialIdeal) -> bool {
    ideal.contains(w)
}

/// One multigraded strand of the Taylor complex after specializing the
/// variables to zero: the subsets of `G(I)` sharing a fixed subset-lcm,
/// graded by cardinality, with the restricted simplicial boundaries.
#[derive(Debug, Clone)]
pub struct TaylorStrand {
    /// The shared lcm as an exponent vector over `[1, n]`.
    pub multidegree: Vec<u32>,
    /// Chain rank per homological position (subset cardinality).
    pub dims: BTreeMap<usize, usize>,
    /// `boundaries[i]` is the matrix of `d_i : C_i -> C_{i-1}` in the
    /// subset bases, entries in {-1, 0, +1}; rows index `C_{i-1}`.
    pub boundaries: BTreeMap<usize, Vec<Vec<i8>>>,
}

impl TaylorStrand {
    /// Total degree of the multidegree.
    pub fn total_degree(&self) -> usize {
        self.multidegree.iter().map(|&e| e as usize).sum()
    }
}

/// Builds every strand of the specialized Taylor complex. Only subset-lcm
/// multidegrees occur, so the strand list is finite and complete.
pub fn taylor_strands(ideal: &MonomialIdeal, cap: usize) -> Result<Vec<TaylorStrand>> {
    let m = ideal.generators().len();
    if m > cap {
        return Err(Error::GeneratorCap { count: m, cap });
    }
    let n = ideal.n() as usize;
    let exps: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; n];
            for &i in g.indices() {
                e[i as usize - 1] += 1;
            }
            e
        })
        .collect();

    // lcm of every generator subset, by dynamic programming over masks
    let total = 1usize << m;
    let mut lcms: Vec<Vec<u32>> = Vec::with_capacity(total);
    lcms.push(vec![0u32; n]);
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut lcm = lcms[rest].clone();
        for (slot, &e) in lcm.iter_mut().zip(&exps[low]) {
            *slot = (*slot).max(e);
        }
        lcms.push(lcm);
    }

    let mut grouped: HashMap<&[u32], Vec<usize>> = HashMap::new();
    for (mask, lcm) in lcms.iter().enumerate() {
        grouped.entry(lcm.as_slice()).or_default().push(mask);
    }

    let mut strands = Vec::with_capacity(grouped.len());
    for (multidegree, masks) in grouped {
        let mut by_card: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &mask in &masks {
            by_card
                .entry(mask.count_ones() as usize)
                .or_default()
                .push(mask);
        }
        let mut position: HashMap<usize, usize> = HashMap::new();
        for basis in by_card.values() {
            for (col, &mask) in basis.iter().enumerate() {
                position.insert(mask, col);
            }
        }
        let dims: BTreeMap<usize, usize> = by_card
            .iter()
            .map(|(&card, basis)| (card, basis.len()))
            .collect();
        let mut boundaries = BTreeMap::new();
        for (&card, basis) in &by_card {
            if card == 0 {
                continue;
            }
            let rows = dims.get(&(card - 1)).copied().unwrap_or(0);
            let mut matrix = vec![vec![0i8; basis.len()]; rows];
            for (col, &mask) in basis.iter().enumerate() {
                let mut sign = 1i8;
                let mut bits = mask;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let face = mask & !(1usize << k);
                    // the face survives specialization iff it has the same lcm
                    if lcms[face] == lcms[mask] {
                        let row = position[&face];
                        matrix[row][col] = sign;
                    }
                    sign = -sign;
                }
            }
            boundaries.insert(card, matrix);
        }
        strands.push(TaylorStrand {
            multidegree: multidegree.to_vec(),
            dims,
            boundaries,
        });
    }
    // deterministic order for consumers
    strands.sort_by(|a, b| a.multidegree.cmp(&b.multidegree));
    Ok(strands)
}

/// Graded Betti numbers of `S/I` from the Taylor complex, with exact rank
/// computations over the rationals and the default generator cap.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    taylor_betti_with(ideal, OracleField::Rationals, DEFAULT_GENERATOR_CAP)
}

/// As [`taylor_betti`], with an explicit coefficient field and cap.
pub fn taylor_betti_with(
    ideal: &MonomialIdeal,
    field: OracleField,
    cap: usize,
) -> Result<BettiTable> {
    let strands = taylor_strands(ideal, cap)?;
    let mut table = BettiTable::new(Subject::Quotient);
    for strand in &strands {
        let degree = strand.total_degree();
        let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
        for (&card, matrix) in &strand.boundaries {
            ranks.insert(card, rank(matrix, field));
        }
        for (&card, &dim) in &strand.dims {
            let image_in = ranks.get(&card).copied().unwrap_or(0);
            let image_from_above = ranks.get(&(card + 1)).copied().unwrap_or(0);
            let homology = dim - image_in - image_from_above;
            if homology > 0 {
                table.add(card, degree, homology.into());
            }
        }
    }
    Ok(table)
}

/// All inclusion-minimal variable sets meeting every generator support.
/// Monomial primes are variable sets, and the minimal primes of a monomial
/// ideal are exactly the minimal covers; `height(I)` is the least cover
/// size. The unit ideal is contained in no prime, giving an empty list.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<BTreeSet<u32>>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let mut used: Vec<u32> = ideal
        .generators()
        .iter()
        .flat_map(Monomial::support)
        .collect();
    used.sort_unstable();
    used.dedup();
    let slot: HashMap<u32, usize> = used.iter().enumerate().map(|(k, &v)| (v, k)).collect();

    let mut supports: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .into_iter()
                .fold(0u64, |mask, i| mask | 1 << slot[&i])
        })
        .collect();
    supports.sort_unstable();
    supports.dedup();
    // a support containing another is covered automatically
    let supports: Vec<u64> = supports
        .iter()
        .filter(|&&s| !supports.iter().any(|&o| o != s && o & s == o))
        .copied()
        .collect();

    let covers = |mask: u64| supports.iter().all(|&s| s & mask != 0);
    let mut out = Vec::new();
    for mask in 1u64..(1 << used.len()) {
        if !covers(mask) {
            continue;
        }
        // minimal iff no single element can be dropped
        let mut minimal = true;
        let mut bits = mask;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            bits ^= low;
            if covers(mask ^ low) {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(
                (0..used.len())
                    .filter(|&k| mask & (1 << k) != 0)
                    .map(|k| used[k])
                    .collect::<BTreeSet<u32>>(),
            );
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

fn rank(matrix: &[Vec<i8>], field: OracleField) -> usize {
    match field {
        OracleField::Rationals => rank_integer(matrix).unwrap_or_else(|| rank_rational(matrix)),
        OracleField::Gf2 => rank_gf2(matrix),
    }
}

/// Exact rank over the rationals via integer elimination on unit pivots.
/// Boundary matrices almost always admit a +-1 pivot at every step; if one
/// is missing, or an intermediate value overflows, give up and let the
/// rational fallback finish the job.
fn rank_integer(matrix: &[Vec<i8>]) -> Option<usize> {
    let nrows = matrix.len();
    let ncols = if nrows == 0 { 0 } else { matrix[0].len() };
    let mut rows: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&e| e as i128).collect())
        .collect();
    let mut row_active = vec![true; nrows];
    let mut col_active = vec![true; ncols];
    let mut rank = 0;
    loop {
        let mut unit = None;
        let mut any_nonzero = false;
        'search: for (r, row) in rows.iter().enumerate() {
            if !row_active[r] {
                continue;
            }
            for c in 0..ncols {
                if !col_active[c] || row[c] == 0 {
                    continue;
                }
                any_nonzero = true;
                if row[c] == 1 || row[c] == -1 {
                    unit = Some((r, c));
                    break 'search;
                }
            }
        }
        if !any_nonzero {
            return Some(rank);
        }
        let (pr, pc) = unit?;
        rank += 1;
        row_active[pr] = false;
        col_active[pc] = false;
        let pivot_row = rows[pr].clone();
        let pivot = pivot_row[pc];
        for (r, row) in rows.iter_mut().enumerate() {
            if !row_active[r] || row[pc] == 0 {
                continue;
            }
            let factor = row[pc] * pivot; // pivot is +-1
            for c in 0..ncols {
                if !col_active[c] {
                    continue;
                }
                let delta = factor.checked_mul(pivot_row[c])?;
                row[c] = row[c].checked_sub(delta)?;
            }
            row[pc] = 0;
        }
    }
}

/// Dense Gaussian elimination over the rationals; always succeeds.
fn rank_rational(matrix: &[Vec<i8>]) -> usize {
    let nrows = matrix.len();
    let ncols = if nrows == 0 { 0 } else { matrix[0].len() };
    let mut rows: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|r| {
            r.iter()
                .map(|&e| BigRational::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut pivot_row = 0;
    for c in 0..ncols {
        let Some(found) = (pivot_row..nrows).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row][c].clone();
        let pivot_tail: Vec<BigRational> = rows[pivot_row][c..].to_vec();
        for row in rows.iter_mut().skip(pivot_row + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot;
            for (slot, pivot_value) in row[c..].iter_mut().zip(&pivot_tail) {
                *slot = &*slot - &factor * pivot_value;
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == nrows {
            break;
        }
    }
    rank
}

/// Rank over the two-element field with packed bit rows.
fn rank_gf2(matrix: &[Vec<i8>]) -> usize {
    let nrows = matrix.len();
    let ncols = if nrows == 0 { 0 } else { matrix[0].len() };
    let words = ncols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| {
            let mut packed = vec![0u64; words];
            for (c, &e) in r.iter().enumerate() {
                if e & 1 != 0 {
                    packed[c / 64] |= 1 << (c % 64);
                }
            }
            packed
        })
        .collect();
    let mut rank = 0;
    let mut pivot_row = 0;
    for c in 0..ncols {
        let word = c / 64;
        let bit = 1u64 << (c % 64);
        let Some(found) = (pivot_row..nrows).find(|&r| rows[r][word] & bit != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[word] & bit != 0 {
                for (slot, p) in row.iter_mut().zip(&pivot) {
                    *slot ^= p;
                }
            }
        }
        pivot_row += 1;
        rank += 1;
        if pivot_row == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{borel_closure, veronese_ideal};
    use crate::monomial::SpreadVector;
    use crate::resolution::betti_table;
    use num::bigint::BigUint;

    fn sv(entries: &[u32]) -> SpreadVector {
        SpreadVector::new(entries.to_vec()).unwrap()
    }

    fn mono(indices: &[u32]) -> Monomial {
        Monomial::from_indices(indices.to_vec())
    }

    fn ideal(gens: &[&[u32]], n: u32) -> MonomialIdeal {
        MonomialIdeal::from_generators(gens.iter().map(|g| mono(g)).collect(), n).unwrap()
    }

    fn big(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn membership_is_divisibility() {
        let i = ideal(&[&[1, 2]], 4);
        assert!(membership(&mono(&[1, 2, 4]), &i));
        assert!(!membership(&mono(&[2, 3]), &ideal(&[&[1, 2], &[1, 3]], 3)));
        for g in i.generators() {
            assert!(membership(g, &i));
        }
    }

    #[test]
    fn taylor_reproduces_the_worked_example() {
        let i = ideal(&[&[1, 2], &[1, 3], &[1, 4, 4]], 4);
        let quotient = taylor_betti(&i).unwrap();
        assert_eq!(quotient.entry(0, 0), big(1));
        assert_eq!(quotient.entry(1, 2), big(2));
        assert_eq!(quotient.entry(1, 3), big(1));
        assert_eq!(quotient.entry(2, 3), big(1));
        assert_eq!(quotient.entry(2, 4), big(2));
        assert_eq!(quotient.entry(3, 5), big(1));
        assert_eq!(
            quotient,
            betti_table(&i, &sv(&[1, 0])).unwrap().to_quotient()
        );
    }

    #[test]
    fn taylor_on_tiny_ideals() {
        // principal ideal: Koszul on one element
        let i = ideal(&[&[2, 2, 5]], 5);
        let table = taylor_betti(&i).unwrap();
        let entries: Vec<_> = table.iter().map(|(a, b, v)| (a, b, v.clone())).collect();
        assert_eq!(entries, vec![(0, 0, big(1)), (1, 3, big(1))]);

        // complete intersection on two coprime generators
        let i = ideal(&[&[1, 2], &[3, 4]], 4);
        let table = taylor_betti(&i).unwrap();
        assert_eq!(table.entry(1, 2), big(2));
        assert_eq!(table.entry(2, 4), big(1));

        // the zero ideal resolves S itself
        let table = taylor_betti(&MonomialIdeal::zero(3)).unwrap();
        let entries: Vec<_> = table.iter().map(|(a, b, v)| (a, b, v.clone())).collect();
        assert_eq!(entries, vec![(0, 0, big(1))]);

        // the unit ideal has the zero quotient
        let unit = ideal(&[&[]], 3);
        assert!(taylor_betti(&unit).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let t = sv(&[0]);
        let v = veronese_ideal(8, 2, &t);
        assert!(v.generators().len() > DEFAULT_GENERATOR_CAP);
        assert!(matches!(
            taylor_betti(&v),
            Err(Error::GeneratorCap {
                cap: DEFAULT_GENERATOR_CAP,
                ..
            })
        ));
    }

    #[test]
    fn boundaries_compose_to_zero() {
        let cases = vec![
            ideal(&[&[1, 2], &[1, 3], &[1, 4, 4]], 4),
            veronese_ideal(4, 2, &sv(&[1])),
            ideal(&[&[1, 1], &[1, 2], &[2, 2, 3]], 3),
        ];
        for i in cases {
            for strand in taylor_strands(&i, DEFAULT_GENERATOR_CAP).unwrap() {
                for (&card, upper) in &strand.boundaries {
                    let Some(lower) = strand.boundaries.get(&(card - 1)) else {
                        continue;
                    };
                    // lower * upper must vanish entry by entry
                    let cols = if upper.is_empty() { 0 } else { upper[0].len() };
                    for lower_row in lower {
                        for c in 0..cols {
                            let dot: i64 = lower_row
                                .iter()
                                .zip(upper)
                                .map(|(&l, upper_row)| l as i64 * upper_row[c] as i64)
                                .sum();
                            assert_eq!(dot, 0, "d o d != 0 in strand {:?}", strand.multidegree);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gf2_agrees_on_linear_quotient_ideals() {
        let cases = vec![
            (borel_closure(&[mono(&[2, 4])], &sv(&[2]), 4).unwrap(), 4),
            (veronese_ideal(4, 3, &sv(&[1, 0])), 4),
            (ideal(&[&[1, 2], &[1, 3], &[1, 4, 4]], 4), 4),
        ];
        for (i, _) in cases {
            let over_q = taylor_betti_with(&i, OracleField::Rationals, DEFAULT_GENERATOR_CAP);
            let over_f2 = taylor_betti_with(&i, OracleField::Gf2, DEFAULT_GENERATOR_CAP);
            assert_eq!(over_q.unwrap(), over_f2.unwrap());
        }
    }

    #[test]
    fn minimal_primes_examples() {
        let i = ideal(&[&[1, 2], &[1, 3], &[1, 4, 4]], 4);
        let primes = minimal_primes(&i).unwrap();
        assert_eq!(
            primes,
            vec![
                [1].into_iter().collect::<BTreeSet<u32>>(),
                [2, 3, 4].into_iter().collect(),
            ]
        );

        let triangle = veronese_ideal(3, 2, &sv(&[1]));
        let primes = minimal_primes(&triangle).unwrap();
        assert_eq!(
            primes,
            vec![
                [1, 2].into_iter().collect::<BTreeSet<u32>>(),
                [1, 3].into_iter().collect(),
                [2, 3].into_iter().collect(),
            ]
        );

        let principal = ideal(&[&[2, 2, 5]], 5);
        let primes = minimal_primes(&principal).unwrap();
        assert_eq!(
            primes,
            vec![
                [2].into_iter().collect::<BTreeSet<u32>>(),
                [5].into_iter().collect(),
            ]
        );

        assert!(minimal_primes(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn rank_routines_agree_on_small_matrices() {
        let matrices: Vec<Vec<Vec<i8>>> = vec![
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]],
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![1, 1], vec![1, -1], vec![1, 0]],
        ];
        let expected = [2, 0, 2];
        for (matrix, want) in matrices.iter().zip(expected) {
            assert_eq!(rank_integer(matrix).unwrap(), want);
            assert_eq!(rank_rational(matrix), want);
        }
        // a matrix with no unit pivot forces the rational fallback
        let awkward: Vec<Vec<i8>> = vec![vec![2, 3], vec![4, 6]];
        assert!(rank_integer(&awkward).is_none());
        assert_eq!(rank_rational(&awkward), 1);
    }
}
