//! Monomials as nondecreasing index sequences, the vector-spread predicate,
//! spread supports, the shifting bijections and enumeration of spread
//! monomials.
//!
//! A monomial `x_{j_1} x_{j_2} ... x_{j_l}` with `1 <= j_1 <= ... <= j_l` is
//! stored as its index sequence; the empty sequence is the unit monomial.
//! All formulas on gaps and supports in this crate are stated on index
//! sequences, so that is the primary representation; exponent-vector views
//! are derived on demand.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigUint;
use num::traits::Zero;

use crate::error::{Error, Result};

/// Binomial coefficient `C(a, k)` with the convention that it is zero
/// whenever `a < k` or `k < 0`, so counting formulas degenerate gracefully.
pub fn binomial(a: i64, k: i64) -> BigUint {
    if k < 0 || a < k {
        return BigUint::zero();
    }
    num::integer::binomial(BigUint::from(a as u64), BigUint::from(k as u64))
}

/// The tuple `t = (t_1, ..., t_{d-1})` of nonnegative gap requirements.
///
/// `d = entries.len() + 1` is the spread arity: monomials of degree larger
/// than `d` are never t-spread.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpreadVector {
    entries: Vec<u32>,
}

impl SpreadVector {
    /// Builds a spread vector; at least one entry is required (`d >= 2`).
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySpread);
        }
        Ok(SpreadVector { entries })
    }

    /// The all-zero vector of the same arity; every monomial of degree
    /// `<= d` is 0-spread.
    pub fn zero_like(&self) -> SpreadVector {
        SpreadVector {
            entries: vec![0; self.entries.len()],
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The arity `d`: one more than the number of entries.
    pub fn arity(&self) -> usize {
        self.entries.len() + 1
    }

    /// `gapSum(l) = t_1 + ... + t_{l-1}` for `0 <= l <= d`; `gapSum(1) = 0`.
    pub fn gap_sum(&self, l: usize) -> u32 {
        debug_assert!(l <= self.arity());
        self.entries[..l.saturating_sub(1)].iter().sum()
    }
}

impl fmt::Display for SpreadVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, t) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// A monomial as a nondecreasing sequence of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// The unit monomial `1`.
    pub fn unit() -> Self {
        Monomial {
            indices: Vec::new(),
        }
    }

    /// The variable `x_i`; `i >= 1`.
    pub fn variable(i: u32) -> Self {
        debug_assert!(i >= 1);
        Monomial { indices: vec![i] }
    }

    /// Builds a monomial from indices in any order; they are sorted.
    /// Indices must be positive.
    pub fn from_indices(mut indices: Vec<u32>) -> Self {
        debug_assert!(indices.iter().all(|&i| i >= 1));
        indices.sort_unstable();
        Monomial { indices }
    }

    /// Builds a monomial from an exponent vector `(a_1, ..., a_n)`.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut indices = Vec::new();
        for (pos, &a) in exponents.iter().enumerate() {
            for _ in 0..a {
                indices.push(pos as u32 + 1);
            }
        }
        Monomial { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn is_unit(&self) -> bool {
        self.indices.is_empty()
    }

    /// `supp(u)`: the set of distinct indices.
    pub fn support(&self) -> BTreeSet<u32> {
        self.indices.iter().copied().collect()
    }

    /// `min(u)`; `None` for the unit monomial.
    pub fn min_index(&self) -> Option<u32> {
        self.indices.first().copied()
    }

    /// `max(u)`; `None` for the unit monomial.
    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    /// Exponent view: index -> multiplicity, omitting zeros.
    pub fn exponents(&self) -> BTreeMap<u32, u32> {
        let mut map = BTreeMap::new();
        for &i in &self.indices {
            *map.entry(i).or_insert(0) += 1;
        }
        map
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let theirs = other.exponents();
        self.exponents()
            .iter()
            .all(|(i, a)| theirs.get(i).copied().unwrap_or(0) >= *a)
    }

    /// Multiset union of the index sequences (monomial product).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        Monomial::from_indices(indices)
    }

    /// Exact division `self / other`; `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exponents();
        for (i, a) in other.exponents() {
            let e = exps.entry(i).or_insert(0);
            if *e < a {
                return None;
            }
            *e -= a;
        }
        let mut indices = Vec::with_capacity(self.degree() - other.degree());
        for (i, a) in exps {
            for _ in 0..a {
                indices.push(i);
            }
        }
        Some(Monomial { indices })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let theirs = other.exponents();
        let mut indices = Vec::new();
        for (i, a) in self.exponents() {
            let b = theirs.get(&i).copied().unwrap_or(0);
            for _ in 0..a.min(b) {
                indices.push(i);
            }
        }
        Monomial { indices }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exponents();
        for (i, b) in other.exponents() {
            let e = exps.entry(i).or_insert(0);
            *e = (*e).max(b);
        }
        let mut indices = Vec::new();
        for (i, a) in exps {
            for _ in 0..a {
                indices.push(i);
            }
        }
        Monomial { indices }
    }

    /// True iff the monomial is t-spread: degree at most `d` and
    /// `j_{i+1} - j_i >= t_i` for every consecutive pair of indices.
    /// Monomials of degree 0 or 1 are always t-spread.
    pub fn is_spread(&self, t: &SpreadVector) -> bool {
        if self.degree() > t.arity() {
            return false;
        }
        self.indices
            .windows(2)
            .zip(t.entries())
            .all(|(w, &gap)| w[1] - w[0] >= gap)
    }

    fn ensure_spread(&self, t: &SpreadVector) -> Result<()> {
        if self.is_spread(t) {
            Ok(())
        } else {
            Err(Error::NotSpread {
                monomial: self.to_string(),
                spread: t.to_string(),
            })
        }
    }

    /// The t-spread support `union over i < l of [j_i, j_i + t_i - 1]`;
    /// entries with `t_i = 0` contribute nothing. Requires a t-spread input.
    pub fn spread_support(&self, t: &SpreadVector) -> Result<BTreeSet<u32>> {
        self.ensure_spread(t)?;
        let mut support = BTreeSet::new();
        for (k, &j) in self
            .indices
            .iter()
            .enumerate()
            .take(self.degree().saturating_sub(1))
        {
            for offset in 0..t.entries()[k] {
                support.insert(j + offset);
            }
        }
        Ok(support)
    }

    /// The shift `sigma_{0,t}`: index `k` of the output is
    /// `j_k + (t_1 + ... + t_{k-1})`. Defined for degrees up to `d`; maps
    /// arbitrary monomials onto t-spread ones.
    pub fn shift_to_spread(&self, t: &SpreadVector) -> Result<Monomial> {
        if self.degree() > t.arity() {
            return Err(Error::DegreeExceedsArity {
                degree: self.degree(),
                arity: t.arity(),
            });
        }
        let indices = self
            .indices
            .iter()
            .enumerate()
            .map(|(k, &j)| j + t.gap_sum(k + 1))
            .collect();
        Ok(Monomial { indices })
    }

    /// The inverse shift `sigma_{t,0}`: index `k` of the output is
    /// `j_k - (t_1 + ... + t_{k-1})`. Requires a t-spread input; round-trips
    /// with [`Monomial::shift_to_spread`] on the valid domains.
    pub fn shift_from_spread(&self, t: &SpreadVector) -> Result<Monomial> {
        self.ensure_spread(t)?;
        let indices = self
            .indices
            .iter()
            .enumerate()
            .map(|(k, &j)| j - t.gap_sum(k + 1))
            .collect();
        Ok(Monomial { indices })
    }

    /// Parses the grammar `term ("*" term)*` with
    /// `term := "x" INT ("^" INT)? | "1"`. Exponents of equal indices are
    /// summed; indices are validated against `[1, n]`; exponent 0 is
    /// rejected.
    pub fn parse(text: &str, n: u32) -> Result<Monomial> {
        Parser::new(text, n).run()
    }
}

impl fmt::Display for Monomial {
    /// Canonical rendering: indices ascending with folded exponents, e.g.
    /// `x1*x4^2`; the unit renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, a) in self.exponents() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{a}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: u32,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n: u32) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            n,
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".to_string(),
            })
    }

    fn term(&mut self, exps: &mut BTreeMap<u32, u64>) -> Result<()> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(())
            }
            Some(b'x') => {
                self.pos += 1;
                let at = self.pos;
                let index = self.integer()?;
                if index < 1 || index > self.n as u64 {
                    return Err(Error::IndexOutOfRange {
                        index: index.min(u32::MAX as u64) as u32,
                        n: self.n,
                    });
                }
                let mut exponent = 1u64;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exponent = self.integer()?;
                    if exponent == 0 {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "exponent 0 is not allowed".to_string(),
                        });
                    }
                }
                *exps.entry(index as u32).or_insert(0) += exponent;
                Ok(())
            }
            _ => Err(self.error("expected 'x<index>' or '1'")),
        }
    }

    fn run(mut self) -> Result<Monomial> {
        let mut exps: BTreeMap<u32, u64> = BTreeMap::new();
        self.skip_ws();
        self.term(&mut exps)?;
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    self.term(&mut exps)?;
                }
                Some(_) => return Err(self.error("expected '*' or end of input")),
            }
        }
        let mut indices = Vec::new();
        for (i, a) in exps {
            for _ in 0..a {
                indices.push(i);
            }
        }
        Ok(Monomial { indices })
    }
}

/// All t-spread monomials of degree `l` in `n` variables, listed in pure-lex
/// descending order (equivalently: index sequences in ascending
/// lexicographic order). Degrees above the spread arity give the empty list.
pub fn enumerate_spread(n: u32, l: usize, t: &SpreadVector) -> Vec<Monomial> {
    if l > t.arity() {
        return Vec::new();
    }
    if l == 0 {
        return vec![Monomial::unit()];
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(l);
    descend(n, l, t, 1, &mut stack, &mut out);
    out
}

fn descend(
    n: u32,
    l: usize,
    t: &SpreadVector,
    lowest: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if stack.len() == l {
        out.push(Monomial {
            indices: stack.clone(),
        });
        return;
    }
    // Leave room for the remaining forced gaps.
    let remaining: u32 = t.entries()[stack.len()..l - 1].iter().sum();
    let mut j = lowest;
    while j + remaining <= n {
        stack.push(j);
        let next_gap = if stack.len() < l {
            t.entries()[stack.len() - 1]
        } else {
            0
        };
        descend(n, l, t, j + next_gap, stack, out);
        stack.pop();
        j += 1;
    }
}

/// `|M_{n,l,t}| = C(n + (l-1) - gapSum(l), l)`; always equals the length of
/// [`enumerate_spread`] on the same arguments.
pub fn count_spread(n: u32, l: usize, t: &SpreadVector) -> BigUint {
    if l > t.arity() {
        return BigUint::zero();
    }
    binomial(n as i64 + l as i64 - 1 - t.gap_sum(l) as i64, l as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(entries: &[u32]) -> SpreadVector {
        SpreadVector::new(entries.to_vec()).unwrap()
    }

    fn mono(indices: &[u32]) -> Monomial {
        Monomial::from_indices(indices.to_vec())
    }

    #[test]
    fn parse_folds_and_sorts() {
        assert_eq!(Monomial::parse("x1*x4^2", 4).unwrap(), mono(&[1, 4, 4]));
        assert_eq!(Monomial::parse("1", 3).unwrap(), Monomial::unit());
        assert_eq!(Monomial::parse("x2*x1", 2).unwrap(), mono(&[1, 2]));
        assert_eq!(Monomial::parse("x2*x2^2", 3).unwrap(), mono(&[2, 2, 2]));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Monomial::parse("x1*", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Monomial::parse("y2", 3),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            Monomial::parse("x5", 3),
            Err(Error::IndexOutOfRange { index: 5, n: 3 })
        ));
        assert!(matches!(
            Monomial::parse("x0", 3),
            Err(Error::IndexOutOfRange { index: 0, n: 3 })
        ));
        assert!(matches!(
            Monomial::parse("x2^0", 3),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn rendering_round_trips() {
        for text in ["1", "x1", "x1*x4^2", "x2^3", "x1*x2*x3"] {
            let m = Monomial::parse(text, 6).unwrap();
            assert_eq!(m.to_string(), text);
        }
    }

    #[test]
    fn spread_predicate_matches_gap_condition() {
        let u = mono(&[1, 3, 3, 5]);
        assert!(u.is_spread(&sv(&[2, 0, 1])));
        assert!(!u.is_spread(&sv(&[2, 1, 1])));
        assert!(Monomial::unit().is_spread(&sv(&[4])));
        assert!(mono(&[7]).is_spread(&sv(&[9])));
        // degree above the arity is never spread
        assert!(!mono(&[1, 3, 5]).is_spread(&sv(&[2])));
        // every monomial of degree <= d is 0-spread
        assert!(mono(&[2, 2, 2]).is_spread(&sv(&[0, 0])));
    }

    #[test]
    fn spread_support_examples() {
        let u = mono(&[1, 3, 3, 5]);
        let support = u.spread_support(&sv(&[2, 0, 1])).unwrap();
        assert_eq!(support, [1, 2, 3].into_iter().collect());

        let zero = sv(&[0, 0, 0]);
        assert!(u.spread_support(&zero).unwrap().is_empty());

        // for squarefree u and t = 1, the spread support is supp(u / x_max)
        let v = mono(&[1, 2, 4]);
        let support = v.spread_support(&sv(&[1, 1])).unwrap();
        assert_eq!(support, [1, 2].into_iter().collect());

        assert!(mono(&[2, 3]).spread_support(&sv(&[2])).is_err());
    }

    #[test]
    fn shifts_match_the_gap_sums() {
        let t = sv(&[2, 1]);
        assert_eq!(
            mono(&[1, 2, 3]).shift_to_spread(&t).unwrap(),
            mono(&[1, 4, 6])
        );
        assert_eq!(
            mono(&[1, 4, 6]).shift_from_spread(&t).unwrap(),
            mono(&[1, 2, 3])
        );
        assert_eq!(mono(&[5]).shift_to_spread(&t).unwrap(), mono(&[5]));
        assert_eq!(
            Monomial::unit().shift_to_spread(&t).unwrap(),
            Monomial::unit()
        );
        // non-squarefree images are fine: 0-spread allows repeats
        assert_eq!(
            mono(&[2, 4]).shift_from_spread(&sv(&[2])).unwrap(),
            mono(&[2, 2])
        );
        assert_eq!(mono(&[7]).shift_from_spread(&sv(&[3])).unwrap(), mono(&[7]));
        assert!(matches!(
            mono(&[1, 2, 3]).shift_to_spread(&sv(&[2])),
            Err(Error::DegreeExceedsArity {
                degree: 3,
                arity: 2
            })
        ));
        assert!(mono(&[1, 2]).shift_from_spread(&sv(&[2])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_spread(3, 2, &sv(&[1])),
            vec![mono(&[1, 2]), mono(&[1, 3]), mono(&[2, 3])]
        );
        assert_eq!(
            enumerate_spread(4, 2, &sv(&[2])),
            vec![mono(&[1, 3]), mono(&[1, 4]), mono(&[2, 4])]
        );
        assert!(enumerate_spread(2, 2, &sv(&[2])).is_empty());
        assert_eq!(enumerate_spread(5, 0, &sv(&[1])), vec![Monomial::unit()]);
        // degree above arity: empty, not an error
        assert!(enumerate_spread(5, 3, &sv(&[1])).is_empty());
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_spread(6, 3, &sv(&[2, 1])), BigUint::from(10u32));
        assert_eq!(count_spread(4, 2, &sv(&[0])), BigUint::from(10u32));
        assert_eq!(count_spread(9, 0, &sv(&[3])), BigUint::from(1u32));
        assert_eq!(count_spread(2, 2, &sv(&[2])), BigUint::zero());
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 3), BigUint::from(10u32));
        assert_eq!(binomial(1, 2), BigUint::zero());
        assert_eq!(binomial(-2, 1), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        /// sigma round-trip: any monomial of degree <= d in the shrunken
        /// ambient maps onto a t-spread monomial and back.
        #[test]
        fn shift_round_trip(
            entries in proptest::collection::vec(0u32..=3, 1..=4),
            raw in proptest::collection::vec(1u32..=8, 0..=5),
        ) {
            let t = SpreadVector::new(entries).unwrap();
            let mut raw = raw;
            raw.truncate(t.arity());
            let u = Monomial::from_indices(raw);
            let image = u.shift_to_spread(&t).unwrap();
            prop_assert!(image.is_spread(&t));
            prop_assert_eq!(image.shift_from_spread(&t).unwrap(), u);
        }

        /// Enumeration agrees with the counting formula and is the bijective
        /// image of the 0-spread enumeration under the shift.
        #[test]
        fn enumeration_count_and_bijection(
            n in 1u32..=9,
            entries in proptest::collection::vec(0u32..=3, 1..=3),
            l_pick in 0usize..=4,
        ) {
            let t = SpreadVector::new(entries).unwrap();
            let l = l_pick.min(t.arity());
            let listed = enumerate_spread(n, l, &t);
            prop_assert_eq!(BigUint::from(listed.len()), count_spread(n, l, &t));
            for u in &listed {
                prop_assert!(u.is_spread(&t));
            }
            let shrunk = n.saturating_sub(t.gap_sum(l));
            let preimages = enumerate_spread(shrunk, l, &t.zero_like());
            let mapped: Vec<_> = preimages
                .iter()
                .map(|u| u.shift_to_spread(&t).unwrap())
                .collect();
            prop_assert_eq!(mapped, listed);
        }

        /// The complement count used by the Betti formula:
        /// |[max(u)-1] \ supp_t(u)| = max(u) - 1 - gapSum(deg u).
        #[test]
        fn support_complement_cardinality(
            n in 2u32..=10,
            entries in proptest::collection::vec(0u32..=3, 1..=3),
            l_pick in 1usize..=4,
            sample in 0usize..1000,
        ) {
            let t = SpreadVector::new(entries).unwrap();
            let l = l_pick.min(t.arity());
            let listed = enumerate_spread(n, l, &t);
            prop_assume!(!listed.is_empty());
            let u = &listed[sample % listed.len()];
            let support = u.spread_support(&t).unwrap();
            let max = u.max_index().unwrap();
            prop_assert!(support.iter().all(|&i| i >= u.min_index().unwrap() && i < max));
            let complement = (1..max).filter(|i| !support.contains(i)).count() as u32;
            prop_assert_eq!(complement, max - 1 - t.gap_sum(l));
        }
    }
}
