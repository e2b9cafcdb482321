//! Linear-quotient data and the closed-form homological invariants of
//! t-spread strongly stable ideals: graded Betti tables, the bigraded
//! Poincare polynomial, regularity, projective dimension and extremal Betti
//! numbers.
//!
//! All arithmetic is arbitrary-precision integer; nothing here touches
//! floating point.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigUint;
use num::traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{ensure_spread_borel, MonomialIdeal};
use crate::monomial::{binomial, Monomial, SpreadVector};

/// Whose resolution a Betti table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    /// The ideal `I`.
    Ideal,
    /// The quotient `S/I`; `beta_{i,j}(S/I) = beta_{i-1,j}(I)` for `i >= 1`
    /// and `beta_{0,0}(S/I) = 1`.
    Quotient,
}

/// A graded Betti table: nonzero entries keyed by
/// (homological degree `i`, internal degree `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl BettiTable {
    pub fn new(subject: Subject) -> Self {
        BettiTable {
            subject,
            entries: BTreeMap::new(),
        }
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    /// Accumulates into entry `(i, j)`; zeros are never stored.
    pub fn add(&mut self, i: usize, j: usize, value: BigUint) {
        if !value.is_zero() {
            *self.entries.entry((i, j)).or_insert_with(BigUint::zero) += value;
        }
    }

    /// `beta_{i,j}`, zero when absent.
    pub fn entry(&self, i: usize, j: usize) -> BigUint {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Iterates nonzero entries in `(i, j)`-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `beta_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> BigUint {
        self.entries
            .iter()
            .filter(|(&(h, _), _)| h == i)
            .fold(BigUint::zero(), |acc, (_, v)| acc + v)
    }

    /// Largest homological degree with a nonzero entry.
    pub fn max_homological(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Largest row label `j - i` with a nonzero entry.
    pub fn max_row(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// The `S/I` view of an ideal table: shift the homological degree up by
    /// one and add the rank-one degree-zero start.
    pub fn to_quotient(&self) -> BettiTable {
        debug_assert_eq!(self.subject, Subject::Ideal);
        let mut table = BettiTable::new(Subject::Quotient);
        table.add(0, 0, BigUint::one());
        for (i, j, v) in self.iter() {
            table.add(i + 1, j, v.clone());
        }
        table
    }

    /// Text rendering in the usual computer-algebra layout: columns are
    /// homological degrees, rows are labelled by `j - i`, a `total:` row
    /// comes first and `-` marks zeros.
    pub fn render_text(&self) -> String {
        if self.is_empty() {
            return "empty Betti table\n".to_string();
        }
        let max_i = self.max_homological().unwrap();
        let rows_min = self.entries.keys().map(|&(i, j)| j - i).min().unwrap();
        let rows_max = self.max_row().unwrap();

        let mut labels = vec![String::new(), "total:".to_string()];
        for r in rows_min..=rows_max {
            labels.push(format!("{r}:"));
        }
        let mut columns: Vec<Vec<String>> = Vec::new();
        for i in 0..=max_i {
            let mut col = vec![i.to_string(), self.total(i).to_string()];
            for r in rows_min..=rows_max {
                let v = self.entry(i, i + r);
                col.push(if v.is_zero() {
                    "-".to_string()
                } else {
                    v.to_string()
                });
            }
            columns.push(col);
        }

        let label_width = labels.iter().map(String::len).max().unwrap();
        let widths: Vec<usize> = columns
            .iter()
            .map(|col| col.iter().map(String::len).max().unwrap())
            .collect();
        let mut out = String::new();
        for row in 0..labels.len() {
            out.push_str(&format!("{:>label_width$}", labels[row]));
            for (col, width) in columns.iter().zip(&widths) {
                out.push_str(&format!("  {:>width$}", col[row]));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    /// Structured form: `{"subject": ..., "entries": [{i, j, value}, ...]}`
    /// with values as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            i: usize,
            j: usize,
            value: &'a str,
        }
        use serde::ser::SerializeStruct;
        let rendered: Vec<(usize, usize, String)> =
            self.iter().map(|(i, j, v)| (i, j, v.to_string())).collect();
        let mut state = serializer.serialize_struct("BettiTable", 2)?;
        state.serialize_field("subject", &self.subject)?;
        state.serialize_field(
            "entries",
            &rendered
                .iter()
                .map(|(i, j, value)| Entry {
                    i: *i,
                    j: *j,
                    value,
                })
                .collect::<Vec<_>>(),
        )?;
        state.end()
    }
}

/// The bigraded Poincare polynomial of `S/I` in the linear-quotients form:
/// `P(y, z) = 1 + sum over generators of (1+y)^{max(u)-1-gapSum(deg u)} y
/// z^{deg u}`. The coefficient of `y^{i+1} z^j` is the Betti number of the
/// ideal in homological degree `i` and generator degree `j` (the table cell
/// in column `i`, row `j`), so `z` tracks rows rather than internal degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincarePolynomial {
    coefficients: BTreeMap<(usize, usize), BigUint>,
}

impl PoincarePolynomial {
    /// Coefficient of `y^i z^j`, zero when absent.
    pub fn coefficient(&self, y: usize, z: usize) -> BigUint {
        self.coefficients.get(&(y, z)).cloned().unwrap_or_default()
    }

    /// Iterates nonzero coefficients in `(y, z)`-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.coefficients.iter().map(|(&(y, z), v)| (y, z, v))
    }

    /// Evaluation at `y = 0`: only the constant term survives.
    pub fn constant_term(&self) -> BigUint {
        self.coefficient(0, 0)
    }
}

impl fmt::Display for PoincarePolynomial {
    /// Renders grouped by `z`-power, e.g.
    /// `1 + (2y + y^2)z^2 + (y + 2y^2 + y^3)z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut by_z: BTreeMap<usize, Vec<(usize, &BigUint)>> = BTreeMap::new();
        for (y, z, v) in self.iter() {
            by_z.entry(z).or_default().push((y, v));
        }
        let mut first = true;
        for (z, terms) in by_z {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut group = String::new();
            for (idx, (y, v)) in terms.iter().enumerate() {
                if idx > 0 {
                    group.push_str(" + ");
                }
                let coeff = if (*v).is_one() && *y > 0 {
                    String::new()
                } else {
                    v.to_string()
                };
                group.push_str(&coeff);
                match y {
                    0 => {}
                    1 => group.push('y'),
                    _ => group.push_str(&format!("y^{y}")),
                }
            }
            if z == 0 {
                write!(f, "{group}")?;
            } else {
                if terms.len() > 1 {
                    group = format!("({group})");
                }
                match z {
                    1 => write!(f, "{group}z")?,
                    _ => write!(f, "{group}z^{z}")?,
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for PoincarePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            y: usize,
            z: usize,
            value: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.coefficients.len()))?;
        for (y, z, v) in self.iter() {
            seq.serialize_element(&Term {
                y,
                z,
                value: v.to_string(),
            })?;
        }
        seq.end()
    }
}

/// The linear-quotient order (pure-lex descending generators) together with
/// the colon variable sets `set(u_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientData {
    /// `u_1 > u_2 > ... > u_m`.
    pub order: Vec<Monomial>,
    /// `set(u_1)` is empty; `set(u_k) = [max(u_k)-1] \ supp_t(u_k)` for
    /// `k >= 2`.
    pub sets: Vec<BTreeSet<u32>>,
}

/// `[max(u)-1] \ supp_t(u)`, the closed form of the colon variable set.
pub fn formula_set(u: &Monomial, t: &SpreadVector) -> Result<BTreeSet<u32>> {
    let support = u.spread_support(t)?;
    let max = u.max_index().unwrap_or(0);
    Ok((1..max).filter(|i| !support.contains(i)).collect())
}

/// Linear-quotient sets for a t-spread strongly stable ideal by the closed
/// formula. `set(u_1)` is empty by definition of the colon; for the
/// pure-lex largest generator the closed formula gives the empty set as
/// well, so the two readings agree on valid inputs (property-tested).
pub fn linear_quotient_sets(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<LinearQuotientData> {
    ensure_spread_borel(ideal, t)?;
    let order = ideal.generators().to_vec();
    let mut sets = Vec::with_capacity(order.len());
    for (k, u) in order.iter().enumerate() {
        if k == 0 {
            sets.push(BTreeSet::new());
        } else {
            sets.push(formula_set(u, t)?);
        }
    }
    Ok(LinearQuotientData { order, sets })
}

/// Result of computing one colon ideal `(u_1, ..., u_{k-1}) : u_k` from its
/// generator description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonQuotient {
    /// Indices of the single-variable minimal generators.
    pub variables: BTreeSet<u32>,
    /// True iff every minimal generator of the colon is a single variable
    /// (the linear-quotients certificate at this step).
    pub is_variable_generated: bool,
}

/// Computes `(u_1, ..., u_{k-1}) : u_k` directly by minimalizing
/// `{u_s / gcd(u_s, u_k)}`. Works for arbitrary monomial ideals; for
/// t-spread strongly stable ones the certificate is always true and the
/// variable set matches [`linear_quotient_sets`]. `k` is 1-based,
/// `2 <= k <= m`.
pub fn colon_set_oracle(ideal: &MonomialIdeal, k: usize) -> Result<ColonQuotient> {
    let m = ideal.generators().len();
    if k < 2 || k > m {
        return Err(Error::ColonIndex { k, m });
    }
    let u_k = &ideal.generators()[k - 1];
    let raw: Vec<Monomial> = ideal.generators()[..k - 1]
        .iter()
        .map(|u_s| u_s.checked_div(&u_s.gcd(u_k)).expect("gcd always divides"))
        .collect();
    let colon = MonomialIdeal::from_generators(raw, ideal.n())?;
    let variables = colon
        .generators()
        .iter()
        .filter(|g| g.degree() == 1)
        .map(|g| g.min_index().unwrap())
        .collect();
    let is_variable_generated = colon.generators().iter().all(|g| g.degree() == 1);
    Ok(ColonQuotient {
        variables,
        is_variable_generated,
    })
}

fn ensure_invariants_defined(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// The exponent `max(u) - 1 - gapSum(deg u)` driving every closed formula.
fn betti_exponent(u: &Monomial, t: &SpreadVector) -> Result<i64> {
    if u.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(u.max_index().unwrap() as i64 - 1 - t.gap_sum(u.degree()) as i64)
}

/// Graded Betti numbers of a t-spread strongly stable ideal by the closed
/// formula: `beta_{i,i+j}(I) = sum over u in G(I)_j of
/// C(max(u)-1-gapSum(j), i)`. The zero ideal yields an empty table.
pub fn betti_table(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<BettiTable> {
    ensure_spread_borel(ideal, t)?;
    if ideal.is_zero() {
        return Ok(BettiTable::new(Subject::Ideal));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut table = BettiTable::new(Subject::Ideal);
    for u in ideal.generators() {
        let e = betti_exponent(u, t)?;
        for i in 0..=e.max(0) as usize {
            table.add(i, i + u.degree(), binomial(e, i as i64));
        }
    }
    Ok(table)
}

/// Second route to the same table: materialize the colon variable sets and
/// sum `C(|set(u)|, i)`. Kept separate from [`betti_table`] so the two code
/// paths can be compared bit-for-bit.
pub fn betti_table_via_sets(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<BettiTable> {
    ensure_spread_borel(ideal, t)?;
    if ideal.is_zero() {
        return Ok(BettiTable::new(Subject::Ideal));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut table = BettiTable::new(Subject::Ideal);
    for u in ideal.generators() {
        let set = formula_set(u, t)?;
        for i in 0..=set.len() {
            table.add(i, i + u.degree(), binomial(set.len() as i64, i as i64));
        }
    }
    Ok(table)
}

/// The bigraded Poincare polynomial of `S/I`:
/// `1 + sum_u (1+y)^{max(u)-1-gapSum(deg u)} y z^{deg u}`, expanded.
pub fn poincare_series(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<PoincarePolynomial> {
    ensure_spread_borel(ideal, t)?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut coefficients = BTreeMap::new();
    coefficients.insert((0, 0), BigUint::one());
    for u in ideal.generators() {
        let e = betti_exponent(u, t)?;
        for i in 0..=e.max(0) as usize {
            let c = binomial(e, i as i64);
            if !c.is_zero() {
                *coefficients
                    .entry((i + 1, u.degree()))
                    .or_insert_with(BigUint::zero) += c;
            }
        }
    }
    Ok(PoincarePolynomial { coefficients })
}

/// Regularity and projective dimension of the ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HomologicalInvariants {
    pub regularity: usize,
    pub projective_dimension: usize,
}

/// `reg(I) = max deg(u)` and `pd(I) = max (max(u) - 1 - gapSum(deg u))`
/// over the minimal generators; both agree with the extremes of the Betti
/// table.
pub fn homological_invariants(
    ideal: &MonomialIdeal,
    t: &SpreadVector,
) -> Result<HomologicalInvariants> {
    ensure_spread_borel(ideal, t)?;
    ensure_invariants_defined(ideal)?;
    let regularity = ideal
        .generators()
        .iter()
        .map(Monomial::degree)
        .max()
        .unwrap();
    let projective_dimension = ideal
        .generators()
        .iter()
        .map(|u| betti_exponent(u, t))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap() as usize;
    Ok(HomologicalInvariants {
        regularity,
        projective_dimension,
    })
}

/// One extremal Betti number: a nonzero corner `beta_{k,k+degree}` of the
/// table, with nothing nonzero to its lower right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalBettiNumber {
    /// Homological degree `k`.
    pub homological: usize,
    /// Row label (generator degree) `l`; the internal degree is `k + l`.
    pub degree: usize,
    pub value: BigUint,
}

/// Extremal Betti numbers read off a table of subject `Ideal`: entry
/// `(k, k+l)` is extremal iff it is nonzero, the rest of row `l` above `k`
/// vanishes and the rest of column `k` below `l` vanishes. Returned in
/// descending row order.
pub fn extremal_from_table(table: &BettiTable) -> Vec<ExtremalBettiNumber> {
    let mut out = Vec::new();
    for (k, j, value) in table.iter() {
        let l = j - k;
        let row_clear = table.iter().all(|(i, jj, _)| jj - i != l || i <= k);
        let col_clear = table.iter().all(|(i, jj, _)| i != k || jj - i <= l);
        if row_clear && col_clear {
            out.push(ExtremalBettiNumber {
                homological: k,
                degree: l,
                value: value.clone(),
            });
        }
    }
    out.sort_by_key(|e| std::cmp::Reverse(e.degree));
    out
}

/// Extremal Betti numbers straight from the generators: row `l` contributes
/// the corner `k_l = max{max(u) : u in G(I)_l} - 1 - gapSum(l)` exactly when
/// every higher row has a strictly smaller corner; the value is the number
/// of generators of degree `l` attaining the maximum.
pub fn extremal_from_generators(
    ideal: &MonomialIdeal,
    t: &SpreadVector,
) -> Result<Vec<ExtremalBettiNumber>> {
    ensure_spread_borel(ideal, t)?;
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let degrees = ideal.generator_degrees();
    let corners: Vec<(usize, i64)> = degrees
        .iter()
        .map(|&l| {
            let top = ideal
                .generators_of_degree(l)
                .map(|u| u.max_index().unwrap())
                .max()
                .unwrap();
            (l, top as i64 - 1 - t.gap_sum(l) as i64)
        })
        .collect();
    let mut out = Vec::new();
    for (idx, &(l, k)) in corners.iter().enumerate() {
        if corners[idx + 1..].iter().all(|&(_, later)| later < k) {
            let top = (k + 1 + t.gap_sum(l) as i64) as u32;
            let value = ideal
                .generators_of_degree(l)
                .filter(|u| u.max_index().unwrap() == top)
                .count();
            out.push(ExtremalBettiNumber {
                homological: k as usize,
                degree: l,
                value: BigUint::from(value),
            });
        }
    }
    out.sort_by_key(|e| std::cmp::Reverse(e.degree));
    Ok(out)
}

/// Extremal Betti numbers of a t-spread strongly stable ideal. Both the
/// table scan and the generator characterization are computed and must
/// agree; the shared result is returned in descending row order.
pub fn extremal_betti(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<Vec<ExtremalBettiNumber>> {
    if ideal.is_zero() {
        ensure_spread_borel(ideal, t)?;
        return Ok(Vec::new());
    }
    let from_table = extremal_from_table(&betti_table(ideal, t)?);
    let from_generators = extremal_from_generators(ideal, t)?;
    if from_table != from_generators {
        return Err(Error::CrossCheck(format!(
            "extremal Betti routes disagree: table scan {from_table:?}, generator characterization {from_generators:?}"
        )));
    }
    Ok(from_generators)
}
