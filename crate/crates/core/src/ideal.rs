//! Monomial ideals in canonical form: minimal generating sets under the
//! pure lexicographic order, the vector-spread strong-stability predicate,
//! Borel closures, Veronese ideals and standard decompositions.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{enumerate_spread, Monomial, SpreadVector};

/// Pure lexicographic comparison with `x_1 > x_2 > ... > x_n`:
/// at the first differing position of the index sequences, the smaller
/// index wins; a proper prefix compares larger (consistent with proper
/// divisibility among sorted splits).
pub fn pure_lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.indices().iter().zip(b.indices()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller index at the first difference = larger monomial
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    b.degree().cmp(&a.degree())
}

/// A monomial ideal held by its minimal generating set `G(I)`, sorted
/// pure-lex descending, together with the ambient variable count and the
/// spread vector the ideal is declared against (when any).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: u32,
    gens: Vec<Monomial>,
    spread: Option<SpreadVector>,
}

impl MonomialIdeal {
    /// Canonicalizes a raw generator list: validates indices against
    /// `[1, n]`, drops duplicates and every monomial divisible by another,
    /// and sorts pure-lex descending. An empty list is the zero ideal.
    pub fn from_generators(raw: Vec<Monomial>, n: u32) -> Result<Self> {
        for g in &raw {
            if let Some(max) = g.max_index() {
                if max > n {
                    return Err(Error::IndexOutOfRange { index: max, n });
                }
            }
        }
        let mut gens: Vec<Monomial> = Vec::new();
        'candidate: for g in &raw {
            for other in &raw {
                if other != g && other.divides(g) {
                    continue 'candidate;
                }
            }
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        gens.sort_by(|a, b| pure_lex_cmp(b, a));
        Ok(MonomialIdeal {
            n,
            gens,
            spread: None,
        })
    }

    /// The zero ideal of the ambient ring.
    pub fn zero(n: u32) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
            spread: None,
        }
    }

    /// Attaches the spread vector the ideal is declared against, checking
    /// that every generator is t-spread.
    pub fn with_spread(mut self, t: SpreadVector) -> Result<Self> {
        for g in &self.gens {
            if !g.is_spread(&t) {
                return Err(Error::NotSpread {
                    monomial: g.to_string(),
                    spread: t.to_string(),
                });
            }
        }
        self.spread = Some(t);
        Ok(self)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The minimal generators, pure-lex descending.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn spread(&self) -> Option<&SpreadVector> {
        self.spread.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff `1` is a generator, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_unit)
    }

    /// Membership by divisibility against `G(I)`.
    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// Generators of one degree, in the canonical order.
    pub fn generators_of_degree(&self, degree: usize) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == degree)
    }

    /// Sorted distinct generator degrees.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.gens.iter().map(Monomial::degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
    }

    /// The largest variable index actually used by a generator; `None` for
    /// the zero and unit ideals.
    pub fn effective_n(&self) -> Option<u32> {
        self.gens.iter().filter_map(Monomial::max_index).max()
    }
}

fn ensure_generators_spread(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<()> {
    for g in ideal.generators() {
        if !g.is_spread(t) {
            return Err(Error::NotSpread {
                monomial: g.to_string(),
                spread: t.to_string(),
            });
        }
    }
    Ok(())
}

/// One Borel exchange: replace a single copy of `x_i` in `u` by `x_j`.
fn exchange(u: &Monomial, i: u32, j: u32) -> Monomial {
    let mut indices = u.indices().to_vec();
    let pos = indices.iter().position(|&k| k == i).expect("i divides u");
    indices[pos] = j;
    Monomial::from_indices(indices)
}

/// Finds an exchange move that escapes the ideal, if any: a t-spread
/// `x_j (u / x_i)` with `j < i` that is not in `I`.
fn escaping_exchange(
    ideal: &MonomialIdeal,
    t: &SpreadVector,
    u: &Monomial,
) -> Option<(Monomial, u32, u32)> {
    for &i in u.support().iter().rev() {
        for j in 1..i {
            let v = exchange(u, i, j);
            if v.is_spread(t) && !ideal.contains(&v) {
                return Some((v, i, j));
            }
        }
    }
    None
}

/// Checks the vector-spread strong-stability exchange condition.
///
/// With `exhaustive = false` only the minimal generators are tested; with
/// `exhaustive = true` every t-spread monomial of the ideal of each degree
/// up to the spread arity is tested (membership by divisibility). Returns
/// `Ok(false)` on a violation; generators that are not t-spread are an
/// error.
pub fn is_spread_strongly_stable(
    ideal: &MonomialIdeal,
    t: &SpreadVector,
    exhaustive: bool,
) -> Result<bool> {
    ensure_generators_spread(ideal, t)?;
    for u in ideal.generators() {
        if escaping_exchange(ideal, t, u).is_some() {
            return Ok(false);
        }
    }
    if exhaustive {
        for l in 0..=t.arity() {
            for w in enumerate_spread(ideal.n(), l, t) {
                if ideal.contains(&w) && escaping_exchange(ideal, t, &w).is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Validates the strongly-stable precondition shared by the resolution and
/// Cohen-Macaulay formulas, reporting the escaping exchange on failure.
pub(crate) fn ensure_spread_borel(ideal: &MonomialIdeal, t: &SpreadVector) -> Result<()> {
    ensure_generators_spread(ideal, t)?;
    for u in ideal.generators() {
        if let Some((v, i, j)) = escaping_exchange(ideal, t, u) {
            return Err(Error::NotStronglyStable {
                witness: format!("x{j}*({u}/x{i}) = {v} escapes the ideal"),
            });
        }
    }
    Ok(())
}

/// The smallest t-spread strongly stable ideal containing the seeds:
/// a per-degree fixpoint of the exchange move, then minimalization.
pub fn borel_closure(seeds: &[Monomial], t: &SpreadVector, n: u32) -> Result<MonomialIdeal> {
    for seed in seeds {
        if let Some(max) = seed.max_index() {
            if max > n {
                return Err(Error::IndexOutOfRange { index: max, n });
            }
        }
        if !seed.is_spread(t) {
            return Err(Error::NotSpread {
                monomial: seed.to_string(),
                spread: t.to_string(),
            });
        }
    }
    let mut closed: HashSet<Monomial> = HashSet::new();
    let mut queue: Vec<Monomial> = Vec::new();
    for seed in seeds {
        if closed.insert(seed.clone()) {
            queue.push(seed.clone());
        }
    }
    while let Some(u) = queue.pop() {
        for &i in u.support().iter() {
            for j in 1..i {
                let v = exchange(&u, i, j);
                if v.is_spread(t) && closed.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
    }
    MonomialIdeal::from_generators(closed.into_iter().collect(), n)?.with_spread(t.clone())
}

/// The t-spread Veronese ideal of degree `l`: generated by every t-spread
/// monomial of that degree. Zero exactly when `n < 1 + gapSum(l)`.
pub fn veronese_ideal(n: u32, l: usize, t: &SpreadVector) -> MonomialIdeal {
    let gens = enumerate_spread(n, l, t);
    MonomialIdeal::from_generators(gens, n)
        .expect("enumerated indices are within the ambient")
        .with_spread(t.clone())
        .expect("enumerated monomials are t-spread")
}

/// The standard decomposition of a t-spread monomial of a t-spread strongly
/// stable ideal: `w = u * v` with `u` a minimal generator and
/// `max(u) <= min(v)`. The generator is the unique one matching a prefix of
/// the index sequence of `w` (the pure-lex largest valid choice).
pub fn standard_decomposition(
    w: &Monomial,
    ideal: &MonomialIdeal,
    t: &SpreadVector,
) -> Result<(Monomial, Monomial)> {
    if !w.is_spread(t) {
        return Err(Error::NotSpread {
            monomial: w.to_string(),
            spread: t.to_string(),
        });
    }
    ensure_spread_borel(ideal, t)?;
    if !ideal.contains(w) {
        return Err(Error::NotMember {
            monomial: w.to_string(),
        });
    }
    for len in 1..=w.degree() {
        let prefix = Monomial::from_indices(w.indices()[..len].to_vec());
        if ideal.generators().contains(&prefix) {
            let rest = Monomial::from_indices(w.indices()[len..].to_vec());
            return Ok((prefix, rest));
        }
    }
    Err(Error::CrossCheck(format!(
        "no standard decomposition found for {w}"
    )))
}

/// Serialized form of an ideal: the canonical, versioned document used by
/// the file format and the structured CLI output.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealDocument {
    pub version: u32,
    pub n: u32,
    pub t: Vec<u32>,
    pub generators: Vec<GeneratorRepr>,
}

/// Generators may be written as monomial text or as index arrays.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorRepr {
    Text(String),
    Indices(Vec<u32>),
}

impl IdealDocument {
    pub const VERSION: u32 = 1;

    /// Canonical document for an ideal declared against `t`; generators are
    /// rendered as monomial text.
    pub fn from_ideal(ideal: &MonomialIdeal, t: &SpreadVector) -> Self {
        IdealDocument {
            version: Self::VERSION,
            n: ideal.n(),
            t: t.entries().to_vec(),
            generators: ideal
                .generators()
                .iter()
                .map(|g| GeneratorRepr::Text(g.to_string()))
                .collect(),
        }
    }

    /// Parses and canonicalizes the document into an ideal plus its spread
    /// vector.
    pub fn to_ideal(&self) -> Result<(MonomialIdeal, SpreadVector)> {
        if self.version != Self::VERSION {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("unsupported document version {}", self.version),
            });
        }
        let t = SpreadVector::new(self.t.clone())?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let monomial = match g {
                GeneratorRepr::Text(text) => Monomial::parse(text, self.n)?,
                GeneratorRepr::Indices(indices) => {
                    for &i in indices {
                        if i < 1 || i > self.n {
                            return Err(Error::IndexOutOfRange {
                                index: i,
                                n: self.n,
                            });
                        }
                    }
                    Monomial::from_indices(indices.clone())
                }
            };
            gens.push(monomial);
        }
        let ideal = MonomialIdeal::from_generators(gens, self.n)?.with_spread(t.clone())?;
        Ok((ideal, t))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: e.to_string(),
        })
    }
}
