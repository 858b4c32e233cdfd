//! Symmetric polynomials in Schur and monomial coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};
use crate::qlaurent::LaurentQPoly;
use crate::tableaux::{horizontal_strips, kostka_number};

/// Finite linear combination `Σ c_λ s_λ` with Laurent polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, LaurentQPoly>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        Self::default()
    }

    /// `s_λ`.
    pub fn single(lambda: Partition) -> Self {
        let mut e = Self::new();
        e.add_term(lambda, LaurentQPoly::one());
        e
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: LaurentQPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_assign(&mut self, other: &SchurExpansion) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> LaurentQPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order of the partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentQPoly)> {
        self.terms.iter().rev()
    }

    pub fn map_coefficients(&self, f: impl Fn(&LaurentQPoly) -> LaurentQPoly) -> Self {
        let mut out = Self::new();
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentQPoly) -> Self {
        self.map_coefficients(|p| p * c)
    }

    /// Coefficients evaluated at `q = 1`.
    pub fn specialize_one(&self) -> Self {
        self.map_coefficients(LaurentQPoly::specialize_one)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms
            .values()
            .all(LaurentQPoly::has_nonnegative_coefficients)
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .iter()
            .map(|(l, c)| (l.to_string(), c.to_json()))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expansion JSON must be an object".into()))?;
        let mut e = Self::new();
        for (k, v) in obj {
            e.add_term(k.parse()?, LaurentQPoly::from_json(v)?);
        }
        Ok(e)
    }
}

impl FromIterator<(Partition, LaurentQPoly)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, LaurentQPoly)>>(iter: I) -> Self {
        let mut e = Self::new();
        for (l, c) in iter {
            e.add_term(l, c);
        }
        e
    }
}

/// `q^7*s[3,3,2,1] + (q^6+q^7)*s[3,2,2,2]`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let single_positive = c.num_terms() == 1 && c.has_nonnegative_coefficients();
            if c.is_one() {
                write!(f, "s[{l}]")?;
            } else if single_positive {
                write!(f, "{c}*s[{l}]")?;
            } else {
                write!(f, "({c})*s[{l}]")?;
            }
        }
        Ok(())
    }
}

/// Monomial-basis coordinates of a symmetric polynomial in `nvars`
/// variables, indexed by dominant weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicityMap {
    nvars: usize,
    terms: BTreeMap<Partition, LaurentQPoly>,
}

impl WeightMultiplicityMap {
    pub fn new(nvars: usize) -> Self {
        WeightMultiplicityMap {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `coeff · m_weight`; the weight must be a partition.
    pub fn add(&mut self, weight: Partition, coeff: LaurentQPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(weight.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&weight);
        }
    }

    pub fn coefficient(&self, weight: &Partition) -> LaurentQPoly {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentQPoly)> {
        self.terms.iter()
    }
}

/// Expands Schur functions in `nvars` variables into monomial coordinates.
pub fn schur_to_monomial(e: &SchurExpansion, nvars: usize) -> WeightMultiplicityMap {
    let mut out = WeightMultiplicityMap::new(nvars);
    for (lambda, c) in e.iter() {
        if lambda.len() > nvars {
            continue;
        }
        for mu in partitions_bounded(lambda.size(), nvars, lambda.part(0)) {
            if !lambda.dominates(&mu) {
                continue;
            }
            let k = kostka_number(lambda, mu.parts()).expect("sizes agree");
            if k > 0 {
                out.add(mu, c.scale(k));
            }
        }
    }
    out
}

/// Inverts the unitriangular transition `s_λ = m_λ + Σ_{μ◁λ} K_{λμ} m_μ`.
pub fn monomial_to_schur(m: &WeightMultiplicityMap) -> Result<SchurExpansion> {
    let n = m.nvars;
    let mut rest = m.terms.clone();
    let mut out = SchurExpansion::new();
    let mut kostka: HashMap<(Partition, Partition), u64> = HashMap::new();
    while let Some((top, c)) = rest.pop_last() {
        if top.len() > n {
            return Err(Error::NotSymmetric(top.to_string()));
        }
        for mu in partitions_bounded(top.size(), n, top.part(0)) {
            if mu == top || !top.dominates(&mu) {
                continue;
            }
            let k = *kostka
                .entry((top.clone(), mu.clone()))
                .or_insert_with(|| kostka_number(&top, mu.parts()).expect("sizes agree"));
            if k == 0 {
                continue;
            }
            let slot = rest.entry(mu.clone()).or_default();
            *slot -= &c.scale(k);
            if slot.is_zero() {
                rest.remove(&mu);
            }
        }
        out.add_term(top, c);
    }
    Ok(out)
}

/// Littlewood–Richardson coefficients `c^ν_{a,b}` for `ℓ(ν) <= n`.
///
/// Adds horizontal strips labelled `1, 2, ...` of sizes `b_1, b_2, ...` to
/// `a` and keeps the fillings whose reverse reading word (rows top to
/// bottom, each right to left) is a lattice word.
pub fn lr_coefficients(a: &Partition, b: &Partition, n: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if a.len() > n || b.len() > n {
        return out;
    }
    let mut chain = vec![a.clone()];
    lr_extend(b, n, &mut chain, &mut out);
    out
}

fn lr_extend(
    b: &Partition,
    n: usize,
    chain: &mut Vec<Partition>,
    out: &mut BTreeMap<Partition, u64>,
) {
    let label = chain.len();
    if label > b.len() {
        if is_lattice_filling(chain) {
            *out.entry(chain.last().unwrap().clone()).or_insert(0) += 1;
        }
        return;
    }
    let cur = chain.last().unwrap().clone();
    for next in horizontal_strips(&cur, b.part(label - 1), None, n) {
        // label k never sits above row k-1 in a lattice filling
        if (0..label - 1).any(|i| next.part(i) != cur.part(i)) {
            continue;
        }
        chain.push(next);
        lr_extend(b, n, chain, out);
        chain.pop();
    }
}

fn is_lattice_filling(chain: &[Partition]) -> bool {
    let outer = chain.last().unwrap();
    let labels = chain.len() - 1;
    let mut counts = vec![0usize; labels + 1];
    for row in 0..outer.len() {
        // labels in a row increase left to right; read right to left
        for k in (1..=labels).rev() {
            let added = chain[k].part(row) - chain[k - 1].part(row);
            for _ in 0..added {
                counts[k] += 1;
                if k > 1 && counts[k] > counts[k - 1] {
                    return false;
                }
            }
        }
    }
    true
}

/// `s_{f_1} s_{f_2} ...` in `n` variables, as an expansion with constant
/// coefficients.
pub fn schur_product(factors: &[Partition], n: usize) -> SchurExpansion {
    let mut acc = SchurExpansion::single(Partition::empty());
    for f in factors {
        acc = multiply_by_schur(&acc, f, n);
    }
    acc
}

/// `e · s_b` in `n` variables.
pub fn multiply_by_schur(e: &SchurExpansion, b: &Partition, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (a, c) in e.iter() {
        for (nu, k) in lr_coefficients(a, b, n) {
            out.add_term(nu, c.scale(BigInt::from(k)));
        }
    }
    out
}
