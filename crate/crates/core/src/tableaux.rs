//! Semistandard tableaux, Kostka numbers and the charge statistic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};
use crate::qlaurent::LaurentQPoly;

/// All `ν ⊇ inner` such that `ν / inner` is a horizontal strip of `size`
/// cells, `ν ⊆ bound` when a bound is given, and `ℓ(ν) <= max_len`.
pub fn horizontal_strips(
    inner: &Partition,
    size: usize,
    bound: Option<&Partition>,
    max_len: usize,
) -> Vec<Partition> {
    let rows = (inner.len() + 1).min(max_len).max(inner.len());
    let mut out = Vec::new();
    let mut cur = inner.padded(rows).expect("rows >= len");
    fill_strip(inner, bound, 0, size, &mut cur, &mut out);
    out
}

fn fill_strip(
    inner: &Partition,
    bound: Option<&Partition>,
    row: usize,
    remaining: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if row == cur.len() {
        return;
    }
    let base = inner.part(row);
    let mut upper = if row == 0 {
        usize::MAX
    } else {
        inner.part(row - 1)
    };
    if let Some(b) = bound {
        upper = upper.min(b.part(row));
    }
    if upper < base {
        return;
    }
    let max_add = (upper - base).min(remaining);
    for add in (0..=max_add).rev() {
        cur[row] = base + add;
        fill_strip(inner, bound, row + 1, remaining - add, cur, out);
    }
    cur[row] = base;
}

/// A semistandard filling of a skew shape: rows weakly increase, columns
/// strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    shape: SkewShape,
    /// `rows[i]` lists the entries of the skew cells in row `i`, left to right.
    rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    /// Validates the row and column conditions.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = shape.outer();
        let inner = shape.inner();
        if rows.len() != outer.len()
            || rows
                .iter()
                .enumerate()
                .any(|(i, r)| r.len() != outer.part(i) - inner.part(i))
        {
            return Err(Error::InvalidParameter(
                "row lengths do not match the shape".into(),
            ));
        }
        let t = SemistandardTableau { shape, rows };
        for (i, row) in t.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidParameter(format!(
                    "row {i} is not weakly increasing"
                )));
            }
        }
        for (i, j) in t.shape.cells() {
            if i > 0 && t.shape.contains_cell(i - 1, j) && t.entry(i - 1, j) >= t.entry(i, j) {
                return Err(Error::InvalidParameter(format!(
                    "column {j} is not strictly increasing"
                )));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry of the skew cell `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.rows[row][col - self.shape.inner().part(row)]
    }

    /// `(m_1, m_2, ...)` up to the largest entry.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &e in self.rows.iter().flatten() {
            if w.len() < e {
                w.resize(e, 0);
            }
            w[e - 1] += 1;
        }
        w
    }

    /// Rows from bottom to top, each read left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// Chains of horizontal strips from `from` to `to`, one strip per entry value.
fn strip_chains(
    from: &Partition,
    to: &Partition,
    sizes: Option<&[usize]>,
    max_entry: usize,
    visit: &mut dyn FnMut(&[Partition]),
) {
    fn go(
        chain: &mut Vec<Partition>,
        to: &Partition,
        sizes: Option<&[usize]>,
        max_entry: usize,
        visit: &mut dyn FnMut(&[Partition]),
    ) {
        let cur = chain.last().unwrap().clone();
        let step = chain.len() - 1;
        if step == max_entry {
            if &cur == to {
                visit(chain);
            }
            return;
        }
        let remaining = to.size() - cur.size();
        let candidates: Vec<usize> = match sizes {
            Some(s) => vec![s[step]],
            None => (0..=remaining).rev().collect(),
        };
        for size in candidates {
            if size > remaining {
                continue;
            }
            for next in horizontal_strips(&cur, size, Some(to), to.len()) {
                chain.push(next);
                go(chain, to, sizes, max_entry, visit);
                chain.pop();
            }
        }
    }
    let mut chain = vec![from.clone()];
    go(&mut chain, to, sizes, max_entry, visit);
}

fn tableau_from_chain(shape: &SkewShape, chain: &[Partition]) -> SemistandardTableau {
    let outer = shape.outer();
    let mut rows: Vec<Vec<usize>> = (0..outer.len()).map(|_| Vec::new()).collect();
    for (k, w) in chain.windows(2).enumerate() {
        for (i, row) in rows.iter_mut().enumerate() {
            row.extend(std::iter::repeat_n(k + 1, w[1].part(i) - w[0].part(i)));
        }
    }
    SemistandardTableau {
        shape: shape.clone(),
        rows,
    }
}

/// Every SSYT of `shape` with entries in `1..=max_entry`, in a fixed order.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: usize) -> Vec<SemistandardTableau> {
    let mut out = Vec::new();
    strip_chains(
        shape.inner(),
        shape.outer(),
        None,
        max_entry,
        &mut |chain| out.push(tableau_from_chain(shape, chain)),
    );
    out
}

/// Every SSYT of `shape` with the given content (a composition).
pub fn ssyt_with_weight(shape: &SkewShape, weight: &[usize]) -> Vec<SemistandardTableau> {
    if weight.iter().sum::<usize>() != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    strip_chains(
        shape.inner(),
        shape.outer(),
        Some(weight),
        weight.len(),
        &mut |chain| out.push(tableau_from_chain(shape, chain)),
    );
    out
}

/// Number of SSYT of shape `lambda` and content `weight`.
pub fn kostka_number(lambda: &Partition, weight: &[usize]) -> Result<u64> {
    let total: usize = weight.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch(lambda.size(), total));
    }
    fn count(
        cur: &Partition,
        step: usize,
        lambda: &Partition,
        weight: &[usize],
        memo: &mut HashMap<(Partition, usize), u64>,
    ) -> u64 {
        if step == weight.len() {
            return u64::from(cur == lambda);
        }
        if let Some(&v) = memo.get(&(cur.clone(), step)) {
            return v;
        }
        let v = horizontal_strips(cur, weight[step], Some(lambda), lambda.len())
            .iter()
            .map(|next| count(next, step + 1, lambda, weight, memo))
            .sum();
        memo.insert((cur.clone(), step), v);
        v
    }
    Ok(count(
        &Partition::empty(),
        0,
        lambda,
        weight,
        &mut HashMap::new(),
    ))
}

/// Charge of a word with partition content.
///
/// The word is split into standard subwords: starting from the right end,
/// scan leftwards (cyclically) for a 1, then continue leftwards for a 2, and
/// so on up to the number of distinct letters left. Within a subword the
/// letter 1 has index 0 and `k+1` gets the index of `k`, plus one if the scan
/// had to wrap around (`k+1` lies to the right of `k`). The charge is the sum
/// of all indices.
pub fn charge_of_word(word: &[usize]) -> Result<usize> {
    let mut content = Vec::new();
    for &w in word {
        if w == 0 {
            return Err(Error::ChargeUndefined);
        }
        if content.len() < w {
            content.resize(w, 0);
        }
        content[w - 1] += 1;
    }
    if content.windows(2).any(|c| c[0] < c[1]) {
        return Err(Error::ChargeUndefined);
    }
    let len = word.len();
    let mut used = vec![false; len];
    let mut left = len;
    let mut total = 0;
    while left > 0 {
        let distinct = content.iter().take_while(|&&c| c > 0).count();
        let mut pos = len;
        let mut index = 0;
        for letter in 1..=distinct {
            let mut p = pos;
            let mut wrapped = false;
            loop {
                if p == 0 {
                    p = len;
                    wrapped = true;
                }
                p -= 1;
                if !used[p] && word[p] == letter {
                    break;
                }
            }
            if letter > 1 && (wrapped || p > pos) {
                index += 1;
            }
            total += index;
            used[p] = true;
            content[letter - 1] -= 1;
            pos = p;
            left -= 1;
        }
    }
    Ok(total)
}

pub fn charge(t: &SemistandardTableau) -> Result<usize> {
    if !t.shape().is_straight() {
        return Err(Error::ChargeUndefined);
    }
    charge_of_word(&t.reading_word())
}

/// `K_{λμ}(q) = Σ q^{charge(T)}` over SSYT of shape `λ` and weight `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<LaurentQPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let shape = SkewShape::straight(lambda.clone());
    let mut counts: Vec<u64> = Vec::new();
    for t in ssyt_with_weight(&shape, mu.parts()) {
        let c = charge(&t)?;
        if counts.len() <= c {
            counts.resize(c + 1, 0);
        }
        counts[c] += 1;
    }
    Ok(LaurentQPoly::from_coeffs(&counts))
}
