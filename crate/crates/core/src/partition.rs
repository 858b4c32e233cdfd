//! Partitions and skew shapes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction; use [`Partition::padded`] for a fixed-length view.
///
/// The derived ordering is lexicographic on parts, which refines dominance
/// among partitions of equal size.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees `parts` is weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row `(k)`.
    pub fn row(k: usize) -> Self {
        Partition::from_sorted(vec![k])
    }

    /// The single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.len() > n {
            return Err(Error::TooLong {
                len: self.len(),
                max: n,
            });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// Cellwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `(k λ_1, k λ_2, ...)`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p * k).collect())
    }

    /// Cells `(row, col)`, 0-based, in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        col < self.part(row)
    }

    /// Removes `k` from every part (strips `k` full columns of height `len`).
    pub(crate) fn drop_columns(&self, n: usize) -> Partition {
        if self.len() < n {
            return self.clone();
        }
        let k = self.0[n - 1];
        Partition::from_sorted(self.0.iter().map(|p| p - k).collect())
    }

    /// `(n,l)`-restricted: at most `n` parts and `λ_1 - λ_n <= l`.
    pub fn is_restricted(&self, n: usize, l: usize) -> bool {
        if n == 0 {
            return self.is_empty();
        }
        self.len() <= n && self.part(0) - self.part(n - 1) <= l
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma separated parts; the empty partition prints as an empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `"6,4,4"`; `""` and `"0"` are the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literals in tests and examples; panics on bad input.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("weakly decreasing parts") };
}

/// Parses `"2,1;2,1;2,1"` into a tuple of partitions.
pub fn parse_tuple(s: &str) -> Result<Vec<Partition>> {
    s.split(';').map(str::parse).collect()
}

pub fn format_tuple(parts: &[Partition]) -> String {
    parts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// All partitions of `size` with at most `max_len` parts, each at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_bounded(size: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_len: usize,
        max_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, max_len, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_of(size: usize) -> Vec<Partition> {
    partitions_bounded(size, size, size)
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        self.outer.has_cell(row, col) && !self.inner.has_cell(row, col)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.outer
            .parts()
            .iter()
            .enumerate()
            .flat_map(move |(i, &p)| (self.inner.part(i)..p).map(move |j| (i, j)))
    }

    /// At most one cell in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "({})", self.outer)
        } else {
            write!(f, "({})/({})", self.outer, self.inner)
        }
    }
}
