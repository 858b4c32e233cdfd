//! Ribbon tableaux, spin statistics and LLT polynomials.
//!
//! A semistandard `r`-ribbon tableau of shape `λ` (empty `r`-core) is a chain
//! of partitions whose successive differences are horizontal `r`-ribbon
//! strips. Via the `r`-quotient such chains are exactly tuples of
//! semistandard tableaux of the quotient shapes, so enumeration happens in
//! quotient coordinates and spins are read off the abacus.
//!
//! The unique tiling of a horizontal strip is the one in which every ribbon
//! head touches the upper border of the strip. On the abacus it is produced
//! by sliding beads up their runners one step (`+r`) at a time, always
//! moving the lowest bead that has not yet reached its target. A move from
//! `x` to `x + r` adds a ribbon whose height is one more than the number of
//! beads strictly between `x` and `x + r`.

use std::collections::{BTreeMap, HashMap};

use crate::abacus::{default_padding, from_core_and_quotient, r_core, r_quotient, runners};
use crate::error::{Error, Result};
use crate::expansion::{monomial_to_schur, SchurExpansion, WeightMultiplicityMap};
use crate::par;
use crate::partition::{partitions_bounded, Partition, SkewShape};
use crate::qlaurent::{HalfInt, LaurentQPoly};
use crate::tableaux::horizontal_strips;

/// Statistics of the unique ribbon tiling of a horizontal ribbon strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripTiling {
    pub ribbons: usize,
    pub spin: HalfInt,
}

/// Moves beads from `from` to `to` (matched by index, each `to >= from`,
/// differences multiples of `r`) lowest bead first; returns
/// `(ribbons, 2 * spin)`.
fn slide_beads(occupied: &mut Vec<bool>, moves: &mut [(usize, usize)], r: usize) -> (usize, i64) {
    let mut ribbons = 0;
    let mut twice_spin = 0;
    while let Some(m) = moves.iter_mut().filter(|m| m.0 < m.1).min_by_key(|m| m.0) {
        let x = m.0;
        if occupied.len() <= x + r {
            occupied.resize(x + r + 1, false);
        }
        debug_assert!(occupied[x] && !occupied[x + r]);
        twice_spin += occupied[x + 1..x + r].iter().filter(|&&b| b).count() as i64;
        occupied[x] = false;
        occupied[x + r] = true;
        m.0 += r;
        ribbons += 1;
    }
    (ribbons, twice_spin)
}

/// Unique tiling statistics of `skew` if it is a horizontal `r`-ribbon strip.
pub fn horizontal_strip_tiling(skew: &SkewShape, r: usize) -> Option<StripTiling> {
    if r == 0 || !skew.size().is_multiple_of(r) {
        return None;
    }
    let n = default_padding(skew.outer().len(), r);
    let outer = runners_padded(skew.outer(), r, n);
    let inner = runners_padded(skew.inner(), r, n);
    let mut moves = Vec::new();
    for (o, i) in outer.iter().zip(&inner) {
        if o.len() != i.len() {
            return None;
        }
        for j in 0..o.len() {
            if i[j] > o[j] || (j > 0 && o[j] >= i[j - 1]) {
                return None;
            }
        }
    }
    let mut occupied = Vec::new();
    for (k, (o, i)) in outer.iter().zip(&inner).enumerate() {
        for (&a, &b) in i.iter().zip(o) {
            let (from, to) = (k + r * a, k + r * b);
            if occupied.len() <= from {
                occupied.resize(from + 1, false);
            }
            occupied[from] = true;
            moves.push((from, to));
        }
    }
    let (ribbons, twice) = slide_beads(&mut occupied, &mut moves, r);
    Some(StripTiling {
        ribbons,
        spin: HalfInt::from_twice(twice),
    })
}

/// Bead positions per runner for a fixed padding `n` (a multiple of `r`).
fn runners_padded(lambda: &Partition, r: usize, n: usize) -> Vec<Vec<usize>> {
    let base = runners(lambda, r);
    let shift = (n - default_padding(lambda.len(), r)) / r;
    base.into_iter()
        .map(|beads| {
            let mut v: Vec<usize> = beads.iter().map(|p| p + shift).collect();
            v.extend((0..shift).rev());
            v
        })
        .collect()
}

/// A shape with empty `r`-core in quotient coordinates.
#[derive(Clone, Debug)]
struct QuotientShape {
    r: usize,
    beads: usize,
    quotient: Vec<Partition>,
}

impl QuotientShape {
    fn new(shape: &Partition, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        if !r_core(shape, r)?.is_empty() {
            return Err(Error::NonemptyCore(shape.to_string(), r));
        }
        Ok(QuotientShape {
            r,
            beads: default_padding(shape.len(), r) / r,
            quotient: r_quotient(shape, r)?,
        })
    }

    fn size(&self) -> usize {
        self.quotient.iter().map(Partition::size).sum()
    }

    fn bead_betas(&self, tuple: &[Partition]) -> Vec<usize> {
        let (c, r) = (self.beads, self.r);
        let mut out = Vec::with_capacity(c * r);
        for (i, t) in tuple.iter().enumerate() {
            out.extend((0..c).map(|j| i + r * (t.part(j) + c - 1 - j)));
        }
        out
    }

    /// Twice the spin of the strip from `old` to `new` (both tuples).
    fn step_twice_spin(&self, old: &[Partition], new: &[Partition]) -> i64 {
        let from = self.bead_betas(old);
        let to = self.bead_betas(new);
        let mut occupied = vec![false; from.iter().max().map_or(0, |m| m + 1)];
        for &b in &from {
            occupied[b] = true;
        }
        let mut moves: Vec<(usize, usize)> =
            from.into_iter().zip(to).filter(|(a, b)| a != b).collect();
        slide_beads(&mut occupied, &mut moves, self.r).1
    }

    fn to_partition(&self, tuple: &[Partition]) -> Partition {
        from_core_and_quotient(&Partition::empty(), tuple, self.r)
            .expect("empty core with r components")
    }

    /// Calls `visit(chain, 2 * spin)` for every tableau of the given weight.
    fn for_each_tableau(&self, weight: &[usize], visit: &mut dyn FnMut(&[Vec<Partition>], i64)) {
        let start = vec![Partition::empty(); self.r];
        let mut chain = vec![start];
        self.extend_chain(weight, &mut chain, 0, visit);
    }

    fn extend_chain(
        &self,
        weight: &[usize],
        chain: &mut Vec<Vec<Partition>>,
        twice_spin: i64,
        visit: &mut dyn FnMut(&[Vec<Partition>], i64),
    ) {
        let step = chain.len() - 1;
        if step == weight.len() {
            visit(chain, twice_spin);
            return;
        }
        let cur = chain.last().unwrap().clone();
        let mut nexts = Vec::new();
        let capacity: Vec<usize> = cur
            .iter()
            .zip(&self.quotient)
            .map(|(c, q)| q.size() - c.size())
            .collect();
        self.strips(
            &cur,
            &capacity,
            0,
            weight[step],
            &mut Vec::new(),
            &mut nexts,
        );
        for next in nexts {
            let s = self.step_twice_spin(&cur, &next);
            chain.push(next);
            self.extend_chain(weight, chain, twice_spin + s, visit);
            chain.pop();
        }
    }

    /// All tuples obtained from `cur` by adding horizontal strips of total size `rest`.
    fn strips(
        &self,
        cur: &[Partition],
        capacity: &[usize],
        i: usize,
        rest: usize,
        acc: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if i == cur.len() {
            if rest == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if capacity[i..].iter().sum::<usize>() < rest {
            return;
        }
        let lo = if i + 1 == cur.len() { rest } else { 0 };
        for s in lo..=rest.min(capacity[i]) {
            let q = &self.quotient[i];
            for next in horizontal_strips(&cur[i], s, Some(q), q.len()) {
                acc.push(next);
                self.strips(cur, capacity, i + 1, rest - s, acc, out);
                acc.pop();
            }
        }
    }

    fn spin_polynomial(&self, weight: &[usize]) -> LaurentQPoly {
        if weight.iter().sum::<usize>() != self.size() {
            return LaurentQPoly::zero();
        }
        let mut hist: BTreeMap<i64, u64> = BTreeMap::new();
        self.for_each_tableau(weight, &mut |_, s| *hist.entry(s).or_insert(0) += 1);
        hist.into_iter()
            .map(|(s, c)| LaurentQPoly::monomial_half(c, HalfInt::from_twice(s)))
            .fold(LaurentQPoly::zero(), |a, b| a + b)
    }

    fn max_twice_spin(&self) -> i64 {
        let betas = self.bead_betas(&self.quotient);
        let mut memo = HashMap::new();
        max_spin_peel(betas, self.r, &mut memo)
    }
}

/// Largest total leg count over all ways of peeling `r`-ribbons down to the core.
fn max_spin_peel(mut betas: Vec<usize>, r: usize, memo: &mut HashMap<Vec<usize>, i64>) -> i64 {
    betas.sort_unstable();
    if let Some(&v) = memo.get(&betas) {
        return v;
    }
    let mut best = None;
    for k in 0..betas.len() {
        let x = betas[k];
        if x < r || betas.binary_search(&(x - r)).is_ok() {
            continue;
        }
        let leg = betas.iter().filter(|&&b| b > x - r && b < x).count() as i64;
        let mut next = betas.clone();
        next[k] = x - r;
        let v = leg + max_spin_peel(next, r, memo);
        best = Some(best.map_or(v, |b: i64| b.max(v)));
    }
    let v = best.unwrap_or(0);
    memo.insert(betas, v);
    v
}

/// A semistandard ribbon tableau as a chain of shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonTableau {
    r: usize,
    chain: Vec<Partition>,
    spin: HalfInt,
}

impl RibbonTableau {
    pub fn r(&self) -> usize {
        self.r
    }

    /// `∅ = λ⁽⁰⁾ ⊆ λ⁽¹⁾ ⊆ ... ⊆ λ⁽ᵐ⁾`.
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    /// Number of ribbons labelled `k` for each `k`.
    pub fn weight(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| (w[1].size() - w[0].size()) / self.r)
            .collect()
    }

    pub fn spin(&self) -> HalfInt {
        self.spin
    }
}

/// All ribbon tableaux of `shape` with entries at most `max_entry`.
pub fn enumerate_ribbon_tableaux(
    shape: &Partition,
    r: usize,
    max_entry: usize,
) -> Result<Vec<RibbonTableau>> {
    let qs = QuotientShape::new(shape, r)?;
    let mut out = Vec::new();
    for weight in compositions(qs.size(), max_entry) {
        qs.for_each_tableau(&weight, &mut |chain, s| {
            out.push(RibbonTableau {
                r,
                chain: chain.iter().map(|t| qs.to_partition(t)).collect(),
                spin: HalfInt::from_twice(s),
            });
        });
    }
    Ok(out)
}

/// Compositions of `total` into exactly `parts` nonnegative parts.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for k in 0..=rest {
            cur.push(k);
            go(rest - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `Σ_T q^{s(T)}` over ribbon tableaux of `shape` with the given weight.
pub fn spin_polynomial(shape: &Partition, r: usize, weight: &[usize]) -> Result<LaurentQPoly> {
    let qs = QuotientShape::new(shape, r)?;
    if r * weight.iter().sum::<usize>() != shape.size() {
        return Err(Error::SizeMismatch(
            shape.size(),
            r * weight.iter().sum::<usize>(),
        ));
    }
    Ok(qs.spin_polynomial(weight))
}

/// Maximal spin `s*` of a ribbon tableau of `shape`.
pub fn max_spin(shape: &Partition, r: usize) -> Result<HalfInt> {
    Ok(HalfInt::from_twice(
        QuotientShape::new(shape, r)?.max_twice_spin(),
    ))
}

fn spin_weight_map(qs: &QuotientShape, n: usize) -> WeightMultiplicityMap {
    let size = qs.size();
    let weights = partitions_bounded(size, n, size);
    let polys = par::map(&weights, |w| qs.spin_polynomial(w.parts()));
    let mut map = WeightMultiplicityMap::new(n);
    for (w, p) in weights.into_iter().zip(polys) {
        map.add(w, p);
    }
    map
}

/// `G̃` with spin exponents, `Σ_T q^{s(T)} X^T`, in `n` variables.
pub fn llt_spin(shape: &Partition, r: usize, n: usize) -> Result<SchurExpansion> {
    let qs = QuotientShape::new(shape, r)?;
    monomial_to_schur(&spin_weight_map(&qs, n))
}

/// `G̃` with cospin exponents, `Σ_T q^{s*(λ) - s(T)} X^T`, in `n` variables.
pub fn llt_cospin(shape: &Partition, r: usize, n: usize) -> Result<SchurExpansion> {
    let qs = QuotientShape::new(shape, r)?;
    let smax = HalfInt::from_twice(qs.max_twice_spin());
    let spin = monomial_to_schur(&spin_weight_map(&qs, n))?;
    Ok(spin.map_coefficients(|c| c.bar_reverse(smax)))
}

/// Coefficient of `s_ν` in the cospin `G̃` of the shape with empty core and
/// quotient `factors`.
pub fn q_lr_cospin(nu: &Partition, factors: &[Partition], n: usize) -> Result<LaurentQPoly> {
    if nu.len() > n {
        return Ok(LaurentQPoly::zero());
    }
    let r = factors.len();
    if r == 0 {
        return Ok(if nu.is_empty() {
            LaurentQPoly::one()
        } else {
            LaurentQPoly::zero()
        });
    }
    let shape = from_core_and_quotient(&Partition::empty(), factors, r)?;
    Ok(llt_cospin(&shape, r, n)?.coefficient(nu))
}

/// `H^{(r)}_μ = Σ_T q^{s(T)} X^T` over ribbon tableaux of shape `rμ`.
pub fn h_function(mu: &Partition, r: usize, n: usize) -> Result<SchurExpansion> {
    if mu.is_empty() {
        return Ok(SchurExpansion::single(Partition::empty()));
    }
    llt_spin(&mu.scale(r), r, n)
}

/// `Q'_μ = Σ_λ K_{λμ}(q) s_λ` in `n` variables.
pub fn modified_hall_littlewood(mu: &Partition, n: usize) -> Result<SchurExpansion> {
    h_function(mu, mu.len().max(1), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn strip_examples() {
        let r = 3;
        let col = horizontal_strip_tiling(&SkewShape::straight(Partition::column(r)), r).unwrap();
        assert_eq!(
            col,
            StripTiling {
                ribbons: 1,
                spin: HalfInt::from_int(1)
            }
        );
        let row = horizontal_strip_tiling(&SkewShape::straight(Partition::row(r)), r).unwrap();
        assert_eq!(
            row,
            StripTiling {
                ribbons: 1,
                spin: HalfInt::ZERO
            }
        );
        assert!(horizontal_strip_tiling(&SkewShape::straight(partition![2]), r).is_none());
        // two vertical dominoes, both heads on the top border
        let square = horizontal_strip_tiling(&SkewShape::straight(partition![2, 2]), 2).unwrap();
        assert_eq!(
            square,
            StripTiling {
                ribbons: 2,
                spin: HalfInt::from_int(1)
            }
        );
        assert!(horizontal_strip_tiling(&SkewShape::straight(partition![2, 1, 1]), 2).is_none());
        let two_rows = horizontal_strip_tiling(&SkewShape::straight(partition![4]), 2).unwrap();
        assert_eq!(two_rows.ribbons, 2);
    }

    #[test]
    fn ribbon_tableau_with_half_integer_spin() {
        let shape = partition![8, 7, 6, 6, 1];
        let all = enumerate_ribbon_tableaux(&shape, 4, 4).unwrap();
        assert!(all
            .iter()
            .any(|t| t.weight() == vec![3, 2, 1, 1] && t.spin() == HalfInt::from_twice(9)));
        for t in &all {
            assert_eq!(t.shape(), &shape);
            for w in t.chain().windows(2) {
                assert!(horizontal_strip_tiling(
                    &SkewShape::new(w[1].clone(), w[0].clone()).unwrap(),
                    4
                )
                .is_some());
            }
        }
    }

    #[test]
    fn single_ribbon_shapes() {
        assert_eq!(
            max_spin(&Partition::column(4), 4).unwrap(),
            HalfInt::from_twice(3)
        );
        assert_eq!(max_spin(&Partition::row(4), 4).unwrap(), HalfInt::ZERO);
        assert_eq!(
            enumerate_ribbon_tableaux(&Partition::row(3), 3, 1)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            llt_cospin(&Partition::row(3), 3, 2).unwrap(),
            SchurExpansion::single(partition![1])
        );
        assert!(matches!(
            llt_cospin(&partition![2], 3, 2),
            Err(Error::NonemptyCore(..))
        ));
    }

    #[test]
    fn hall_littlewood_small() {
        let q = modified_hall_littlewood(&partition![1, 1], 2).unwrap();
        assert_eq!(q.coefficient(&partition![2]), LaurentQPoly::q());
        assert_eq!(q.coefficient(&partition![1, 1]), LaurentQPoly::one());
    }

    #[test]
    fn composition_count() {
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }
}
