//! β-numbers, the `r`-abacus, and the `r`-core / `r`-quotient bijection.
//!
//! Conventions: for a partition `λ` padded to length `n` the β-numbers are
//! `β_i = λ_i + n - i` (1-based `i`). On the `r`-abacus, runner `i` holds
//! the β-numbers congruent to `i` modulo `r`; bead `β` sits at position
//! `β div r`. Quotient component `i` is the partition read off runner `i`
//! from its bead positions. The padding `n` is always a multiple of `r`, so
//! adding `r` to it shifts every runner by one position and leaves the
//! labelling of the runners unchanged. With this convention
//! `(6,6,6,3,3,3)` has empty 3-core and 3-quotient `((2,1),(2,1),(2,1))`.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Strictly decreasing β-numbers of a partition padded to a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSequence(Vec<usize>);

impl BetaSequence {
    pub fn new(betas: Vec<usize>) -> Result<Self> {
        if betas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "β-numbers {betas:?} are not strictly decreasing"
            )));
        }
        Ok(BetaSequence(betas))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn beta_numbers(lambda: &Partition, n: usize) -> Result<BetaSequence> {
    let padded = lambda.padded(n)?;
    Ok(BetaSequence(
        padded
            .iter()
            .enumerate()
            .map(|(i, p)| p + n - 1 - i)
            .collect(),
    ))
}

pub fn from_beta(betas: &BetaSequence) -> Partition {
    let n = betas.len();
    Partition::from_sorted(
        betas
            .0
            .iter()
            .enumerate()
            .map(|(i, b)| b + 1 + i - n)
            .collect(),
    )
}

/// Partition from an arbitrary set of distinct β-numbers (any order).
pub(crate) fn partition_from_beta_set(betas: &mut [usize]) -> Partition {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let n = betas.len();
    Partition::from_sorted(
        betas
            .iter()
            .enumerate()
            .map(|(i, b)| b + 1 + i - n)
            .collect(),
    )
}

/// Smallest multiple of `r` that is at least `len`.
pub fn default_padding(len: usize, r: usize) -> usize {
    len.div_ceil(r) * r
}

/// Bead positions on each runner, each list in decreasing order.
pub(crate) fn runners(lambda: &Partition, r: usize) -> Vec<Vec<usize>> {
    let n = default_padding(lambda.len(), r);
    let betas = beta_numbers(lambda, n).expect("padding covers the length");
    let mut runners = vec![Vec::new(); r];
    for &b in betas.as_slice() {
        runners[b % r].push(b / r);
    }
    runners
}

/// Partition read from a decreasing list of bead positions.
pub(crate) fn partition_from_positions(positions: &[usize]) -> Partition {
    let c = positions.len();
    Partition::from_sorted(
        positions
            .iter()
            .enumerate()
            .map(|(j, p)| p + 1 + j - c)
            .collect(),
    )
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    Ok(())
}

pub fn r_core(lambda: &Partition, r: usize) -> Result<Partition> {
    check_r(r)?;
    let mut betas: Vec<usize> = runners(lambda, r)
        .iter()
        .enumerate()
        .flat_map(|(i, beads)| (0..beads.len()).map(move |k| i + r * k))
        .collect();
    Ok(partition_from_beta_set(&mut betas))
}

pub fn r_quotient(lambda: &Partition, r: usize) -> Result<Vec<Partition>> {
    check_r(r)?;
    Ok(runners(lambda, r)
        .iter()
        .map(|beads| partition_from_positions(beads))
        .collect())
}

pub fn is_r_core(lambda: &Partition, r: usize) -> Result<bool> {
    Ok(&r_core(lambda, r)? == lambda)
}

/// Inverse of `(r_core, r_quotient)`.
pub fn from_core_and_quotient(
    core: &Partition,
    quotient: &[Partition],
    r: usize,
) -> Result<Partition> {
    check_r(r)?;
    if quotient.len() != r {
        return Err(Error::QuotientArity {
            expected: r,
            got: quotient.len(),
        });
    }
    if !is_r_core(core, r)? {
        return Err(Error::NotCore(core.to_string(), r));
    }
    let counts: Vec<usize> = runners(core, r).iter().map(Vec::len).collect();
    // one extra bead per runner for each additional r of padding
    let extra = quotient
        .iter()
        .zip(&counts)
        .map(|(q, &c)| q.len().saturating_sub(c))
        .max()
        .unwrap_or(0);
    let mut betas = Vec::new();
    for (i, (q, &c)) in quotient.iter().zip(&counts).enumerate() {
        let c = c + extra;
        for j in 0..c {
            let pos = q.part(j) + c - 1 - j;
            betas.push(i + r * pos);
        }
    }
    Ok(partition_from_beta_set(&mut betas))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::partitions_of;
    use proptest::prelude::*;

    #[test]
    fn beta_examples() {
        assert_eq!(
            beta_numbers(&partition![6, 4, 4], 3).unwrap().as_slice(),
            &[8, 5, 4]
        );
        assert_eq!(
            beta_numbers(&partition![], 3).unwrap().as_slice(),
            &[2, 1, 0]
        );
        assert!(beta_numbers(&partition![1, 1, 1], 2).is_err());
        assert_eq!(
            from_beta(&BetaSequence::new(vec![8, 5, 4]).unwrap()),
            partition![6, 4, 4]
        );
        assert!(BetaSequence::new(vec![3, 3]).is_err());
    }

    #[test]
    fn core_quotient_examples() {
        assert_eq!(r_core(&partition![3, 1], 2).unwrap(), partition![]);
        let l = partition![6, 6, 6, 3, 3, 3];
        assert_eq!(r_core(&l, 3).unwrap(), partition![]);
        assert_eq!(r_quotient(&l, 3).unwrap(), vec![partition![2, 1]; 3]);
        assert_eq!(
            from_core_and_quotient(
                &partition![],
                &[partition![2, 1], partition![2, 1], partition![2, 1]],
                3
            )
            .unwrap(),
            l
        );
        assert_eq!(r_quotient(&partition![], 4).unwrap(), vec![partition![]; 4]);
        let core = partition![2];
        assert!(is_r_core(&core, 3).unwrap());
        assert_eq!(
            from_core_and_quotient(&core, &[partition![], partition![], partition![]], 3).unwrap(),
            core
        );
        assert!(matches!(
            from_core_and_quotient(&partition![3], &[partition![], partition![]], 2),
            Err(Error::NotCore(..))
        ));
        assert!(matches!(
            from_core_and_quotient(&partition![], &[partition![]], 2),
            Err(Error::QuotientArity { .. })
        ));
        assert!(r_core(&partition![1], 0).is_err());
    }

    #[test]
    fn cores_are_fixed_points() {
        for n in 0..12 {
            for l in partitions_of(n) {
                for r in 1..5 {
                    let c = r_core(&l, r).unwrap();
                    assert_eq!(r_core(&c, r).unwrap(), c);
                }
            }
        }
    }

    fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0usize..=max_size, 0..8).prop_filter_map("too big", move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let p = Partition::new(v).ok()?;
            (p.size() <= max_size).then_some(p)
        })
    }

    proptest! {
        #[test]
        fn beta_roundtrip(l in arb_partition(30), extra in 0usize..4) {
            let n = l.len() + extra;
            prop_assert_eq!(from_beta(&beta_numbers(&l, n).unwrap()), l);
        }

        #[test]
        fn core_quotient_bijection(l in arb_partition(30), r in 1usize..=5) {
            let core = r_core(&l, r).unwrap();
            let quot = r_quotient(&l, r).unwrap();
            let qsize: usize = quot.iter().map(Partition::size).sum();
            prop_assert_eq!(l.size(), core.size() + r * qsize);
            prop_assert_eq!(from_core_and_quotient(&core, &quot, r).unwrap(), l);
        }
    }
}
