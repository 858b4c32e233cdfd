//! Dimensions of spaces of nonabelian theta functions as constant terms of
//! `ω^g` in the fusion ring `F^(n,l) / (s_{1^n} - 1)`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::fusion::{fusion_product_classical, q_fusion_product, Convention};
use crate::partition::{partitions_bounded, Partition};
use crate::qlaurent::LaurentQPoly;

fn check(n: usize, l: usize) -> Result<()> {
    if n < 1 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1 and l >= 1, got n={n} l={l}"
        )));
    }
    Ok(())
}

/// `λ* = -w₀(λ)`: with `λ_n = 0` after removing full columns,
/// `λ*_i = λ_1 - λ_{n+1-i}`.
pub fn dual_label(lambda: &Partition, n: usize, l: usize) -> Result<Partition> {
    check(n, l)?;
    if !lambda.is_restricted(n, l) {
        return Err(Error::NotRestricted(lambda.to_string(), n, l));
    }
    let lambda = lambda.drop_columns(n);
    let top = lambda.part(0);
    Partition::new((1..=n).map(|i| top - lambda.part(n - i)).collect())
}

/// The pairs `(λ, λ*)` for `λ ⊆ (l^{n-1})`.
pub fn omega(n: usize, l: usize) -> Result<Vec<(Partition, Partition)>> {
    check(n, l)?;
    let mut out = Vec::new();
    for size in 0..=l * (n - 1) {
        for lambda in partitions_bounded(size, n - 1, l) {
            let dual = dual_label(&lambda, n, l)?;
            out.push((lambda, dual));
        }
    }
    Ok(out)
}

/// Fusion ring with `s_{1^n} = 1`, multiplying basis pairs through a cache.
struct NormalizedRing {
    n: usize,
    l: usize,
    q: bool,
    cache: HashMap<(Partition, Partition), SchurExpansion>,
}

impl NormalizedRing {
    fn pair(&mut self, x: &Partition, y: &Partition) -> Result<SchurExpansion> {
        let key = (x.clone(), y.clone());
        if let Some(e) = self.cache.get(&key) {
            return Ok(e.clone());
        }
        let factors = [x.clone(), y.clone()];
        let product = if self.q {
            q_fusion_product(&factors, self.n, self.l, Convention::Cospin)?
        } else {
            fusion_product_classical(&factors, self.n, self.l)?
        };
        let mut e = SchurExpansion::new();
        for (nu, c) in product.iter() {
            e.add_term(nu.drop_columns(self.n), c.clone());
        }
        self.cache.insert(key, e.clone());
        Ok(e)
    }

    fn mul(&mut self, a: &SchurExpansion, b: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::new();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let c = cx * cy;
                for (nu, d) in self.pair(x, y)?.iter() {
                    out.add_term(nu.clone(), &c * d);
                }
            }
        }
        Ok(out)
    }

    fn omega(&mut self) -> Result<SchurExpansion> {
        let mut w = SchurExpansion::new();
        for (lambda, dual) in omega(self.n, self.l)? {
            w.add_assign(&self.pair(&lambda, &dual)?);
        }
        Ok(w)
    }

    /// Constant term of `ω^g`, multiplying left to right.
    fn constant_term(&mut self, g: u32) -> Result<LaurentQPoly> {
        if g == 0 {
            return Err(Error::InvalidParameter("genus must be at least 1".into()));
        }
        let w = self.omega()?;
        let mut acc = w.clone();
        for _ in 1..g {
            acc = self.mul(&acc, &w)?;
        }
        Ok(acc.coefficient(&Partition::empty()))
    }
}

fn ring(n: usize, l: usize, q: bool) -> Result<NormalizedRing> {
    check(n, l)?;
    Ok(NormalizedRing {
        n,
        l,
        q,
        cache: HashMap::new(),
    })
}

/// `h⁰(L^l)` on a genus `g` curve for rank `n`.
pub fn theta_dim(n: usize, l: usize, g: u32) -> Result<BigInt> {
    Ok(ring(n, l, false)?.constant_term(g)?.eval_at_one())
}

/// The q-analogue of [`theta_dim`] built from cospin q-fusion coefficients.
pub fn theta_qdim(n: usize, l: usize, g: u32) -> Result<LaurentQPoly> {
    ring(n, l, true)?.constant_term(g)
}

/// `ω^g` computed with the given bracketing, as a check of associativity:
/// `split` multiplies `ω^k · ω^{g-k}`.
pub fn theta_dim_split(n: usize, l: usize, g: u32, k: u32, q: bool) -> Result<LaurentQPoly> {
    if k == 0 || k >= g {
        return Err(Error::InvalidParameter(format!(
            "split point {k} must lie in 1..{g}"
        )));
    }
    let mut ring = ring(n, l, q)?;
    let w = ring.omega()?;
    let power = |ring: &mut NormalizedRing, e: u32| -> Result<SchurExpansion> {
        let mut acc = w.clone();
        for _ in 1..e {
            acc = ring.mul(&acc, &w)?;
        }
        Ok(acc)
    };
    let left = power(&mut ring, k)?;
    let right = power(&mut ring, g - k)?;
    Ok(ring.mul(&left, &right)?.coefficient(&Partition::empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn duals() {
        assert_eq!(
            dual_label(&partition![2, 1], 3, 2).unwrap(),
            partition![2, 1]
        );
        assert_eq!(dual_label(&partition![2], 3, 2).unwrap(), partition![2, 2]);
        assert_eq!(
            dual_label(&partition![3, 1, 1], 3, 2).unwrap(),
            partition![2, 2]
        );
        assert_eq!(omega(2, 2).unwrap().len(), 3);
        assert_eq!(omega(3, 1).unwrap().len(), 3);
    }

    #[test]
    fn rank_two_level_one() {
        for g in 1..4 {
            assert_eq!(theta_dim(2, 1, g).unwrap(), BigInt::from(1u32 << g));
            assert_eq!(
                theta_qdim(2, 1, g).unwrap(),
                LaurentQPoly::from_coeffs(&[1, 1]).pow(g)
            );
        }
    }
}
