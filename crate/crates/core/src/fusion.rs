//! Affine Weyl group reduction to the alcove `Π^(n,l)` and restricted
//! (fusion) q-analogues.

use std::fmt;

use serde_json::Value;

use crate::abacus::from_core_and_quotient;
use crate::error::{Error, Result};
use crate::expansion::{schur_product, SchurExpansion};
use crate::llt::{llt_cospin, llt_spin, modified_hall_littlewood};
use crate::par;
use crate::partition::Partition;
use crate::qlaurent::LaurentQPoly;

/// Outcome of straightening `s_λ` into the level-restricted basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionResult {
    Zero,
    Term { sign: i8, z: u64, mu: Partition },
}

/// Which power of `q` stands for `t` in the `t`-equivalence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `t = q`: spin, charge.
    Spin,
    /// `t = 1/q`: cospin, cocharge.
    Cospin,
}

impl ReductionResult {
    /// `sign · t^{-z}` under the given convention.
    pub fn coefficient(&self, convention: Convention) -> LaurentQPoly {
        match self {
            ReductionResult::Zero => LaurentQPoly::zero(),
            ReductionResult::Term { sign, z, .. } => {
                let z = *z as i64;
                let e = match convention {
                    Convention::Spin => -z,
                    Convention::Cospin => z,
                };
                LaurentQPoly::monomial(*sign as i64, e)
            }
        }
    }
}

impl fmt::Display for ReductionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionResult::Zero => write!(f, "zero"),
            ReductionResult::Term { sign, z, mu } => {
                write!(f, "sign={sign:+} z={z} mu={mu}")
            }
        }
    }
}

fn check_level(n: usize, level_sum: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if level_sum < n + 1 {
        return Err(Error::InvalidParameter(format!(
            "L = {level_sum} must exceed n = {n} (level l = L - n >= 1)"
        )));
    }
    Ok(())
}

/// Straightens `λ` (at most `n` parts) modulo the affine Weyl group at
/// `L = n + l`.
///
/// Works on `β_i = λ_i + n - i`. Two β-numbers congruent modulo `L` give
/// zero. Otherwise the largest and smallest β are repeatedly replaced by
/// `(β_n + L, β_1 - L)` until `β_1 - β_n < L`, each step contributing
/// `β_1 - β_n - L` to `z` and a sign change, along with the signs of the
/// re-sorting permutations.
pub fn weyl_reduce(lambda: &Partition, n: usize, level_sum: usize) -> Result<ReductionResult> {
    check_level(n, level_sum)?;
    let big_l = level_sum as i64;
    let mut beta: Vec<i64> = lambda
        .padded(n)?
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + n - 1 - i) as i64)
        .collect();
    let mut residues: Vec<i64> = beta.iter().map(|b| b.rem_euclid(big_l)).collect();
    residues.sort_unstable();
    if residues.windows(2).any(|w| w[0] == w[1]) {
        return Ok(ReductionResult::Zero);
    }
    let mut sign = 1i8;
    let mut z = 0u64;
    loop {
        if sort_parity_desc(&mut beta) {
            sign = -sign;
        }
        let (hi, lo) = (beta[0], beta[n - 1]);
        if hi - lo < big_l {
            break;
        }
        beta[0] = lo + big_l;
        beta[n - 1] = hi - big_l;
        z += (hi - lo - big_l) as u64;
        sign = -sign;
    }
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (n - 1 - i) as i64) as usize)
        .collect();
    Ok(ReductionResult::Term {
        sign,
        z,
        mu: Partition::new(parts)?,
    })
}

/// Sorts strictly decreasing; returns whether the permutation was odd.
fn sort_parity_desc(v: &mut [i64]) -> bool {
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    odd
}

/// Linear combination of restricted classes `s̄_λ`, `λ ∈ Π^(n,l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedExpansion {
    n: usize,
    l: usize,
    terms: SchurExpansion,
}

impl RestrictedExpansion {
    pub fn new(n: usize, l: usize) -> Self {
        RestrictedExpansion {
            n,
            l,
            terms: SchurExpansion::new(),
        }
    }

    /// Wraps an expansion already supported on `Π^(n,l)`.
    pub fn from_restricted(n: usize, l: usize, terms: SchurExpansion) -> Result<Self> {
        if let Some((lambda, _)) = terms.iter().find(|(lambda, _)| !lambda.is_restricted(n, l)) {
            return Err(Error::NotRestricted(lambda.to_string(), n, l));
        }
        Ok(RestrictedExpansion { n, l, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn coefficient(&self, lambda: &Partition) -> LaurentQPoly {
        self.terms.coefficient(lambda)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &LaurentQPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_expansion(&self) -> &SchurExpansion {
        &self.terms
    }

    pub fn specialize_one(&self) -> Self {
        RestrictedExpansion {
            n: self.n,
            l: self.l,
            terms: self.terms.specialize_one(),
        }
    }

    pub fn to_json(&self) -> Value {
        self.terms.to_json()
    }
}

impl fmt::Display for RestrictedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.terms.fmt(f)
    }
}

/// Replaces every `s_λ` by its restricted class; `None` drops the powers of `t`.
fn reduce_with(
    e: &SchurExpansion,
    n: usize,
    l: usize,
    convention: Option<Convention>,
) -> Result<RestrictedExpansion> {
    check_level(n, n + l)?;
    let terms: Vec<(&Partition, &LaurentQPoly)> = e.iter().collect();
    let reduced = par::map(&terms, |(lambda, _)| weyl_reduce(lambda, n, n + l));
    let mut out = SchurExpansion::new();
    for ((_, c), red) in terms.into_iter().zip(reduced) {
        let red = red?;
        if let ReductionResult::Term { sign, ref mu, .. } = red {
            let factor = match convention {
                Some(conv) => red.coefficient(conv),
                None => LaurentQPoly::constant(sign as i64),
            };
            out.add_term(mu.clone(), c * &factor);
        }
    }
    Ok(RestrictedExpansion { n, l, terms: out })
}

pub fn reduce_expansion(
    e: &SchurExpansion,
    n: usize,
    l: usize,
    convention: Convention,
) -> Result<RestrictedExpansion> {
    reduce_with(e, n, l, Some(convention))
}

fn check_factors(factors: &[Partition], n: usize) -> Result<()> {
    if let Some(f) = factors.iter().find(|f| f.len() > n) {
        return Err(Error::TooLong {
            len: f.len(),
            max: n,
        });
    }
    Ok(())
}

/// `G̃` of the shape with empty core whose quotient is `factors`, in the
/// given convention.
fn llt_of_factors(
    factors: &[Partition],
    n: usize,
    convention: Convention,
) -> Result<SchurExpansion> {
    let r = factors.len();
    if r == 0 {
        return Ok(SchurExpansion::single(Partition::empty()));
    }
    let shape = from_core_and_quotient(&Partition::empty(), factors, r)?;
    match convention {
        Convention::Cospin => llt_cospin(&shape, r, n),
        Convention::Spin => llt_spin(&shape, r, n),
    }
}

/// q-fusion product `s̄_{f_1} ⋯ s̄_{f_r}` at level `l` in `n` variables.
pub fn q_fusion_product(
    factors: &[Partition],
    n: usize,
    l: usize,
    convention: Convention,
) -> Result<RestrictedExpansion> {
    check_factors(factors, n)?;
    reduce_expansion(&llt_of_factors(factors, n, convention)?, n, l, convention)
}

/// Classical fusion product.
pub fn fusion_product_classical(
    factors: &[Partition],
    n: usize,
    l: usize,
) -> Result<RestrictedExpansion> {
    check_factors(factors, n)?;
    reduce_with(&schur_product(factors, n), n, l, None)
}

/// `Q̄'_μ`: the reduced modified Hall–Littlewood function (`t = q`).
pub fn restricted_hall_littlewood(
    mu: &Partition,
    n: usize,
    l: usize,
) -> Result<RestrictedExpansion> {
    reduce_expansion(&modified_hall_littlewood(mu, n)?, n, l, Convention::Spin)
}

/// Restricted Kostka polynomial `K̄_{λμ}(q)`.
pub fn restricted_kostka(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    l: usize,
) -> Result<LaurentQPoly> {
    if !lambda.is_restricted(n, l) {
        return Err(Error::NotRestricted(lambda.to_string(), n, l));
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(restricted_hall_littlewood(mu, n, l)?.coefficient(lambda))
}

/// Bilinear extension of a product on basis pairs.
fn multiply_with(
    a: &RestrictedExpansion,
    b: &RestrictedExpansion,
    pair: impl Fn(&Partition, &Partition) -> Result<RestrictedExpansion>,
) -> Result<RestrictedExpansion> {
    let mut out = SchurExpansion::new();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            let coeff = cx * cy;
            for (nu, c) in pair(x, y)?.iter() {
                out.add_term(nu.clone(), &coeff * c);
            }
        }
    }
    Ok(RestrictedExpansion {
        n: a.n,
        l: a.l,
        terms: out,
    })
}

impl RestrictedExpansion {
    /// Product in the classical fusion ring.
    pub fn fusion_mul(&self, other: &Self) -> Result<Self> {
        multiply_with(self, other, |x, y| {
            fusion_product_classical(&[x.clone(), y.clone()], self.n, self.l)
        })
    }

    /// Product using q-fusion coefficients of basis pairs.
    pub fn q_fusion_mul(&self, other: &Self, convention: Convention) -> Result<Self> {
        multiply_with(self, other, |x, y| {
            q_fusion_product(&[x.clone(), y.clone()], self.n, self.l, convention)
        })
    }
}
