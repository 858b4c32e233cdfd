//! Closed forms for two-row (sl₂) Kostka polynomials.

use crate::error::{Error, Result};
use crate::qlaurent::{qbinomial, LaurentQPoly};

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `K_{(λ₁,λ₂),(1^{λ₁+λ₂})}(q)` as a difference of two Gaussian binomials.
pub fn kostka_two_row(l1: usize, l2: usize) -> Result<LaurentQPoly> {
    if l1 < l2 {
        return Err(Error::NotPartition(vec![l1, l2]));
    }
    Ok(two_row(l1 as i64, l2 as i64))
}

fn two_row(l1: i64, l2: i64) -> LaurentQPoly {
    let m = (l1 + l2) as u64;
    let first = qbinomial(m, l1).shift_int(choose2(l1) + choose2(l2));
    let second = qbinomial(m, l1 + 1).shift_int(choose2(l1 + 1) + choose2(l2 - 1));
    first - second
}

fn check_range(b: usize, a: usize, level_sum: usize) -> Result<()> {
    if level_sum < 3 {
        return Err(Error::InvalidParameter(format!(
            "L = {level_sum} must be at least 3"
        )));
    }
    if b > level_sum - 2 || a > level_sum - 2 {
        return Err(Error::InvalidParameter(format!(
            "a = {a} and b = {b} must be at most L - 2 = {}",
            level_sum - 2
        )));
    }
    Ok(())
}

/// Range of summation indices `n` outside which every Gaussian binomial
/// with top `top` and bottom `centre ± L n` vanishes.
fn index_range(top: i64, level_sum: i64) -> std::ops::RangeInclusive<i64> {
    let k = top / level_sum + 2;
    -k..=k
}

/// Restricted Kostka polynomial `k̄_{(N+b,N)}(q)` for `L = l + 2`.
pub fn kbar_closed(big_n: usize, b: usize, level_sum: usize) -> Result<LaurentQPoly> {
    check_range(b, 0, level_sum)?;
    let (nn, b, l) = (big_n as i64, b as i64, level_sum as i64);
    let top = (2 * nn + b) as u64;
    let mut sum = LaurentQPoly::zero();
    for n in index_range(top as i64, l) {
        sum += &qbinomial(top, nn - l * n).shift_int(n * (l * (l - 1) * n + l * b - b - 1));
        sum -= &qbinomial(top, nn - l * n - 1)
            .shift_int(n * (l * (l - 1) * n + l * b + 2 * l - b - 1) + b + 1);
    }
    Ok(sum.shift_int(nn * (nn + b - 1) + b * (b - 1) / 2))
}

/// Restricted skew Kostka polynomial `k̄_{(N+b,N)/(a)}(q)`.
pub fn kbar_skew_closed(
    big_n: usize,
    b: usize,
    a: usize,
    level_sum: usize,
) -> Result<LaurentQPoly> {
    check_range(b, a, level_sum)?;
    let (nn, b, a, l) = (big_n as i64, b as i64, a as i64, level_sum as i64);
    if 2 * nn + b - a < 0 {
        return Ok(LaurentQPoly::zero());
    }
    let top = (2 * nn + b - a) as u64;
    let mut sum = LaurentQPoly::zero();
    for n in index_range(top as i64, l) {
        sum +=
            &qbinomial(top, nn - l * n).shift_int(n * (l * (l - 1) * n + (l - 1) * b - l * a - 1));
        sum -=
            &qbinomial(top, nn + l * n + b + 1).shift_int(((l - 1) * n + a + 1) * (l * n + b + 1));
    }
    Ok(sum.shift_int(skew_normalization(big_n, b as usize, a as usize)))
}

/// Exponent `N(N+b-a-1) + (b-a)(b-a-1)/2` of the leading power of `k̄_{(N+b,N)/(a)}`.
pub(crate) fn skew_normalization(big_n: usize, b: usize, a: usize) -> i64 {
    let (nn, d) = (big_n as i64, b as i64 - a as i64);
    nn * (nn + d - 1) + d * (d - 1) / 2
}
