//! Virasoro minimal-model characters and the large-`N` limit of restricted
//! sl₂ Kostka polynomials.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::apps::sl2::{kbar_skew_closed, skew_normalization};
use crate::error::{Error, Result};
use crate::qlaurent::LaurentQPoly;

/// A power series known exactly below `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeriesTruncation {
    order: i64,
    terms: LaurentQPoly,
}

impl QSeriesTruncation {
    /// Drops every term of exponent `>= order`.
    pub fn new(terms: &LaurentQPoly, order: i64) -> Self {
        QSeriesTruncation {
            order,
            terms: terms.truncate(order),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> &LaurentQPoly {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.coeff(exp)
    }

    /// Smallest exponent below both orders where the coefficients differ.
    pub fn first_difference(&self, other: &QSeriesTruncation) -> Option<i64> {
        let order = self.order.min(other.order);
        let diff = (&self.terms - &other.terms).truncate(order);
        diff.min_exponent()
            .map(|e| e.to_integer().expect("integral series"))
    }
}

/// Label `(m; r, s)` of the minimal model `M(m, m+1)`.
///
/// Accepts `1 <= r, s <= m`, a superset of the standard range
/// `1 <= s <= r <= m - 1`. Labels with `r = m` have zero character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VirasoroLabel {
    m: u32,
    r: u32,
    s: u32,
}

impl VirasoroLabel {
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        if m < 2 || !(1..=m).contains(&r) || !(1..=m).contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "invalid Virasoro label m={m} r={r} s={s}"
            )));
        }
        Ok(VirasoroLabel { m, r, s })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `c = 1 - 6 / (m (m + 1))`.
    pub fn central_charge(&self) -> Ratio<i64> {
        let m = self.m as i64;
        Ratio::from_integer(1) - Ratio::new(6, m * (m + 1))
    }

    /// `h_{r,s} = ([(m+1) r - m s]^2 - 1) / (4 m (m + 1))`.
    pub fn conformal_weight(&self) -> Ratio<i64> {
        let (m, r, s) = (self.m as i64, self.r as i64, self.s as i64);
        let x = (m + 1) * r - m * s;
        Ratio::new(x * x - 1, 4 * m * (m + 1))
    }
}

/// Coefficients of `1/φ(q) = Σ p(k) q^k` for `k < order`, via Euler's
/// pentagonal number recurrence.
fn inverse_euler(order: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); order];
    if order == 0 {
        return p;
    }
    p[0] = BigInt::from(1);
    for k in 1..order {
        let mut acc = BigInt::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let positive = j % 2 == 1;
            for g in [g1, g1 + j] {
                if g <= k {
                    if positive {
                        acc += &p[k - g];
                    } else {
                        acc -= &p[k - g];
                    }
                }
            }
        }
        p[k] = acc;
    }
    p
}

/// `q^{-h} χ^{(m)}_{r,s}(q)` below `order`, by the Rocha-Caridi formula.
pub fn rocha_caridi(label: VirasoroLabel, order: i64) -> Result<QSeriesTruncation> {
    if order < 1 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    let (m, r, s) = (label.m as i64, label.r as i64, label.s as i64);
    let den = 4 * m * (m + 1);
    let y = (m + 1) * r - m * s;
    let mut theta = LaurentQPoly::zero();
    let reach = order + 2;
    for n in -reach..=reach {
        for (sign, x) in [
            (1, 2 * m * (m + 1) * n + (m + 1) * r - m * s),
            (-1, 2 * m * (m + 1) * n + (m + 1) * r + m * s),
        ] {
            let num = x * x - y * y;
            debug_assert_eq!(num % den, 0);
            let e = num / den;
            if e < order {
                theta += LaurentQPoly::monomial(sign, e);
            }
        }
    }
    let low = theta
        .min_exponent()
        .map_or(0, |e| e.to_integer().unwrap().min(0));
    let euler = LaurentQPoly::from_coeffs(&inverse_euler((order - low) as usize));
    Ok(QSeriesTruncation::new(&(&theta * &euler), order))
}

/// Outcome of comparing the normalized `k̄_{(N+b,N)/(a)}` with its limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub order: i64,
    pub first_mismatch: Option<i64>,
}

impl LimitReport {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Largest order for which the normalized `k̄_{(N+b,N)/(a)}` is known to
/// have stabilized: `N - 1 - max(a - b, 0)`.
pub fn stabilization_window(a: usize, b: usize, big_n: usize) -> Option<usize> {
    (big_n + b).checked_sub(1 + a.max(b))
}

/// Compares `q^{-N(N+b-a-1)-(b-a)(b-a-1)/2} k̄_{(N+b,N)/(a)}(q)` with
/// `q^{-h} χ^{(L-1)}_{a+1,b+1}(q)` through `q^order`.
///
/// Orders beyond [`stabilization_window`] are refused.
pub fn virasoro_limit_check(
    a: usize,
    b: usize,
    level_sum: usize,
    big_n: usize,
    order: usize,
) -> Result<LimitReport> {
    match stabilization_window(a, b, big_n) {
        Some(w) if order <= w => {}
        w => {
            return Err(Error::InvalidParameter(format!(
                "order {order} exceeds the stabilization window {} for N={big_n} a={a} b={b}",
                w.map_or("(empty)".to_string(), |w| w.to_string())
            )))
        }
    }
    let kbar =
        kbar_skew_closed(big_n, b, a, level_sum)?.shift_int(-skew_normalization(big_n, b, a));
    let label = VirasoroLabel::new((level_sum - 1) as u32, (a + 1) as u32, (b + 1) as u32)?;
    let cutoff = order as i64 + 1;
    let lhs = QSeriesTruncation::new(&kbar, cutoff);
    let rhs = rocha_caridi(label, cutoff)?;
    Ok(LimitReport {
        order: order as i64,
        first_mismatch: lhs.first_difference(&rhs),
    })
}
