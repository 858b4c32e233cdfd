//! Exact sparse Laurent polynomials in `q` with half-integer exponents.
//!
//! Exponents are stored doubled, so the key `2e` stands for `q^e`. Spins of
//! ribbons are half-integers and this keeps every computation in integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The integer value, if there is one.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentQPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentQPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c q^e` for an integer exponent.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::monomial_half(c, HalfInt::from_int(exp))
    }

    pub fn monomial_half<C: Into<BigInt>>(c: C, exp: HalfInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exp.twice(), c.into());
        p
    }

    /// Builds a polynomial from `(coefficient, integer exponent)` pairs.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i64)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(2 * e, c.into());
        }
        p
    }

    /// Polynomial with `coeffs[i]` as the coefficient of `q^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, c)| (c, i as i64)),
        )
    }

    fn add_term(&mut self, twice_exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(twice_exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&twice_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (HalfInt, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (HalfInt(e), c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeff_half(HalfInt::from_int(exp))
    }

    pub fn coeff_half(&self, exp: HalfInt) -> BigInt {
        self.terms.get(&exp.twice()).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<HalfInt> {
        self.terms.keys().next().map(|&e| HalfInt(e))
    }

    pub fn max_exponent(&self) -> Option<HalfInt> {
        self.terms.keys().next_back().map(|&e| HalfInt(e))
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: HalfInt) -> Self {
        LaurentQPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift.twice(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_int(&self, k: i64) -> Self {
        self.shift(HalfInt::from_int(k))
    }

    /// `q^d p(q^{-1})`.
    pub fn bar_reverse(&self, d: HalfInt) -> Self {
        LaurentQPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (d.twice() - e, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q = 1` for the exponent but keeps the polynomial type:
    /// the result is the constant `p(1)`.
    pub fn specialize_one(&self) -> Self {
        Self::constant(self.eval_at_one())
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * &c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops every term with exponent `>= order`.
    pub fn truncate(&self, order: i64) -> Self {
        LaurentQPoly {
            terms: self
                .terms
                .range(..2 * order)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// `{ "2e": "coefficient" }`.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), Value::String(c.to_string())))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("polynomial JSON must be an object".into()))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad doubled exponent {k:?}")))?;
            let c: BigInt = v
                .as_str()
                .ok_or_else(|| Error::Parse("coefficients must be strings".into()))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {v}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Gaussian binomial coefficient `[m choose k]_q`; zero outside `0..=m`.
pub fn qbinomial(m: u64, k: i64) -> LaurentQPoly {
    if k < 0 || k as u64 > m {
        return LaurentQPoly::zero();
    }
    let k = (k as u64).min(m - k as u64) as usize;
    // Pascal rule [j, i] = [j-1, i-1] + q^i [j-1, i], one row at a time.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for j in 1..=m as usize {
        let width = k.min(j);
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(width + 1);
        for i in 0..=width {
            let mut coeffs: Vec<BigInt> = Vec::new();
            if i >= 1 {
                coeffs.clone_from(&row[i - 1]);
            }
            if i < row.len() {
                let src = &row[i];
                if coeffs.len() < src.len() + i {
                    coeffs.resize(src.len() + i, BigInt::zero());
                }
                for (d, c) in src.iter().enumerate() {
                    coeffs[d + i] += c;
                }
            }
            next.push(coeffs);
        }
        row = next;
    }
    LaurentQPoly::from_coeffs(&row[k])
}

impl fmt::Debug for LaurentQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQPoly({self})")
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, twice: i64) -> fmt::Result {
    match twice {
        2 => write!(f, "q"),
        e if e % 2 == 0 => write!(f, "q^{}", e / 2),
        e => write!(f, "q^({e}/2)"),
    }
}

impl fmt::Display for LaurentQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                fmt_power(f, e)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentQPoly> for &LaurentQPoly {
    type Output = LaurentQPoly;
    fn add(self, rhs: &'a LaurentQPoly) -> LaurentQPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQPoly {
    type Output = LaurentQPoly;
    fn add(mut self, rhs: LaurentQPoly) -> LaurentQPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentQPoly> for LaurentQPoly {
    fn add_assign(&mut self, rhs: &'a LaurentQPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentQPoly {
    fn add_assign(&mut self, rhs: LaurentQPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<'a> SubAssign<&'a LaurentQPoly> for LaurentQPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentQPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentQPoly> for &LaurentQPoly {
    type Output = LaurentQPoly;
    fn sub(self, rhs: &'a LaurentQPoly) -> LaurentQPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQPoly {
    type Output = LaurentQPoly;
    fn sub(mut self, rhs: LaurentQPoly) -> LaurentQPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentQPoly {
    type Output = LaurentQPoly;
    fn neg(self) -> LaurentQPoly {
        LaurentQPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentQPoly> for &LaurentQPoly {
    type Output = LaurentQPoly;
    fn mul(self, rhs: &'a LaurentQPoly) -> LaurentQPoly {
        let mut out = LaurentQPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentQPoly {
    type Output = LaurentQPoly;
    fn mul(self, rhs: LaurentQPoly) -> LaurentQPoly {
        &self * &rhs
    }
}
