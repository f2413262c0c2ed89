//! Exact Chebyshev polynomials of both kinds and the integer rescaling used
//! by the word census.
//!
//! Coefficients come from the three-term recurrence `f_{n+1} = 2x f_n -
//! f_{n-1}` with seeds `T_0 = 1, T_1 = x` and `U_0 = 1, U_1 = 2x`. The closed
//! form for single coefficients of `T_n` is implemented independently so the
//! two routes can check each other.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::Error;
use crate::laurent::{ExpVec, LaurentPoly};
use crate::rational::{binomial, Rational};

/// First kind (`T`) or second kind (`U`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum ChebKind {
    First,
    Second,
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChebKind::First => write!(f, "T"),
            ChebKind::Second => write!(f, "U"),
        }
    }
}

impl FromStr for ChebKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "T" | "t" => Ok(ChebKind::First),
            "U" | "u" => Ok(ChebKind::Second),
            other => Err(Error::InvalidRational(format!(
                "unknown polynomial kind {other:?}, expected T or U"
            ))),
        }
    }
}

/// Single-variable polynomial as a coefficient sequence, index = exponent,
/// trailing zeros trimmed. The empty sequence is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensePoly(Vec<Rational>);

impl DensePoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    /// Coefficient of `x^j`, exact zero beyond the stored degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.0.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The same polynomial as a one-variable Laurent polynomial.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            1,
            self.0
                .iter()
                .enumerate()
                .map(|(j, c)| (ExpVec::new(vec![j as i64]), c.clone())),
        )
        .expect("univariate exponents")
    }

    /// JSON array of decimal strings, index = exponent.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }
}

/// Exact coefficients of `T_n` or `U_n` by the three-term recurrence.
pub fn cheb_coeffs(kind: ChebKind, n: u32) -> DensePoly {
    let seed1 = match kind {
        ChebKind::First => Rational::one(),
        ChebKind::Second => Rational::from_int(2),
    };
    let mut prev = vec![Rational::one()];
    if n == 0 {
        return DensePoly::from_coeffs(prev);
    }
    let mut curr = vec![Rational::zero(), seed1];
    for _ in 1..n {
        // next = 2x * curr - prev
        let mut next = vec![Rational::zero(); curr.len() + 1];
        for (j, c) in curr.iter().enumerate() {
            next[j + 1] = c * &Rational::from_int(2);
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = curr;
        curr = next;
    }
    DensePoly::from_coeffs(curr)
}

/// Checks that a rational is an integer and unwraps it.
fn expect_integer(r: Rational, context: &str) -> Rational {
    assert!(r.is_integer(), "{context}: {r} is not an integer");
    r
}

/// Coefficient of `x^(n-2m)` in `T_n` by the closed form
/// `(-1)^m * (n/(n-m)) * binomial(n-m, m) * 2^(n-2m-1)`, asserted integral.
pub fn cheb_coeff_closed(n: u32, m: u32) -> Result<Rational, Error> {
    if n == 0 || m > n / 2 {
        return Err(Error::IndexOutOfRange { n, m });
    }
    let sign = if m.is_multiple_of(2) { 1 } else { -1 };
    let ratio = Rational::ratio(n as i64, (n - m) as i64);
    let binom = Rational::from_bigint(binomial((n - m) as i64, m as i64));
    let power = Rational::from_int(2).pow(n as i32 - 2 * m as i32 - 1);
    let value = Rational::from_int(sign) * ratio * binom * power;
    Ok(expect_integer(value, "closed-form Chebyshev coefficient"))
}

/// Integer coefficients of `2 * sqrt(s)^k * T_k(y / (2 sqrt(s)))` in `y`.
///
/// The square roots cancel termwise: the coefficient of `y^(k-2m)` is
/// `(-1)^m * (k/(k-m)) * binomial(k-m, m) * s^m`, always an integer. The
/// `k = 0` case is the constant 2.
pub fn scaled_t_coeffs(k: u32, s: u64) -> DensePoly {
    assert!(s >= 1, "scale parameter must be positive");
    if k == 0 {
        return DensePoly::from_coeffs(vec![Rational::from_int(2)]);
    }
    let mut coeffs = vec![Rational::zero(); k as usize + 1];
    let s_big = BigInt::from(s);
    let mut s_pow = BigInt::from(1);
    for m in 0..=k / 2 {
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let value = Rational::from_int(sign)
            * Rational::ratio(k as i64, (k - m) as i64)
            * Rational::from_bigint(binomial((k - m) as i64, m as i64))
            * Rational::from_bigint(s_pow.clone());
        coeffs[(k - 2 * m) as usize] = expect_integer(value, "rescaled Chebyshev coefficient");
        s_pow *= &s_big;
    }
    DensePoly::from_coeffs(coeffs)
}
