//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! A polynomial is a map from signed exponent vectors to nonzero [`Rational`]
//! coefficients. Keys are ordered graded-lexicographically (total absolute
//! degree first, then entrywise), so iteration, equality, and serialization
//! are canonical: two polynomials are equal exactly when they are the same
//! mathematical object.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::rational::Rational;

/// Exponent entries beyond this magnitude are rejected outright; the sizes
/// this crate works at stay orders of magnitude below it.
pub const MAX_EXPONENT: i64 = 1_000_000;

/// Signed exponent vector of a single monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    /// Panics if any entry exceeds [`MAX_EXPONENT`] in magnitude.
    pub fn new(exponents: Vec<i64>) -> Self {
        for &e in &exponents {
            assert!(
                e.abs() <= MAX_EXPONENT,
                "exponent {e} exceeds the supported magnitude {MAX_EXPONENT}"
            );
        }
        Self(exponents)
    }

    /// The all-zero vector in `d` variables.
    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    /// `x_i^e` as a vector: zero everywhere except entry `i` (0-based).
    pub fn unit(d: usize, i: usize, e: i64) -> Self {
        assert!(i < d, "variable index {i} out of range for dimension {d}");
        let mut v = vec![0; d];
        v[i] = e;
        Self::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Sum of absolute values of the entries.
    pub fn total_abs_degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    /// Sum of the (signed) entries.
    pub fn entry_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|e| -e).collect())
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self::new(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for ExpVec {
    /// Graded-lex: total absolute degree first, then entrywise comparison.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_abs_degree()
            .cmp(&other.total_abs_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse Laurent polynomial in a fixed number of variables.
///
/// Invariant: no stored coefficient is zero and every key has length equal to
/// the dimension, so derived equality is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    dimension: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl LaurentPoly {
    pub fn zero(dimension: usize) -> Self {
        assert!(dimension >= 1, "dimension must be at least 1");
        Self {
            dimension,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dimension: usize) -> Self {
        Self::constant(dimension, Rational::one())
    }

    pub fn constant(dimension: usize, c: Rational) -> Self {
        let mut p = Self::zero(dimension);
        if !c.is_zero() {
            p.terms.insert(ExpVec::zero(dimension), c);
        }
        p
    }

    pub fn monomial(dimension: usize, exp: ExpVec, c: Rational) -> Result<Self, Error> {
        let mut p = Self::zero(dimension);
        if exp.len() != dimension {
            return Err(Error::LengthMismatch {
                expected: dimension,
                got: exp.len(),
            });
        }
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        Ok(p)
    }

    /// Sums an arbitrary term list into canonical form, purging zeros.
    pub fn from_terms(
        dimension: usize,
        terms: impl IntoIterator<Item = (ExpVec, Rational)>,
    ) -> Result<Self, Error> {
        let mut p = Self::zero(dimension);
        for (exp, c) in terms {
            if exp.len() != dimension {
                return Err(Error::LengthMismatch {
                    expected: dimension,
                    got: exp.len(),
                });
            }
            p.accumulate(exp, c);
        }
        Ok(p)
    }

    /// The argument polynomial `(c/(2d)) * sum_i (x_i + 1/x_i)`.
    pub fn cheb_arg(c: &Rational, d: usize) -> Self {
        assert!(d >= 1, "need at least one variable");
        let scale = c / &Rational::from_int(2 * d as i64);
        let mut p = Self::zero(d);
        if scale.is_zero() {
            return p;
        }
        for i in 0..d {
            p.terms.insert(ExpVec::unit(d, i, 1), scale.clone());
            p.terms.insert(ExpVec::unit(d, i, -1), scale.clone());
        }
        p
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    fn check_dimension(&self, other: &Self) -> Result<(), Error> {
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                left: self.dimension,
                right: other.dimension,
            });
        }
        Ok(())
    }

    fn accumulate(&mut self, exp: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Termwise sum. Errors on dimension mismatch.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_dimension(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.accumulate(exp.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dimension);
        }
        Self {
            dimension: self.dimension,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Exact convolution over exponent vectors. Errors on dimension mismatch.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_dimension(other)?;
        let mut out = Self::zero(self.dimension);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.accumulate(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^e` by squaring; `p^0` is the constant one.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.dimension);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }

    /// The stored coefficient at `exp`, or exact zero when absent.
    pub fn coeff(&self, exp: &ExpVec) -> Result<Rational, Error> {
        if exp.len() != self.dimension {
            return Err(Error::LengthMismatch {
                expected: self.dimension,
                got: exp.len(),
            });
        }
        Ok(self.terms.get(exp).cloned().unwrap_or_else(Rational::zero))
    }

    /// Formal derivative; defined only in one variable.
    pub fn derivative(&self) -> Result<Self, Error> {
        if self.dimension != 1 {
            return Err(Error::NotUnivariate {
                dimension: self.dimension,
            });
        }
        let mut out = Self::zero(1);
        for (exp, c) in &self.terms {
            let k = exp.entries()[0];
            if k == 0 {
                continue;
            }
            out.accumulate(ExpVec::new(vec![k - 1]), c * &Rational::from_int(k));
        }
        Ok(out)
    }

    /// JSON form: `{"dimension": d, "terms": [{"exp": [...], "num": "...",
    /// "den": "..."}]}` with terms in graded-lex order and big integers as
    /// decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                json!({
                    "exp": e.entries(),
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        json!({ "dimension": self.dimension, "terms": terms })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &exp) in e.entries().iter().enumerate() {
                if exp != 0 {
                    write!(f, "*x{}^{}", j + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
