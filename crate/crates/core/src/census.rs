//! Counting cyclically reduced words per homology class, two ways.
//!
//! The brute-force backend enumerates words by depth-first backtracking,
//! never extending a word with the inverse of its last letter and refusing a
//! final letter that cancels the first. The generating-function backend never
//! touches a word: it expands an integer-rescaled Chebyshev polynomial at
//! `sum_i (x_i + 1/x_i)` and reads counts off the coefficients. The two
//! backends agree; that agreement is the headline check of this crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::chebyshev::scaled_t_coeffs;
use crate::error::Error;
use crate::expansion::compose_dense;
use crate::laurent::{ExpVec, LaurentPoly};
use crate::rational::Rational;

/// Default node budget for the brute-force enumerator.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Generator sign: the generator itself or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One letter of a word: a 1-based generator index and a sign.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Letter {
    pub generator: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        Self { generator, sign }
    }

    pub fn inverse(self) -> Self {
        Self {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    /// True when the two letters cancel when adjacent.
    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// A letter sequence in the free group of the given rank. Reducedness is a
/// predicate on words, not a structural invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    pub letters: Vec<Letter>,
    pub rank: usize,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<Letter>) -> Self {
        Self { letters, rank }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Signed exponent sums of a word: its image in `Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomologyVector(Vec<i64>);

impl HomologyVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    fn total_abs(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }
}

impl Ord for HomologyVector {
    /// Graded-lex, matching the polynomial term order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_abs()
            .cmp(&other.total_abs())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for HomologyVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HomologyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Map from homology class to the number of cyclically reduced words in it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusMap {
    rank: usize,
    counts: BTreeMap<HomologyVector, BigUint>,
}

impl CensusMap {
    fn new(rank: usize) -> Self {
        Self {
            rank,
            counts: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Count for a class; zero when absent.
    pub fn count(&self, class: &HomologyVector) -> BigUint {
        self.counts.get(class).cloned().unwrap_or_default()
    }

    /// Nonzero classes in graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&HomologyVector, &BigUint)> {
        self.counts.iter()
    }

    pub fn num_classes(&self) -> usize {
        self.counts.len()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    fn insert(&mut self, class: HomologyVector, count: BigUint) {
        if !count.is_zero() {
            self.counts.insert(class, count);
        }
    }

    fn bump(&mut self, class: &[i64]) {
        *self
            .counts
            .entry(HomologyVector::new(class.to_vec()))
            .or_default() += BigUint::one();
    }

    /// JSON rows `[{"e": [ints], "count": "str"}, ...]` in graded-lex order.
    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.counts
                .iter()
                .map(|(e, c)| json!({ "e": e.entries(), "count": c.to_string() }))
                .collect(),
        )
    }
}

/// True iff no adjacent pair, including the wrap-around pair for words of
/// length at least 2, is a letter followed by its inverse. The empty word and
/// all single letters count as cyclically reduced.
pub fn is_cyclically_reduced(word: &Word) -> Result<bool, Error> {
    for letter in &word.letters {
        if letter.generator == 0 || letter.generator > word.rank {
            return Err(Error::LetterOutOfRank {
                generator: letter.generator,
                rank: word.rank,
            });
        }
    }
    let n = word.len();
    for i in 1..n {
        if word.letters[i - 1].cancels(word.letters[i]) {
            return Ok(false);
        }
    }
    // Wrap-around pair; cancellation is symmetric, so for n == 2 the
    // adjacent check above already covered it.
    if n > 2 && word.letters[n - 1].cancels(word.letters[0]) {
        return Ok(false);
    }
    Ok(true)
}

/// Signed count of each generator. Panics on letters outside the rank.
pub fn abelianize(word: &Word) -> HomologyVector {
    let mut sums = vec![0i64; word.rank];
    for letter in &word.letters {
        assert!(
            letter.generator >= 1 && letter.generator <= word.rank,
            "letter out of rank"
        );
        sums[letter.generator - 1] += letter.sign.as_i64();
    }
    HomologyVector::new(sums)
}

/// Number of reduced-prefix leaves the enumerator would visit.
fn enumeration_size(r: usize, k: u32) -> BigUint {
    BigUint::from(2 * r) * BigUint::from(2 * r - 1).pow(k - 1)
}

/// Exact counts per homology class by depth-first backtracking.
///
/// Rejects upfront when the search, sized at `2r * (2r-1)^(k-1)` leaves,
/// exceeds `budget` nodes.
pub fn census_bruteforce(r: usize, k: u32, budget: u64) -> Result<CensusMap, Error> {
    assert!(r >= 1, "rank must be at least 1");
    assert!(k >= 1, "length must be at least 1");
    let required = enumeration_size(r, k);
    if required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: required.to_string(),
            budget,
        });
    }

    let mut letters = Vec::with_capacity(2 * r);
    for g in 1..=r {
        letters.push(Letter::new(g, Sign::Plus));
        letters.push(Letter::new(g, Sign::Minus));
    }

    let mut census = CensusMap::new(r);
    let mut sums = vec![0i64; r];
    for (first_idx, &first) in letters.iter().enumerate() {
        sums[first.generator - 1] += first.sign.as_i64();
        descend(&letters, k, 1, first_idx, first_idx, &mut sums, &mut census);
        sums[first.generator - 1] -= first.sign.as_i64();
    }
    Ok(census)
}

fn descend(
    letters: &[Letter],
    k: u32,
    depth: u32,
    first_idx: usize,
    prev_idx: usize,
    sums: &mut Vec<i64>,
    census: &mut CensusMap,
) {
    if depth == k {
        census.bump(sums);
        return;
    }
    let forbidden_prev = letters[prev_idx].inverse();
    let last = depth == k - 1;
    let forbidden_first = letters[first_idx].inverse();
    for (idx, &letter) in letters.iter().enumerate() {
        if letter == forbidden_prev || (last && letter == forbidden_first) {
            continue;
        }
        sums[letter.generator - 1] += letter.sign.as_i64();
        descend(letters, k, depth + 1, first_idx, idx, sums, census);
        sums[letter.generator - 1] -= letter.sign.as_i64();
    }
}

/// Exact counts per homology class by coefficient extraction.
///
/// Expands the integer-rescaled degree-`k` Chebyshev polynomial at `Y = sum_i
/// (x_i + 1/x_i)` over `Z`, then adds `(r-1)(1 + (-1)^k)` to the zero class.
/// Every resulting coefficient must be a non-negative integer; anything else
/// is reported as an internal-consistency error rather than silently
/// truncated.
pub fn census_genfn(r: usize, k: u32) -> Result<CensusMap, Error> {
    assert!(r >= 1, "rank must be at least 1");
    assert!(k >= 1, "length must be at least 1");
    let rescaled = scaled_t_coeffs(k, (2 * r - 1) as u64);
    let y = LaurentPoly::from_terms(
        r,
        (0..r).flat_map(|i| {
            [
                (ExpVec::unit(r, i, 1), Rational::one()),
                (ExpVec::unit(r, i, -1), Rational::one()),
            ]
        }),
    )
    .expect("unit vectors match dimension");
    let mut poly = compose_dense(&rescaled, &y);

    let correction = if k.is_multiple_of(2) {
        2 * (r as i64 - 1)
    } else {
        0
    };
    if correction != 0 {
        poly = poly
            .add(&LaurentPoly::constant(r, Rational::from_int(correction)))
            .expect("same dimension");
    }

    let mut census = CensusMap::new(r);
    for (exp, coeff) in poly.terms() {
        let value: BigInt = coeff.to_bigint().ok_or_else(|| {
            Error::InternalConsistency(format!(
                "non-integer count {coeff} at class {:?}",
                exp.entries()
            ))
        })?;
        if value.is_negative() {
            return Err(Error::InternalConsistency(format!(
                "negative count {value} at class {:?}",
                exp.entries()
            )));
        }
        census.insert(
            HomologyVector::new(exp.entries().to_vec()),
            value.to_biguint().expect("non-negative"),
        );
    }
    Ok(census)
}

/// Total number of cyclically reduced words of length `k` in rank `r`:
/// `(2r-1)^k + 1 + (r-1)(1 + (-1)^k)`.
pub fn total_count(r: usize, k: u32) -> BigUint {
    assert!(r >= 1, "rank must be at least 1");
    assert!(k >= 1, "length must be at least 1");
    let base = BigUint::from(2 * r - 1).pow(k);
    let correction = if k.is_multiple_of(2) {
        2 * (r as u64 - 1)
    } else {
        0
    };
    base + BigUint::one() + BigUint::from(correction)
}
