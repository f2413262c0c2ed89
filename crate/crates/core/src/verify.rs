//! Exact verification of the positivity, strictness, half-difference, and
//! sign-pattern properties of the expansions, plus the mixed-sign search
//! below the unit parameter.
//!
//! Every checker returns a [`VerifyReport`] instead of erroring: a failed
//! property is data, recorded with the first counterexample in scan order.
//! Scan order is degree-ascending, then graded-lex on exponents, so reports
//! are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::chebyshev::ChebKind;
use crate::expansion::expansion_sequence;
use crate::laurent::{ExpVec, LaurentPoly};
use crate::rational::Rational;

/// Location and value of the first failing coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub n: u32,
    pub exps: Vec<i64>,
    pub value: Rational,
}

impl Witness {
    fn new(n: u32, exps: Vec<i64>, value: Rational) -> Self {
        Self { n, exps, value }
    }

    pub fn to_json(&self) -> Value {
        let k: Value = if self.exps.len() == 1 {
            json!(self.exps[0])
        } else {
            json!(self.exps)
        };
        json!({ "n": self.n, "k": k, "value": self.value.to_string() })
    }
}

/// Outcome of one checked property.
#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub property: String,
    pub params: Value,
    pub pass: bool,
    /// Advisory entries are informational: they are reported but do not
    /// count toward the suite verdict.
    pub advisory: bool,
    pub counterexample: Option<Witness>,
}

impl PropertyCheck {
    fn new(property: &str, params: Value, counterexample: Option<Witness>) -> Self {
        Self {
            property: property.to_string(),
            params,
            pass: counterexample.is_none(),
            advisory: false,
            counterexample,
        }
    }

    fn advisory(property: &str, params: Value, counterexample: Option<Witness>) -> Self {
        let mut check = Self::new(property, params, counterexample);
        check.advisory = true;
        check
    }

    pub fn to_json(&self) -> Value {
        let mut params = self.params.clone();
        if self.advisory {
            params["advisory"] = json!(true);
        }
        json!({
            "property": self.property,
            "params": params,
            "pass": self.pass,
            "counterexample": self.counterexample.as_ref().map(Witness::to_json),
        })
    }
}

/// A batch of property checks.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    /// True when every non-advisory check passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().filter(|c| !c.advisory).all(|c| c.pass)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.checks.iter().map(PropertyCheck::to_json).collect())
    }
}

/// Coefficient table of the one-variable expansions, filled row by row by
/// the coefficientwise recurrence `a_{n+1}^k = c(a_n^{k-1} + a_n^{k+1}) -
/// a_{n-1}^k`.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    pub kind: ChebKind,
    pub c: Rational,
    rows: Vec<BTreeMap<i64, Rational>>,
}

impl CoeffTable {
    /// Rows `0..=n_max`, seeded `{0: 1}` and `{±1: c}` (second kind) or
    /// `{±1: c/2}` (first kind).
    pub fn build(kind: ChebKind, c: Rational, n_max: u32) -> Self {
        let mut rows: Vec<BTreeMap<i64, Rational>> = Vec::with_capacity(n_max as usize + 1);
        rows.push(BTreeMap::from([(0, Rational::one())]));
        if n_max >= 1 {
            let seed = match kind {
                ChebKind::First => &c * &Rational::ratio(1, 2),
                ChebKind::Second => c.clone(),
            };
            let mut row = BTreeMap::new();
            if !seed.is_zero() {
                row.insert(-1, seed.clone());
                row.insert(1, seed);
            }
            rows.push(row);
        }
        for n in 1..n_max as i64 {
            let mut next = BTreeMap::new();
            for k in -(n + 1)..=(n + 1) {
                let from_curr =
                    Self::get(&rows[n as usize], k - 1) + Self::get(&rows[n as usize], k + 1);
                let value = &c * &from_curr - Self::get(&rows[n as usize - 1], k);
                if !value.is_zero() {
                    next.insert(k, value);
                }
            }
            rows.push(next);
        }
        Self { kind, c, rows }
    }

    fn get(row: &BTreeMap<i64, Rational>, k: i64) -> Rational {
        row.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    /// Row `n` as a map `k -> coefficient`, zeros omitted.
    pub fn row(&self, n: u32) -> &BTreeMap<i64, Rational> {
        &self.rows[n as usize]
    }

    /// Coefficient of `x^k` in row `n`, exact zero when absent.
    pub fn coeff(&self, n: u32, k: i64) -> Rational {
        Self::get(&self.rows[n as usize], k)
    }
}

/// All exponent vectors a degree-`n` expansion in `d` variables may carry:
/// total absolute degree at most `n` and `n - sum(e)` even. Graded-lex order.
fn compatible_vectors(n: u32, d: usize) -> Vec<ExpVec> {
    fn rec(remaining: i64, pos: usize, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == buf.len() {
            out.push(buf.clone());
            return;
        }
        for e in -remaining..=remaining {
            buf[pos] = e;
            rec(remaining - e.abs(), pos + 1, buf, out);
        }
    }
    let mut raw = Vec::new();
    rec(n as i64, 0, &mut vec![0i64; d], &mut raw);
    let mut vecs: Vec<ExpVec> = raw
        .into_iter()
        .filter(|v| (n as i64 - v.iter().sum::<i64>()).rem_euclid(2) == 0)
        .map(ExpVec::new)
        .collect();
    vecs.sort();
    vecs
}

/// Checks one expansion: strictly positive on the compatible support, exactly
/// zero elsewhere. Returns the first violation in graded-lex order.
fn check_row_positive(poly: &LaurentPoly, n: u32, d: usize) -> Option<Witness> {
    let compatible: BTreeSet<ExpVec> = compatible_vectors(n, d).into_iter().collect();
    let mut candidates: BTreeSet<ExpVec> = compatible.clone();
    candidates.extend(poly.terms().map(|(e, _)| e.clone()));
    for e in candidates {
        let value = poly.coeff(&e).expect("matching dimension");
        let ok = if compatible.contains(&e) {
            value.is_positive()
        } else {
            value.is_zero()
        };
        if !ok {
            return Some(Witness::new(n, e.entries().to_vec(), value));
        }
    }
    None
}

/// Non-negativity with strictness: for each `n <= n_max`, every
/// parity-compatible coefficient of the `d`-variable expansion must be
/// strictly positive and every other coefficient exactly zero.
pub fn verify_nonneg(kind: ChebKind, c: &Rational, n_max: u32, d: usize) -> VerifyReport {
    let mut counterexample = None;
    for (n, poly) in expansion_sequence(kind, c, d)
        .take(n_max as usize + 1)
        .enumerate()
    {
        if let Some(w) = check_row_positive(&poly, n as u32, d) {
            counterexample = Some(w);
            break;
        }
    }
    let params = json!({
        "kind": kind.to_string(),
        "c": c.to_string(),
        "n_max": n_max,
        "d": d,
    });
    VerifyReport {
        checks: vec![PropertyCheck::new("nonneg", params, counterexample)],
    }
}

/// The three tabular properties of the second-kind coefficients, with the
/// strictness rule checked in both directions: strict inequality when `n - k`
/// is even, exact zeros when it is odd.
///
/// (a) `a_n^k > 0`; (b) `a_n^k > max(a_{n-1}^{k-1}, a_{n-1}^{k+1})`;
/// (c) `a_n^k > a_{n-2}^k`.
pub fn verify_abc(c: &Rational, n_max: u32) -> VerifyReport {
    let table = CoeffTable::build(ChebKind::Second, c.clone(), n_max);
    let mut first_a = None;
    let mut first_b = None;
    let mut first_c = None;

    for n in 0..=n_max {
        for k in -(n as i64)..=n as i64 {
            let value = table.coeff(n, k);
            let even = (n as i64 - k).rem_euclid(2) == 0;

            let ok_a = if even {
                value.is_positive()
            } else {
                value.is_zero()
            };
            if !ok_a && first_a.is_none() {
                first_a = Some(Witness::new(n, vec![k], value.clone()));
            }

            if n >= 1 {
                let left = table.coeff(n - 1, k - 1);
                let right = table.coeff(n - 1, k + 1);
                let best = if left >= right { left } else { right };
                let ok_b = if even {
                    value > best
                } else {
                    value.is_zero() && best.is_zero()
                };
                if !ok_b && first_b.is_none() {
                    first_b = Some(Witness::new(n, vec![k], value.clone()));
                }
            }

            if n >= 2 {
                let below = table.coeff(n - 2, k);
                let ok_c = if even {
                    value > below
                } else {
                    value.is_zero() && below.is_zero()
                };
                if !ok_c && first_c.is_none() {
                    first_c = Some(Witness::new(n, vec![k], value));
                }
            }
        }
    }

    let params = json!({ "c": c.to_string(), "n_max": n_max });
    VerifyReport {
        checks: vec![
            PropertyCheck::new("abc-a-positive", params.clone(), first_a),
            PropertyCheck::new("abc-b-row-step", params.clone(), first_b),
            PropertyCheck::new("abc-c-degree-step", params, first_c),
        ],
    }
}

/// The half-difference identity on coefficient tables: `b_n^k = (a_n^k -
/// a_{n-2}^k)/2` for `2 <= n <= n_max`, with strict positivity of `b_n^k` on
/// the compatible support when `c > 1`.
///
/// A shifted-index variant, `b_n^k = a_n^k - a_n^{k-2}`, is evaluated as an
/// advisory entry: it does not hold, and the report keeps the discrepancy
/// visible instead of resolving it silently.
pub fn verify_moretrig(c: &Rational, n_max: u32) -> VerifyReport {
    let t = CoeffTable::build(ChebKind::First, c.clone(), n_max);
    let u = CoeffTable::build(ChebKind::Second, c.clone(), n_max);
    let half = Rational::ratio(1, 2);

    let mut first_identity = None;
    let mut first_positive = None;
    let mut first_shifted = None;

    for n in 2..=n_max {
        for k in -(n as i64)..=n as i64 {
            let b = t.coeff(n, k);
            let half_diff = &(u.coeff(n, k) - u.coeff(n - 2, k)) * &half;
            if b != half_diff && first_identity.is_none() {
                first_identity = Some(Witness::new(n, vec![k], &b - &half_diff));
            }
            let even = (n as i64 - k).rem_euclid(2) == 0;
            if even && c > &Rational::one() && !b.is_positive() && first_positive.is_none() {
                first_positive = Some(Witness::new(n, vec![k], b.clone()));
            }
            let shifted = u.coeff(n, k) - u.coeff(n, k - 2);
            if b != shifted && first_shifted.is_none() {
                first_shifted = Some(Witness::new(n, vec![k], &shifted - &b));
            }
        }
    }

    let params = json!({ "c": c.to_string(), "n_max": n_max });
    let mut checks = vec![PropertyCheck::new(
        "moretrig-half-difference",
        params.clone(),
        first_identity,
    )];
    if c > &Rational::one() {
        checks.push(PropertyCheck::new(
            "moretrig-positivity",
            params.clone(),
            first_positive,
        ));
    }
    checks.push(PropertyCheck::advisory(
        "moretrig-shifted-variant",
        params,
        first_shifted,
    ));
    VerifyReport { checks }
}

/// For `c < -1`, every nonzero coefficient of the degree-`n` expansion of
/// either kind must carry sign `(-1)^n`.
pub fn sign_pattern(c: &Rational, n_max: u32) -> VerifyReport {
    let mut checks = Vec::new();
    for kind in [ChebKind::First, ChebKind::Second] {
        let table = CoeffTable::build(kind, c.clone(), n_max);
        let mut counterexample = None;
        'scan: for n in 0..=n_max {
            for (&k, value) in table.row(n) {
                let negative_expected = n % 2 == 1;
                if value.is_negative() != negative_expected {
                    counterexample = Some(Witness::new(n, vec![k], value.clone()));
                    break 'scan;
                }
            }
        }
        let params = json!({
            "kind": kind.to_string(),
            "c": c.to_string(),
            "n_max": n_max,
        });
        checks.push(PropertyCheck::new("sign-pattern", params, counterexample));
    }
    VerifyReport { checks }
}

/// Searches degrees `2..=cap` for the first row of the one-variable
/// expansion with coefficients of both signs. The returned witness carries
/// the smallest such degree and its first negative coefficient.
pub fn find_counterexample(kind: ChebKind, c: &Rational, cap: u32) -> Option<Witness> {
    let table = CoeffTable::build(kind, c.clone(), cap);
    for n in 0..=cap {
        let row = table.row(n);
        let has_positive = row.values().any(Rational::is_positive);
        let negative = row
            .iter()
            .find(|(_, v)| v.is_negative())
            .map(|(&k, v)| (k, v.clone()));
        if let (true, Some((k, value))) = (has_positive, negative) {
            return Some(Witness::new(n, vec![k], value));
        }
    }
    None
}

/// Default degree cap for [`find_counterexample`].
pub const DEFAULT_SEARCH_CAP: u32 = 64;

/// Reports the mixed-sign search as a property: below the unit parameter a
/// mixed-sign row must exist, at or beyond it none may.
pub fn verify_mixed_signs(kind: ChebKind, c: &Rational, cap: u32) -> VerifyReport {
    let witness = find_counterexample(kind, c, cap);
    let inside_unit = !c.is_zero() && c.abs() < Rational::one();
    let pass = witness.is_some() == inside_unit;
    let params = json!({
        "kind": kind.to_string(),
        "c": c.to_string(),
        "cap": cap,
    });
    VerifyReport {
        checks: vec![PropertyCheck {
            property: "mixed-signs".to_string(),
            params,
            pass,
            advisory: false,
            counterexample: witness,
        }],
    }
}

/// At `c = 1` the first-kind expansion collapses: it must equal `(x^n +
/// x^-n)/2` exactly for every `n <= n_max`.
pub fn verify_trivial(n_max: u32) -> VerifyReport {
    let half = Rational::ratio(1, 2);
    let mut counterexample = None;
    for (n, poly) in expansion_sequence(ChebKind::First, &Rational::one(), 1)
        .take(n_max as usize + 1)
        .enumerate()
    {
        let n_i = n as i64;
        let expected = LaurentPoly::from_terms(
            1,
            [
                (ExpVec::new(vec![n_i]), half.clone()),
                (ExpVec::new(vec![-n_i]), half.clone()),
            ],
        )
        .expect("univariate");
        if poly != expected {
            let diff = poly.sub(&expected).expect("same dimension");
            let (e, v) = diff.terms().next().expect("nonzero difference");
            counterexample = Some(Witness::new(n as u32, e.entries().to_vec(), v.clone()));
            break;
        }
    }
    VerifyReport {
        checks: vec![PropertyCheck::new(
            "unit-parameter-collapse",
            json!({ "n_max": n_max }),
            counterexample,
        )],
    }
}
