//! Expansion of `T_n` and `U_n` at the Laurent argument `(c/(2d)) sum_i (x_i
//! + 1/x_i)` by independent methods.
//!
//! The recurrence method walks `p_{n+1} = 2A p_n - p_{n-1}` directly at the
//! polynomial level. The composition method substitutes the argument into the
//! dense single-variable coefficients. The explicit method computes one
//! coefficient at a time from binomial sums. Agreement of all three on the
//! same inputs is checked by the test suites; none of them shares code paths
//! with another beyond the scalar and polynomial kernels.

use crate::chebyshev::{cheb_coeffs, ChebKind, DensePoly};
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::rational::{binomial, Rational};

/// What to expand: `kind` and degree `n` of the Chebyshev polynomial, the
/// parameter `c`, and the number of variables `d`.
#[derive(Clone, Debug)]
pub struct ExpansionRequest {
    pub kind: ChebKind,
    pub n: u32,
    pub c: Rational,
    pub d: usize,
}

impl ExpansionRequest {
    pub fn new(kind: ChebKind, n: u32, c: Rational, d: usize) -> Self {
        assert!(d >= 1, "need at least one variable");
        Self { kind, n, c, d }
    }
}

/// The sequence `p_0, p_1, p_2, ...` of expansions at fixed `kind`, `c`, `d`,
/// generated by `p_{n+1} = 2A p_n - p_{n-1}` with seeds `p_0 = 1` and `p_1 =
/// A` (first kind) or `2A` (second kind).
pub fn expansion_sequence(
    kind: ChebKind,
    c: &Rational,
    d: usize,
) -> impl Iterator<Item = LaurentPoly> {
    let arg = LaurentPoly::cheb_arg(c, d);
    let two_arg = arg.scale(&Rational::from_int(2));
    let p0 = LaurentPoly::one(d);
    let p1 = match kind {
        ChebKind::First => arg,
        ChebKind::Second => two_arg.clone(),
    };
    std::iter::successors(Some((p0, p1)), move |(prev, curr)| {
        let next = two_arg
            .mul(curr)
            .and_then(|p| p.sub(prev))
            .expect("same dimension");
        Some((curr.clone(), next))
    })
    .map(|(p, _)| p)
}

/// Expands by the three-term recurrence `p_{n+1} = 2A p_n - p_{n-1}` with
/// seeds `p_0 = 1` and `p_1 = A` (first kind) or `2A` (second kind).
pub fn expand_recurrence(req: &ExpansionRequest) -> LaurentPoly {
    expansion_sequence(req.kind, &req.c, req.d)
        .nth(req.n as usize)
        .expect("infinite sequence")
}

/// Evaluates a dense single-variable polynomial at a Laurent argument.
///
/// Splits into even and odd parts and runs Horner on `arg^2`, so a polynomial
/// whose every second coefficient vanishes costs about `deg/2` sparse
/// multiplications.
pub fn compose_dense(poly: &DensePoly, arg: &LaurentPoly) -> LaurentPoly {
    let d = arg.dimension();
    let horner = |coeffs: Vec<Rational>, base: &LaurentPoly| -> LaurentPoly {
        let mut acc = LaurentPoly::zero(d);
        for c in coeffs.into_iter().rev() {
            acc = acc
                .mul(base)
                .and_then(|p| p.add(&LaurentPoly::constant(d, c)))
                .expect("same dimension");
        }
        acc
    };
    let even: Vec<Rational> = poly.coeffs().iter().step_by(2).cloned().collect();
    let odd: Vec<Rational> = poly.coeffs().iter().skip(1).step_by(2).cloned().collect();
    if odd.is_empty() && even.is_empty() {
        return LaurentPoly::zero(d);
    }
    let square = arg.mul(arg).expect("same dimension");
    let mut result = horner(even, &square);
    if !odd.is_empty() {
        let odd_part = arg.mul(&horner(odd, &square)).expect("same dimension");
        result = result.add(&odd_part).expect("same dimension");
    }
    result
}

/// Expands by substituting the Laurent argument into the dense Chebyshev
/// coefficients.
pub fn expand_compose(req: &ExpansionRequest) -> LaurentPoly {
    let dense = cheb_coeffs(req.kind, req.n);
    let arg = LaurentPoly::cheb_arg(&req.c, req.d);
    compose_dense(&dense, &arg)
}

/// Coefficient of `x^k` in the one-variable first-kind expansion, straight
/// from the binomial double sum. Errors on `c = 0` (the formula divides by
/// `c^2`); the recurrence and composition methods cover that point.
pub fn explicit_coeff(n: u32, c: &Rational, k: i64) -> Result<Rational, Error> {
    if c.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if n == 0 {
        return Ok(if k == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    let n_i = n as i64;
    if k.abs() > n_i || (n_i - k) % 2 != 0 {
        return Ok(Rational::zero());
    }
    let minus_inv_c2 = -(Rational::one() / (c * c));
    let mut sum = Rational::zero();
    let mut outer = Rational::one();
    for m in 0..=n / 2 {
        let m_i = m as i64;
        // binomial(n-2m, (n-2m-k)/2) is zero outside 0..=n-2m
        let lower = (n_i - 2 * m_i - k) / 2;
        let inner = binomial(n_i - 2 * m_i, lower);
        if !num_traits::Zero::is_zero(&inner) {
            let term = &outer
                * &(Rational::ratio(n_i, n_i - m_i)
                    * Rational::from_bigint(binomial(n_i - m_i, m_i))
                    * Rational::from_bigint(inner));
            sum += &term;
        }
        outer *= &minus_inv_c2;
    }
    Ok(c.pow(n as i32) * Rational::ratio(1, 2) * sum)
}

/// Coefficient of `x^k` in the one-variable second-kind expansion.
///
/// Uses the telescoped form of the half-difference identity: `U_n = 2(T_n +
/// T_{n-2} + ...) + T_0` when `n` is even, without the trailing `T_0` term
/// when `n` is odd. Errors on `c = 0` like [`explicit_coeff`].
pub fn explicit_coeff_u(n: u32, c: &Rational, k: i64) -> Result<Rational, Error> {
    if c.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let mut acc = Rational::zero();
    let mut j = n;
    while j >= 1 {
        acc += &explicit_coeff(j, c, k)?;
        if j < 2 {
            break;
        }
        j -= 2;
    }
    let mut result = Rational::from_int(2) * acc;
    if n.is_multiple_of(2) && k == 0 {
        result += &Rational::one();
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ExpVec;

    fn req(kind: ChebKind, n: u32, c: Rational, d: usize) -> ExpansionRequest {
        ExpansionRequest::new(kind, n, c, d)
    }

    fn c_sample() -> Vec<Rational> {
        ["1/2", "1", "3/2", "2", "-3/2", "101/100"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }

    #[test]
    fn degree_one_expansions() {
        for c in c_sample() {
            // T_1 at the argument is the argument itself
            let r1 = expand_recurrence(&req(ChebKind::First, 1, c.clone(), 1));
            assert_eq!(r1, LaurentPoly::cheb_arg(&c, 1));
            // U_1 doubles it: coefficients c at x and 1/x
            let s1 = expand_recurrence(&req(ChebKind::Second, 1, c.clone(), 1));
            assert_eq!(s1.coeff(&ExpVec::new(vec![1])).unwrap(), c);
            assert_eq!(s1.coeff(&ExpVec::new(vec![-1])).unwrap(), c);
        }
    }

    #[test]
    fn unit_parameter_collapses_to_two_terms() {
        // T_n at c = 1 gives (x^n + x^-n)/2
        for n in [0u32, 1, 2, 7, 20, 50] {
            let p = expand_recurrence(&req(ChebKind::First, n, Rational::one(), 1));
            let expected = LaurentPoly::from_terms(
                1,
                [
                    (ExpVec::new(vec![n as i64]), Rational::ratio(1, 2)),
                    (ExpVec::new(vec![-(n as i64)]), Rational::ratio(1, 2)),
                ],
            )
            .unwrap();
            assert_eq!(p, expected, "n = {n}");
        }
    }

    #[test]
    fn hand_expanded_t2() {
        // T_2 at c = 2: 2(x + 1/x)^2 - 1 = 2x^2 + 3 + 2x^-2
        let p = expand_recurrence(&req(ChebKind::First, 2, Rational::from_int(2), 1));
        let expected = LaurentPoly::from_terms(
            1,
            [
                (ExpVec::new(vec![2]), Rational::from_int(2)),
                (ExpVec::new(vec![0]), Rational::from_int(3)),
                (ExpVec::new(vec![-2]), Rational::from_int(2)),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert_eq!(
            expand_compose(&req(ChebKind::First, 2, Rational::from_int(2), 1)),
            expected
        );
    }

    #[test]
    fn compose_handles_degree_zero() {
        let p = expand_compose(&req(ChebKind::First, 0, Rational::from_int(5), 3));
        assert_eq!(p, LaurentPoly::one(3));
    }

    #[test]
    fn methods_agree_on_small_grid() {
        for c in c_sample() {
            for kind in [ChebKind::First, ChebKind::Second] {
                for n in 0..=8 {
                    for d in 1..=2 {
                        let request = req(kind, n, c.clone(), d);
                        assert_eq!(
                            expand_recurrence(&request),
                            expand_compose(&request),
                            "kind = {kind}, n = {n}, c = {c}, d = {d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn explicit_coeff_examples() {
        // R_1 = (c/2)(x + 1/x)
        assert_eq!(
            explicit_coeff(1, &Rational::from_int(3), 1).unwrap(),
            Rational::ratio(3, 2)
        );
        // constant of R_2 is c^2 - 1
        for c in c_sample() {
            assert_eq!(
                explicit_coeff(2, &c, 0).unwrap(),
                &c * &c - Rational::one(),
                "c = {c}"
            );
        }
        assert_eq!(
            explicit_coeff(2, &Rational::ratio(1, 2), 0).unwrap(),
            Rational::ratio(-3, 4)
        );
        // vanishing outside the parity-compatible range
        assert!(explicit_coeff(3, &Rational::from_int(2), 2)
            .unwrap()
            .is_zero());
        assert!(explicit_coeff(3, &Rational::from_int(2), 5)
            .unwrap()
            .is_zero());
        assert!(matches!(
            explicit_coeff(2, &Rational::zero(), 0),
            Err(Error::ZeroParameter)
        ));
    }

    #[test]
    fn explicit_coeff_matches_recurrence() {
        let c = Rational::from_int(2);
        let p = expand_recurrence(&req(ChebKind::First, 4, c.clone(), 1));
        for k in -4..=4i64 {
            assert_eq!(
                explicit_coeff(4, &c, k).unwrap(),
                p.coeff(&ExpVec::new(vec![k])).unwrap(),
                "k = {k}"
            );
        }
    }

    #[test]
    fn explicit_coeff_u_examples() {
        for c in c_sample() {
            assert_eq!(explicit_coeff_u(1, &c, 1).unwrap(), c);
            assert_eq!(explicit_coeff_u(1, &c, -1).unwrap(), c);
            assert_eq!(explicit_coeff_u(0, &c, 0).unwrap(), Rational::one());
        }
        let c = Rational::from_int(2);
        let p = expand_recurrence(&req(ChebKind::Second, 3, c.clone(), 1));
        assert_eq!(
            explicit_coeff_u(3, &c, 1).unwrap(),
            p.coeff(&ExpVec::new(vec![1])).unwrap()
        );
        assert_eq!(explicit_coeff_u(3, &c, 1).unwrap(), Rational::from_int(20));
        assert!(matches!(
            explicit_coeff_u(3, &Rational::zero(), 1),
            Err(Error::ZeroParameter)
        ));
    }

    #[test]
    fn reciprocal_symmetry() {
        for kind in [ChebKind::First, ChebKind::Second] {
            let p = expand_recurrence(&req(kind, 6, Rational::ratio(3, 2), 2));
            for (e, c) in p.terms() {
                assert_eq!(&p.coeff(&e.negated()).unwrap(), c);
            }
        }
    }

    #[test]
    fn permutation_symmetry() {
        let p = expand_recurrence(&req(ChebKind::First, 5, Rational::from_int(2), 3));
        for (e, c) in p.terms() {
            let mut swapped = e.entries().to_vec();
            swapped.swap(0, 2);
            assert_eq!(&p.coeff(&ExpVec::new(swapped)).unwrap(), c);
        }
    }

    #[test]
    fn parity_of_support() {
        for (n, d) in [(7u32, 1usize), (6, 2), (5, 3)] {
            let p = expand_recurrence(&req(ChebKind::Second, n, Rational::ratio(3, 2), d));
            for (e, _) in p.terms() {
                assert_eq!(
                    (n as i64 - e.entry_sum()).rem_euclid(2),
                    0,
                    "n = {n}, d = {d}, e = {e:?}"
                );
                assert!(e.total_abs_degree() <= n as u64);
            }
        }
    }

    #[test]
    fn zero_parameter_degenerates_to_constant() {
        // c = 0 is fine for the recurrence/composition methods: T_n(0) is
        // 0 or ±1.
        let p = expand_recurrence(&req(ChebKind::First, 4, Rational::zero(), 1));
        assert_eq!(p, LaurentPoly::one(1));
        let q = expand_recurrence(&req(ChebKind::First, 2, Rational::zero(), 1));
        assert_eq!(q, LaurentPoly::one(1).neg());
        let r = expand_compose(&req(ChebKind::First, 3, Rational::zero(), 1));
        assert!(r.is_zero());
    }
}
