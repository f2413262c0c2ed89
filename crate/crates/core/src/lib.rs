//! Exact-arithmetic kernels for Chebyshev-derived Laurent expansions and
//! free-group word counting.
//!
//! The crate builds the family of Laurent polynomials obtained by evaluating
//! Chebyshev polynomials of either kind at `(c/(2d)) * sum_i (x_i + 1/x_i)`,
//! by three independent routes (polynomial recurrence, dense composition, and
//! explicit binomial sums), verifies their positivity and sign structure over
//! exact rationals, and counts cyclically reduced words of a free group per
//! homology class both by brute-force enumeration and by coefficient
//! extraction from the matching generating function.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, counts are
//! big integers, and no floating point is involved anywhere.

pub mod census;
pub mod chebyshev;
pub mod error;
pub mod expansion;
pub mod laurent;
pub mod rational;
pub mod verify;

pub use census::{
    abelianize, census_bruteforce, census_genfn, is_cyclically_reduced, total_count, CensusMap,
    HomologyVector, Letter, Sign, Word, DEFAULT_BUDGET,
};
pub use chebyshev::{cheb_coeff_closed, cheb_coeffs, scaled_t_coeffs, ChebKind, DensePoly};
pub use error::Error;
pub use expansion::{
    compose_dense, expand_compose, expand_recurrence, expansion_sequence, explicit_coeff,
    explicit_coeff_u, ExpansionRequest,
};
pub use laurent::{ExpVec, LaurentPoly, MAX_EXPONENT};
pub use rational::{binomial, Rational};
pub use verify::{
    find_counterexample, sign_pattern, verify_abc, verify_mixed_signs, verify_moretrig,
    verify_nonneg, verify_trivial, CoeffTable, PropertyCheck, VerifyReport, Witness,
    DEFAULT_SEARCH_CAP,
};
