//! Polynomial algebra over GF(2): arithmetic, factorization of `X^n + 1`,
//! polynomial order and linear-recurring-sequence machinery.

pub mod factor;
pub mod lrs;
pub mod poly;

pub use factor::{
    divisors_of_divisor, divisors_xn1, factor_divisor, factor_xn1, is_irreducible, order, FactorMultiset,
};
pub use lrs::{
    is_degenerate_pattern, least_period, lrs_minimal_polynomial, minimal_generating_polynomial,
    MinimalPolynomial,
};
pub use poly::{word, Poly2};
