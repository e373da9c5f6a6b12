//! Vanishing orders along cuspidal divisors: discriminant forms and
//! their twists, division forms and higher Eisenstein series, the
//! canonical discriminant, cuspidal divisors in Z[Pic(A)], the divisor
//! matrix with its finite-index certificate, and the Frobenius
//! determinant cross-check.

pub mod matrix;
pub mod orders;

pub use matrix::{cuspidal_matrix, frobenius_det_crosscheck, CuspidalMatrix, FrobeniusCheck};
pub use orders::{
    canonical_delta_exponents, divisor_of_discriminant, ord_canonical_delta,
    ord_discriminant, ord_discriminant_twisted, ord_division_form,
    ord_higher_eisenstein, ramification_index, CanonicalDeltaReport, CuspidalDivisor,
    OrderReport, OrderUnit,
};
