//! Exact arithmetic foundation: arbitrary-precision rationals, finite
//! fields, polynomials and rational functions over exact fields,
//! truncated Laurent series, cyclotomic numbers, and a free graded
//! commutative ring for symbolic coefficients.

pub mod cyclotomic;
pub mod fq;
pub mod graded;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod series;

pub use cyclotomic::{CycElem, CycField};
pub use fq::{Fq, FqElem};
pub use graded::{GradedElem, GradedRing};
pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use series::TruncatedSeries;

/// An exact field whose elements may need shared context (e.g. the
/// modulus of a finite field) to produce constants.
///
/// Elements are immutable values; all operations are pure.
pub trait Field: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    /// Context needed to build constants: `()` for Q, the field table
    /// for F_q, the cyclotomic modulus for Q(zeta_m).
    type Ctx: Clone + PartialEq + std::fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// `self^n` for signed `n`; negative exponents invert first.
    fn powi(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u64))
        } else {
            self.inv().map(|i| i.pow((-n) as u64))
        }
    }
}
