//! Arbitrary-precision exact rationals.
//!
//! Thin wrapper around `num_rational::BigRational` so the rest of the
//! crate can treat Q as just another [`Field`]. The wrapped type keeps
//! the canonical invariants (positive denominator, reduced fraction)
//! on every operation.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// q^n for signed n, as an exact rational.
    pub fn pow_of(q: u32, n: i64) -> Self {
        let b = BigInt::from(q);
        if n >= 0 {
            Rat(BigRational::from_integer(b.pow(n as u32)))
        } else {
            Rat(BigRational::new(BigInt::one(), b.pow((-n) as u32)))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// The exact integer value, if the denominator is 1.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.0.denom().is_one() {
            Some(self.0.numer().clone())
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for Rat {
    type Ctx = ();

    fn ctx(&self) -> () {}

    fn zero(_: &()) -> Self {
        Rat(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Rat(BigRational::one())
    }

    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }

    fn neg(&self) -> Self {
        Rat(-self.0.clone())
    }

    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.0.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}
