//! The cyclotomic field Q(zeta_m), exact.
//!
//! Elements are residues in Q[x]/(Phi_m(x)). Used for ideal-class
//! characters: a character value is a power of zeta_m, and products of
//! L-values stay exact here instead of drifting through floating
//! point.

use std::fmt;
use std::sync::Arc;

use super::poly::Poly;
use super::{Field, Rat};

#[derive(Debug, PartialEq)]
struct CycCtx {
    m: u32,
    /// m-th cyclotomic polynomial, monic over Q.
    phi: Poly<Rat>,
}

/// Q(zeta_m) with its minimal polynomial precomputed.
#[derive(Clone, Debug)]
pub struct CycField(Arc<CycCtx>);

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.0.m == other.0.m
    }
}

/// x^n - 1 over Q.
fn x_pow_minus_one(n: u32) -> Poly<Rat> {
    let mut coeffs = vec![Rat::from_int(0); n as usize + 1];
    coeffs[0] = Rat::from_int(-1);
    coeffs[n as usize] = Rat::from_int(1);
    Poly::from_coeffs(&(), coeffs)
}

/// Phi_m by the recursive quotient Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
pub fn cyclotomic_poly(m: u32) -> Poly<Rat> {
    assert!(m >= 1);
    let mut num = x_pow_minus_one(m);
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = num.divrem(&cyclotomic_poly(d)).unwrap();
            debug_assert!(r.is_zero());
            num = q;
        }
    }
    num
}

impl CycField {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1);
        CycField(Arc::new(CycCtx {
            m,
            phi: cyclotomic_poly(m),
        }))
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// zeta_m^k.
    pub fn root_of_unity(&self, k: i64) -> CycElem {
        let m = self.0.m as i64;
        let k = ((k % m) + m) % m;
        let p = Poly::monomial(Rat::from_int(1), k as usize);
        self.reduce(p)
    }

    pub fn from_rat(&self, r: Rat) -> CycElem {
        self.reduce(Poly::constant(r))
    }

    fn reduce(&self, p: Poly<Rat>) -> CycElem {
        let rep = p.rem(&self.0.phi).unwrap();
        CycElem {
            field: self.clone(),
            rep,
        }
    }
}

/// An element of Q(zeta_m).
#[derive(Clone)]
pub struct CycElem {
    field: CycField,
    rep: Poly<Rat>,
}

impl CycElem {
    pub fn field(&self) -> &CycField {
        &self.field
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.rep.is_zero() {
            Some(Rat::from_int(0))
        } else if self.rep.degree() == Some(0) {
            Some(self.rep.coeff(0))
        } else {
            None
        }
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.display("z"))
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for CycElem {
    type Ctx = CycField;

    fn ctx(&self) -> CycField {
        self.field.clone()
    }

    fn zero(ctx: &CycField) -> Self {
        ctx.from_rat(Rat::from_int(0))
    }

    fn one(ctx: &CycField) -> Self {
        ctx.from_rat(Rat::from_int(1))
    }

    fn add(&self, other: &Self) -> Self {
        CycElem {
            field: self.field.clone(),
            rep: self.rep.add(&other.rep),
        }
    }

    fn neg(&self) -> Self {
        CycElem {
            field: self.field.clone(),
            rep: self.rep.neg(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.field.reduce(self.rep.mul(&other.rep))
    }

    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        // extended Euclid in Q[x] against Phi_m
        let phi = &self.field.0.phi;
        let (mut r0, mut r1) = (phi.clone(), self.rep.clone());
        let (mut s0, mut s1) = (Poly::zero(&()), Poly::one(&()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd, a unit in Q[x] since Phi_m is irreducible over Q
        debug_assert_eq!(r0.degree(), Some(0));
        let scale = r0.coeff(0).inv().unwrap();
        Some(self.field.reduce(s0.scale(&scale)))
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}
