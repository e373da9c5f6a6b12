//! The supported coefficient-ring families.
//!
//! Each ring is the ring of functions on a genus <= 1 curve over F_q
//! that are regular away from a distinguished closed point "infinity":
//!
//! * `Poly`: A = F_q[T] (infinity = the classical place of F_q(T));
//! * `Shifted`: the rational function field with infinity moved to the
//!   place of a monic irreducible g (g(0) != 0), so
//!   A = { f/g^j : deg f <= j deg g };
//! * `Elliptic`: the affine ring of a nonsingular Weierstrass curve,
//!   infinity = the point at infinity.

use std::fmt;
use std::sync::Arc;

use super::elliptic::WeierstrassCurve;
use crate::arith::{Field, Fq, FqElem, Poly};
use crate::error::{Error, Result};

pub type PolyFq = Poly<FqElem>;

#[derive(Debug, PartialEq)]
pub enum RingKind {
    Poly,
    Shifted { g: PolyFq },
    Elliptic { curve: WeierstrassCurve },
}

#[derive(Debug)]
struct RingInner {
    fq: Fq,
    kind: RingKind,
    d_inf: u32,
    genus: u32,
    /// Class number h(A) = h(X) * d_inf.
    h: usize,
}

/// A supported coefficient ring with its derived curve data. Cheap to
/// clone and immutable after construction.
#[derive(Clone, Debug)]
pub struct RingSpec(Arc<RingInner>);

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.fq == other.0.fq && self.0.kind == other.0.kind
    }
}

impl RingSpec {
    /// A = F_q[T].
    pub fn poly(q: u32) -> Result<RingSpec> {
        let fq = Fq::new(q)?;
        Ok(RingSpec(Arc::new(RingInner {
            fq,
            kind: RingKind::Poly,
            d_inf: 1,
            genus: 0,
            h: 1,
        })))
    }

    /// Rational function field with infinity at the place of g.
    pub fn shifted(q: u32, g: PolyFq) -> Result<RingSpec> {
        let fq = Fq::new(q)?;
        if g.coeffs().first().map(|c| c.field()) != Some(&fq) {
            return Err(Error::Parameter("g must be a polynomial over F_q".into()));
        }
        if !g.is_monic() || g.degree().unwrap_or(0) < 1 {
            return Err(Error::Parameter("g must be monic of degree >= 1".into()));
        }
        if !g.is_irreducible() {
            return Err(Error::Parameter("g must be irreducible".into()));
        }
        if g.eval(&fq.zero_elem()).is_zero() {
            return Err(Error::Parameter(
                "g(0) must be nonzero (the evaluation-at-0 prime must exist)".into(),
            ));
        }
        let d_inf = g.degree().unwrap() as u32;
        Ok(RingSpec(Arc::new(RingInner {
            fq,
            kind: RingKind::Shifted { g },
            d_inf,
            genus: 0,
            h: d_inf as usize,
        })))
    }

    /// Affine ring of a nonsingular Weierstrass curve; h = #E(F_q).
    pub fn elliptic(q: u32, a: [i64; 5]) -> Result<RingSpec> {
        let fq = Fq::new(q)?;
        let coeffs = [
            fq.from_int(a[0]),
            fq.from_int(a[1]),
            fq.from_int(a[2]),
            fq.from_int(a[3]),
            fq.from_int(a[4]),
        ];
        Self::elliptic_from(&fq, coeffs)
    }

    pub fn elliptic_from(fq: &Fq, a: [FqElem; 5]) -> Result<RingSpec> {
        let curve = WeierstrassCurve::new(fq, a)?;
        let h = curve.point_count(1)? as usize;
        Ok(RingSpec(Arc::new(RingInner {
            fq: fq.clone(),
            kind: RingKind::Elliptic { curve },
            d_inf: 1,
            genus: 1,
            h,
        })))
    }

    pub fn fq(&self) -> &Fq {
        &self.0.fq
    }

    pub fn q(&self) -> u32 {
        self.0.fq.q()
    }

    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    pub fn d_inf(&self) -> u32 {
        self.0.d_inf
    }

    pub fn genus(&self) -> u32 {
        self.0.genus
    }

    /// q_infinity = q^(d_infinity), the residue size at infinity.
    pub fn q_inf(&self) -> u64 {
        (self.q() as u64).pow(self.0.d_inf)
    }

    /// h(A) = #Pic(A).
    pub fn class_number(&self) -> usize {
        self.0.h
    }

    /// h(X): divisor classes of degree 0 of the curve.
    pub fn curve_class_number(&self) -> usize {
        self.0.h / self.0.d_inf as usize
    }

    pub fn curve(&self) -> Option<&WeierstrassCurve> {
        match &self.0.kind {
            RingKind::Elliptic { curve } => Some(curve),
            _ => None,
        }
    }

    pub fn shifted_g(&self) -> Option<&PolyFq> {
        match &self.0.kind {
            RingKind::Shifted { g } => Some(g),
            _ => None,
        }
    }

    /// #X(F_{q^n}) for the underlying projective curve.
    pub fn curve_point_count(&self, n: u32) -> Result<u64> {
        match &self.0.kind {
            RingKind::Elliptic { curve } => curve.point_count(n),
            // P^1 has q^n + 1 rational points
            _ => Ok((self.q() as u64).pow(n) + 1),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            RingKind::Poly => write!(f, "poly q={}", self.q()),
            RingKind::Shifted { g } => write!(f, "shifted q={} g={}", self.q(), g.display("T")),
            RingKind::Elliptic { curve } => {
                let a: Vec<String> = curve.a.iter().map(|c| c.to_string()).collect();
                write!(f, "elliptic q={} a=[{}]", self.q(), a.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_ring_invariants() {
        let r = RingSpec::poly(3).unwrap();
        assert_eq!((r.genus(), r.d_inf(), r.class_number()), (0, 1, 1));
        assert_eq!(r.q_inf(), 3);
    }

    #[test]
    fn shifted_ring_invariants() {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(1)]);
        let r = RingSpec::shifted(2, g).unwrap();
        assert_eq!((r.genus(), r.d_inf(), r.class_number()), (0, 2, 2));
        assert_eq!(r.q_inf(), 4);
        assert_eq!(r.class_number(), r.curve_class_number() * r.d_inf() as usize);
    }

    #[test]
    fn shifted_rejects_g_vanishing_at_zero() {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(0), fq.elem(1)]); // T
        assert!(RingSpec::shifted(2, g).is_err());
    }

    #[test]
    fn shifted_rejects_reducible_g() {
        let fq = Fq::new(2).unwrap();
        // T^2 + 1 = (T+1)^2 over F_2
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(0), fq.elem(1)]);
        assert!(RingSpec::shifted(2, g).is_err());
    }

    #[test]
    fn elliptic_ring_class_number() {
        // y^2 + y = x^3 over F_2: h = #E(F_2) = 3
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        assert_eq!((r.genus(), r.d_inf(), r.class_number()), (1, 1, 3));
        // h(A) = h(X) * d_inf
        assert_eq!(r.class_number(), r.curve_class_number());
    }
}
