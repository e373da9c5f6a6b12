//! Reciprocal polynomials of normalized isogenies.
//!
//! For a monic m of degree d over F_q[T] (rank 2, so the inner lattice
//! has rank 1), the reciprocal of the normalized operator polynomial is
//!     S_m(X) = 1 + sum over 0 <= i < d of l_i X^(q^d - q^i),
//! the l_i being the lower coefficients of the Carlitz action of m.
//! Constant term 1, all exponents divisible by q - 1, coefficients in
//! F_q[T]. Level-n variants rescale the lattice by 1/n, which scales
//! coefficient i by n^(q^i - 1).
//!
//! For general rank the same shape is carried symbolically: the
//! coefficient of X^k is an opaque generator of weight -k.

use super::carlitz::{carlitz_action, FF};
use crate::arith::graded::{GradedElem, GradedRing};
use crate::arith::{Field, Fq, Poly};
use crate::error::{Error, Result};
use crate::rings::spec::PolyFq;

/// S_m as a dense polynomial over F_q(T) (rank 2, level one).
pub fn s_poly(fq: &Fq, m: &PolyFq) -> Result<Poly<FF>> {
    s_poly_level(fq, m, None)
}

/// Level-n variant: the reciprocal for the lattice scaled by 1/n.
pub fn s_poly_level(fq: &Fq, m: &PolyFq, level: Option<&PolyFq>) -> Result<Poly<FF>> {
    if !m.is_monic() {
        return Err(Error::Parameter("m must be monic".into()));
    }
    let q = fq.q() as u64;
    let d = m.degree().unwrap();
    let action = carlitz_action(fq, m);
    debug_assert_eq!(action.coeffs.len(), d + 1);
    let deg_s = q.pow(d as u32) as usize - 1;
    let mut coeffs = vec![FF::zero(fq); deg_s + 1];
    // X^(q^d - q^i) picks coefficient i; i = d gives the constant term
    for (i, ell) in action.coeffs.iter().enumerate() {
        let scaled = match level {
            None => ell.clone(),
            Some(n) => {
                // lattice scaling by 1/n multiplies coefficient i by
                // n^(q^i - 1)
                let np = FF::from_poly(n.clone());
                ell.mul(&np.pow(q.pow(i as u32) - 1))
            }
        };
        let e = q.pow(d as u32) as usize - q.pow(i as u32) as usize;
        coeffs[e] = scaled;
    }
    // normalize by the new discriminant (the i = d coefficient) so the
    // constant term is 1
    let top_inv = coeffs[0].inv().unwrap();
    let coeffs = coeffs.into_iter().map(|c| c.mul(&top_inv)).collect();
    let s = Poly::from_coeffs(fq, coeffs);
    debug_assert!(s.coeff(0).is_one());
    // exponents divisible by q - 1 and integral coefficients at level 1
    for (e, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() && e > 0 {
            debug_assert_eq!(e as u64 % (q - 1).max(1), 0);
        }
    }
    Ok(s)
}

/// The symbolic reciprocal polynomial for general rank: pairs of
/// (exponent k, coefficient) where the coefficient of X^k is a fresh
/// generator of declared weight -k (the i = (r-1) deg m term is the
/// constant 1).
pub struct SymbolicSPoly {
    pub ring: GradedRing,
    /// (exponent, coefficient) with exponents descending
    pub terms: Vec<(u64, GradedElem<FF>)>,
}

pub fn symbolic_s_poly(fq: &Fq, r: usize, deg_m: usize) -> SymbolicSPoly {
    let q = fq.q() as u64;
    let top = q.pow(((r - 1) * deg_m) as u32);
    let gens: Vec<(String, i64)> = (0..(r - 1) * deg_m)
        .map(|i| {
            let k = top - q.pow(i as u32);
            (format!("c{i}"), -(k as i64))
        })
        .collect();
    let ring = GradedRing::new(gens);
    let mut terms = Vec::new();
    for i in 0..(r - 1) * deg_m {
        let k = top - q.pow(i as u32);
        terms.push((k, GradedElem::generator(&ring, fq, i)));
    }
    terms.push((0, GradedElem::constant(&ring, FF::one(fq))));
    SymbolicSPoly { ring, terms }
}
