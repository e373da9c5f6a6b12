//! The zeta function of the underlying projective curve:
//! Z_K(S) = P(S)/((1-S)(1-qS)) with P of degree 2g.

use crate::arith::ratfunc::RatFuncS;
use crate::arith::{Field, Poly, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::rings::RingSpec;

#[derive(Clone, Debug, PartialEq)]
pub struct CurveZeta {
    q: u32,
    genus: u32,
    /// Numerator polynomial P(S), integer coefficients.
    pub p: Poly<Rat>,
}

impl CurveZeta {
    /// Z_K as a rational function of S.
    pub fn as_ratfunc(&self) -> RatFuncS {
        let one = Rat::from_int(1);
        let den = Poly::from_coeffs(&(), vec![one.clone(), Rat::from_int(-1)]).mul(
            &Poly::from_coeffs(&(), vec![one, Rat::from_int(-(self.q as i64))]),
        );
        RatFunc::new(self.p.clone(), den).unwrap()
    }

    /// Verify every structural invariant: degree 2g, P(0) = 1, leading
    /// coefficient q^g, P(1) = h(X), the functional equation, and the
    /// Riemann-hypothesis bound for g <= 1.
    pub fn verify(&self, h_curve: u64) -> Result<()> {
        let g = self.genus as usize;
        if g == 0 {
            if !self.p.is_one() {
                return Err(Error::Consistency("genus-0 numerator must be 1".into()));
            }
            return Ok(());
        }
        if self.p.degree() != Some(2 * g) {
            return Err(Error::Consistency(format!(
                "deg P = {:?}, expected {}",
                self.p.degree(),
                2 * g
            )));
        }
        if self.p.coeff(0) != Rat::from_int(1) {
            return Err(Error::Consistency("P(0) != 1".into()));
        }
        let qg = Rat::pow_of(self.q, g as i64);
        if self.p.leading() != Some(&qg) {
            return Err(Error::Consistency("leading coefficient of P != q^g".into()));
        }
        if self.p.eval(&Rat::from_int(1)) != Rat::from_big(h_curve.into()) {
            return Err(Error::Consistency("P(1) != h(X)".into()));
        }
        // functional equation P(1/(qX)) = q^-g X^-2g P(X), i.e.
        // p_{2g-i} = q^{g-i} p_i for all i
        for i in 0..=2 * g {
            let lhs = self.p.coeff(2 * g - i);
            let rhs = self.p.coeff(i).mul(&Rat::pow_of(self.q, g as i64 - i as i64));
            if lhs != rhs {
                return Err(Error::Consistency(format!(
                    "functional equation fails at coefficient {i}"
                )));
            }
        }
        // RH for genus 1: P = qS^2 - tS + 1 with t^2 <= 4q
        if g == 1 {
            let t = self.p.coeff(1).neg();
            let t2 = t.mul(&t);
            let four_q = Rat::from_int(4 * self.q as i64);
            if t2 > four_q {
                return Err(Error::Consistency(
                    "reciprocal roots violate |x| = q^(1/2)".into(),
                ));
            }
        }
        Ok(())
    }
}

impl Poly<Rat> {
    fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0) == Rat::from_int(1)
    }
}

/// Compute the curve zeta from point counts: genus 0 gives P = 1,
/// genus 1 gives P(X) = qX^2 - tX + 1 with t = q + 1 - #E(F_q).
pub fn curve_zeta(ring: &RingSpec) -> Result<CurveZeta> {
    let q = ring.q();
    let p = match ring.genus() {
        0 => Poly::constant(Rat::from_int(1)),
        1 => {
            let n1 = ring.curve_point_count(1)?;
            let t = q as i64 + 1 - n1 as i64;
            Poly::from_coeffs(
                &(),
                vec![
                    Rat::from_int(1),
                    Rat::from_int(-t),
                    Rat::from_int(q as i64),
                ],
            )
        }
        g => return Err(Error::Parameter(format!("genus {g} unsupported"))),
    };
    let z = CurveZeta {
        q,
        genus: ring.genus(),
        p,
    };
    z.verify(ring.curve_class_number() as u64)?;
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_ring_curve_zeta() {
        let r = RingSpec::poly(3).unwrap();
        let z = curve_zeta(&r).unwrap();
        // Z_K = 1/((1-S)(1-qS)): counts all effective divisors of P^1
        let f = z.as_ratfunc();
        let coeffs = f.expand(0, 4);
        // # effective divisors of degree n on P^1 = (q^{n+1}-1)/(q-1)
        for (n, c) in coeffs.iter().enumerate() {
            let expect = ((3i64.pow(n as u32 + 1)) - 1) / 2;
            assert_eq!(*c, Rat::from_int(expect));
        }
    }

    #[test]
    fn elliptic_curve_zeta_invariants() {
        // y^2 + y = x^3 over F_2: h = 3, t = 0, P = 2S^2 + 1
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let z = curve_zeta(&r).unwrap();
        assert_eq!(z.p.coeff(0), Rat::from_int(1));
        assert_eq!(z.p.coeff(1), Rat::from_int(0));
        assert_eq!(z.p.coeff(2), Rat::from_int(2));
        // verify() ran inside curve_zeta; run again with a wrong h to
        // see it fail
        assert!(z.verify(4).is_err());
    }

    #[test]
    fn elliptic_zeta_counts_points_via_logarithmic_expansion() {
        // the S^n coefficient of Z_K counts effective divisors of
        // degree n; for n = 1 that is #E(F_q)
        for (q, a) in [(2u32, [0i64, 0, 1, 0, 0]), (3, [0, 0, 0, 2, 1])] {
            let r = RingSpec::elliptic(q, a).unwrap();
            let z = curve_zeta(&r).unwrap();
            let c1 = z.as_ratfunc().expand(1, 1)[0].clone();
            assert_eq!(c1, Rat::from_big(r.curve_point_count(1).unwrap().into()));
        }
    }
}
