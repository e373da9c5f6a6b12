//! The completion K_infinity and the embedding of K into it, per ring
//! family.
//!
//! Genus-0 families use exact digit arithmetic: an element is
//! pi^val * u with u a residue in F_q[X]/(m^N), where (X, m) is
//! (1/T, 1/T) for the polynomial ring and (T, g) for the shifted
//! family. The elliptic family expands x and y as Laurent series in the
//! local parameter z = x/y at infinity.
//!
//! Valuations are normalized so that val(a) = -deg(a)/d_inf for a in A,
//! i.e. |a| = q^(deg a).

use crate::arith::{Field, FqElem, Poly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rings::spec::PolyFq;
use crate::rings::{FieldElement, RingKind, RingSpec};

/// An element of K_infinity known to an explicit number of uniformizer
/// digits.
#[derive(Clone, Debug, PartialEq)]
pub enum KInfElem {
    /// pi^val * (residue + O(pi^digits)), residue in F_q[X]/(m^digits)
    /// with the base-m digit expansion as the pi-adic digits. After
    /// normalization the residue is a unit mod m (or zero).
    Digits {
        modulus: PolyFq,
        val: i64,
        residue: PolyFq,
        digits: i64,
    },
    /// Laurent series in the elliptic local parameter z.
    Series(TruncatedSeries<FqElem>),
}

impl KInfElem {
    /// Valuation; `None` when every known digit vanishes (so only
    /// val >= precision is known).
    pub fn valuation(&self) -> Option<i64> {
        match self {
            KInfElem::Digits { val, residue, .. } => {
                if residue.is_zero() {
                    None
                } else {
                    Some(*val)
                }
            }
            KInfElem::Series(s) => s.valuation(),
        }
    }

    /// Number of uniformizer digits certified beyond the valuation
    /// base; the absolute precision exponent.
    pub fn precision(&self) -> i64 {
        match self {
            KInfElem::Digits { val, digits, .. } => val + digits,
            KInfElem::Series(s) => s.prec(),
        }
    }

    /// The digit at pi^e, as a residue polynomial (degree < d_inf).
    pub fn digit(&self, e: i64) -> PolyFq {
        match self {
            KInfElem::Digits {
                modulus,
                val,
                residue,
                digits,
            } => {
                let ctx = modulus.ctx().clone();
                if e < *val || e >= val + digits {
                    return Poly::zero(&ctx);
                }
                let k = (e - val) as usize;
                let shifted = residue
                    .divrem(&modulus.pow(k as u64))
                    .unwrap()
                    .0;
                shifted.rem(modulus).unwrap()
            }
            KInfElem::Series(s) => Poly::constant(s.coeff(e)),
        }
    }

    /// Is the element congruent to 1 modulo the maximal ideal?
    pub fn is_one_mod_pi(&self) -> bool {
        self.valuation() == Some(0) && self.digit(0).degree() == Some(0)
            && self.digit(0).coeff(0).is_one()
    }

    fn normalize(self) -> KInfElem {
        match self {
            KInfElem::Digits {
                modulus,
                mut val,
                mut residue,
                mut digits,
            } => {
                while digits > 0 && !residue.is_zero() {
                    let (q, r) = residue.divrem(&modulus).unwrap();
                    if r.is_zero() {
                        residue = q;
                        val += 1;
                        digits -= 1;
                    } else {
                        break;
                    }
                }
                let md = modulus.pow(digits.max(0) as u64);
                residue = residue.rem(&md).unwrap();
                KInfElem::Digits {
                    modulus,
                    val,
                    residue,
                    digits,
                }
            }
            s => s,
        }
    }

    pub fn mul(&self, other: &KInfElem) -> KInfElem {
        match (self, other) {
            (
                KInfElem::Digits {
                    modulus,
                    val: v1,
                    residue: r1,
                    digits: d1,
                },
                KInfElem::Digits {
                    val: v2,
                    residue: r2,
                    digits: d2,
                    ..
                },
            ) => {
                let digits = (*d1).min(*d2);
                let md = modulus.pow(digits.max(0) as u64);
                KInfElem::Digits {
                    modulus: modulus.clone(),
                    val: v1 + v2,
                    residue: r1.mul(r2).rem(&md).unwrap(),
                    digits,
                }
                .normalize()
            }
            (KInfElem::Series(a), KInfElem::Series(b)) => KInfElem::Series(a.mul(b)),
            _ => panic!("mixing completion representations"),
        }
    }

    pub fn add(&self, other: &KInfElem) -> KInfElem {
        match (self, other) {
            (
                KInfElem::Digits {
                    modulus,
                    val: v1,
                    residue: r1,
                    digits: d1,
                },
                KInfElem::Digits {
                    val: v2,
                    residue: r2,
                    digits: d2,
                    ..
                },
            ) => {
                let val = (*v1).min(*v2);
                // common absolute precision
                let prec = (v1 + d1).min(v2 + d2);
                let digits = prec - val;
                let md = modulus.pow(digits.max(0) as u64);
                let lift = |v: i64, r: &PolyFq| -> PolyFq {
                    r.mul(&modulus.pow((v - val) as u64)).rem(&md).unwrap()
                };
                KInfElem::Digits {
                    modulus: modulus.clone(),
                    val,
                    residue: lift(*v1, r1).add(&lift(*v2, r2)).rem(&md).unwrap(),
                    digits,
                }
                .normalize()
            }
            (KInfElem::Series(a), KInfElem::Series(b)) => KInfElem::Series(a.add(b)),
            _ => panic!("mixing completion representations"),
        }
    }

    pub fn inv(&self) -> Result<KInfElem> {
        match self {
            KInfElem::Digits {
                modulus,
                val,
                residue,
                digits,
            } => {
                if residue.is_zero() {
                    return Err(Error::Precision(
                        "cannot invert: valuation undetermined at this precision".into(),
                    ));
                }
                // residue is a unit mod modulus after normalization;
                // invert modulo modulus^digits by extended Euclid
                let md = modulus.pow((*digits).max(1) as u64);
                let inv = poly_inverse_mod(residue, &md)?;
                Ok(KInfElem::Digits {
                    modulus: modulus.clone(),
                    val: -val,
                    residue: inv,
                    digits: *digits,
                }
                .normalize())
            }
            KInfElem::Series(s) => Ok(KInfElem::Series(s.inv()?)),
        }
    }

    pub fn pow_signed(&self, n: i64) -> Result<KInfElem> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc: Option<KInfElem> = None;
        for _ in 0..n.unsigned_abs() {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => a.mul(&base),
            });
        }
        Ok(acc.unwrap_or_else(|| self.one_like()))
    }

    fn one_like(&self) -> KInfElem {
        match self {
            KInfElem::Digits {
                modulus, digits, ..
            } => KInfElem::Digits {
                modulus: modulus.clone(),
                val: 0,
                residue: Poly::one(modulus.ctx()),
                digits: *digits,
            },
            KInfElem::Series(s) => {
                KInfElem::Series(TruncatedSeries::one(s.ctx(), s.var(), s.prec()))
            }
        }
    }
}

/// Inverse of a unit residue modulo m^N over F_q[X], by extended
/// Euclid.
pub(crate) fn poly_inverse_mod(a: &PolyFq, modulus: &PolyFq) -> Result<PolyFq> {
    let (mut r0, mut r1) = (modulus.clone(), a.rem(modulus)?);
    let (mut s0, mut s1) = (Poly::zero(modulus.ctx()), Poly::one(modulus.ctx()));
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.degree() != Some(0) {
        return Err(Error::Division(
            "non-unit residue in completion inverse".into(),
        ));
    }
    let c = r0.coeff(0).inv().unwrap();
    Ok(s0.scale(&c).rem(modulus)?)
}

/// Context for embedding K into K_infinity at a fixed working
/// precision (number of uniformizer digits).
#[derive(Clone, Debug)]
pub struct CompletionContext {
    ring: RingSpec,
    precision: i64,
    /// elliptic only: Laurent expansions of x and y at infinity
    xy: Option<(TruncatedSeries<FqElem>, TruncatedSeries<FqElem>)>,
}

impl CompletionContext {
    pub fn new(ring: &RingSpec, precision: i64) -> Result<CompletionContext> {
        if precision < 2 {
            return Err(Error::Parameter("precision must be at least 2".into()));
        }
        let xy = match ring.kind() {
            RingKind::Elliptic { curve } => Some(curve.expansion_at_infinity(precision + 8)),
            _ => None,
        };
        Ok(CompletionContext {
            ring: ring.clone(),
            precision,
            xy,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Residue size q_infinity.
    pub fn q_inf(&self) -> u64 {
        self.ring.q_inf()
    }

    /// Embed a field element, certifying at least the context precision
    /// of digits past the valuation. Zero maps to zero (reported as an
    /// error for valuation-dependent uses).
    pub fn embed(&self, x: &FieldElement) -> Result<KInfElem> {
        if x.is_zero() {
            return Err(Error::Parameter(
                "embedding of 0 has no determined valuation".into(),
            ));
        }
        match self.ring.kind() {
            RingKind::Poly => {
                let f = x.as_ratfunc().unwrap();
                let num = self.poly_to_digits(f.num())?;
                let den = self.poly_to_digits(f.den())?;
                Ok(num.mul(&den.inv()?))
            }
            RingKind::Shifted { g } => {
                let f = x.as_ratfunc().unwrap();
                let to_elem = |p: &PolyFq| -> KInfElem {
                    let digits = self.precision + 4;
                    let md = g.pow(digits as u64);
                    KInfElem::Digits {
                        modulus: g.clone(),
                        val: 0,
                        residue: p.rem(&md).unwrap(),
                        digits,
                    }
                    .normalize()
                };
                let num = to_elem(f.num());
                let den = to_elem(f.den());
                Ok(num.mul(&den.inv()?))
            }
            RingKind::Elliptic { .. } => {
                let (xs, ys) = self.xy.as_ref().unwrap();
                let (u, v, w) = x.xy_parts().unwrap();
                let nu = crate::arith::series::poly_at_series(u, xs);
                let nv = crate::arith::series::poly_at_series(v, xs).mul(ys);
                let num = nu.add(&nv);
                let den = crate::arith::series::poly_at_series(w, xs);
                Ok(KInfElem::Series(num.div(&den)?))
            }
        }
    }

    /// Embed a polynomial in T for the polynomial ring: T^i becomes
    /// pi^-i.
    fn poly_to_digits(&self, p: &PolyFq) -> Result<KInfElem> {
        let fq = self.ring.fq();
        let d = p
            .degree()
            .ok_or_else(|| Error::Parameter("embedding zero".into()))?;
        // reversed coefficients: p = pi^-d * sum_i c_{d-i} pi^i
        let rev: Vec<FqElem> = (0..=d).map(|i| p.coeff(d - i)).collect();
        let s = Poly::from_coeffs(fq, rev);
        let pi = Poly::x(fq);
        let digits = self.precision + 4;
        let md = pi.pow(digits as u64);
        Ok(KInfElem::Digits {
            modulus: pi,
            val: -(d as i64),
            residue: s.rem(&md)?,
            digits,
        }
        .normalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fq, RatFunc};

    fn shifted2() -> RingSpec {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(1)]);
        RingSpec::shifted(2, g).unwrap()
    }

    fn ratfunc_elem(ring: &RingSpec, num: &[u32], den: &[u32]) -> FieldElement {
        let fq = ring.fq();
        let n = Poly::from_coeffs(fq, num.iter().map(|&c| fq.elem(c)).collect());
        let d = Poly::from_coeffs(fq, den.iter().map(|&c| fq.elem(c)).collect());
        FieldElement::from_ratfunc(ring, RatFunc::new(n, d).unwrap()).unwrap()
    }

    #[test]
    fn poly_embedding_of_t_is_inverse_uniformizer() {
        let ring = RingSpec::poly(2).unwrap();
        let ctx = CompletionContext::new(&ring, 8).unwrap();
        let t = ratfunc_elem(&ring, &[0, 1], &[1]);
        let e = ctx.embed(&t).unwrap();
        assert_eq!(e.valuation(), Some(-1));
        assert!(e.digit(-1).degree() == Some(0) && e.digit(-1).coeff(0).is_one());
        // 1/(T+1) = pi + pi^2 + ... over F_2
        let f = ratfunc_elem(&ring, &[1], &[1, 1]);
        let ef = ctx.embed(&f).unwrap();
        assert_eq!(ef.valuation(), Some(1));
        for e in 1..6 {
            assert!(ef.digit(e).coeff(0).is_one(), "digit {e}");
        }
    }

    #[test]
    fn shifted_embedding_digit_expansion() {
        // T embeds as its own residue: digit 0 = T, all higher digits 0
        let ring = shifted2();
        let ctx = CompletionContext::new(&ring, 8).unwrap();
        let t = ratfunc_elem(&ring, &[0, 1], &[1]);
        let e = ctx.embed(&t).unwrap();
        assert_eq!(e.valuation(), Some(0));
        assert_eq!(e.digit(0).display("T"), "T");
        for k in 1..6 {
            assert!(e.digit(k).is_zero());
        }
        // g-adic expansion of T^2 = g + (T+1): digit0 = T+1, digit1 = 1
        let t2 = ratfunc_elem(&ring, &[0, 0, 1], &[1]);
        let e2 = ctx.embed(&t2).unwrap();
        assert_eq!(e2.digit(0).display("T"), "T + 1");
        assert!(e2.digit(1).coeff(0).is_one());
    }

    #[test]
    fn elliptic_embedding_pole_orders() {
        let ring = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let ctx = CompletionContext::new(&ring, 8).unwrap();
        let fq = ring.fq();
        let x = FieldElement::from_xy(&ring, Poly::x(fq), Poly::zero(fq), Poly::one(fq))
            .unwrap();
        let e = ctx.embed(&x).unwrap();
        assert_eq!(e.valuation(), Some(-2));
    }

    #[test]
    fn valuation_equals_minus_degree_over_d_inf() {
        let rings = [
            RingSpec::poly(3).unwrap(),
            shifted2(),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
        ];
        for ring in &rings {
            let ctx = CompletionContext::new(ring, 8).unwrap();
            let pool = crate::rings::ideal_elements_up_to_degree(
                ring,
                &crate::rings::IdealRep::unit(ring),
                4,
            )
            .unwrap();
            for a in pool.iter().filter(|a| !a.is_zero()) {
                let e = ctx.embed(a).unwrap();
                assert_eq!(
                    e.valuation(),
                    Some(-a.degree().unwrap() / ring.d_inf() as i64),
                    "ring {ring}, element {a}"
                );
            }
        }
    }

    #[test]
    fn embedding_is_ring_homomorphism() {
        let rings = [
            RingSpec::poly(3).unwrap(),
            shifted2(),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
        ];
        for ring in &rings {
            let ctx = CompletionContext::new(ring, 8).unwrap();
            let pool: Vec<FieldElement> = crate::rings::ideal_elements_up_to_degree(
                ring,
                &crate::rings::IdealRep::unit(ring),
                3,
            )
            .unwrap()
            .into_iter()
            .filter(|a| !a.is_zero())
            .collect();
            // deterministic pair sampling
            for k in 0..12usize.min(pool.len() * pool.len()) {
                let a = &pool[(3 * k + 1) % pool.len()];
                let b = &pool[(5 * k + 2) % pool.len()];
                let ea = ctx.embed(a).unwrap();
                let eb = ctx.embed(b).unwrap();
                // products
                let lhs = ctx.embed(&a.mul(b)).unwrap();
                let rhs = ea.mul(&eb);
                assert_agree(&lhs, &rhs);
                // sums (skip when a + b = 0)
                let s = a.add(b);
                if !s.is_zero() {
                    let lhs = ctx.embed(&s).unwrap();
                    let rhs = ea.add(&eb);
                    assert_agree(&lhs, &rhs);
                }
            }
        }
    }

    fn assert_agree(a: &KInfElem, b: &KInfElem) {
        let prec = a.precision().min(b.precision());
        let lo = match (a.valuation(), b.valuation()) {
            (Some(x), Some(y)) => x.min(y),
            _ => return, // both zero to precision
        };
        for e in lo..prec {
            assert_eq!(a.digit(e), b.digit(e), "digit {e}");
        }
    }

    #[test]
    fn digit_arithmetic_inverse_roundtrip() {
        let ring = shifted2();
        let ctx = CompletionContext::new(&ring, 10).unwrap();
        let x = ratfunc_elem(&ring, &[0, 1, 1], &[1, 1, 1]); // (T+T^2)/g
        let e = ctx.embed(&x).unwrap();
        let back = e.inv().unwrap().inv().unwrap();
        let prod = e.mul(&e.inv().unwrap());
        assert!(prod.is_one_mod_pi());
        assert_eq!(prod.valuation(), Some(0));
        for k in 1..6 {
            assert!(prod.digit(k).is_zero());
        }
        assert_eq!(back.valuation(), e.valuation());
    }
}
