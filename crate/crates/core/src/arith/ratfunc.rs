//! Rational functions in one variable over an exact field.
//!
//! Always kept in canonical form: numerator and denominator coprime,
//! denominator monic. Instantiated with [`Rat`] coefficients this is
//! the home of the Z-functions in the variable S; with [`FqElem`]
//! coefficients it is the function field F_q(T).

use std::fmt;

use super::poly::Poly;
use super::{Field, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Division("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(den.ctx()),
            };
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).unwrap().0;
        let den = den.divrem(&g).unwrap().0;
        let lead_inv = den.leading().unwrap().inv().unwrap();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv).make_monic(),
        }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        RatFunc {
            num: Poly::zero(ctx),
            den: Poly::one(ctx),
        }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        RatFunc {
            num: Poly::one(ctx),
            den: Poly::one(ctx),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        let den = Poly::one(p.ctx());
        RatFunc { num: p, den }
    }

    pub fn constant(c: F) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.den.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one_poly()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::normalized(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Division("inverting zero rational function".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: u64) -> Self {
        RatFunc {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Evaluate at a point; error at a pole.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Division(format!("pole at {x}")));
        }
        Ok(self.num.eval(x).mul(&d.inv().unwrap()))
    }

    /// Order of vanishing at 0 (negative for a pole); `None` for the
    /// zero function.
    pub fn ord_at_zero(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let vnum = self.num.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let vden = self.den.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        Some(vnum as i64 - vden as i64)
    }

    /// Laurent expansion at 0: coefficients of x^v, x^(v+1), ...,
    /// x^(v+len-1) where v = `from`.
    ///
    /// The expansion is exact: after factoring x-powers out of
    /// numerator and denominator, the denominator is invertible at 0.
    pub fn expand(&self, from: i64, len: usize) -> Vec<F> {
        let ctx = self.ctx().clone();
        if self.is_zero() || len == 0 {
            return vec![F::zero(&ctx); len];
        }
        let vnum = self.num.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let vden = self.den.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let v = vnum as i64 - vden as i64;
        let num: Vec<F> = self.num.coeffs()[vnum..].to_vec();
        let den: Vec<F> = self.den.coeffs()[vden..].to_vec();
        // series division num/den to enough terms, then shift by v
        let need = (from + len as i64 - v).max(0) as usize;
        let d0inv = den[0].inv().unwrap();
        let mut series: Vec<F> = Vec::with_capacity(need);
        for k in 0..need {
            let mut acc = if k < num.len() {
                num[k].clone()
            } else {
                F::zero(&ctx)
            };
            for j in 1..=k.min(den.len() - 1) {
                acc = acc.sub(&den[j].mul(&series[k - j]));
            }
            series.push(acc.mul(&d0inv));
        }
        (0..len)
            .map(|i| {
                let e = from + i as i64 - v;
                if e < 0 {
                    F::zero(&ctx)
                } else {
                    series[e as usize].clone()
                }
            })
            .collect()
    }

    pub fn map_coeffs<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::normalized(
            self.num.map_coeffs(ctx, &f),
            self.den.map_coeffs(ctx, &f),
        )
    }

    pub fn display(&self, var: &str) -> String {
        if self.den.is_one_poly() {
            self.num.display(var)
        } else {
            format!("({})/({})", self.num.display(var), self.den.display(var))
        }
    }
}

impl<F: Field> Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.leading().map(|c| c.is_one()).unwrap_or(false)
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl<F: Field> Field for RatFunc<F> {
    type Ctx = F::Ctx;

    fn ctx(&self) -> F::Ctx {
        self.den.ctx().clone()
    }

    fn zero(ctx: &F::Ctx) -> Self {
        RatFunc::zero(ctx)
    }

    fn one(ctx: &F::Ctx) -> Self {
        RatFunc::one(ctx)
    }

    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }

    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }

    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }

    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

/// Rational functions in the zeta variable S with exact rational
/// coefficients.
pub type RatFuncS = RatFunc<Rat>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Fq;

    fn s_poly(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_coeffs(&(), coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (1 - S^2)/((1 - S)(1 - 2S)) = (1 + S)/(1 - 2S)
        let num = s_poly(&[1, 0, -1]);
        let den = s_poly(&[1, -1]).mul(&s_poly(&[1, -2]));
        let f = RatFunc::new(num, den).unwrap();
        let expect = RatFunc::new(s_poly(&[1, 1]), s_poly(&[1, -2])).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn normalize_keeps_noncancelling_factor() {
        // (2S^2+1)(1-S)/((1-S)(1-2S)) = (2S^2+1)/(1-2S)
        let num = s_poly(&[1, 0, 2]).mul(&s_poly(&[1, -1]));
        let den = s_poly(&[1, -1]).mul(&s_poly(&[1, -2]));
        let f = RatFunc::new(num, den).unwrap();
        let expect = RatFunc::new(s_poly(&[1, 0, 2]), s_poly(&[1, -2])).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn s_over_s_is_one() {
        let s = s_poly(&[0, 1]);
        let f = RatFunc::new(s.clone(), s).unwrap();
        assert!(f.is_one());
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFunc::new(s_poly(&[1]), s_poly(&[2, 4])).unwrap();
        assert!(f.den().is_monic());
        assert_eq!(f.eval(&Rat::from_int(0)).unwrap(), Rat::new(1, 2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(s_poly(&[1]), s_poly(&[])).is_err());
    }

    #[test]
    fn expansion_of_geometric_series() {
        // 1/(1-2S) = 1 + 2S + 4S^2 + ...
        let f = RatFunc::new(s_poly(&[1]), s_poly(&[1, -2])).unwrap();
        let coeffs = f.expand(0, 6);
        for (i, c) in coeffs.iter().enumerate() {
            assert_eq!(*c, Rat::from_int(1 << i));
        }
    }

    #[test]
    fn expansion_with_pole_at_zero() {
        // (1+S)/S = S^-1 + 1
        let f = RatFunc::new(s_poly(&[1, 1]), s_poly(&[0, 1])).unwrap();
        assert_eq!(f.ord_at_zero(), Some(-1));
        let coeffs = f.expand(-2, 4);
        assert_eq!(
            coeffs,
            vec![
                Rat::from_int(0),
                Rat::from_int(1),
                Rat::from_int(1),
                Rat::from_int(0)
            ]
        );
    }

    #[test]
    fn arithmetic_agrees_with_expansion_to_30_terms() {
        // product vs coefficient-wise convolution of expansions
        let f = RatFunc::new(s_poly(&[1, 3]), s_poly(&[1, -1, 2])).unwrap();
        let g = RatFunc::new(s_poly(&[2, 0, 1]), s_poly(&[1, 1])).unwrap();
        let h = f.mul(&g);
        let (ef, eg, eh) = (f.expand(0, 30), g.expand(0, 30), h.expand(0, 30));
        for k in 0..30 {
            let mut conv = Rat::from_int(0);
            for i in 0..=k {
                conv = conv.add(&ef[i].mul(&eg[k - i]));
            }
            assert_eq!(conv, eh[k], "coefficient {k}");
        }
        // and the sum
        let s = f.add(&g);
        let es = s.expand(0, 30);
        for k in 0..30 {
            assert_eq!(es[k], ef[k].add(&eg[k]));
        }
    }

    #[test]
    fn function_field_instance() {
        let fq = Fq::new(3).unwrap();
        let t: Poly<crate::arith::FqElem> = Poly::x(&fq);
        let f = RatFunc::new(Poly::one(&fq), t.clone()).unwrap(); // 1/T
        let g = RatFunc::from_poly(t); // T
        assert!(f.mul(&g).is_one());
    }
}
