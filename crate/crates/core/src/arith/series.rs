//! Truncated Laurent series over an exact coefficient field.
//!
//! A series stores every coefficient on the exponent range
//! `[lowest, prec)` plus an error term O(x^prec). Precision is explicit
//! and mandatory in every constructor, and all arithmetic propagates it
//! pessimistically, so an order-of-vanishing read off a series is never
//! an artifact of truncation.

use std::fmt;

use super::poly::Poly;
use super::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<F: Field> {
    ctx: F::Ctx,
    /// Symbolic variable tag (t, u, t_n, pi_inf, S, ...).
    var: String,
    /// Exponent of `coeffs[0]`.
    lowest: i64,
    /// Coefficients on `[lowest, prec)`; length = prec - lowest.
    coeffs: Vec<F>,
    prec: i64,
}

impl<F: Field> TruncatedSeries<F> {
    pub fn new(ctx: &F::Ctx, var: &str, lowest: i64, coeffs: Vec<F>, prec: i64) -> Self {
        assert!(
            lowest + coeffs.len() as i64 == prec,
            "coefficient range must fill [lowest, prec)"
        );
        TruncatedSeries {
            ctx: ctx.clone(),
            var: var.to_string(),
            lowest,
            coeffs,
            prec,
        }
    }

    /// The zero series O(x^prec).
    pub fn zero(ctx: &F::Ctx, var: &str, prec: i64) -> Self {
        TruncatedSeries {
            ctx: ctx.clone(),
            var: var.to_string(),
            lowest: prec,
            coeffs: vec![],
            prec,
        }
    }

    pub fn one(ctx: &F::Ctx, var: &str, prec: i64) -> Self {
        Self::monomial(ctx, var, F::one(ctx), 0, prec)
    }

    /// c * x^n + O(x^prec).
    pub fn monomial(ctx: &F::Ctx, var: &str, c: F, n: i64, prec: i64) -> Self {
        if n >= prec {
            return Self::zero(ctx, var, prec);
        }
        let mut coeffs = vec![F::zero(ctx); (prec - n) as usize];
        coeffs[0] = c;
        TruncatedSeries {
            ctx: ctx.clone(),
            var: var.to_string(),
            lowest: n,
            coeffs,
            prec,
        }
    }

    /// A polynomial in x, exact up to the stated precision.
    pub fn from_poly(p: &Poly<F>, var: &str, prec: i64) -> Self {
        let ctx = p.ctx().clone();
        let mut s = Self::zero(&ctx, var, prec);
        for (i, c) in p.coeffs().iter().enumerate() {
            if (i as i64) < prec && !c.is_zero() {
                s = s.add(&Self::monomial(&ctx, var, c.clone(), i as i64, prec));
            }
        }
        s
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn coeff(&self, e: i64) -> F {
        if e < self.lowest || e >= self.prec {
            F::zero(&self.ctx)
        } else {
            self.coeffs[(e - self.lowest) as usize].clone()
        }
    }

    /// Exponent of the first nonzero known coefficient; `None` when all
    /// known coefficients vanish (the series is O(x^prec)).
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lowest + i as i64)
    }

    /// Lower bound for the valuation usable in precision bookkeeping.
    fn val_floor(&self) -> i64 {
        self.valuation().unwrap_or(self.prec)
    }

    pub fn is_known_zero(&self) -> bool {
        self.valuation().is_none()
    }

    fn aligned(&self, other: &Self) -> (i64, i64) {
        debug_assert!(self.var == other.var, "mixing series variables");
        let lo = self.lowest.min(other.lowest);
        let prec = self.prec.min(other.prec);
        (lo, prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (lo, prec) = self.aligned(other);
        let coeffs = (lo..prec)
            .map(|e| self.coeff(e).add(&other.coeff(e)))
            .collect();
        TruncatedSeries::new(&self.ctx, &self.var, lo, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            ctx: self.ctx.clone(),
            var: self.var.clone(),
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncatedSeries {
            ctx: self.ctx.clone(),
            var: self.var.clone(),
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
            prec: self.prec,
        }
    }

    /// Multiply by x^n.
    pub fn shift(&self, n: i64) -> Self {
        TruncatedSeries {
            ctx: self.ctx.clone(),
            var: self.var.clone(),
            lowest: self.lowest + n,
            coeffs: self.coeffs.clone(),
            prec: self.prec + n,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.var == other.var, "mixing series variables");
        let (v1, v2) = (self.val_floor(), other.val_floor());
        let prec = (self.prec + v2).min(other.prec + v1);
        let lo = v1 + v2;
        if lo >= prec {
            return Self::zero(&self.ctx, &self.var, prec);
        }
        let mut out = vec![F::zero(&self.ctx); (prec - lo) as usize];
        for i in 0..self.coeffs.len() {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            let ea = self.lowest + i as i64;
            for j in 0..other.coeffs.len() {
                let e = ea + other.lowest + j as i64;
                if e < lo || e >= prec {
                    continue;
                }
                let b = &other.coeffs[j];
                if b.is_zero() {
                    continue;
                }
                let k = (e - lo) as usize;
                out[k] = out[k].add(&a.mul(b));
            }
        }
        TruncatedSeries::new(&self.ctx, &self.var, lo, out, prec)
    }

    /// Multiplicative inverse. The valuation must be determined by the
    /// known coefficients; the leading coefficient must be a unit.
    pub fn inv(&self) -> Result<Self> {
        let v = self.valuation().ok_or_else(|| {
            Error::Precision(format!(
                "cannot invert: no nonzero coefficient below O({}^{})",
                self.var, self.prec
            ))
        })?;
        let lead = self.coeff(v);
        let lead_inv = lead.inv().ok_or_else(|| {
            Error::Division("leading series coefficient is not a unit".into())
        })?;
        // f = c x^v (1 + h): invert the unit part by the standard
        // convolution recurrence; result precision prec - 2v.
        let rel = (self.prec - v) as usize; // known terms of the unit part
        let mut unit_inv = vec![F::zero(&self.ctx); rel];
        unit_inv[0] = F::one(&self.ctx);
        for k in 1..rel {
            let mut acc = F::zero(&self.ctx);
            for j in 1..=k {
                // h_j = coeff(v+j)/lead
                let hj = self.coeff(v + j as i64).mul(&lead_inv);
                acc = acc.add(&hj.mul(&unit_inv[k - j]));
            }
            unit_inv[k] = acc.neg();
        }
        let coeffs = unit_inv.into_iter().map(|c| c.mul(&lead_inv)).collect();
        Ok(TruncatedSeries::new(
            &self.ctx,
            &self.var,
            -v,
            coeffs,
            self.prec - 2 * v,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u64) -> Self {
        // precision of the product chain is handled by mul itself
        let far = self.prec + self.val_floor() * (n.max(1) as i64 - 1);
        let mut acc = Self::one(&self.ctx, &self.var, far.max(self.prec));
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute x -> x^k (k >= 1).
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k >= 1);
        let lo = self.lowest * k;
        let prec = self.prec * k;
        let mut out = vec![F::zero(&self.ctx); (prec - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k as usize] = c.clone();
        }
        TruncatedSeries::new(&self.ctx, &self.var, lo, out, prec)
    }

    /// Compose f(g). Requires val(g) >= 1. Supports a finite polar part
    /// in f (negative exponents), which composes through g^-1.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let w = inner.valuation().ok_or_else(|| {
            Error::Precision("composition with series of undetermined valuation".into())
        })?;
        if w < 1 {
            return Err(Error::Parameter(
                "inner series of composition must have valuation >= 1".into(),
            ));
        }
        let vf = self.val_floor();
        // truncation of f contributes O(x^(prec_f * w)); truncation of g
        // contributes O(x^((vf-1)w + prec_g)).
        let prec = (self.prec * w).min((vf - 1) * w + inner.prec);
        let mut acc = TruncatedSeries::zero(&self.ctx, &inner.var, prec);
        if self.is_known_zero() {
            return Ok(acc);
        }
        let v = self.valuation().unwrap();
        // Horner from the top exponent down to v, then multiply by g^v.
        for e in (v..self.prec).rev() {
            acc = acc.mul(inner);
            let c = self.coeff(e);
            if !c.is_zero() {
                acc = acc.add(&TruncatedSeries::monomial(&self.ctx, &inner.var, c, 0, prec));
            }
        }
        let gv = if v >= 0 {
            inner.pow(v as u64)
        } else {
            inner.inv()?.pow((-v) as u64)
        };
        Ok(acc.mul(&gv))
    }

    /// The operator that cuts off all terms of degree <= i, keeping the
    /// rest (exact on the known range).
    pub fn cut_below(&self, i: i64) -> Self {
        let coeffs = (self.lowest..self.prec)
            .map(|e| {
                if e <= i {
                    F::zero(&self.ctx)
                } else {
                    self.coeff(e)
                }
            })
            .collect();
        TruncatedSeries::new(&self.ctx, &self.var, self.lowest, coeffs, self.prec)
    }

    /// The complementary finite head: terms of degree <= i.
    pub fn head_through(&self, i: i64) -> Self {
        self.sub(&self.cut_below(i))
    }

    /// Rename the variable tag (e.g. after a substitution).
    pub fn with_var(&self, var: &str) -> Self {
        let mut s = self.clone();
        s.var = var.to_string();
        s
    }

    /// Truncate to a lower precision.
    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        let lo = self.lowest.min(prec);
        let coeffs = (lo..prec).map(|e| self.coeff(e)).collect();
        TruncatedSeries::new(&self.ctx, &self.var, lo, coeffs, prec)
    }

    /// Known (exponent, coefficient) pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(i64, F)> {
        (self.lowest..self.prec)
            .filter_map(|e| {
                let c = self.coeff(e);
                if c.is_zero() {
                    None
                } else {
                    Some((e, c))
                }
            })
            .collect()
    }
}

/// Evaluate a polynomial at a series by Horner; the series ops carry
/// the precision bookkeeping.
pub fn poly_at_series<F: Field>(p: &Poly<F>, s: &TruncatedSeries<F>) -> TruncatedSeries<F> {
    let headroom = p.degree().unwrap_or(0) as i64 * s.val_floor().max(0);
    let mut acc = TruncatedSeries::zero(s.ctx(), s.var(), s.prec() + headroom);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(s);
        if !c.is_zero() {
            acc = acc.add(&TruncatedSeries::monomial(
                s.ctx(),
                s.var(),
                c.clone(),
                0,
                acc.prec(),
            ));
        }
    }
    acc
}

impl<F: Field> fmt::Display for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.terms() {
            if wrote {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{e}", self.var)?,
            }
            wrote = true;
        }
        if wrote {
            write!(f, " + ")?;
        }
        write!(f, "O({}^{})", self.var, self.prec)
    }
}

impl<F: Field> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn series(lowest: i64, coeffs: &[i64], prec: i64) -> TruncatedSeries<Rat> {
        TruncatedSeries::new(&(), "t", lowest, coeffs.iter().map(|&c| q(c)).collect(), prec)
    }

    #[test]
    fn geometric_inverse() {
        // inv(1 + t) = 1 - t + t^2 + O(t^3)
        let f = series(0, &[1, 1, 0], 3);
        let g = f.inv().unwrap();
        assert_eq!(g.coeff(0), q(1));
        assert_eq!(g.coeff(1), q(-1));
        assert_eq!(g.coeff(2), q(1));
        assert_eq!(g.prec(), 3);
        // f * inv(f) = 1 to precision
        let p = f.mul(&g);
        assert_eq!(p.coeff(0), q(1));
        assert!(p.cut_below(0).is_known_zero());
    }

    #[test]
    fn inverse_of_inverse_roundtrip() {
        let f = series(2, &[3, 1, 4, 1], 6);
        let g = f.inv().unwrap().inv().unwrap();
        for e in 2..g.prec() {
            assert_eq!(g.coeff(e), f.coeff(e));
        }
    }

    #[test]
    fn valuations_add_under_mul() {
        let f = series(1, &[2, 1], 3);
        let g = series(3, &[5, 0, 7], 6);
        let h = f.mul(&g);
        assert_eq!(h.valuation(), Some(4));
        assert_eq!(
            h.valuation().unwrap(),
            f.valuation().unwrap() + g.valuation().unwrap()
        );
        // inv flips valuation
        assert_eq!(f.inv().unwrap().valuation(), Some(-1));
    }

    #[test]
    fn composition_scales_valuation() {
        // t composed with t^2 is t^2
        let f = series(1, &[1, 0, 0], 4);
        let g = series(2, &[1, 0], 4);
        let h = f.compose(&g).unwrap();
        assert_eq!(h.valuation(), Some(2));
        assert_eq!(h.coeff(2), q(1));
    }

    #[test]
    fn composition_rejects_valuation_zero() {
        let f = series(0, &[1, 1], 2);
        let g = series(0, &[1, 1], 2);
        assert!(matches!(f.compose(&g), Err(Error::Parameter(_))));
    }

    #[test]
    fn cut_operator_partition() {
        // Q_i(f) + (f - Q_i(f)) = f and Q_i(f) has only exponents > i
        let f = series(-2, &[1, 2, 3, 4, 5], 3);
        for i in -3..4 {
            let cut = f.cut_below(i);
            let head = f.head_through(i);
            assert_eq!(cut.add(&head), f, "i = {i}");
            if let Some(v) = cut.valuation() {
                assert!(v > i);
            }
            if let Some(v) = head.valuation() {
                assert!(v <= i);
            }
        }
    }

    #[test]
    fn precision_is_pessimistic() {
        let f = series(0, &[1, 1, 1, 1], 4);
        let g = series(2, &[1], 3); // t^2 + O(t^3)
        // product must not claim knowledge past min(4+2, 3+0)
        assert_eq!(f.mul(&g).prec(), 3 + 0.max(0));
    }

    #[test]
    fn non_unit_inverse_rejected() {
        let f = TruncatedSeries::<Rat>::zero(&(), "t", 5);
        assert!(matches!(f.inv(), Err(Error::Precision(_))));
    }

    #[test]
    fn inflate_multiplies_exponents() {
        let f = series(1, &[1, 2], 3);
        let g = f.inflate(3);
        assert_eq!(g.coeff(3), q(1));
        assert_eq!(g.coeff(6), q(2));
        assert_eq!(g.prec(), 9);
    }
}
