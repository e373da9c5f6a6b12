//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest-degree first with a nonzero leading
//! coefficient (the zero polynomial has an empty coefficient vector and
//! degree -infinity, reported as `None`).

use std::fmt;

use super::{Field, Fq, FqElem};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly {
            ctx: ctx.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Poly {
            ctx: ctx.clone(),
            coeffs: vec![F::one(ctx)],
        }
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        if c.is_zero() {
            Poly::zero(&ctx)
        } else {
            Poly {
                ctx,
                coeffs: vec![c],
            }
        }
    }

    /// Build from low-to-high coefficients, trimming zeros.
    pub fn from_coeffs(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly {
            ctx: ctx.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// c * x^n.
    pub fn monomial(c: F, n: usize) -> Self {
        let ctx = c.ctx();
        if c.is_zero() {
            return Poly::zero(&ctx);
        }
        let mut coeffs = vec![F::zero(&ctx); n + 1];
        coeffs[n] = c;
        Poly { ctx, coeffs }
    }

    /// The variable x itself.
    pub fn x(ctx: &F::Ctx) -> Self {
        Poly::monomial(F::one(ctx), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::from_coeffs(
            &self.ctx,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::Division("polynomial division by zero".into()));
        }
        let dlead = div.leading().unwrap().clone();
        let dinv = dlead.inv().unwrap();
        let dd = div.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero(&self.ctx);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().mul(&dinv);
            let t = Poly::monomial(c, rd - dd);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(div));
        }
        Ok((quo, rem))
    }

    pub fn rem(&self, div: &Self) -> Result<Self> {
        Ok(self.divrem(div)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other
            .divrem(self)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    }

    /// Monic gcd (gcd(0,0) = 0).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).unwrap();
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Multiplicity of `root` factor `(x - root)`... multiplicity of the
    /// monic factor `g` in `self`, by repeated division.
    pub fn multiplicity_of(&self, g: &Self) -> usize {
        assert!(!g.is_constant(), "factor must be nonconstant");
        let mut m = 0;
        let mut f = self.clone();
        if f.is_zero() {
            panic!("multiplicity in the zero polynomial");
        }
        loop {
            let (q, r) = f.divrem(g).unwrap();
            if !r.is_zero() {
                return m;
            }
            m += 1;
            f = q;
        }
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(ctx, self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Render with the given variable name.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let part = match i {
                0 => cs,
                1 if c.is_one() => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if c.is_one() => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

/// Polynomials over a finite field.
pub type PolyFq = Poly<FqElem>;

impl PolyFq {
    /// Packed base-q encoding of the coefficient string; total order on
    /// F_q[x] used for canonical tie-breaking everywhere.
    pub fn encoding(&self) -> u64 {
        let field = match self.coeffs.first() {
            Some(c) => c.field().clone(),
            None => return 0,
        };
        let q = field.q() as u64;
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c.encoding() as u64;
        }
        acc
    }

    /// Irreducibility by trial division against all monic polynomials
    /// of degree 1..=deg/2.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        let fq = match self.coeffs.first() {
            Some(c) => c.field().clone(),
            None => unreachable!(),
        };
        for deg in 1..=d / 2 {
            for g in monic_polys(&fq, deg) {
                if self.rem(&g).unwrap().is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// All monic polynomials of exact degree d over F_q, in encoding order.
pub fn monic_polys(fq: &Fq, d: usize) -> Vec<PolyFq> {
    let q = fq.q() as u64;
    let count = q.pow(d as u32);
    let mut out = Vec::with_capacity(count as usize);
    for low in 0..count {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut v = low;
        for _ in 0..d {
            coeffs.push(fq.elem((v % q) as u32));
            v /= q;
        }
        coeffs.push(fq.one_elem());
        out.push(Poly::from_coeffs(fq, coeffs));
    }
    out
}

/// All monic irreducible polynomials of exact degree d over F_q.
///
/// The count is (1/d) * sum over e | d of mu(e) q^(d/e), which the
/// tests pin against this enumeration.
pub fn irreducible_polys(q: u32, d: usize) -> Result<Vec<PolyFq>> {
    if d == 0 || d > 12 {
        return Err(Error::Parameter(format!(
            "degree {d} out of supported range 1..=12"
        )));
    }
    let fq = Fq::new(q)?;
    Ok(monic_polys(&fq, d)
        .into_iter()
        .filter(|f| f.is_irreducible())
        .collect())
}

/// Integer Moebius function (on Z, used for irreducible counting; the
/// ideal-theoretic Moebius lives with the rings module).
pub fn mobius_int(n: u64) -> i64 {
    let mut n = n;
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            count += 1;
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of monic irreducibles of degree d over F_q by the Moebius
/// count formula.
pub fn irreducible_count(q: u32, d: usize) -> u64 {
    let mut sum: i128 = 0;
    for e in 1..=d as u64 {
        if d as u64 % e == 0 {
            sum += mobius_int(e) as i128 * (q as i128).pow((d as u64 / e) as u32);
        }
    }
    (sum / d as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    #[test]
    fn divrem_roundtrip() {
        let fq = Fq::new(5).unwrap();
        let f = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(2), fq.elem(3), fq.elem(4)]);
        let g = Poly::from_coeffs(&fq, vec![fq.elem(2), fq.elem(1)]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn degree_additive_under_mul() {
        let f3 = Fq::new(3).unwrap();
        let a = Poly::from_coeffs(&f3, vec![f3.elem(1), f3.elem(2)]);
        let b = Poly::from_coeffs(&f3, vec![f3.elem(2), f3.elem(0), f3.elem(1)]);
        assert_eq!(
            a.mul(&b).degree().unwrap(),
            a.degree().unwrap() + b.degree().unwrap()
        );
    }

    #[test]
    fn irreducibles_q2_d1_d2() {
        // q=2, d=1: T and T+1. q=2, d=2: only T^2+T+1.
        let d1 = irreducible_polys(2, 1).unwrap();
        assert_eq!(d1.len(), 2);
        let d2 = irreducible_polys(2, 2).unwrap();
        assert_eq!(d2.len(), 1);
        let fq = Fq::new(2).unwrap();
        let expect = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(1)]);
        assert_eq!(d2[0], expect);
    }

    #[test]
    fn irreducible_counts_match_mobius_formula() {
        // q=3, d=2: (9 - 3)/2 = 3, oracle = exhaustive divisor check.
        assert_eq!(irreducible_polys(3, 2).unwrap().len(), 3);
        assert_eq!(irreducible_count(3, 2), 3);
        for (q, d) in [(2u32, 1usize), (2, 2), (2, 3), (2, 4), (2, 6), (3, 3), (4, 2), (5, 2)] {
            let listed = irreducible_polys(q, d).unwrap();
            assert_eq!(listed.len() as u64, irreducible_count(q, d), "q={q} d={d}");
            // duplicate-free by construction: encodings strictly increase
            for w in listed.windows(2) {
                assert!(w[0].encoding() < w[1].encoding());
            }
        }
    }

    #[test]
    fn gcd_over_q() {
        let one = Rat::from_int(1);
        let a = Poly::from_coeffs(&(), vec![Rat::from_int(-1), one.clone()]); // x - 1
        let b = Poly::from_coeffs(&(), vec![Rat::from_int(1), one.clone()]); // x + 1
        let f = a.mul(&a).mul(&b); // (x-1)^2 (x+1)
        let g = a.mul(&b).mul(&b); // (x-1)(x+1)^2
        assert_eq!(f.gcd(&g), a.mul(&b));
        assert_eq!(f.multiplicity_of(&a), 2);
        assert_eq!(f.multiplicity_of(&b), 1);
    }

    #[test]
    fn compose_and_eval() {
        let f = Poly::from_coeffs(&(), vec![Rat::from_int(1), Rat::from_int(0), Rat::from_int(1)]); // x^2+1
        let g = Poly::from_coeffs(&(), vec![Rat::from_int(2), Rat::from_int(3)]); // 3x+2
        let h = f.compose(&g);
        for v in [-2i64, 0, 1, 5] {
            let x = Rat::from_int(v);
            assert_eq!(h.eval(&x), f.eval(&g.eval(&x)));
        }
    }
}

impl<F: Field + Eq> Eq for Poly<F> {}
