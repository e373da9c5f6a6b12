//! Finite fields F_q, q = p^e <= 2^16.
//!
//! Elements are stored as base-p digit strings packed into a `u32`
//! (digit i = coefficient of x^i in the residue representative), so an
//! element of F_q is a number in `0..q`. Arithmetic reduces modulo a
//! fixed conventional modulus per (p, e): the monic irreducible of
//! degree e over F_p whose packed encoding is least. That makes every
//! field element, and everything built on top, reproducible across
//! runs.

use std::fmt;
use std::sync::Arc;

use super::Field;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq)]
struct FqCtx {
    p: u32,
    e: u32,
    q: u32,
    /// Monic irreducible modulus, coefficients in F_p, length e+1,
    /// lowest degree first. For e = 1 this is [0, 1] (i.e. x), unused.
    modulus: Vec<u32>,
}

/// A finite field F_q. Cheap to clone (shared table).
#[derive(Clone, Debug)]
pub struct Fq(Arc<FqCtx>);

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus
    }
}

impl Eq for Fq {}

/// Factor q as p^e; error if q is not a prime power.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::Parameter(format!("q = {q} is not a prime power")));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if m != 1 {
                return Err(Error::Parameter(format!("q = {q} is not a prime power")));
            }
            return Ok((p, e));
        }
        p += 1;
    }
    Ok((q, 1)) // q itself prime
}

/// Polynomial arithmetic over F_p on digit vectors (lowest first).
mod fp_poly {
    pub fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += (x as u64) * (y as u64);
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|c| (c % p as u64) as u32).collect();
        trim(&mut out);
        out
    }

    /// Remainder of a by the monic polynomial m.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for i in 0..m.len() {
                let idx = shift + i;
                let sub = (lead as u64 * m[i] as u64) % p as u64;
                let cur = r[idx] as u64;
                r[idx] = ((cur + p as u64 - sub as u64) % p as u64) as u32;
            }
            trim(&mut r);
            if r.is_empty() {
                break;
            }
        }
        r
    }
}

impl Fq {
    /// The field with q elements, using the conventional modulus.
    pub fn new(q: u32) -> Result<Fq> {
        if q > 1 << 16 {
            return Err(Error::Parameter(format!("q = {q} exceeds 2^16")));
        }
        let (p, e) = prime_power(q)?;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            conventional_modulus(p, e)
        };
        Ok(Fq(Arc::new(FqCtx { p, e, q, modulus })))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the modulus, lowest first (length e+1).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Element from its packed encoding in `0..q`.
    pub fn elem(&self, val: u32) -> FqElem {
        assert!(val < self.0.q, "encoding out of range");
        FqElem {
            field: self.clone(),
            val,
        }
    }

    /// The image of the integer n under Z -> F_p -> F_q.
    pub fn from_int(&self, n: i64) -> FqElem {
        let p = self.0.p as i64;
        let r = ((n % p) + p) % p;
        self.elem(r as u32)
    }

    pub fn zero_elem(&self) -> FqElem {
        self.elem(0)
    }

    pub fn one_elem(&self) -> FqElem {
        self.elem(1)
    }

    /// All q elements, in encoding order.
    pub fn all_elements(&self) -> Vec<FqElem> {
        (0..self.0.q).map(|v| self.elem(v)).collect()
    }

    /// The nonzero elements.
    pub fn units(&self) -> Vec<FqElem> {
        (1..self.0.q).map(|v| self.elem(v)).collect()
    }

    fn unpack(&self, val: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut v = val;
        let mut digits = Vec::with_capacity(self.0.e as usize);
        while v > 0 {
            digits.push(v % p);
            v /= p;
        }
        digits
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        let p = self.0.p;
        let mut acc = 0u32;
        for &d in digits.iter().rev() {
            acc = acc * p + d;
        }
        acc
    }
}

/// An element of a finite field.
#[derive(Clone)]
pub struct FqElem {
    field: Fq,
    val: u32,
}

impl FqElem {
    pub fn field(&self) -> &Fq {
        &self.field
    }

    /// Packed encoding in `0..q`; the canonical sort key.
    pub fn encoding(&self) -> u32 {
        self.val
    }

    /// Frobenius x -> x^p iterated k times.
    pub fn frobenius(&self, k: u32) -> FqElem {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.pow(self.field.p() as u64);
        }
        x
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.val == other.val
    }
}

impl Eq for FqElem {}

impl std::hash::Hash for FqElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.val.hash(state);
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.val.cmp(&other.val)
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#F{}", self.val, self.field.q())
    }
}

impl Field for FqElem {
    type Ctx = Fq;

    fn ctx(&self) -> Fq {
        self.field.clone()
    }

    fn zero(ctx: &Fq) -> Self {
        ctx.elem(0)
    }

    fn one(ctx: &Fq) -> Self {
        ctx.elem(1)
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let p = self.field.p();
        if self.field.e() == 1 {
            return FqElem {
                field: self.field.clone(),
                val: (self.val + other.val) % p,
            };
        }
        let a = self.field.unpack(self.val);
        let b = self.field.unpack(other.val);
        let n = a.len().max(b.len());
        let mut out = vec![0u32; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = (x + y) % p;
        }
        self.field.elem(self.field.pack(&out))
    }

    fn neg(&self) -> Self {
        let p = self.field.p();
        if self.field.e() == 1 {
            return FqElem {
                field: self.field.clone(),
                val: (p - self.val) % p,
            };
        }
        let digits: Vec<u32> = self
            .field
            .unpack(self.val)
            .iter()
            .map(|&d| (p - d) % p)
            .collect();
        self.field.elem(self.field.pack(&digits))
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.field == other.field);
        let p = self.field.p();
        if self.field.e() == 1 {
            return FqElem {
                field: self.field.clone(),
                val: ((self.val as u64 * other.val as u64) % p as u64) as u32,
            };
        }
        let a = self.field.unpack(self.val);
        let b = self.field.unpack(other.val);
        let prod = fp_poly::mul(&a, &b, p);
        let red = fp_poly::rem(&prod, self.field.modulus(), p);
        self.field.elem(self.field.pack(&red))
    }

    fn inv(&self) -> Option<Self> {
        if self.val == 0 {
            return None;
        }
        // x^(q-2); the multiplicative group has order q-1.
        Some(self.pow(self.field.q() as u64 - 2))
    }

    fn is_zero(&self) -> bool {
        self.val == 0
    }
}

/// The conventional modulus: first monic irreducible of degree e over
/// F_p in packed-encoding order.
fn conventional_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    for low in 0..count {
        // candidate = x^e + (digits of low)
        let mut cand = Vec::with_capacity(e as usize + 1);
        let mut v = low;
        for _ in 0..e {
            cand.push(v % p);
            v /= p;
        }
        cand.push(1);
        if fp_is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible of degree {e} over F_{p} exists");
}

/// Trial division of a monic polynomial over F_p by all monic
/// polynomials of lower degree >= 1.
fn fp_is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    for deg in 1..=d / 2 {
        let count = p.pow(deg as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut v = low;
            for _ in 0..deg {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if fp_poly::rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(2).unwrap(), (2, 1));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(64).unwrap(), (2, 6));
        assert!(prime_power(6).is_err());
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }

    #[test]
    fn conventional_modulus_f4() {
        // Over F_2 the least monic irreducible quadratic is x^2 + x + 1.
        let f4 = Fq::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Fq::new(q).unwrap();
            let all = f.all_elements();
            for a in &all {
                for b in &all {
                    assert_eq!(a.add(b), b.add(a));
                    assert_eq!(a.mul(b), b.mul(a));
                    for c in &all {
                        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                    }
                }
                assert_eq!(a.add(&a.neg()), f.zero_elem());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()), f.one_elem());
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_order_up_to_64() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32, 49, 64] {
            let f = Fq::new(q).unwrap();
            for x in f.units() {
                assert_eq!(x.pow(q as u64 - 1), f.one_elem(), "q = {q}");
            }
        }
    }

    #[test]
    fn axiom_sampling_larger_q() {
        // For larger q, sample triples instead of exhausting.
        for q in [128u32, 243, 256, 1024] {
            let f = Fq::new(q).unwrap();
            let pick = |i: u32| f.elem(((i as u64 * 2654435761u64 + 7) % q as u64) as u32);
            for i in 0..24 {
                let (a, b, c) = (pick(i), pick(i + 5), pick(i + 11));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()), f.one_elem());
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        let f = Fq::new(9).unwrap();
        for a in f.all_elements() {
            for b in f.all_elements() {
                assert_eq!(a.add(&b).frobenius(1), a.frobenius(1).add(&b.frobenius(1)));
            }
        }
    }
}
