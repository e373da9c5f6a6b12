//! Zeta functions in the variable S = q^-s: the curve zeta, the ring
//! zeta, class-partitioned and coset partial zetas, special values at
//! s = 1 - r, and character L-functions.

pub mod character;
pub mod curve;
pub mod partial;

pub use character::{all_characters, l_function, l_special_value, Character};
pub use curve::{curve_zeta, CurveZeta};
pub use partial::{class_zeta, coset_zeta, ring_zeta, zero_coset_zeta};

use crate::arith::ratfunc::RatFuncS;
use crate::arith::{Field, Rat};
use crate::error::{Error, Result};

/// A partial zeta function: a rational function of S plus a finite
/// Laurent correction (nonzero only for coset zetas; exponents may be
/// negative).
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaFunction {
    q: u32,
    rational: RatFuncS,
    extra: Vec<(i64, Rat)>,
}

impl ZetaFunction {
    pub fn new(q: u32, rational: RatFuncS, mut extra: Vec<(i64, Rat)>) -> ZetaFunction {
        extra.retain(|(_, c)| !c.is_zero());
        extra.sort_by_key(|(e, _)| *e);
        ZetaFunction { q, rational, extra }
    }

    pub fn from_rational(q: u32, rational: RatFuncS) -> ZetaFunction {
        ZetaFunction::new(q, rational, vec![])
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rational_part(&self) -> &RatFuncS {
        &self.rational
    }

    /// The finite correction terms (exponent, coefficient).
    pub fn polar_part(&self) -> &[(i64, Rat)] {
        &self.extra
    }

    pub fn has_polar_part(&self) -> bool {
        !self.extra.is_empty()
    }

    pub fn add(&self, other: &ZetaFunction) -> ZetaFunction {
        debug_assert_eq!(self.q, other.q);
        let mut extra = self.extra.clone();
        extra.extend(other.extra.iter().cloned());
        let mut merged: std::collections::BTreeMap<i64, Rat> = std::collections::BTreeMap::new();
        for (e, c) in extra {
            let cur = merged.remove(&e).unwrap_or_else(|| Rat::from_int(0));
            let s = cur.add(&c);
            if !s.is_zero() {
                merged.insert(e, s);
            }
        }
        ZetaFunction::new(
            self.q,
            self.rational.add(&other.rational),
            merged.into_iter().collect(),
        )
    }

    pub fn sub(&self, other: &ZetaFunction) -> ZetaFunction {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> ZetaFunction {
        ZetaFunction::new(
            self.q,
            self.rational.scale(c),
            self.extra.iter().map(|(e, a)| (*e, a.mul(c))).collect(),
        )
    }

    /// Expansion coefficients for S^from .. S^(from+len-1).
    pub fn expand(&self, from: i64, len: usize) -> Vec<Rat> {
        let mut coeffs = self.rational.expand(from, len);
        for (e, c) in &self.extra {
            if *e >= from && *e < from + len as i64 {
                let idx = (*e - from) as usize;
                coeffs[idx] = coeffs[idx].add(c);
            }
        }
        coeffs
    }

    /// Lowest exponent with a (possibly) nonzero coefficient; used to
    /// size expansion windows.
    pub fn lowest_exponent(&self) -> i64 {
        let v = self.rational.ord_at_zero().unwrap_or(0);
        self.extra.first().map(|(e, _)| v.min(*e)).unwrap_or(v)
    }

    /// zeta(1 - r): evaluation at S = q^(r-1), exact.
    pub fn special_value(&self, r: i64) -> Result<Rat> {
        if r < 2 {
            return Err(Error::Parameter(format!(
                "special values are taken at s = 1 - r with r >= 2 (got r = {r})"
            )));
        }
        let s = Rat::pow_of(self.q, r - 1);
        let mut v = self.rational.eval(&s).map_err(|_| {
            Error::Parameter(format!("value undefined at s = 1 - {r}: pole at S = q^{}", r - 1))
        })?;
        for (e, c) in &self.extra {
            v = v.add(&c.mul(&Rat::pow_of(self.q, (r - 1) * e)));
        }
        Ok(v)
    }

    /// Exact equality as functions (rational parts plus corrections).
    pub fn equal_as_function(&self, other: &ZetaFunction) -> bool {
        self.sub(other).is_zero_function()
    }

    fn is_zero_function(&self) -> bool {
        self.rational.is_zero() && self.extra.is_empty()
    }

    pub fn display(&self) -> String {
        let mut s = pretty_ratfunc_s(&self.rational);
        for (e, c) in &self.extra {
            s.push_str(&format!(" + ({c})*S^{e}"));
        }
        s
    }
}

impl std::fmt::Display for ZetaFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Classical rendering of a rational function of S: integer
/// coefficients, denominator normalized to constant term 1 when
/// possible, ascending powers with explicit signs.
pub fn pretty_ratfunc_s(f: &RatFuncS) -> String {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if f.is_zero() {
        return "0".to_string();
    }
    let mut scale = BigInt::from(1);
    for c in f.num().coeffs().iter().chain(f.den().coeffs()) {
        scale = scale.lcm(c.denom());
    }
    let ints = |p: &crate::arith::Poly<Rat>| -> Vec<BigInt> {
        p.coeffs()
            .iter()
            .map(|c| c.mul(&Rat::from_big(scale.clone())).as_integer().unwrap())
            .collect()
    };
    let mut num = ints(f.num());
    let mut den = ints(f.den());
    let mut g = BigInt::from(0);
    for c in num.iter().chain(den.iter()) {
        g = g.gcd(c);
    }
    if g > BigInt::from(1) {
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &g;
        }
    }
    // prefer den(0) = 1
    if den[0] < BigInt::from(0) {
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c = -c.clone();
        }
    }
    let poly_str = |cs: &[BigInt]| -> String {
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in cs.iter().enumerate() {
            if c == &BigInt::from(0) {
                continue;
            }
            let mag = c.magnitude().to_string();
            let body = match e {
                0 => mag,
                1 if mag == "1" => "S".to_string(),
                1 => format!("{mag}*S"),
                _ if mag == "1" => format!("S^{e}"),
                _ => format!("{mag}*S^{e}"),
            };
            if parts.is_empty() {
                parts.push(if c < &BigInt::from(0) {
                    format!("-{body}")
                } else {
                    body
                });
            } else if c < &BigInt::from(0) {
                parts.push(format!("- {body}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    };
    let ns = poly_str(&num);
    let ds = poly_str(&den);
    if ds == "1" {
        ns
    } else if num.iter().filter(|c| *c != &BigInt::from(0)).count() <= 1
        && !ns.contains(' ')
    {
        format!("{ns}/({ds})")
    } else {
        format!("({ns})/({ds})")
    }
}
