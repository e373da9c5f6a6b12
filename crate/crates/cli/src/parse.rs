//! Text grammars for rings, ideals and field elements.
//!
//! Ring specs: `poly q=3`, `shifted q=2 g=T^2+T+1`,
//! `elliptic q=2 a=[0,0,1,0,0]` (Weierstrass a1,a2,a3,a4,a6).
//!
//! Ideals: factors separated by `;`, each `descriptor` or
//! `descriptor@exponent`. Descriptors are monic polynomials in T
//! (composite polynomials factor into their places), `inf` for the
//! classical infinite place of the shifted family, or `(x,y)` affine
//! point coordinates for elliptic rings.
//!
//! Elements: genus 0 `num/den` with polynomial numerator and
//! denominator in T; elliptic `u;v;w` for (u + v*y)/w with polynomials
//! in x.

use cuspidal_core::arith::{Fq, FqElem, Poly, RatFunc};
use cuspidal_core::error::{Error, Result};
use cuspidal_core::rings::elements::factor_poly;
use cuspidal_core::rings::place::{classical_inf_place, elliptic_place, monic_place};
use cuspidal_core::rings::{FieldElement, IdealRep, RingSpec};

type PolyFq = Poly<FqElem>;

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parameter(format!("bad {what}: {s}")))
}

/// A polynomial in one variable over F_q, e.g. `T^2+T+1` or `x^3+2x`.
pub fn parse_poly(fq: &Fq, s: &str, var: char) -> Result<PolyFq> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parameter("empty polynomial".into()));
    }
    let mut coeffs: Vec<(usize, i64)> = Vec::new();
    // split on '+' and '-' keeping signs
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(cur.clone());
            cur.clear();
            if ch == '-' {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
    }
    terms.push(cur);
    for term in terms {
        let t = term.trim();
        if t.is_empty() {
            continue;
        }
        let (sign, body) = if let Some(rest) = t.strip_prefix('-') {
            (-1i64, rest)
        } else {
            (1i64, t)
        };
        let lower = body.to_lowercase();
        let varpos = lower.find(var.to_ascii_lowercase());
        match varpos {
            None => {
                let c: i64 = body
                    .parse()
                    .map_err(|_| Error::Parameter(format!("bad term {t}")))?;
                coeffs.push((0, sign * c));
            }
            Some(vp) => {
                let coeff_str = &body[..vp];
                let c: i64 = if coeff_str.is_empty() {
                    1
                } else {
                    coeff_str
                        .trim_end_matches('*')
                        .parse()
                        .map_err(|_| Error::Parameter(format!("bad coefficient in {t}")))?
                };
                let rest = &body[vp + 1..];
                let e: usize = if rest.is_empty() {
                    1
                } else if let Some(es) = rest.strip_prefix('^') {
                    es.parse()
                        .map_err(|_| Error::Parameter(format!("bad exponent in {t}")))?
                } else {
                    return Err(Error::Parameter(format!("bad term {t}")));
                };
                coeffs.push((e, sign * c));
            }
        }
    }
    let deg = coeffs.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut out = vec![fq.zero_elem(); deg + 1];
    for (e, c) in coeffs {
        out[e] = out[e].clone().add_i(fq, c);
    }
    Ok(Poly::from_coeffs(fq, out))
}

trait AddI {
    fn add_i(self, fq: &Fq, c: i64) -> FqElem;
}

impl AddI for FqElem {
    fn add_i(self, fq: &Fq, c: i64) -> FqElem {
        use cuspidal_core::arith::Field;
        self.add(&fq.from_int(c))
    }
}

/// Ring specification.
pub fn parse_ring(s: &str) -> Result<RingSpec> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::Parameter("empty ring spec".into()));
    }
    let mut kv = std::collections::BTreeMap::new();
    for t in &tokens[1..] {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| Error::Parameter(format!("expected key=value, got {t}")))?;
        if kv.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Parameter(format!("duplicate key {k}")));
        }
    }
    let q = parse_u32(
        kv.get("q")
            .ok_or_else(|| Error::Parameter("missing q=".into()))?,
        "q",
    )?;
    match tokens[0] {
        "poly" => {
            reject_unknown(&kv, &["q"])?;
            RingSpec::poly(q)
        }
        "shifted" => {
            reject_unknown(&kv, &["q", "g"])?;
            let fq = Fq::new(q)?;
            let g = parse_poly(
                &fq,
                kv.get("g")
                    .ok_or_else(|| Error::Parameter("missing g=".into()))?,
                'T',
            )?;
            RingSpec::shifted(q, g)
        }
        "elliptic" => {
            reject_unknown(&kv, &["q", "a"])?;
            let a_str = kv
                .get("a")
                .ok_or_else(|| Error::Parameter("missing a=[..]".into()))?;
            let inner = a_str
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parameter("a must be [a1,a2,a3,a4,a6]".into()))?;
            let parts: Vec<i64> = inner
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| Error::Parameter(format!("bad coefficient {p}")))
                })
                .collect::<Result<_>>()?;
            if parts.len() != 5 {
                return Err(Error::Parameter(
                    "a must have five entries a1,a2,a3,a4,a6".into(),
                ));
            }
            RingSpec::elliptic(q, [parts[0], parts[1], parts[2], parts[3], parts[4]])
        }
        other => Err(Error::Parameter(format!("unknown ring family {other}"))),
    }
}

fn reject_unknown(
    kv: &std::collections::BTreeMap<String, String>,
    allowed: &[&str],
) -> Result<()> {
    for k in kv.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::Parameter(format!("unknown key {k}")));
        }
    }
    Ok(())
}

/// Ideal: `;`-separated factors `descriptor[@exponent]`.
pub fn parse_ideal(ring: &RingSpec, s: &str) -> Result<IdealRep> {
    let s = s.trim();
    if s.is_empty() || s == "A" {
        return Ok(IdealRep::unit(ring));
    }
    let fq = ring.fq();
    let mut acc = IdealRep::unit(ring);
    for factor in s.split(';') {
        let (desc, exp) = match factor.rsplit_once('@') {
            Some((d, e)) => (
                d.trim(),
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parameter(format!("bad exponent in {factor}")))?,
            ),
            None => (factor.trim(), 1i64),
        };
        let part = if desc == "inf" {
            IdealRep::from_place(ring, classical_inf_place(ring)?)
        } else if desc.starts_with('(') {
            let inner = desc
                .strip_prefix('(')
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(|| Error::Parameter(format!("bad point {desc}")))?;
            let (xs, ys) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parameter(format!("bad point {desc}")))?;
            IdealRep::from_place(
                ring,
                elliptic_place(ring, parse_u32(xs.trim(), "x")?, parse_u32(ys.trim(), "y")?)?,
            )
        } else {
            // a monic polynomial: factor into places
            let p = parse_poly(fq, desc, 'T')?;
            if !p.is_monic() {
                return Err(Error::Parameter(format!("{desc} is not monic")));
            }
            let mut ideal = IdealRep::unit(ring);
            for (m, e) in factor_poly(&p)? {
                ideal = ideal.mul(&IdealRep::from_place(ring, monic_place(ring, m)?).pow(e));
            }
            ideal
        };
        acc = acc.mul(&part.pow(exp));
    }
    Ok(acc)
}

/// Field elements: genus 0 `num[/den]` in T; elliptic `u;v;w`
/// polynomials in x (v and w optional, defaulting to 0 and 1).
pub fn parse_element(ring: &RingSpec, s: &str) -> Result<FieldElement> {
    let fq = ring.fq();
    if ring.curve().is_some() {
        let parts: Vec<&str> = s.split(';').collect();
        let u = parse_poly(fq, parts[0], 'x')?;
        let v = if parts.len() > 1 {
            parse_poly(fq, parts[1], 'x')?
        } else {
            Poly::zero(fq)
        };
        let w = if parts.len() > 2 {
            parse_poly(fq, parts[2], 'x')?
        } else {
            Poly::one(fq)
        };
        FieldElement::from_xy(ring, u, v, w)
    } else {
        let (ns, ds) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = parse_poly(fq, ns, 'T')?;
        let den = parse_poly(fq, ds, 'T')?;
        FieldElement::from_ratfunc(ring, RatFunc::new(num, den)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ring_specs() {
        assert!(parse_ring("poly q=3").is_ok());
        assert!(parse_ring("shifted q=2 g=T^2+T+1").is_ok());
        assert!(parse_ring("elliptic q=2 a=[0,0,1,0,0]").is_ok());
        // unknown keys rejected
        assert!(parse_ring("poly q=3 bogus=1").is_err());
        assert!(parse_ring("poly p=3").is_err());
        assert!(parse_ring("frobnicate q=2").is_err());
    }

    #[test]
    fn parse_polynomials() {
        let fq = Fq::new(3).unwrap();
        let p = parse_poly(&fq, "T^2+2T+1", 'T').unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeff(1), fq.elem(2));
        let m = parse_poly(&fq, "T^2 + 1", 'T').unwrap();
        assert!(m.is_monic());
    }

    #[test]
    fn parse_ideals() {
        let ring = parse_ring("poly q=2").unwrap();
        let i = parse_ideal(&ring, "T").unwrap();
        assert_eq!(i.degree(), 1);
        // composite polynomial factors into places
        let c = parse_ideal(&ring, "T^2+T").unwrap();
        assert_eq!(c.factors().len(), 2);
        // exponents
        let sq = parse_ideal(&ring, "T@2;T+1@-1").unwrap();
        assert_eq!(sq.degree(), 1);
        assert!(!sq.is_integral());
        // elliptic points
        let e = parse_ring("elliptic q=2 a=[0,0,1,0,0]").unwrap();
        let p = parse_ideal(&e, "(0,0)").unwrap();
        assert_eq!(p.degree(), 1);
        assert!(parse_ideal(&e, "(1,1)").is_err()); // not on the curve
        // shifted classical infinity
        let sh = parse_ring("shifted q=2 g=T^2+T+1").unwrap();
        let inf = parse_ideal(&sh, "inf").unwrap();
        assert_eq!(inf.degree(), 1);
    }

    #[test]
    fn parse_elements() {
        let ring = parse_ring("poly q=2").unwrap();
        let x = parse_element(&ring, "1/T").unwrap();
        assert_eq!(x.degree(), Some(-1));
        let e = parse_ring("elliptic q=2 a=[0,0,1,0,0]").unwrap();
        let y = parse_element(&e, "0;1").unwrap();
        assert_eq!(y.degree(), Some(3));
    }
}
