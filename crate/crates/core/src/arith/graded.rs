//! Free graded commutative ring on named generators.
//!
//! Carries symbolic coefficient forms (discriminants and isogeny
//! coefficients of general rank) as opaque generators with declared
//! weights. No relations are imposed between generators; the ring only
//! does weight bookkeeping, which is checked rather than assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::Field;

#[derive(Debug, PartialEq, Eq)]
struct GradedCtx {
    /// Generator names and weights, in declaration order.
    gens: Vec<(String, i64)>,
}

/// The ambient graded ring (shared generator table).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedRing(Arc<GradedCtx>);

impl GradedRing {
    pub fn new(gens: Vec<(String, i64)>) -> Self {
        GradedRing(Arc::new(GradedCtx { gens }))
    }

    pub fn gen_count(&self) -> usize {
        self.0.gens.len()
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.0.gens[i].0
    }

    pub fn gen_weight(&self, i: usize) -> i64 {
        self.0.gens[i].1
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.0.gens.iter().position(|(n, _)| n == name)
    }
}

/// Monomial = exponents on generators.
pub type Monomial = BTreeMap<usize, u32>;

fn monomial_weight(ring: &GradedRing, m: &Monomial) -> i64 {
    m.iter()
        .map(|(&g, &e)| ring.gen_weight(g) * e as i64)
        .sum()
}

fn monomial_name(ring: &GradedRing, m: &Monomial) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter()
        .map(|(&g, &e)| {
            if e == 1 {
                ring.gen_name(g).to_string()
            } else {
                format!("{}^{}", ring.gen_name(g), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Element of the graded ring: a finite linear combination of
/// monomials with coefficients in an exact field.
#[derive(Clone, PartialEq)]
pub struct GradedElem<C: Field> {
    ring: GradedRing,
    cctx: C::Ctx,
    terms: BTreeMap<Monomial, C>,
}

/// Outcome of a homogeneity check.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightCheck {
    /// The zero element is homogeneous of every weight.
    Zero,
    Homogeneous(i64),
    /// Mixed weights: (monomial rendering, weight) of every offender
    /// outside the most common weight.
    Inhomogeneous(Vec<(String, i64)>),
}

impl<C: Field> GradedElem<C> {
    pub fn zero(ring: &GradedRing, cctx: &C::Ctx) -> Self {
        GradedElem {
            ring: ring.clone(),
            cctx: cctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &GradedRing, c: C) -> Self {
        let cctx = c.ctx();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(), c);
        }
        GradedElem {
            ring: ring.clone(),
            cctx,
            terms,
        }
    }

    /// The generator with index `i`, as an element.
    pub fn generator(ring: &GradedRing, cctx: &C::Ctx, i: usize) -> Self {
        assert!(i < ring.gen_count());
        let mut m = Monomial::new();
        m.insert(i, 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, C::one(cctx));
        GradedElem {
            ring: ring.clone(),
            cctx: cctx.clone(),
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let cur = terms.remove(m).unwrap_or_else(|| C::zero(&self.cctx));
            let s = cur.add(c);
            if !s.is_zero() {
                terms.insert(m.clone(), s);
            }
        }
        GradedElem {
            ring: self.ring.clone(),
            cctx: self.cctx.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        GradedElem {
            ring: self.ring.clone(),
            cctx: self.cctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                for (&g, &e) in m2 {
                    *m.entry(g).or_insert(0) += e;
                }
                let c = c1.mul(c2);
                let cur = terms.remove(&m).unwrap_or_else(|| C::zero(&self.cctx));
                let s = cur.add(&c);
                if !s.is_zero() {
                    terms.insert(m, s);
                }
            }
        }
        GradedElem {
            ring: self.ring.clone(),
            cctx: self.cctx.clone(),
            terms,
        }
    }

    /// Multiply by a scalar from the coefficient field.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return GradedElem::zero(&self.ring, &self.cctx);
        }
        GradedElem {
            ring: self.ring.clone(),
            cctx: self.cctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = GradedElem::constant(&self.ring, C::one(&self.cctx));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Homogeneity check: the unique weight when all monomials agree,
    /// otherwise the list of offending monomials. A report, never a
    /// failure.
    pub fn weight_check(&self) -> WeightCheck {
        if self.terms.is_empty() {
            return WeightCheck::Zero;
        }
        let weights: Vec<(String, i64)> = self
            .terms
            .keys()
            .map(|m| (monomial_name(&self.ring, m), monomial_weight(&self.ring, m)))
            .collect();
        let w0 = weights[0].1;
        if weights.iter().all(|(_, w)| *w == w0) {
            WeightCheck::Homogeneous(w0)
        } else {
            WeightCheck::Inhomogeneous(weights)
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }
}

impl<C: Field> fmt::Display for GradedElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    format!("{c}")
                } else if c.is_one() {
                    monomial_name(&self.ring, m)
                } else {
                    format!("({})*{}", c, monomial_name(&self.ring, m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Field> fmt::Debug for GradedElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    #[test]
    fn generator_has_declared_weight() {
        let ring = GradedRing::new(vec![("D".into(), 15), ("L1".into(), -3)]);
        let d = GradedElem::<Rat>::generator(&ring, &(), 0);
        assert_eq!(d.weight_check(), WeightCheck::Homogeneous(15));
    }

    #[test]
    fn sum_of_same_weight_monomials() {
        let ring = GradedRing::new(vec![("a".into(), 2), ("b".into(), 1)]);
        let a = GradedElem::<Rat>::generator(&ring, &(), 0);
        let b = GradedElem::<Rat>::generator(&ring, &(), 1);
        // a + b^2 both have weight 2
        let e = a.add(&b.mul(&b));
        assert_eq!(e.weight_check(), WeightCheck::Homogeneous(2));
    }

    #[test]
    fn inhomogeneous_reports_offenders() {
        let ring = GradedRing::new(vec![("a".into(), 2), ("b".into(), 1)]);
        let a = GradedElem::<Rat>::generator(&ring, &(), 0);
        let b = GradedElem::<Rat>::generator(&ring, &(), 1);
        match a.add(&b).weight_check() {
            WeightCheck::Inhomogeneous(list) => assert_eq!(list.len(), 2),
            other => panic!("expected inhomogeneous, got {other:?}"),
        }
    }

    #[test]
    fn ring_axioms_and_cancellation() {
        let ring = GradedRing::new(vec![("a".into(), 1)]);
        let a = GradedElem::<Rat>::generator(&ring, &(), 0);
        let two_a = a.scale(&Rat::from_int(2));
        assert_eq!(a.add(&a), two_a);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.pow(3).weight_check(), WeightCheck::Homogeneous(3));
    }
}
