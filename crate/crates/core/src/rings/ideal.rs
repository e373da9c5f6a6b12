//! Fractional ideals as place-exponent lists.
//!
//! Degree, class, Moebius values and enumeration are all native to the
//! factored representation, which is the only one kept.

use std::collections::BTreeMap;
use std::fmt;

use super::place::{places_up_to_degree, Place};
use super::spec::RingSpec;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct IdealRep {
    ring: RingSpec,
    /// place -> nonzero exponent
    factors: BTreeMap<Place, i64>,
}

impl IdealRep {
    /// The unit ideal A.
    pub fn unit(ring: &RingSpec) -> IdealRep {
        IdealRep {
            ring: ring.clone(),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_place(ring: &RingSpec, place: Place) -> IdealRep {
        IdealRep::from_factors(ring, vec![(place, 1)])
    }

    pub fn from_factors(ring: &RingSpec, factors: Vec<(Place, i64)>) -> IdealRep {
        let mut map = BTreeMap::new();
        for (p, e) in factors {
            if e != 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        map.retain(|_, e| *e != 0);
        IdealRep {
            ring: ring.clone(),
            factors: map,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn factors(&self) -> &BTreeMap<Place, i64> {
        &self.factors
    }

    pub fn exponent(&self, place: &Place) -> i64 {
        self.factors.get(place).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Integral means all exponents >= 0 ("b inside A").
    pub fn is_integral(&self) -> bool {
        self.factors.values().all(|&e| e >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.factors
            .iter()
            .map(|(p, &e)| p.degree() as i64 * e)
            .sum()
    }

    pub fn mul(&self, other: &IdealRep) -> IdealRep {
        debug_assert!(self.ring == other.ring);
        let mut map = self.factors.clone();
        for (p, e) in &other.factors {
            *map.entry(p.clone()).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        IdealRep {
            ring: self.ring.clone(),
            factors: map,
        }
    }

    pub fn inv(&self) -> IdealRep {
        IdealRep {
            ring: self.ring.clone(),
            factors: self.factors.iter().map(|(p, e)| (p.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> IdealRep {
        if n == 0 {
            return IdealRep::unit(&self.ring);
        }
        IdealRep {
            ring: self.ring.clone(),
            factors: self
                .factors
                .iter()
                .map(|(p, e)| (p.clone(), e * n))
                .collect(),
        }
    }

    /// a | b, equivalently b inside a (both integral or fractional:
    /// exponent-wise comparison).
    pub fn divides(&self, other: &IdealRep) -> bool {
        let places: std::collections::BTreeSet<_> = self
            .factors
            .keys()
            .chain(other.factors.keys())
            .cloned()
            .collect();
        places
            .iter()
            .all(|p| other.exponent(p) >= self.exponent(p))
    }

    /// Positive and negative parts: a = pos * neg^-1 with pos, neg
    /// integral and coprime.
    pub fn split(&self) -> (IdealRep, IdealRep) {
        let mut pos = BTreeMap::new();
        let mut neg = BTreeMap::new();
        for (p, &e) in &self.factors {
            if e > 0 {
                pos.insert(p.clone(), e);
            } else {
                neg.insert(p.clone(), -e);
            }
        }
        (
            IdealRep {
                ring: self.ring.clone(),
                factors: pos,
            },
            IdealRep {
                ring: self.ring.clone(),
                factors: neg,
            },
        )
    }

    pub fn is_coprime_to(&self, other: &IdealRep) -> bool {
        self.factors.keys().all(|p| other.exponent(p) == 0)
    }

    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "A".to_string();
        }
        self.factors
            .iter()
            .map(|(p, &e)| {
                if e == 1 {
                    p.label()
                } else {
                    format!("{}^{}", p.label(), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for IdealRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// The ideal-theoretic Moebius function: 0 when a square divides,
/// otherwise (-1)^(number of distinct prime factors).
pub fn mobius(ideal: &IdealRep) -> Result<i64> {
    if !ideal.is_integral() {
        return Err(Error::Parameter(
            "Moebius function takes nonzero integral ideals".into(),
        ));
    }
    if ideal.factors.values().any(|&e| e >= 2) {
        return Ok(0);
    }
    Ok(if ideal.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// All integral ideals of exact degree n, canonical order.
pub fn integral_ideals_of_degree(ring: &RingSpec, n: i64) -> Result<Vec<IdealRep>> {
    if n < 0 {
        return Ok(vec![]);
    }
    if n == 0 {
        return Ok(vec![IdealRep::unit(ring)]);
    }
    if n > 10 {
        return Err(Error::Parameter(format!(
            "ideal enumeration bound exceeded (degree {n} > 10)"
        )));
    }
    let places = places_up_to_degree(ring, n as u32)?;
    // multiset combinations with total weighted degree n
    let mut out = Vec::new();
    let mut stack: Vec<(usize, i64, Vec<(Place, i64)>)> = vec![(0, n, vec![])];
    while let Some((idx, remaining, chosen)) = stack.pop() {
        if remaining == 0 {
            out.push(IdealRep::from_factors(ring, chosen));
            continue;
        }
        if idx >= places.len() {
            continue;
        }
        let pd = places[idx].degree() as i64;
        let max_e = remaining / pd;
        for e in (0..=max_e).rev() {
            let mut next = chosen.clone();
            if e > 0 {
                next.push((places[idx].clone(), e));
            }
            stack.push((idx + 1, remaining - e * pd, next));
        }
    }
    // canonical order: by factor list
    out.sort_by_key(|i| {
        i.factors
            .iter()
            .map(|(p, e)| (p.clone(), *e))
            .collect::<Vec<_>>()
    });
    out.dedup();
    Ok(out)
}
