//! Places (primes) of the coefficient rings.
//!
//! A place is a closed point of the underlying curve other than the
//! distinguished infinity. Genus-0 places are monic irreducibles of
//! F_q[T] (plus, for the shifted family, the classical degree-1 place
//! of F_q(T), which there is an ordinary finite place). Elliptic places
//! are Frobenius orbits of affine points over extension fields,
//! identified by their canonical representative.

use std::cmp::Ordering;
use std::fmt;

use super::elliptic::{SubfieldEmbedding, WeierstrassCurve};
use super::spec::{PolyFq, RingKind, RingSpec};
use crate::arith::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlaceKind {
    /// The place of a monic irreducible polynomial (genus 0).
    Monic(PolyFq),
    /// The classical degree-one infinite place of F_q(T); a finite
    /// place of the shifted family only.
    ClassicalInf,
    /// Frobenius orbit of an affine point, canonical representative
    /// coordinates given by their encodings in F_{q^degree}.
    EllipticOrbit { x: u32, y: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Place {
    pub(crate) kind: PlaceKind,
    pub(crate) degree: u32,
}

impl Place {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn kind(&self) -> &PlaceKind {
        &self.kind
    }

    /// Canonical total order: by degree, then by descriptor kind,
    /// then by encoding — the tie-break used everywhere.
    fn sort_key(&self) -> (u32, u8, u64, u64) {
        match &self.kind {
            PlaceKind::Monic(f) => (self.degree, 0, f.encoding(), 0),
            PlaceKind::ClassicalInf => (self.degree, 1, 0, 0),
            PlaceKind::EllipticOrbit { x, y } => (self.degree, 2, *x as u64, *y as u64),
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            PlaceKind::Monic(f) => format!("({})", f.display("T")),
            PlaceKind::ClassicalInf => "(inf)".to_string(),
            PlaceKind::EllipticOrbit { x, y } => {
                if self.degree == 1 {
                    format!("({x},{y})")
                } else {
                    format!("({x},{y})/deg{}", self.degree)
                }
            }
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Construct the place of a monic irreducible for a genus-0 ring.
pub fn monic_place(ring: &RingSpec, f: PolyFq) -> Result<Place> {
    let d = f
        .degree()
        .ok_or_else(|| Error::Parameter("zero polynomial is not a place".into()))?;
    if d == 0 || !f.is_monic() || !f.is_irreducible() {
        return Err(Error::Parameter(format!(
            "{} is not a monic irreducible",
            f.display("T")
        )));
    }
    match ring.kind() {
        RingKind::Poly => {}
        RingKind::Shifted { g } => {
            if &f == g {
                return Err(Error::Parameter(
                    "the distinguished infinity of the ring is never a place".into(),
                ));
            }
        }
        RingKind::Elliptic { .. } => {
            return Err(Error::Parameter(
                "monic-polynomial places only exist for genus-0 rings".into(),
            ));
        }
    }
    Ok(Place {
        kind: PlaceKind::Monic(f),
        degree: d as u32,
    })
}

/// The classical infinite place of F_q(T) as a finite place of the
/// shifted family.
pub fn classical_inf_place(ring: &RingSpec) -> Result<Place> {
    match ring.kind() {
        RingKind::Shifted { .. } => Ok(Place {
            kind: PlaceKind::ClassicalInf,
            degree: 1,
        }),
        _ => Err(Error::Parameter(
            "the classical infinite place is a place of the shifted family only".into(),
        )),
    }
}

/// The degree-1 elliptic place at an affine F_q-point.
pub fn elliptic_place(ring: &RingSpec, x: u32, y: u32) -> Result<Place> {
    let curve = ring
        .curve()
        .ok_or_else(|| Error::Parameter("not an elliptic ring".into()))?;
    let fq = ring.fq();
    if x >= fq.q() || y >= fq.q() {
        return Err(Error::Parameter("point coordinates out of range".into()));
    }
    let (xe, ye) = (fq.elem(x), fq.elem(y));
    if !WeierstrassCurve::on_curve(&curve.a, &xe, &ye) {
        return Err(Error::Parameter(format!("({x},{y}) is not on the curve")));
    }
    Ok(Place {
        kind: PlaceKind::EllipticOrbit { x, y },
        degree: 1,
    })
}

/// All places of degree exactly d, in canonical order.
pub fn places_of_degree(ring: &RingSpec, d: u32) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    match ring.kind() {
        RingKind::Poly => {
            for f in crate::arith::poly::irreducible_polys(ring.q(), d as usize)? {
                out.push(Place {
                    kind: PlaceKind::Monic(f),
                    degree: d,
                });
            }
        }
        RingKind::Shifted { g } => {
            for f in crate::arith::poly::irreducible_polys(ring.q(), d as usize)? {
                if &f != g {
                    out.push(Place {
                        kind: PlaceKind::Monic(f),
                        degree: d,
                    });
                }
            }
            if d == 1 {
                out.push(Place {
                    kind: PlaceKind::ClassicalInf,
                    degree: 1,
                });
            }
        }
        RingKind::Elliptic { curve } => {
            let emb = SubfieldEmbedding::new(ring.fq(), d)?;
            let coeffs = curve.coeffs_in(&emb);
            let ext = emb.ext_field().clone();
            let q = ring.q() as u64;
            let mut seen = std::collections::BTreeSet::new();
            for (x, y) in WeierstrassCurve::affine_points(&coeffs, &ext)? {
                // Frobenius orbit relative to F_q
                let mut orbit = Vec::new();
                let (mut cx, mut cy) = (x.clone(), y.clone());
                loop {
                    orbit.push((cx.encoding(), cy.encoding()));
                    cx = cx.pow(q);
                    cy = cy.pow(q);
                    if cx == x && cy == y {
                        break;
                    }
                }
                if orbit.len() != d as usize {
                    continue; // lives in a proper subfield
                }
                let rep = *orbit.iter().min().unwrap();
                if seen.insert(rep) {
                    out.push(Place {
                        kind: PlaceKind::EllipticOrbit { x: rep.0, y: rep.1 },
                        degree: d,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All places of degree <= max_degree, canonical order.
///
/// Completeness is cross-checked in tests against curve point counts:
/// the places of degree d dividing n, together with infinity when
/// d_infinity | n, account for all points of X over F_{q^n}.
pub fn places_up_to_degree(ring: &RingSpec, max_degree: u32) -> Result<Vec<Place>> {
    let cap = match ring.kind() {
        RingKind::Elliptic { .. } => 8,
        _ => 12,
    };
    if max_degree == 0 || max_degree > cap {
        return Err(Error::Parameter(format!(
            "degree bound {max_degree} out of supported range 1..={cap}"
        )));
    }
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(places_of_degree(ring, d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Fq, Poly};

    fn shifted_ring() -> RingSpec {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(1)]);
        RingSpec::shifted(2, g).unwrap()
    }

    #[test]
    fn poly_places_degree_one() {
        let r = RingSpec::poly(2).unwrap();
        let places = places_up_to_degree(&r, 1).unwrap();
        assert_eq!(places.len(), 2); // (T), (T+1)
        assert_eq!(places[0].label(), "(T)");
        assert_eq!(places[1].label(), "(T + 1)");
    }

    #[test]
    fn shifted_places_degree_one_include_classical_inf() {
        // P^1(F_2) has 3 points; the g-point has degree 2, so three
        // degree-1 places remain: (T), (T+1), classical infinity.
        let r = shifted_ring();
        let places = places_of_degree(&r, 1).unwrap();
        assert_eq!(places.len(), 3);
        assert!(places.iter().any(|p| p.kind() == &PlaceKind::ClassicalInf));
        // degree 2: the place of g is excluded
        let d2 = places_of_degree(&r, 2).unwrap();
        assert_eq!(d2.len(), 0); // T^2+T+1 is the only irreducible quadratic
    }

    #[test]
    fn elliptic_places_degree_one() {
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let places = places_of_degree(&r, 1).unwrap();
        assert_eq!(places.len(), 2); // (0,0) and (0,1)
        assert_eq!(places[0].label(), "(0,0)");
        assert_eq!(places[1].label(), "(0,1)");
    }

    #[test]
    fn place_counts_reproduce_curve_point_counts() {
        // sum over d | n of d * #places(d), plus infinity when
        // d_inf | n, equals #X(F_{q^n})
        let rings = [
            RingSpec::poly(2).unwrap(),
            RingSpec::poly(3).unwrap(),
            shifted_ring(),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
            RingSpec::elliptic(3, [0, 0, 0, 2, 1]).unwrap(),
        ];
        for r in &rings {
            for n in 1..=4u32 {
                let mut total = 0u64;
                for d in 1..=n {
                    if n % d == 0 {
                        total += d as u64 * places_of_degree(r, d).unwrap().len() as u64;
                    }
                }
                if n % r.d_inf() == 0 {
                    total += r.d_inf() as u64; // the infinity place itself
                }
                assert_eq!(
                    total,
                    r.curve_point_count(n).unwrap(),
                    "ring {r}, n = {n}"
                );
            }
        }
    }
}
