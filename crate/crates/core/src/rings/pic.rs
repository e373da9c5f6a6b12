//! The ideal class group Pic(A).
//!
//! * polynomial ring: trivial;
//! * shifted family: cyclic of order d_infinity, class = degree mod
//!   d_infinity (the degree-0 part of Pic of the curve is trivial in
//!   genus 0);
//! * elliptic family: Pic(A) = E(F_q); the class of a degree-d place is
//!   the group-law trace of its Frobenius orbit, computed in E(F_{q^d})
//!   and verified to land in E(F_q).

use std::fmt;
use std::sync::Arc;

use super::elliptic::{EPoint, SubfieldEmbedding, WeierstrassCurve};
use super::ideal::IdealRep;
use super::place::{Place, PlaceKind};
use super::spec::{RingKind, RingSpec};
use crate::arith::Field;
use crate::error::Result;

#[derive(Debug)]
struct PicInner {
    ring: RingSpec,
    h: usize,
    /// Cayley table over element indices; identity = 0.
    op: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    /// Cyclic decomposition: (generator index, order), product of the
    /// orders = h. Every element has unique coordinates with respect to
    /// this basis.
    basis: Vec<(usize, usize)>,
    /// element index -> coordinates in the basis
    coords: Vec<Vec<usize>>,
    /// elliptic only: element index of each F_q-point, keyed by
    /// (x encoding, y encoding); infinity is index 0
    point_index: std::collections::BTreeMap<(u32, u32), usize>,
}

/// The class group with its Cayley table and cyclic decomposition.
#[derive(Clone, Debug)]
pub struct PicGroup(Arc<PicInner>);

/// An element handle.
#[derive(Clone)]
pub struct PicClass {
    group: PicGroup,
    idx: usize,
}

impl PartialEq for PicClass {
    fn eq(&self, other: &Self) -> bool {
        self.group.ring() == other.group.ring() && self.idx == other.idx
    }
}

impl Eq for PicClass {}

impl fmt::Debug for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.label())
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.label())
    }
}

impl PicGroup {
    pub fn new(ring: &RingSpec) -> Result<PicGroup> {
        let inner = match ring.kind() {
            RingKind::Poly => PicInner {
                ring: ring.clone(),
                h: 1,
                op: vec![vec![0]],
                inverse: vec![0],
                labels: vec!["0".into()],
                basis: vec![],
                coords: vec![vec![]],
                point_index: Default::default(),
            },
            RingKind::Shifted { .. } => {
                let h = ring.d_inf() as usize;
                let op = (0..h)
                    .map(|i| (0..h).map(|j| (i + j) % h).collect())
                    .collect();
                let inverse = (0..h).map(|i| (h - i) % h).collect();
                let labels = (0..h).map(|i| i.to_string()).collect();
                let (basis, coords) = if h == 1 {
                    (vec![], vec![vec![]])
                } else {
                    (vec![(1usize, h)], (0..h).map(|i| vec![i]).collect())
                };
                PicInner {
                    ring: ring.clone(),
                    h,
                    op,
                    inverse,
                    labels,
                    basis,
                    coords,
                    point_index: Default::default(),
                }
            }
            RingKind::Elliptic { curve } => build_elliptic(ring, curve)?,
        };
        Ok(PicGroup(Arc::new(inner)))
    }

    pub fn ring(&self) -> &RingSpec {
        &self.0.ring
    }

    pub fn order(&self) -> usize {
        self.0.h
    }

    pub fn identity(&self) -> PicClass {
        PicClass {
            group: self.clone(),
            idx: 0,
        }
    }

    pub fn class_by_index(&self, idx: usize) -> PicClass {
        assert!(idx < self.0.h);
        PicClass {
            group: self.clone(),
            idx,
        }
    }

    pub fn classes(&self) -> Vec<PicClass> {
        (0..self.0.h).map(|i| self.class_by_index(i)).collect()
    }

    /// Cyclic decomposition (generator handle, order) with product of
    /// orders = h.
    pub fn decomposition(&self) -> Vec<(PicClass, usize)> {
        self.0
            .basis
            .iter()
            .map(|&(g, d)| (self.class_by_index(g), d))
            .collect()
    }

    /// Exponent of the group (lcm of the cyclic orders).
    pub fn exponent(&self) -> usize {
        self.0.basis.iter().fold(1usize, |acc, &(_, d)| {
            acc * d / gcd_usize(acc, d)
        })
    }

    /// Coordinates of a class in the cyclic basis.
    pub fn coordinates(&self, c: &PicClass) -> Vec<usize> {
        self.0.coords[c.idx].clone()
    }

    /// The class of a fractional ideal; a homomorphism I(A) -> Pic(A).
    pub fn class_of(&self, ideal: &IdealRep) -> PicClass {
        debug_assert!(ideal.ring() == self.ring());
        let mut acc = self.identity();
        for (place, &e) in ideal.factors() {
            let p = self.class_of_place(place);
            acc = acc.op(&p.pow(e));
        }
        acc
    }

    fn class_of_place(&self, place: &Place) -> PicClass {
        match self.ring().kind() {
            RingKind::Poly => self.identity(),
            RingKind::Shifted { .. } => {
                let h = self.0.h;
                self.class_by_index(place.degree() as usize % h)
            }
            RingKind::Elliptic { curve } => {
                // trace of the Frobenius orbit under the group law
                let d = place.degree();
                let (x, y) = match place.kind() {
                    PlaceKind::EllipticOrbit { x, y } => (*x, *y),
                    _ => unreachable!("elliptic ring has only orbit places"),
                };
                let emb = SubfieldEmbedding::new(self.ring().fq(), d)
                    .expect("place construction already enumerated this field");
                let coeffs = curve.coeffs_in(&emb);
                let ext = emb.ext_field();
                let q = self.ring().q() as u64;
                let mut trace = EPoint::Infinity;
                let mut cur = EPoint::Affine(ext.elem(x), ext.elem(y));
                for _ in 0..d {
                    trace = WeierstrassCurve::add_points(&coeffs, &trace, &cur);
                    cur = match cur {
                        EPoint::Affine(cx, cy) => EPoint::Affine(cx.pow(q), cy.pow(q)),
                        EPoint::Infinity => EPoint::Infinity,
                    };
                }
                // the trace is Galois-stable, hence lands in E(F_q)
                let idx = match trace {
                    EPoint::Infinity => 0,
                    EPoint::Affine(tx, ty) => {
                        let bx = emb
                            .retract(&tx)
                            .expect("trace point must have F_q coordinates");
                        let by = emb
                            .retract(&ty)
                            .expect("trace point must have F_q coordinates");
                        self.0.point_index[&(bx.encoding(), by.encoding())]
                    }
                };
                self.class_by_index(idx)
            }
        }
    }

    /// For the shifted family: the class of ideals of degree n.
    pub fn class_of_degree(&self, n: i64) -> PicClass {
        debug_assert!(matches!(self.ring().kind(), RingKind::Shifted { .. }));
        let h = self.0.h as i64;
        self.class_by_index((((n % h) + h) % h) as usize)
    }
}

impl PicClass {
    pub fn group(&self) -> &PicGroup {
        &self.group
    }

    pub fn index(&self) -> usize {
        self.idx
    }

    pub fn is_identity(&self) -> bool {
        self.idx == 0
    }

    pub fn op(&self, other: &PicClass) -> PicClass {
        debug_assert!(self.group.ring() == other.group.ring());
        self.group
            .class_by_index(self.group.0.op[self.idx][other.idx])
    }

    pub fn inverse(&self) -> PicClass {
        self.group.class_by_index(self.group.0.inverse[self.idx])
    }

    pub fn pow(&self, n: i64) -> PicClass {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut acc = self.group.identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.op(&base);
        }
        acc
    }

    pub fn label(&self) -> String {
        self.group.0.labels[self.idx].clone()
    }
}

fn gcd_usize(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_usize(b, a % b)
    }
}

fn build_elliptic(ring: &RingSpec, curve: &WeierstrassCurve) -> Result<PicInner> {
    let fq = ring.fq();
    let coeffs = curve.a.clone();
    // canonical element order: infinity first, then affine points by
    // coordinate encoding
    let mut pts: Vec<EPoint> = vec![EPoint::Infinity];
    for (x, y) in WeierstrassCurve::affine_points(&coeffs, fq)? {
        pts.push(EPoint::Affine(x, y));
    }
    pts[1..].sort_by_key(|p| p.sort_key());
    let h = pts.len();
    let index_of = |p: &EPoint| pts.iter().position(|x| x == p).unwrap();
    let mut op = vec![vec![0usize; h]; h];
    for i in 0..h {
        for j in 0..h {
            op[i][j] = index_of(&WeierstrassCurve::add_points(&coeffs, &pts[i], &pts[j]));
        }
    }
    let inverse = (0..h)
        .map(|i| index_of(&WeierstrassCurve::negate(&coeffs, &pts[i])))
        .collect::<Vec<_>>();
    let labels = pts
        .iter()
        .map(|p| match p {
            EPoint::Infinity => "O".to_string(),
            EPoint::Affine(x, y) => format!("({},{})", x, y),
        })
        .collect();
    let mut point_index = std::collections::BTreeMap::new();
    for (i, p) in pts.iter().enumerate() {
        if let EPoint::Affine(x, y) = p {
            point_index.insert((x.encoding(), y.encoding()), i);
        }
    }
    let (basis, coords) = abelian_decomposition(h, &op);
    Ok(PicInner {
        ring: ring.clone(),
        h,
        op,
        inverse,
        labels,
        basis,
        coords,
        point_index,
    })
}

/// Decompose a small abelian group (given by its Cayley table with
/// identity 0) into cyclic factors by greedy search, and record every
/// element's coordinates.
fn abelian_decomposition(
    h: usize,
    op: &[Vec<usize>],
) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let order_of = |g: usize| {
        let mut n = 1;
        let mut x = g;
        while x != 0 {
            x = op[x][g];
            n += 1;
        }
        n
    };
    if h == 1 {
        return (vec![], vec![vec![]]);
    }
    let orders: Vec<usize> = (0..h).map(order_of).collect();
    let max_ord = *orders.iter().max().unwrap();
    let g1 = (0..h).find(|&g| orders[g] == max_ord).unwrap();
    // span of g1
    let mut span1 = vec![0usize];
    let mut x = g1;
    while x != 0 {
        span1.push(x);
        x = op[x][g1];
    }
    if span1.len() == h {
        // cyclic
        let coords = {
            let mut pos = vec![0usize; h];
            let mut x = 0usize;
            for (k, _) in (0..max_ord).enumerate() {
                pos[x] = k;
                x = op[x][g1];
            }
            (0..h).map(|e| vec![pos[e]]).collect()
        };
        return (vec![(g1, max_ord)], coords);
    }
    // rank 2 (group of F_q-points of an elliptic curve has rank <= 2):
    // find g2 whose cyclic span meets <g1> trivially and spans with it
    let d2 = h / max_ord;
    for g2 in 1..h {
        if orders[g2] % 1 != 0 || orders[g2] != d2 {
            continue;
        }
        let mut span2 = vec![0usize];
        let mut x = g2;
        while x != 0 {
            span2.push(x);
            x = op[x][g2];
        }
        if span2.iter().filter(|e| span1.contains(e)).count() == 1 {
            // direct product: enumerate coordinates
            let mut coords = vec![vec![0usize, 0usize]; h];
            let mut a = 0usize;
            for i in 0..max_ord {
                let mut b = a;
                for j in 0..d2 {
                    coords[b] = vec![i, j];
                    b = op[b][g2];
                }
                a = op[a][g1];
            }
            return (vec![(g1, max_ord), (g2, d2)], coords);
        }
    }
    unreachable!("abelian group of rank <= 2 must decompose");
}
