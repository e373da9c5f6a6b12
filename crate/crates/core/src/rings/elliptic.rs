//! Weierstrass curves over F_q: exact group law, point enumeration
//! over extension fields, Frobenius orbits, and local power-series
//! expansions at affine points.
//!
//! Model: y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6.

use crate::arith::{Field, Fq, FqElem, TruncatedSeries};
use crate::error::{Error, Result};

/// Enumeration cap for brute-force point searches.
const MAX_ENUM_FIELD: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve {
    fq: Fq,
    /// a1, a2, a3, a4, a6.
    pub a: [FqElem; 5],
}

/// A point of the curve over some extension field of the base.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EPoint {
    Infinity,
    Affine(FqElem, FqElem),
}

impl EPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, EPoint::Infinity)
    }

    /// Canonical sort key: infinity first, then by coordinate encoding.
    pub fn sort_key(&self) -> (u32, u32, u32) {
        match self {
            EPoint::Infinity => (0, 0, 0),
            EPoint::Affine(x, y) => (1, x.encoding(), y.encoding()),
        }
    }
}

/// Embedding of F_q into F_{q^d} (both with conventional moduli); holds
/// the image of the base generator and lookup tables both ways.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    base: Fq,
    ext: Fq,
    /// images of base elements indexed by encoding
    fwd: Vec<u32>,
    /// partial inverse: ext encoding -> base encoding
    back: std::collections::BTreeMap<u32, u32>,
}

impl SubfieldEmbedding {
    /// Build the canonical embedding F_q -> F_{q^d}: the base modulus
    /// root of least encoding in the extension.
    pub fn new(base: &Fq, d: u32) -> Result<SubfieldEmbedding> {
        let q_ext = (base.q() as u64).pow(d);
        if q_ext > MAX_ENUM_FIELD {
            return Err(Error::Parameter(format!(
                "extension field F_{q_ext} too large to enumerate"
            )));
        }
        let ext = Fq::new(q_ext as u32)?;
        if base.e() == 1 {
            // prime base field: constants embed as constants
            let fwd: Vec<u32> = (0..base.q()).collect();
            let back = fwd.iter().map(|&v| (v, v)).collect();
            return Ok(SubfieldEmbedding {
                base: base.clone(),
                ext,
                fwd,
                back,
            });
        }
        // find the least root of the base modulus in the extension
        let modulus = base.modulus().to_vec();
        let mut root = None;
        'outer: for enc in 0..ext.q() {
            let x = ext.elem(enc);
            let mut acc = ext.zero_elem();
            for &c in modulus.iter().rev() {
                acc = acc.mul(&x).add(&ext.from_int(c as i64));
            }
            if acc.is_zero() {
                root = Some(x);
                break 'outer;
            }
        }
        let root = root.ok_or_else(|| {
            Error::Consistency("base modulus has no root in the extension".into())
        })?;
        let p = base.p();
        let mut fwd = Vec::with_capacity(base.q() as usize);
        let mut back = std::collections::BTreeMap::new();
        for enc in 0..base.q() {
            // digits of enc base p evaluated at the root
            let mut v = enc;
            let mut acc = ext.zero_elem();
            let mut pw = ext.one_elem();
            while v > 0 {
                acc = acc.add(&pw.mul(&ext.from_int((v % p) as i64)));
                pw = pw.mul(&root);
                v /= p;
            }
            fwd.push(acc.encoding());
            back.insert(acc.encoding(), enc);
        }
        Ok(SubfieldEmbedding {
            base: base.clone(),
            ext,
            fwd,
            back,
        })
    }

    pub fn ext_field(&self) -> &Fq {
        &self.ext
    }

    pub fn embed(&self, x: &FqElem) -> FqElem {
        debug_assert!(x.field() == &self.base);
        self.ext.elem(self.fwd[x.encoding() as usize])
    }

    /// Pull an extension element back to the base field if it lies in
    /// the embedded copy.
    pub fn retract(&self, x: &FqElem) -> Option<FqElem> {
        self.back.get(&x.encoding()).map(|&v| self.base.elem(v))
    }
}

impl WeierstrassCurve {
    pub fn new(fq: &Fq, a: [FqElem; 5]) -> Result<WeierstrassCurve> {
        let c = WeierstrassCurve {
            fq: fq.clone(),
            a,
        };
        if c.discriminant().is_zero() {
            return Err(Error::Parameter(
                "singular Weierstrass model (discriminant = 0)".into(),
            ));
        }
        Ok(c)
    }

    pub fn field(&self) -> &Fq {
        &self.fq
    }

    /// Discriminant of the model (b-invariant formula).
    pub fn discriminant(&self) -> FqElem {
        let i = |n: i64| self.fq.from_int(n);
        let [a1, a2, a3, a4, a6] = self.a.clone();
        let b2 = a1.mul(&a1).add(&i(4).mul(&a2));
        let b4 = i(2).mul(&a4).add(&a1.mul(&a3));
        let b6 = a3.mul(&a3).add(&i(4).mul(&a6));
        let b8 = a1
            .mul(&a1)
            .mul(&a6)
            .add(&i(4).mul(&a2).mul(&a6))
            .sub(&a1.mul(&a3).mul(&a4))
            .add(&a2.mul(&a3).mul(&a3))
            .sub(&a4.mul(&a4));
        i(-1)
            .mul(&b2)
            .mul(&b2)
            .mul(&b8)
            .sub(&i(8).mul(&b4.pow(3)))
            .sub(&i(27).mul(&b6).mul(&b6))
            .add(&i(9).mul(&b2).mul(&b4).mul(&b6))
    }

    /// Curve coefficients embedded into an extension field.
    pub fn coeffs_in(&self, emb: &SubfieldEmbedding) -> [FqElem; 5] {
        [
            emb.embed(&self.a[0]),
            emb.embed(&self.a[1]),
            emb.embed(&self.a[2]),
            emb.embed(&self.a[3]),
            emb.embed(&self.a[4]),
        ]
    }

    /// Is (x, y) on the curve? Coordinates may lie in any field
    /// containing the coefficients (pass them via `coeffs`).
    pub fn on_curve(coeffs: &[FqElem; 5], x: &FqElem, y: &FqElem) -> bool {
        let [a1, a2, a3, a4, a6] = coeffs.clone();
        let lhs = y.mul(y).add(&a1.mul(x).mul(y)).add(&a3.mul(y));
        let rhs = x
            .pow(3)
            .add(&a2.mul(x).mul(x))
            .add(&a4.mul(x))
            .add(&a6);
        lhs == rhs
    }

    /// -P.
    pub fn negate(coeffs: &[FqElem; 5], p: &EPoint) -> EPoint {
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine(x, y) => {
                let [a1, _, a3, _, _] = coeffs.clone();
                EPoint::Affine(x.clone(), y.neg().sub(&a1.mul(x)).sub(&a3))
            }
        }
    }

    /// Group law (chord and tangent) in the ambient field of `coeffs`.
    pub fn add_points(coeffs: &[FqElem; 5], p: &EPoint, q: &EPoint) -> EPoint {
        let [a1, a2, a3, a4, _] = coeffs.clone();
        let (x1, y1) = match p {
            EPoint::Infinity => return q.clone(),
            EPoint::Affine(x, y) => (x.clone(), y.clone()),
        };
        let (x2, y2) = match q {
            EPoint::Infinity => return p.clone(),
            EPoint::Affine(x, y) => (x.clone(), y.clone()),
        };
        if *q == Self::negate(coeffs, p) {
            return EPoint::Infinity;
        }
        let lambda = if x1 == x2 {
            // doubling; denominator nonzero since q != -p
            let num = x1
                .mul(&x1)
                .mul(&x1.ctx().from_int(3))
                .add(&a2.mul(&x1).mul(&x1.ctx().from_int(2)))
                .add(&a4)
                .sub(&a1.mul(&y1));
            let den = y1
                .mul(&y1.ctx().from_int(2))
                .add(&a1.mul(&x1))
                .add(&a3);
            num.mul(&den.inv().expect("tangent denominator vanishes only at -p"))
        } else {
            y2.sub(&y1).mul(&x2.sub(&x1).inv().unwrap())
        };
        let nu = y1.sub(&lambda.mul(&x1));
        let x3 = lambda
            .mul(&lambda)
            .add(&a1.mul(&lambda))
            .sub(&a2)
            .sub(&x1)
            .sub(&x2);
        let y3 = lambda.add(&a1).mul(&x3).neg().sub(&nu).sub(&a3);
        EPoint::Affine(x3, y3)
    }

    pub fn mul_point(coeffs: &[FqElem; 5], p: &EPoint, n: u64) -> EPoint {
        let mut acc = EPoint::Infinity;
        let mut base = p.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = Self::add_points(coeffs, &acc, &base);
            }
            base = Self::add_points(coeffs, &base, &base);
            n >>= 1;
        }
        acc
    }

    /// All affine points over the field of `coeffs` (brute force).
    pub fn affine_points(coeffs: &[FqElem; 5], field: &Fq) -> Result<Vec<(FqElem, FqElem)>> {
        if field.q() as u64 * field.q() as u64 > MAX_ENUM_FIELD * 16 {
            return Err(Error::Parameter(format!(
                "point enumeration over F_{} out of supported range",
                field.q()
            )));
        }
        let mut pts = Vec::new();
        for xe in 0..field.q() {
            let x = field.elem(xe);
            for ye in 0..field.q() {
                let y = field.elem(ye);
                if Self::on_curve(coeffs, &x, &y) {
                    pts.push((x.clone(), y));
                }
            }
        }
        Ok(pts)
    }

    /// #E(F_{q^d}) including the point at infinity.
    pub fn point_count(&self, d: u32) -> Result<u64> {
        let emb = SubfieldEmbedding::new(&self.fq, d)?;
        let coeffs = self.coeffs_in(&emb);
        Ok(Self::affine_points(&coeffs, emb.ext_field())?.len() as u64 + 1)
    }

    /// Frobenius x -> x^q (relative to the base field) on a point.
    pub fn frobenius_point(&self, p: &EPoint) -> EPoint {
        let q = self.fq.q() as u64;
        match p {
            EPoint::Infinity => EPoint::Infinity,
            EPoint::Affine(x, y) => EPoint::Affine(x.pow(q), y.pow(q)),
        }
    }

    /// Local expansion at an affine point P over its field of
    /// definition: returns (x(t), y(t)) as series in the local
    /// uniformizer t to `prec` terms, together with which uniformizer
    /// was used.
    ///
    /// Unramified for the x-chart (partial_y != 0): t = x - xP.
    /// Otherwise (2-torsion-type point): t = y - yP.
    pub fn local_expansion(
        coeffs: &[FqElem; 5],
        x_p: &FqElem,
        y_p: &FqElem,
        prec: i64,
    ) -> (TruncatedSeries<FqElem>, TruncatedSeries<FqElem>) {
        let field = x_p.field().clone();
        let [a1, a2, a3, a4, a6] = coeffs.clone();
        let two = field.from_int(2);
        let fy = two.mul(y_p).add(&a1.mul(x_p)).add(&a3);
        let var = "t";
        let embed_const =
            |c: &FqElem, prec: i64| TruncatedSeries::monomial(&field, var, c.clone(), 0, prec);
        // F(x, y) as a series expression
        let f_of = |x: &TruncatedSeries<FqElem>, y: &TruncatedSeries<FqElem>| {
            let p = x.prec().min(y.prec());
            let lhs = y
                .mul(y)
                .add(&embed_const(&a1, p).mul(x).mul(y))
                .add(&embed_const(&a3, p).mul(y));
            let rhs = x
                .mul(x)
                .mul(x)
                .add(&embed_const(&a2, p).mul(x).mul(x))
                .add(&embed_const(&a4, p).mul(x))
                .add(&embed_const(&a6, p));
            lhs.sub(&rhs)
        };
        if !fy.is_zero() {
            // x = xP + t, solve for y by Newton iteration
            let x_series = TruncatedSeries::monomial(&field, var, x_p.clone(), 0, prec)
                .add(&TruncatedSeries::monomial(
                    &field,
                    var,
                    field.one_elem(),
                    1,
                    prec,
                ));
            let mut y_series = TruncatedSeries::monomial(&field, var, y_p.clone(), 0, prec);
            // dF/dy = 2y + a1 x + a3
            for _ in 0..(64 - (prec as u64).leading_zeros() + 2) {
                let f_val = f_of(&x_series, &y_series);
                let dfy = y_series
                    .scale(&two)
                    .add(&embed_const(&a1, prec).mul(&x_series))
                    .add(&embed_const(&a3, prec));
                let delta = f_val.div(&dfy).expect("unit derivative in Newton step");
                y_series = y_series.sub(&delta).truncate(prec);
            }
            debug_assert!(f_of(&x_series, &y_series).is_known_zero());
            (x_series, y_series)
        } else {
            // ramified point: y = yP + t, solve for x; dF/dx != 0 here
            let y_series = TruncatedSeries::monomial(&field, var, y_p.clone(), 0, prec)
                .add(&TruncatedSeries::monomial(
                    &field,
                    var,
                    field.one_elem(),
                    1,
                    prec,
                ));
            let mut x_series = TruncatedSeries::monomial(&field, var, x_p.clone(), 0, prec);
            let three = field.from_int(3);
            for _ in 0..(64 - (prec as u64).leading_zeros() + 2) {
                let f_val = f_of(&x_series, &y_series);
                // dF/dx = a1 y - 3x^2 - 2 a2 x - a4
                let dfx = embed_const(&a1, prec)
                    .mul(&y_series)
                    .sub(&x_series.mul(&x_series).scale(&three))
                    .sub(&x_series.scale(&two).mul(&embed_const(&a2, prec)))
                    .sub(&embed_const(&a4, prec));
                let delta = f_val.div(&dfx).expect("unit derivative in Newton step");
                x_series = x_series.sub(&delta).truncate(prec);
            }
            debug_assert!(f_of(&x_series, &y_series).is_known_zero());
            (x_series, y_series)
        }
    }

    /// Laurent expansions of (x, y) at infinity in the local parameter
    /// z = x/y, to absolute precision `prec`: x = z^-2 * unit,
    /// y = z^-3 * unit.
    pub fn expansion_at_infinity(
        &self,
        prec: i64,
    ) -> (TruncatedSeries<FqElem>, TruncatedSeries<FqElem>) {
        let field = &self.fq;
        let var = "z";
        let [a1, a2, a3, a4, a6] = self.a.clone();
        let wprec = prec + 4;
        let c = |v: &FqElem| TruncatedSeries::monomial(field, var, v.clone(), 0, wprec);
        let z = TruncatedSeries::monomial(field, var, field.one_elem(), 1, wprec);
        // w = y*z^3 satisfies w = (1 + a1 z) w ... derived fixed point:
        // w^3 = w^2 (1 + a1 z) + a3 z^3 w - a2 z^2 w^2 - a4 z^4 w - a6 z^6
        // rearranged as w = (1 + a1 z) - a2 z^2 + a3 z^3 / w - a4 z^4 / w - a6 z^6 / w^2
        let mut w = TruncatedSeries::one(field, var, wprec);
        for _ in 0..(wprec as usize + 2) {
            let winv = w.inv().expect("unit").truncate(wprec);
            let winv2 = winv.mul(&winv).truncate(wprec);
            let next = c(&field.one_elem())
                .add(&c(&a1).mul(&z))
                .sub(&c(&a2).mul(&z.pow(2)))
                .add(&c(&a3).mul(&z.pow(3)).mul(&winv))
                .sub(&c(&a4).mul(&z.pow(4)).mul(&winv))
                .sub(&c(&a6).mul(&z.pow(6)).mul(&winv2))
                .truncate(wprec);
            if next == w {
                break;
            }
            w = next;
        }
        let y = w.shift(-3).truncate(prec);
        let x = w.shift(-2).truncate(prec);
        (x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_y2_y_x3() -> WeierstrassCurve {
        // y^2 + y = x^3 over F_2
        let f2 = Fq::new(2).unwrap();
        let z = f2.zero_elem();
        let o = f2.one_elem();
        WeierstrassCurve::new(&f2, [z.clone(), z.clone(), o, z.clone(), z]).unwrap()
    }

    #[test]
    fn nonsingular_check() {
        let f2 = Fq::new(2).unwrap();
        let z = f2.zero_elem();
        // y^2 = x^3 is singular
        assert!(WeierstrassCurve::new(
            &f2,
            [z.clone(), z.clone(), z.clone(), z.clone(), z.clone()]
        )
        .is_err());
        assert!(curve_y2_y_x3().discriminant() == f2.one_elem());
    }

    #[test]
    fn point_counts_y2_y_x3() {
        let e = curve_y2_y_x3();
        assert_eq!(e.point_count(1).unwrap(), 3); // (0,0), (0,1), infinity
        assert_eq!(e.point_count(2).unwrap(), 9);
        assert_eq!(e.point_count(3).unwrap(), 9); // supersingular: q^3+1 - t3, t3 = -... = 8+1+0
    }

    #[test]
    fn group_law_closure_and_associativity() {
        let e = curve_y2_y_x3();
        let emb = SubfieldEmbedding::new(e.field(), 2).unwrap();
        let coeffs = e.coeffs_in(&emb);
        let mut pts = vec![EPoint::Infinity];
        for (x, y) in WeierstrassCurve::affine_points(&coeffs, emb.ext_field()).unwrap() {
            pts.push(EPoint::Affine(x, y));
        }
        assert_eq!(pts.len(), 9);
        for p in &pts {
            for q in &pts {
                let s = WeierstrassCurve::add_points(&coeffs, p, q);
                assert!(pts.contains(&s), "closure");
                for r in &pts {
                    let lhs = WeierstrassCurve::add_points(
                        &coeffs,
                        &WeierstrassCurve::add_points(&coeffs, p, q),
                        r,
                    );
                    let rhs = WeierstrassCurve::add_points(
                        &coeffs,
                        p,
                        &WeierstrassCurve::add_points(&coeffs, q, r),
                    );
                    assert_eq!(lhs, rhs, "associativity");
                }
            }
        }
        // group order kills every element
        for p in &pts {
            assert_eq!(
                WeierstrassCurve::mul_point(&coeffs, p, 9),
                EPoint::Infinity
            );
        }
    }

    #[test]
    fn subfield_embedding_is_homomorphic() {
        let f4 = Fq::new(4).unwrap();
        let emb = SubfieldEmbedding::new(&f4, 2).unwrap();
        for a in f4.all_elements() {
            for b in f4.all_elements() {
                assert_eq!(
                    emb.embed(&a.mul(&b)),
                    emb.embed(&a).mul(&emb.embed(&b))
                );
                assert_eq!(
                    emb.embed(&a.add(&b)),
                    emb.embed(&a).add(&emb.embed(&b))
                );
                assert_eq!(emb.retract(&emb.embed(&a)), Some(a.clone()));
            }
        }
    }

    #[test]
    fn local_expansion_satisfies_equation() {
        let e = curve_y2_y_x3();
        let f2 = e.field().clone();
        let coeffs = e.a.clone();
        let (xs, ys) = WeierstrassCurve::local_expansion(
            &coeffs,
            &f2.elem(0),
            &f2.elem(0),
            6,
        );
        // plug back in: y^2 + y - x^3 = 0 to precision
        let lhs = ys.mul(&ys).add(&ys).sub(&xs.pow(3));
        assert!(lhs.is_known_zero());
        // at (0,0) the tangent is horizontal, so t = x - 0 is a uniformizer
        assert_eq!(xs.valuation(), Some(1));
    }

    #[test]
    fn infinity_expansion_pole_orders() {
        let e = curve_y2_y_x3();
        let (x, y) = e.expansion_at_infinity(4);
        assert_eq!(x.valuation(), Some(-2));
        assert_eq!(y.valuation(), Some(-3));
        // check the Weierstrass relation as series
        let f2 = e.field().clone();
        let one = TruncatedSeries::monomial(&f2, "z", f2.one_elem(), 0, 4);
        let lhs = y.mul(&y).add(&y).sub(&x.pow(3));
        let _ = one;
        assert!(lhs.is_known_zero(), "relation fails: {lhs}");
        // x/y = z
        let ratio = x.div(&y).unwrap();
        assert_eq!(ratio.valuation(), Some(1));
        assert!(ratio.coeff(1).is_one());
    }
}
