//! Riemann-Roch counts, element enumeration in fractional ideals,
//! coset minima, and representative systems for Pic(A).

use super::elements::FieldElement;
use super::elliptic::{SubfieldEmbedding, WeierstrassCurve};
use super::ideal::{integral_ideals_of_degree, IdealRep};
use super::pic::{PicClass, PicGroup};
use super::place::PlaceKind;
use super::spec::{PolyFq, RingKind, RingSpec};
use crate::arith::series::poly_at_series;
use crate::arith::{Field, FqElem, Poly, RatFunc};
use crate::error::{Error, Result};

/// Hard cap on enumerated F_q-dimensions.
const MAX_DIM: i64 = 20;

/// dim_F L(div(a) + m * infinity): the Riemann-Roch space of functions
/// f in a^-1 with deg f <= m * d_inf.
///
/// Genus 0: dimension depends on the degree only. Genus 1: degree plus
/// triviality of the divisor class.
pub fn riemann_roch_count(ring: &RingSpec, a: &IdealRep, twist: i64) -> Result<i64> {
    let deg = a.degree() + twist * ring.d_inf() as i64;
    match ring.genus() {
        0 => Ok((deg + 1).max(0)),
        1 => {
            if deg < 0 {
                Ok(0)
            } else if deg >= 1 {
                Ok(deg)
            } else {
                // deg = 0: 1 iff the class is trivial
                let pic = PicGroup::new(ring)?;
                Ok(if pic.class_of(a).is_identity() { 1 } else { 0 })
            }
        }
        g => Err(Error::Parameter(format!("genus {g} unsupported"))),
    }
}

/// All elements of the fractional ideal `a` with degree <= n, as a
/// complete list of q^dim field elements (the zero element included).
pub fn ideal_elements_up_to_degree(
    ring: &RingSpec,
    a: &IdealRep,
    n: i64,
) -> Result<Vec<FieldElement>> {
    match ring.kind() {
        RingKind::Poly => genus0_poly_elements(ring, a, n),
        RingKind::Shifted { .. } => genus0_shifted_elements(ring, a, n),
        RingKind::Elliptic { .. } => elliptic_elements(ring, a, n),
    }
}

/// dim_F { x in a : deg x <= n } without enumerating.
pub fn ideal_space_dim(ring: &RingSpec, a: &IdealRep, n: i64) -> Result<i64> {
    // the space is L(div(a^-1) + floor(n/d_inf) * infinity)
    let m = n.div_euclid(ring.d_inf() as i64);
    riemann_roch_count(ring, &a.inv(), m)
}

fn check_dim(dim: i64) -> Result<()> {
    if dim > MAX_DIM {
        return Err(Error::Parameter(format!(
            "element space dimension {dim} exceeds the supported bound {MAX_DIM}"
        )));
    }
    Ok(())
}

/// Scale a basis over F_q to the full list of q^k combinations, in the
/// deterministic counter order of coefficient vectors.
fn span_elements(ring: &RingSpec, basis: &[FieldElement]) -> Vec<FieldElement> {
    let q = ring.q() as u64;
    let k = basis.len() as u32;
    let total = q.pow(k);
    let fq = ring.fq();
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut acc = FieldElement::zero(ring);
        let mut rem = idx;
        for b in basis {
            let c = fq.elem((rem % q) as u32);
            rem /= q;
            if !c.is_zero() {
                acc = acc.add(&b.mul(&FieldElement::from_constant(ring, c)));
            }
        }
        out.push(acc);
    }
    out
}

fn genus0_poly_elements(ring: &RingSpec, a: &IdealRep, n: i64) -> Result<Vec<FieldElement>> {
    let fq = ring.fq();
    // base factor B = prod f^{e_f}
    let mut b_num = Poly::one(fq);
    let mut b_den = Poly::one(fq);
    for (p, &e) in a.factors() {
        let f = match p.kind() {
            PlaceKind::Monic(f) => f.clone(),
            _ => unreachable!("polynomial ring has only monic places"),
        };
        if e > 0 {
            b_num = b_num.mul(&f.pow(e as u64));
        } else {
            b_den = b_den.mul(&f.pow((-e) as u64));
        }
    }
    let bound = n - b_num.degree().unwrap() as i64 + b_den.degree().unwrap() as i64;
    check_dim(bound + 1)?;
    let b = FieldElement::from_ratfunc(ring, RatFunc::new(b_num, b_den)?)?;
    let t = FieldElement::from_ratfunc(
        ring,
        RatFunc::from_poly(Poly::x(fq)),
    )?;
    let mut basis = Vec::new();
    let mut pw = b;
    for _ in 0..=bound.max(-1) {
        basis.push(pw.clone());
        pw = pw.mul(&t);
    }
    Ok(span_elements(ring, &basis))
}

fn genus0_shifted_elements(ring: &RingSpec, a: &IdealRep, n: i64) -> Result<Vec<FieldElement>> {
    let fq = ring.fq();
    let g = ring.shifted_g().unwrap().clone();
    let d_inf = ring.d_inf() as i64;
    let kmax = n.div_euclid(d_inf);
    let mut b_num = Poly::one(fq);
    let mut b_den = Poly::one(fq);
    let mut a_clinf = 0i64;
    for (p, &e) in a.factors() {
        match p.kind() {
            PlaceKind::Monic(f) => {
                if e > 0 {
                    b_num = b_num.mul(&f.pow(e as u64));
                } else {
                    b_den = b_den.mul(&f.pow((-e) as u64));
                }
            }
            PlaceKind::ClassicalInf => a_clinf = e,
            _ => unreachable!(),
        }
    }
    // x = w(T) * B / g^kmax with deg w <= bound
    let bound = kmax * d_inf + b_den.degree().unwrap() as i64
        - b_num.degree().unwrap() as i64
        - a_clinf;
    check_dim(bound + 1)?;
    let den = b_den.mul(&g.pow(kmax.max(0) as u64));
    let num_base = if kmax >= 0 {
        b_num.clone()
    } else {
        b_num.mul(&g.pow((-kmax) as u64))
    };
    let b = FieldElement::from_ratfunc(ring, RatFunc::new(num_base, den)?)?;
    let t = FieldElement::from_ratfunc(ring, RatFunc::from_poly(Poly::x(fq)))?;
    let mut basis = Vec::new();
    let mut pw = b;
    for _ in 0..=bound.max(-1) {
        basis.push(pw.clone());
        pw = pw.mul(&t);
    }
    Ok(span_elements(ring, &basis))
}

fn elliptic_elements(ring: &RingSpec, a: &IdealRep, n: i64) -> Result<Vec<FieldElement>> {
    let (_pos, neg) = a.split();
    if neg.is_unit() {
        return elliptic_integral_elements(ring, a, n);
    }
    // clear denominators: w is the least nonzero element of the
    // integral ideal neg, then a*(w) is integral
    let w = least_nonzero_element(ring, &neg)?;
    let shifted = a.mul(&w.principal_ideal()?);
    debug_assert!(shifted.is_integral());
    let lifted = elliptic_integral_elements(ring, &shifted, n + w.degree().unwrap())?;
    lifted.into_iter().map(|x| x.div(&w)).collect()
}

/// Deterministic least nonzero element of an integral ideal (by
/// degree, then enumeration order).
pub fn least_nonzero_element(ring: &RingSpec, c: &IdealRep) -> Result<FieldElement> {
    debug_assert!(c.is_integral());
    // dim L(div(c^-1) + m*inf) >= 2 once m*d_inf >= deg c + 2g, so a
    // nonzero element of degree <= deg c + 2g + d_inf exists
    let bound = c.degree() + 2 * ring.genus() as i64 + ring.d_inf() as i64;
    let mut best: Option<FieldElement> = None;
    for x in ideal_elements_up_to_degree(ring, c, bound)? {
        if x.is_zero() {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => x.degree().unwrap() < b.degree().unwrap(),
        };
        if better {
            best = Some(x);
        }
    }
    best.ok_or_else(|| Error::Consistency("integral ideal with no nonzero elements".into()))
}

fn elliptic_integral_elements(
    ring: &RingSpec,
    a: &IdealRep,
    n: i64,
) -> Result<Vec<FieldElement>> {
    debug_assert!(a.is_integral());
    let dim = ideal_space_dim(ring, a, n)?;
    check_dim(dim)?;
    if n < 0 {
        return Ok(vec![FieldElement::zero(ring)]);
    }
    let fq = ring.fq();
    let curve = ring.curve().unwrap();
    let p = fq.p();
    let e_base = fq.e() as usize;
    // ambient monomials x^i y^j with pole degree 2i + 3j <= n, j <= 1
    let mut monomials: Vec<(usize, usize)> = Vec::new();
    for i in 0..=(n / 2).max(0) as usize {
        if 2 * i as i64 <= n {
            monomials.push((i, 0));
        }
    }
    for i in 0..=((n - 3) / 2).max(0) as usize {
        if 3 + 2 * i as i64 <= n {
            monomials.push((i, 1));
        }
    }
    if n < 3 {
        monomials.retain(|&(_, j)| j == 0);
    }
    // linear conditions over F_p: unknowns are F_p-coordinates of the
    // F_q-coefficients of each monomial
    let ncols = monomials.len() * e_base;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (place, &req) in a.factors() {
        if req <= 0 {
            continue;
        }
        let (x_enc, y_enc) = match place.kind() {
            PlaceKind::EllipticOrbit { x, y } => (*x, *y),
            _ => unreachable!(),
        };
        let emb = SubfieldEmbedding::new(fq, place.degree())?;
        let ext = emb.ext_field().clone();
        let coeffs = curve.coeffs_in(&emb);
        let (xs, ys) = WeierstrassCurve::local_expansion(
            &coeffs,
            &ext.elem(x_enc),
            &ext.elem(y_enc),
            req,
        );
        let e_ext = ext.e() as usize;
        // theta^l: an F_p-basis of F_q, embedded upward
        let gen = if e_base == 1 { fq.one_elem() } else { fq.elem(p) };
        let theta_pows: Vec<FqElem> = (0..e_base)
            .map(|l| emb.embed(&gen.pow(l as u64)))
            .collect();
        // rows for this place: one per (jet index, extension digit)
        let mut local = vec![vec![0u32; ncols]; req as usize * e_ext];
        for (mi, &(i, j)) in monomials.iter().enumerate() {
            let mono = {
                let xi = xs.pow(i as u64);
                if j == 1 {
                    xi.mul(&ys)
                } else {
                    xi
                }
            };
            for l in 0..e_base {
                let scaled = mono.scale(&theta_pows[l]);
                for s in 0..req {
                    let mut enc = scaled.coeff(s).encoding();
                    for digit_idx in 0..e_ext {
                        let digit = enc % p;
                        enc /= p;
                        local[s as usize * e_ext + digit_idx][mi * e_base + l] = digit;
                    }
                }
            }
        }
        rows.extend(local);
    }
    let kernel = kernel_basis_mod_p(&rows, ncols, p);
    debug_assert_eq!(kernel.len() as i64, dim * e_base as i64);
    // build field elements from kernel vectors; enumerate the span
    let basis_elems: Vec<FieldElement> = kernel
        .iter()
        .map(|vec| {
            let mut u = Poly::zero(fq);
            let mut v = Poly::zero(fq);
            for (mi, &(i, j)) in monomials.iter().enumerate() {
                // coefficient = sum_l vec[mi*e+l] * theta^l
                let mut c = fq.zero_elem();
                let gen = if e_base == 1 { fq.one_elem() } else { fq.elem(p) };
                for l in 0..e_base {
                    let digit = vec[mi * e_base + l];
                    if digit != 0 {
                        c = c.add(&fq.from_int(digit as i64).mul(&gen.pow(l as u64)));
                    }
                }
                if c.is_zero() {
                    continue;
                }
                let mono = Poly::monomial(c, i);
                if j == 0 {
                    u = u.add(&mono);
                } else {
                    v = v.add(&mono);
                }
            }
            FieldElement::from_xy(ring, u, v, Poly::one(fq)).unwrap()
        })
        .collect();
    // span over F_p of the kernel basis = the q^dim element list
    let total = (p as u64).pow(basis_elems.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut acc = FieldElement::zero(ring);
        let mut rem = idx;
        for b in &basis_elems {
            let digit = (rem % p as u64) as i64;
            rem /= p as u64;
            if digit != 0 {
                acc = acc.add(&b.mul(&FieldElement::from_constant(ring, fq.from_int(digit))));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Kernel basis of the F_p matrix (rows over columns) by Gaussian
/// elimination.
fn kernel_basis_mod_p(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut mat: Vec<Vec<u32>> = rows.iter().filter(|r| r.iter().any(|&c| c != 0)).cloned().collect();
    let inv = |a: u32| -> u32 {
        // p prime, a != 0
        let mut x = 1u64;
        let mut base = a as u64;
        let mut e = p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                x = x * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        x as u32
    };
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..mat.len()).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot_row);
        let pinv = inv(mat[rank][col]);
        for c in col..ncols {
            mat[rank][c] = (mat[rank][c] as u64 * pinv as u64 % p as u64) as u32;
        }
        for r in 0..mat.len() {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in col..ncols {
                    let sub = (factor as u64 * mat[rank][c] as u64) % p as u64;
                    mat[r][c] = ((mat[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot value is 1; kernel coordinate = -mat[r][free]
            let val = mat[r][free];
            v[pc] = (p - val) % p;
        }
        basis.push(v);
    }
    basis
}

/// r(x, a) = minimal degree in the coset x + a, and w(x, a) = dim of
/// the subspace of a below that degree.
///
/// Returns an error when x lies in a (the caller then takes the
/// ideal-zeta path instead).
pub fn coset_min_degree(
    ring: &RingSpec,
    x: &FieldElement,
    a: &IdealRep,
) -> Result<(i64, i64)> {
    if x.in_ideal(a)? {
        return Err(Error::Parameter(
            "coset is the ideal itself (x lies in a)".into(),
        ));
    }
    let dx = x.degree().expect("x not in a, so x is nonzero");
    // any y = x + z with deg y < deg x forces deg z = deg x, so the
    // candidates below exhaust the possible minima
    let mut r = dx;
    for z in ideal_elements_up_to_degree(ring, a, dx)? {
        let y = x.add(&z);
        let dy = y.degree().expect("x + z = 0 would put x in a");
        if dy < r {
            r = dy;
        }
    }
    let w = ideal_space_dim(ring, a, r)?;
    Ok((r, w))
}

/// Integral ideals of exact degree n in the given class.
pub fn ideals_of_degree_in_class(
    ring: &RingSpec,
    pic: &PicGroup,
    class: &PicClass,
    n: i64,
) -> Result<Vec<IdealRep>> {
    Ok(integral_ideals_of_degree(ring, n)?
        .into_iter()
        .filter(|i| &pic.class_of(i) == class)
        .collect())
}

/// Representative-system modes.
#[derive(Clone, Debug, PartialEq)]
pub enum RepMode {
    /// Integral, minimal degree in the class; unit ideal represents the
    /// trivial class.
    MinimalDegree,
    /// Integral and coprime to the given conductor.
    CoprimeTo(IdealRep),
    /// Integral, nontrivial (never the unit ideal), minimal degree.
    NontrivialMinimal,
}

/// One representative ideal per class, ordered by nondecreasing degree
/// with deterministic ties (enumeration order is canonical), the unit
/// ideal first in `MinimalDegree` mode.
pub fn choose_representatives(
    ring: &RingSpec,
    pic: &PicGroup,
    mode: RepMode,
) -> Result<Vec<IdealRep>> {
    let mut reps: Vec<IdealRep> = Vec::new();
    for class in pic.classes() {
        let mut found = None;
        let start = match mode {
            RepMode::NontrivialMinimal => 1,
            _ => 0,
        };
        'deg: for n in start..=10i64 {
            for cand in ideals_of_degree_in_class(ring, pic, &class, n)? {
                match &mode {
                    RepMode::CoprimeTo(cond) => {
                        if !cand.is_coprime_to(cond) {
                            continue;
                        }
                    }
                    RepMode::NontrivialMinimal => {
                        if cand.is_unit() {
                            continue;
                        }
                    }
                    RepMode::MinimalDegree => {}
                }
                found = Some(cand);
                break 'deg;
            }
        }
        reps.push(found.ok_or_else(|| {
            Error::Consistency(format!("no representative found for class {class}"))
        })?);
    }
    reps.sort_by_key(|i| {
        (
            i.degree(),
            i.factors()
                .iter()
                .map(|(p, e)| (p.clone(), *e))
                .collect::<Vec<_>>(),
        )
    });
    Ok(reps)
}

/// Quick degree helper used by several modules: series evaluation of a
/// polynomial in T at a series (re-export site).
pub fn poly_series_eval(
    p: &PolyFq,
    s: &crate::arith::TruncatedSeries<FqElem>,
) -> crate::arith::TruncatedSeries<FqElem> {
    poly_at_series(p, s)
}
