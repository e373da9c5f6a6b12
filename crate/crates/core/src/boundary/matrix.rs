//! The cuspidal-divisor matrix and its finite-index certificate.
//!
//! Rows are boundary classes (a), columns are nontrivial class
//! representatives n_i; entries ord_(a)(Delta_{n_i}^b). A nonzero
//! determinant certifies that the divisors of the Delta_{n_i}^b
//! generate a finite-index subgroup of Z[Pic(A)]. The determinant is
//! tied back to L-values through the Frobenius determinant formula:
//! the matrix N with entries zeta_((a^-1 b^-1 n_i))(1-r) satisfies
//! det N = +- prod over characters of L_A(chi, 1-r), and
//! det M = (1 - q^(r deg n_j0)) det N with n_j0 the principal
//! representative.

use num_bigint::BigInt;

use super::orders::ord_discriminant_twisted;
use crate::arith::{CycElem, Field, Rat};
use crate::error::{Error, Result};
use crate::rings::{IdealRep, PicGroup, RingSpec};
use crate::zeta::character::{all_characters, l_special_value};
use crate::zeta::partial::class_zeta;

#[derive(Clone, Debug)]
pub struct CuspidalMatrix {
    pub ring: String,
    pub rank: i64,
    /// row labels: boundary classes in canonical order
    pub row_labels: Vec<String>,
    /// column labels: the representative ideals
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<BigInt>>,
    pub det: BigInt,
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
pub fn int_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k] == BigInt::from(0) {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != BigInt::from(0)) else {
                return BigInt::from(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact rational determinant by Gaussian elimination.
pub fn rat_determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::from_int(1);
    }
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::from_int(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rat::from_int(0);
        };
        if p != k {
            a.swap(k, p);
            det = det.neg();
        }
        det = det.mul(&a[k][k]);
        let inv = a[k][k].inv().unwrap();
        for j in k..n {
            a[k][j] = a[k][j].mul(&inv);
        }
        for i in k + 1..n {
            if !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in k..n {
                    let sub = f.mul(&a[k][j]);
                    a[i][j] = a[i][j].sub(&sub);
                }
            }
        }
    }
    det
}

/// Build the matrix of discriminant orders for the given nontrivial
/// representatives (one per class) and assert the nonzero determinant.
pub fn cuspidal_matrix(
    ring: &RingSpec,
    pic: &PicGroup,
    r: i64,
    reps: &[IdealRep],
    b: &IdealRep,
) -> Result<CuspidalMatrix> {
    let h = pic.order();
    if reps.len() != h {
        return Err(Error::Parameter(format!(
            "need {h} representatives, got {}",
            reps.len()
        )));
    }
    {
        let mut seen: Vec<usize> = reps
            .iter()
            .map(|n| pic.class_of(n).index())
            .collect();
        seen.sort();
        seen.dedup();
        if seen.len() != h {
            return Err(Error::Parameter(
                "representatives must cover every class exactly once".into(),
            ));
        }
    }
    if reps.iter().any(|n| n.is_unit() || !n.is_integral()) {
        return Err(Error::Parameter(
            "representatives must be proper integral ideals".into(),
        ));
    }
    let classes = pic.classes();
    let mut entries = Vec::with_capacity(h);
    for a_class in &classes {
        let mut row = Vec::with_capacity(h);
        for n in reps {
            let rep = ord_discriminant_twisted(ring, pic, n, b, a_class, r)?;
            row.push(rep.order);
        }
        entries.push(row);
    }
    let det = int_determinant(&entries);
    if det == BigInt::from(0) {
        return Err(Error::Consistency(
            "cuspidal matrix determinant vanishes".into(),
        ));
    }
    Ok(CuspidalMatrix {
        ring: ring.to_string(),
        rank: r,
        row_labels: classes.iter().map(|c| c.label()).collect(),
        col_labels: reps.iter().map(|n| n.label()).collect(),
        entries,
        det,
    })
}

#[derive(Clone, Debug)]
pub struct FrobeniusCheck {
    /// det of N((a), (n_i)) = zeta_((a^-1 b^-1 n_i))(1-r).
    pub det_n: Rat,
    /// prod over characters of L_A(chi, 1-r), reduced to a rational.
    pub l_product: Rat,
    /// +1 or -1 with det_n = sign * l_product.
    pub sign: i64,
    /// every single L-value, as exact cyclotomic numbers rendered to
    /// strings for reporting.
    pub l_values: Vec<String>,
    /// (1 - q^(r deg n_j0)) * det N = det M, re-derived and checked.
    pub det_m: BigInt,
    pub matched: bool,
}

/// The Frobenius-determinant cross-check: the class-zeta matrix
/// determinant equals the product of L-values up to sign, every
/// L-value is nonzero, and the cuspidal matrix determinant follows by
/// the principal-column factor.
pub fn frobenius_det_crosscheck(
    ring: &RingSpec,
    pic: &PicGroup,
    r: i64,
    reps: &[IdealRep],
    b: &IdealRep,
) -> Result<FrobeniusCheck> {
    let h = pic.order();
    if reps.len() != h {
        return Err(Error::Parameter(format!(
            "need {h} representatives, got {}",
            reps.len()
        )));
    }
    let classes = pic.classes();
    let mut n_matrix = Vec::with_capacity(h);
    for a_class in &classes {
        let shifted_inv = a_class.op(&pic.class_of(b)).inverse();
        let mut row = Vec::with_capacity(h);
        for n in reps {
            let z = class_zeta(ring, pic, &shifted_inv.op(&pic.class_of(n)))?;
            row.push(z.special_value(r)?);
        }
        n_matrix.push(row);
    }
    let det_n = rat_determinant(&n_matrix);
    // product of L-values over all characters, exact in Q(zeta_m)
    let chars = all_characters(pic);
    let mut l_values = Vec::with_capacity(h);
    let mut product: Option<CycElem> = None;
    for chi in &chars {
        let v = l_special_value(ring, pic, chi, r)?;
        if v.is_zero() {
            return Err(Error::Consistency(
                "an L-value vanishes at s = 1 - r".into(),
            ));
        }
        l_values.push(v.to_string());
        product = Some(match product {
            None => v,
            Some(p) => p.mul(&v),
        });
    }
    let product = product.expect("at least the trivial character");
    let l_product = product.as_rational().ok_or_else(|| {
        Error::Consistency("Galois-stable L-product failed to be rational".into())
    })?;
    let sign = if det_n == l_product {
        1
    } else if det_n == l_product.neg() {
        -1
    } else {
        return Err(Error::Consistency(format!(
            "det N = {det_n} does not match the L-product {l_product} up to sign"
        )));
    };
    // principal-column factor ties det M to det N
    let j0 = reps
        .iter()
        .position(|n| pic.class_of(n).is_identity())
        .ok_or_else(|| Error::Parameter("no principal representative".into()))?;
    let factor = Rat::from_int(1).sub(&Rat::pow_of(ring.q(), r * reps[j0].degree()));
    let det_m_expect = factor.mul(&det_n);
    let m = cuspidal_matrix(ring, pic, r, reps, b)?;
    let matched = Rat::from_big(m.det.clone()) == det_m_expect;
    if !matched {
        return Err(Error::Consistency(format!(
            "det M = {} differs from (1 - q^(r deg n0)) det N = {det_m_expect}",
            m.det
        )));
    }
    Ok(FrobeniusCheck {
        det_n,
        l_product,
        sign,
        l_values,
        det_m: m.det,
        matched,
    })
}
