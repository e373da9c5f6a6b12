//! Two independent routes to the discriminant expansion along the
//! boundary, and the level parameter relation.
//!
//! Everything is written in the normalized uniformizer (the period is
//! factored out and tracked as an integer exponent ledger), so all
//! series coefficients lie in F_q(T) — in fact in F_q[T] for the
//! product route.
//!
//! Product route: the normalized discriminant for the ideal (T) in
//! rank 2 is
//!     - t^(q-1) * prod over monic b of S_b(t)^((q-1)(q^2-1)),
//! with only finitely many factors contributing below any fixed
//! precision since S_b = 1 + O(t^(q^deg b - q^(deg b - 1))).
//!
//! Eisenstein route: expand the weight q-1 and q^2-1 lattice sums
//!     E_k = e_k - sum over monic a of G_k(t(a)),
//!     t(a) = t^(q^deg a) / R_a(t),
//! with G_k the Goss polynomials of the normalized rank-1 lattice and
//! e_k its special values; then solve the coefficient recursion for
//! the top operator coefficient:
//!     alpha_1 = E_{q-1},  alpha_2 = E_{q^2-1} + E_{q-1}^(q+1),
//!     Delta = (T^(q^2) - T) alpha_2 - (T^q - T) alpha_1^(q+1).

use super::carlitz::{carlitz_action, carlitz_exp_coeffs, lattice_eisenstein_values, FF};
use super::goss::goss_polys;
use super::spoly::{s_poly, s_poly_level};
use crate::arith::series::poly_at_series;
use crate::arith::{Fq, Poly, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rings::spec::PolyFq;

pub type FFSeries = TruncatedSeries<FF>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Product,
    Eisenstein,
}

/// A normalized boundary expansion with its period ledger: the
/// unnormalized form equals (period)^pibar_exponent times the series.
#[derive(Clone, Debug)]
pub struct TExpansion {
    pub series: FFSeries,
    pub pibar_exponent: i64,
    pub route: Route,
}

/// t(a) = t^(q^deg a)/R_a(t) for monic a: the image of the uniformizer
/// under the degree-a isogeny, as a series in t. The reciprocal
/// polynomial R_a is rebuilt here directly from the Carlitz action
/// (independent of the s_poly code path).
fn uniformizer_image(fq: &Fq, a: &PolyFq, prec: i64) -> Result<FFSeries> {
    let q = fq.q() as u64;
    let d = a.degree().unwrap();
    let action = carlitz_action(fq, a);
    // R_a(X) = phi_a(X^-1) X^(q^d): dense coefficients
    let mut coeffs = vec![FF::zero(fq); q.pow(d as u32) as usize];
    for (i, ell) in action.coeffs.iter().enumerate() {
        let e = (q.pow(d as u32) - q.pow(i as u32)) as usize;
        coeffs[e] = ell.clone();
    }
    let r_a = Poly::from_coeffs(fq, coeffs);
    let t = TruncatedSeries::monomial(fq, "t", FF::one(fq), 1, prec);
    let r_at = poly_at_series(&r_a, &t).truncate(prec);
    let tq = TruncatedSeries::monomial(fq, "t", FF::one(fq), q.pow(d as u32) as i64, prec + q.pow(d as u32) as i64);
    tq.div(&r_at)
}

/// The level relation t = t_n^(q^((r-1) deg n))/S_n^n(t_n) as a series
/// in t_n (rank 2 concrete).
pub fn t_level_relation(fq: &Fq, n: &PolyFq, prec: i64) -> Result<FFSeries> {
    let q = fq.q() as u64;
    let d = n.degree().ok_or_else(|| Error::Parameter("level must be nonzero".into()))?;
    if d == 0 {
        return Err(Error::Parameter("level must be a proper ideal".into()));
    }
    let s = s_poly_level(fq, n, Some(n))?;
    let tn = TruncatedSeries::monomial(fq, "t_n", FF::one(fq), 1, prec);
    let s_at = poly_at_series(&s, &tn).truncate(prec);
    let top = TruncatedSeries::monomial(
        fq,
        "t_n",
        FF::one(fq),
        q.pow(d as u32) as i64,
        prec + q.pow(d as u32) as i64,
    );
    top.div(&s_at)
}

/// Product route: the normalized discriminant for n = (T), to
/// O(t^(prec)). The ledger exponent is q^2 - 1.
pub fn delta_product_series(q: u32, prec: i64) -> Result<TExpansion> {
    let fq = Fq::new(q)?;
    let qi = q as u64;
    let exponent = (qi - 1) * (qi * qi - 1);
    let mut acc = TruncatedSeries::monomial(
        &fq,
        "t",
        FF::constant(fq.from_int(-1)),
        qi as i64 - 1,
        prec,
    );
    // S_b = 1 + O(t^(q^d - q^(d-1))): degree-d factors matter only
    // while q^d - q^(d-1) < prec
    let mut d = 1usize;
    loop {
        let gap = qi.pow(d as u32) - qi.pow(d as u32 - 1);
        if gap as i64 >= prec {
            break;
        }
        for b in crate::arith::poly::monic_polys(&fq, d) {
            let s = s_poly(&fq, &b)?;
            let t = TruncatedSeries::monomial(&fq, "t", FF::one(&fq), 1, prec);
            let s_at = poly_at_series(&s, &t).truncate(prec);
            acc = acc.mul(&s_at.pow(exponent)).truncate(prec);
        }
        d += 1;
    }
    Ok(TExpansion {
        series: acc,
        pibar_exponent: (qi * qi) as i64 - 1,
        route: Route::Product,
    })
}

/// Eisenstein-series route to the same normalized discriminant.
pub fn delta_via_eisenstein_series(q: u32, prec: i64) -> Result<TExpansion> {
    let fq = Fq::new(q)?;
    let qi = q as u64;
    let e1 = eisenstein_series(&fq, (qi - 1) as usize, prec)?;
    let e2 = eisenstein_series(&fq, (qi * qi - 1) as usize, prec)?;
    // alpha_1 = E_{q-1}; alpha_2 = E_{q^2-1} + E_{q-1}^(q+1)
    let alpha1 = e1.clone();
    let alpha2 = e2.add(&e1.pow(qi + 1));
    // Delta = (T^(q^2) - T) alpha_2 - (T^q - T) alpha_1^(q+1)
    let t = FF::from_poly(Poly::x(&fq));
    let c2 = t.pow(qi * qi).sub(&t);
    let c1 = t.pow(qi).sub(&t);
    let delta = alpha2.scale(&c2).sub(&alpha1.pow(qi + 1).scale(&c1));
    Ok(TExpansion {
        series: delta.truncate(prec),
        pibar_exponent: (qi * qi) as i64 - 1,
        route: Route::Eisenstein,
    })
}

/// The weight-k lattice sum for the rank-2 module as a t-series:
/// E_k = e_k - sum over monic a of G_k(t(a)).
pub fn eisenstein_series(fq: &Fq, k: usize, prec: i64) -> Result<FFSeries> {
    let q = fq.q() as u64;
    debug_assert_eq!(k as u64 % (q - 1).max(1), 0);
    // enough exponential coefficients for the Goss recursion
    let mut need = 0usize;
    while q.pow(need as u32 + 1) < k as u64 {
        need += 1;
    }
    let alphas = carlitz_exp_coeffs(fq, need + 1);
    let table = goss_polys(q as u32, fq, &alphas, k)?;
    let gk = table.poly(k);
    let e_values = lattice_eisenstein_values(fq, k)?;
    let constant = e_values[k - 1].clone();
    let mut acc = TruncatedSeries::monomial(fq, "t", constant, 0, prec);
    // the a-term has valuation gamma(k) q^(deg a) >= q^(deg a)
    let mut d = 0usize;
    loop {
        if qi_pow(q, d) >= prec as u64 {
            break;
        }
        for a in crate::arith::poly::monic_polys(fq, d) {
            let ta = uniformizer_image(fq, &a, prec)?;
            let term = poly_at_series(gk, &ta).truncate(prec);
            acc = acc.sub(&term);
        }
        d += 1;
    }
    Ok(acc)
}

fn qi_pow(q: u64, d: usize) -> u64 {
    q.pow(d as u32)
}

/// Route comparison verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum RouteVerdict {
    Equal { prec: i64 },
    FirstDifference { exponent: i64 },
}

pub fn compare_routes(q: u32, prec: i64) -> Result<(TExpansion, TExpansion, RouteVerdict)> {
    let prod = delta_product_series(q, prec)?;
    let eis = delta_via_eisenstein_series(q, prec)?;
    let common = prod.series.prec().min(eis.series.prec());
    let diff = prod.series.sub(&eis.series);
    let verdict = match diff.valuation() {
        None => RouteVerdict::Equal { prec: common },
        Some(e) => RouteVerdict::FirstDifference { exponent: e },
    };
    Ok((prod, eis, verdict))
}
