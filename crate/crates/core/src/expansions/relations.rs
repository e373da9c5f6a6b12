//! The recursion web between the three coordinate systems on the
//! Eisenstein ring: module coefficients l_i of the operator polynomial,
//! exponential coefficients alpha_k, and the special lattice sums
//! E_{q^k - 1}.
//!
//! Two exact identities drive all conversions. The commutation
//! e(a z) = phi_a(e(z)) compared at each q-power gives the triangular
//! system alpha_k a^(q^k) = sum over i + j = k of l_i alpha_j^(q^i).
//! The reciprocal expansion 1/e(z) = 1/z - sum E_{j+1} z^j, multiplied
//! back by e, links the alpha_k with the special sums through
//! alpha_k = sum over k' < k of alpha_k' E_{q^(k-k') - 1}^(q^k').

use crate::arith::graded::{GradedElem, GradedRing};
use crate::arith::{Field, Poly};
use crate::error::{Error, Result};

/// E_{q-1}, E_{q^2-1}, ... from alpha_1, alpha_2, ...
pub fn exp_to_special_eisenstein<F: Field>(ctx: &F::Ctx, q: u32, alphas: &[F]) -> Vec<F> {
    let mut es: Vec<F> = Vec::with_capacity(alphas.len());
    let mut full_alphas = vec![F::one(ctx)];
    full_alphas.extend(alphas.iter().cloned());
    for k in 1..=alphas.len() {
        // alpha_k = sum_{k'=0}^{k-1} alpha_k' E_{q^(k-k')-1}^(q^k')
        let mut acc = full_alphas[k].clone();
        for kp in 1..k {
            let term = full_alphas[kp].mul(&es[k - kp - 1].pow((q as u64).pow(kp as u32)));
            acc = acc.sub(&term);
        }
        es.push(acc);
    }
    es
}

/// alpha_1, alpha_2, ... from the special sums E_{q-1}, E_{q^2-1}, ...
pub fn special_eisenstein_to_exp<F: Field>(ctx: &F::Ctx, q: u32, es: &[F]) -> Vec<F> {
    let mut alphas = vec![F::one(ctx)];
    for k in 1..=es.len() {
        let mut acc = F::zero(ctx);
        for kp in 0..k {
            let term = alphas[kp].mul(&es[k - kp - 1].pow((q as u64).pow(kp as u32)));
            acc = acc.add(&term);
        }
        alphas.push(acc);
    }
    alphas[1..].to_vec()
}

/// alpha's from module coefficients with the base a given as a field
/// element (e.g. T in F_q(T)).
pub fn module_to_exp_elem<F: Field>(
    ctx: &F::Ctx,
    q: u32,
    a: &F,
    ells: &[F],
    count: usize,
) -> Result<Vec<F>> {
    let mut alphas: Vec<F> = vec![F::one(ctx)];
    for k in 1..=count {
        let diff = a.pow((q as u64).pow(k as u32)).sub(a);
        let inv = diff
            .inv()
            .ok_or_else(|| Error::Division("a^(q^k) = a".into()))?;
        let mut acc = F::zero(ctx);
        for i in 1..=k.min(ells.len()) {
            let term = ells[i - 1].mul(&alphas[k - i].pow((q as u64).pow(i as u32)));
            acc = acc.add(&term);
        }
        alphas.push(acc.mul(&inv));
    }
    Ok(alphas[1..].to_vec())
}

/// Module coefficients from alpha's with the base as a field element.
pub fn exp_to_module_elem<F: Field>(
    ctx: &F::Ctx,
    q: u32,
    a: &F,
    alphas: &[F],
    rd: usize,
) -> Result<Vec<F>> {
    let mut full = vec![F::one(ctx)];
    full.extend(alphas.iter().cloned());
    let mut ells: Vec<F> = Vec::with_capacity(rd);
    for k in 1..=rd {
        let diff = a.pow((q as u64).pow(k as u32)).sub(a);
        let mut acc = full[k].mul(&diff);
        for i in 1..k {
            let term = ells[i - 1].mul(&full[k - i].pow((q as u64).pow(i as u32)));
            acc = acc.sub(&term);
        }
        ells.push(acc);
    }
    Ok(ells)
}

/// Symbolic solution of the commutation system for general rank:
/// alpha_k as graded elements in the opaque coefficient generators
/// l_1, ..., l_rd (weights q^i - 1), over F_q(T) scalars with base T.
pub fn symbolic_exp_coeffs(
    fq: &crate::arith::Fq,
    r: usize,
    deg_a: usize,
    count: usize,
) -> (GradedRing, Vec<GradedElem<super::carlitz::FF>>) {
    use super::carlitz::FF;
    let q = fq.q();
    let rd = r * deg_a;
    let gens: Vec<(String, i64)> = (1..=rd)
        .map(|i| (format!("l{i}"), (q as u64).pow(i as u32) as i64 - 1))
        .collect();
    let ring = GradedRing::new(gens);
    let t = FF::from_poly(Poly::x(fq));
    let mut alphas: Vec<GradedElem<FF>> =
        vec![GradedElem::constant(&ring, FF::one(fq))];
    for k in 1..=count {
        let diff = t.pow((q as u64).pow(k as u32)).sub(&t);
        let inv = diff.inv().unwrap();
        let mut acc = GradedElem::zero(&ring, fq);
        for i in 1..=k.min(rd) {
            let ell = GradedElem::generator(&ring, fq, i - 1);
            let term = ell.mul(&alphas[k - i].pow((q as u64).pow(i as u32)));
            acc = acc.add(&term);
        }
        alphas.push(acc.scale(&inv));
    }
    (ring, alphas[1..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::super::carlitz::{carlitz_d, lattice_eisenstein_values, FF};
    use super::*;
    use crate::arith::graded::WeightCheck;
    use crate::arith::{Fq, Rat};

    #[test]
    fn carlitz_exp_coeffs_from_module() {
        // phi_T = T X + X^q: l_1 = 1 gives alpha_k = 1/D_k
        for q in [2u32, 3] {
            let fq = Fq::new(q).unwrap();
            let t = FF::from_poly(Poly::x(&fq));
            let alphas =
                module_to_exp_elem(&fq, q, &t, &[FF::one(&fq)], 3).unwrap();
            for (k, alpha) in alphas.iter().enumerate() {
                let d = FF::from_poly(carlitz_d(&fq, k + 1));
                assert!(alpha.mul(&d).is_one(), "q={q} k={}", k + 1);
            }
        }
    }

    #[test]
    fn module_exp_roundtrip() {
        // rank-2-style data: l_1 = T^2 + 1, l_2 = T over F_3(T)
        let fq = Fq::new(3).unwrap();
        let t = FF::from_poly(Poly::x(&fq));
        let ells = vec![t.mul(&t).add(&FF::one(&fq)), t.clone()];
        let alphas = module_to_exp_elem(&fq, 3, &t, &ells, 4).unwrap();
        let back = exp_to_module_elem(&fq, 3, &t, &alphas, 2).unwrap();
        assert_eq!(back, ells);
    }

    #[test]
    fn exp_eisenstein_roundtrip_to_index_four() {
        let fq = Fq::new(2).unwrap();
        let t = FF::from_poly(Poly::x(&fq));
        // generic alpha data
        let alphas = vec![
            t.inv().unwrap(),
            t.clone(),
            FF::one(&fq),
            t.add(&FF::one(&fq)),
        ];
        let es = exp_to_special_eisenstein(&fq, 2, &alphas);
        let back = special_eisenstein_to_exp(&fq, 2, &es);
        assert_eq!(back, alphas);
    }

    #[test]
    fn lattice_values_match_exp_route() {
        // the special sums from inverting e must agree with the
        // triangular conversion from alpha = 1/D
        for q in [2u32, 3] {
            let fq = Fq::new(q).unwrap();
            let alphas: Vec<FF> = (1..=3)
                .map(|i| FF::from_poly(carlitz_d(&fq, i)).inv().unwrap())
                .collect();
            let es = exp_to_special_eisenstein(&fq, q, &alphas);
            let direct =
                lattice_eisenstein_values(&fq, (q as usize).pow(3) - 1).unwrap();
            for k in 1..=3usize {
                let idx = (q as usize).pow(k as u32) - 1;
                assert_eq!(es[k - 1], direct[idx - 1], "q={q} k={k}");
            }
        }
    }

    #[test]
    fn roundtrip_over_rationals() {
        // the solvers are generic; check over Q with a = 2 (q = 3 formal)
        let a = Rat::from_int(2);
        let ells = vec![Rat::new(1, 3), Rat::from_int(5)];
        let alphas = module_to_exp_elem(&(), 3, &a, &ells, 3).unwrap();
        let back = exp_to_module_elem(&(), 3, &a, &alphas, 2).unwrap();
        assert_eq!(back, ells);
    }

    #[test]
    fn symbolic_alpha_one() {
        // alpha_1 = l_1/(T^q - T), homogeneous of weight q - 1
        let fq = Fq::new(3).unwrap();
        let (_ring, alphas) = symbolic_exp_coeffs(&fq, 2, 1, 2);
        assert_eq!(alphas[0].weight_check(), WeightCheck::Homogeneous(2));
        let rendered = alphas[0].to_string();
        assert!(rendered.contains("l1"), "{rendered}");
        // alpha_2 is homogeneous of weight q^2 - 1
        assert_eq!(alphas[1].weight_check(), WeightCheck::Homogeneous(8));
    }
}
