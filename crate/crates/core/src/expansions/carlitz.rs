//! The Carlitz module over F_q[T] and its derived quantities: additive
//! operator polynomials, exponential coefficients 1/D_i, and the exact
//! special values of the rank-1 lattice sums obtained by inverting the
//! exponential.
//!
//! Everything is normalized to the period-free lattice (coefficients in
//! F_q(T)); the transcendental period enters only through an integer
//! exponent ledger kept by the callers.

use crate::arith::{Field, Fq, FqElem, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::rings::spec::PolyFq;

/// The function field F_q(T) as a coefficient field.
pub type FF = RatFunc<FqElem>;

/// D_0 = 1, D_i = (T^(q^i) - T) D_{i-1}^q: the Carlitz factorials.
pub fn carlitz_d(fq: &Fq, i: usize) -> PolyFq {
    let q = fq.q() as u64;
    let mut d = Poly::one(fq);
    for k in 1..=i {
        let mut tq = Poly::monomial(fq.one_elem(), q.pow(k as u32) as usize);
        tq = tq.sub(&Poly::x(fq));
        d = tq.mul(&d.pow(q));
    }
    d
}

/// An additive (F_q-linear) polynomial sum c_i X^(q^i), coefficients
/// low index first.
#[derive(Clone, Debug, PartialEq)]
pub struct AddPoly {
    fq: Fq,
    pub coeffs: Vec<FF>,
}

impl AddPoly {
    pub fn scalar(fq: &Fq, c: FF) -> AddPoly {
        AddPoly {
            fq: fq.clone(),
            coeffs: vec![c],
        }
    }

    fn trim(mut self) -> AddPoly {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &AddPoly) -> AddPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = FF::zero(&self.fq);
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                a.add(b)
            })
            .collect();
        AddPoly {
            fq: self.fq.clone(),
            coeffs,
        }
        .trim()
    }

    /// Composition: (f o g)_k = sum over i + j = k of f_i g_j^(q^i).
    pub fn compose(&self, other: &AddPoly) -> AddPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return AddPoly {
                fq: self.fq.clone(),
                coeffs: vec![],
            };
        }
        let q = self.fq.q() as u64;
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut out = vec![FF::zero(&self.fq); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a.mul(&b.pow(q.pow(i as u32)));
                out[i + j] = out[i + j].add(&term);
            }
        }
        AddPoly {
            fq: self.fq.clone(),
            coeffs: out,
        }
        .trim()
    }
}

/// The Carlitz action of a polynomial a: the additive polynomial with
/// phi_T = T X + X^q, extended multiplicatively and additively. For
/// monic a the coefficients lie in F_q[T] and the top coefficient is 1.
pub fn carlitz_action(fq: &Fq, a: &PolyFq) -> AddPoly {
    let t_action = AddPoly {
        fq: fq.clone(),
        coeffs: vec![
            FF::from_poly(Poly::x(fq)),
            FF::one(fq),
        ],
    };
    let mut acc = AddPoly {
        fq: fq.clone(),
        coeffs: vec![],
    };
    // Horner in the T-action: phi_{sum c_i T^i} = sum c_i phi_T^(o i)
    for c in a.coeffs().iter().rev() {
        acc = acc.compose(&t_action);
        if !c.is_zero() {
            acc = acc.add(&AddPoly::scalar(fq, FF::constant(c.clone())));
        }
    }
    acc
}

/// Exponential coefficients of the normalized rank-1 lattice:
/// alpha_i = 1/D_i.
pub fn carlitz_exp_coeffs(fq: &Fq, count: usize) -> Vec<FF> {
    (1..=count)
        .map(|i| FF::from_poly(carlitz_d(fq, i)).inv().unwrap())
        .collect()
}

/// Special values of the normalized rank-1 lattice sums: the list
/// e_1, ..., e_max where e_k = sum over nonzero lattice points of
/// lambda^-k, read off the expansion
///     1/e(z) = 1/z - sum_{j >= 0} e_{j+1} z^j.
/// Nonzero only for k = 0 mod (q-1).
pub fn lattice_eisenstein_values(fq: &Fq, max_k: usize) -> Result<Vec<FF>> {
    let q = fq.q() as u64;
    // unit part u(z) = 1 + sum_{i >= 1} z^(q^i - 1)/D_i
    let len = max_k + 1;
    let mut unit = vec![FF::zero(fq); len];
    unit[0] = FF::one(fq);
    let mut i = 1usize;
    loop {
        let e = q.pow(i as u32) - 1;
        if e as usize >= len {
            break;
        }
        unit[e as usize] = FF::from_poly(carlitz_d(fq, i)).inv().unwrap();
        i += 1;
    }
    // invert the unit part
    let mut inv = vec![FF::zero(fq); len];
    inv[0] = FF::one(fq);
    for k in 1..len {
        let mut acc = FF::zero(fq);
        for j in 1..=k {
            if !unit[j].is_zero() {
                acc = acc.add(&unit[j].mul(&inv[k - j]));
            }
        }
        inv[k] = acc.neg();
    }
    // 1/e(z) = z^-1 * inv(z means): coefficient of z^j is inv[j + 1],
    // so e_{j+1} = -inv[j + 1]
    let mut out = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        let v = inv[k].neg();
        if (k as u64) % (q - 1).max(1) != 0 && !v.is_zero() {
            return Err(Error::Consistency(format!(
                "lattice sum e_{k} should vanish off the q-1 grid"
            )));
        }
        out.push(v);
    }
    Ok(out)
}
