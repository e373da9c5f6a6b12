//! Goss polynomials of a lattice, from its exponential coefficients.
//!
//! G_k expresses the weight-k sum over a coset of the lattice through
//! the reciprocal of the exponential: sum over lambda of
//! (z + lambda)^-k = G_k(1/e(z)). The recursion
//!     G_k(X) = X * (G_{k-1} + sum_{i >= 1, q^i < k} alpha_i G_{k-q^i})
//! (G_j = 0 for j <= 0) gives G_k = X^k for k <= q.
//!
//! gamma(k) = ord_{X=0} G_k depends only on q and the q-adic expansion
//! of k - 1, not on the lattice; that independence is checked, not
//! assumed, by recomputing with a second coefficient specialization.

use crate::arith::{Field, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GossPolyTable<F: Field> {
    pub q: u32,
    /// G_1 .. G_K (index 0 holds G_1).
    polys: Vec<Poly<F>>,
}

impl<F: Field> GossPolyTable<F> {
    pub fn poly(&self, k: usize) -> &Poly<F> {
        assert!(k >= 1 && k <= self.polys.len());
        &self.polys[k - 1]
    }

    pub fn max_index(&self) -> usize {
        self.polys.len()
    }

    /// ord_{X=0} of G_k.
    pub fn gamma(&self, k: usize) -> i64 {
        let g = self.poly(k);
        g.coeffs()
            .iter()
            .position(|c| !c.is_zero())
            .expect("Goss polynomial is nonzero") as i64
    }
}

/// Build G_1..G_K from exponential coefficients alpha_1, alpha_2, ...
/// (alpha_0 = 1 implicit; alpha_i is the coefficient of z^(q^i)).
pub fn goss_polys<F: Field>(
    q: u32,
    ctx: &F::Ctx,
    alphas: &[F],
    max_k: usize,
) -> Result<GossPolyTable<F>> {
    if max_k as u64 > (q as u64).pow(3) {
        return Err(Error::Parameter(format!(
            "Goss table bound {max_k} exceeds q^3"
        )));
    }
    let x = Poly::<F>::x(ctx);
    let mut polys: Vec<Poly<F>> = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        // inner = G_{k-1} + sum alpha_i G_{k - q^i} over q^i < k
        let mut inner = if k >= 2 {
            polys[k - 2].clone()
        } else {
            Poly::one(ctx)
        };
        let mut qi = q as u64;
        let mut i = 0usize;
        while qi < k as u64 {
            if i + 1 <= alphas.len() {
                let alpha = &alphas[i];
                let prev = &polys[k - qi as usize - 1];
                inner = inner.add(&prev.scale(alpha));
            } else {
                return Err(Error::Parameter(format!(
                    "need alpha_{} for G_{k}",
                    i + 1
                )));
            }
            qi *= q as u64;
            i += 1;
        }
        polys.push(x.mul(&inner));
    }
    Ok(GossPolyTable { q, polys })
}

fn alphas_needed(q: u32, k: usize) -> usize {
    let mut n = 0usize;
    let mut qi = q as u64;
    while qi < k as u64 {
        n += 1;
        qi *= q as u64;
    }
    n
}

/// The generic vanishing order of G_k at X = 0 in characteristic p.
///
/// The recursion has only positive integer multiplicities, but those
/// integers can vanish mod p (already G_4 = X^4 + 2 alpha_1 X^3 over
/// q = 2), so the order must be read off with the alpha_i kept as free
/// generators over F_p, not specialized and not in characteristic 0.
pub fn gamma_symbolic(q: u32, k: usize) -> Result<i64> {
    use crate::arith::graded::{GradedElem, GradedRing};
    use crate::arith::{Fq, FqElem};
    if k as u64 > (q as u64).pow(3) {
        return Err(Error::Parameter(format!("gamma bound {k} exceeds q^3")));
    }
    let (p, _) = crate::arith::fq::prime_power(q)?;
    let fp = Fq::new(p)?;
    let m = alphas_needed(q, k);
    let ring = GradedRing::new((1..=m).map(|i| (format!("a{i}"), 0)).collect());
    let gens: Vec<GradedElem<FqElem>> = (0..m)
        .map(|i| GradedElem::generator(&ring, &fp, i))
        .collect();
    // G_j as dense X-coefficient vectors of graded elements
    let zero = || GradedElem::<FqElem>::zero(&ring, &fp);
    let one = GradedElem::constant(&ring, fp.one_elem());
    let mut tables: Vec<Vec<GradedElem<FqElem>>> = Vec::with_capacity(k);
    for j in 1..=k {
        let mut inner: Vec<GradedElem<FqElem>> = if j >= 2 {
            tables[j - 2].clone()
        } else {
            vec![one.clone()]
        };
        let mut qi = q as u64;
        let mut i = 0usize;
        while qi < j as u64 {
            let prev = &tables[j - qi as usize - 1];
            if inner.len() < prev.len() {
                inner.resize(prev.len(), zero());
            }
            for (e, c) in prev.iter().enumerate() {
                inner[e] = inner[e].add(&c.mul(&gens[i]));
            }
            qi *= q as u64;
            i += 1;
        }
        // G_j = X * inner
        let mut g = vec![zero()];
        g.extend(inner);
        tables.push(g);
    }
    let gk = &tables[k - 1];
    gk.iter()
        .position(|c| !c.is_zero())
        .map(|v| v as i64)
        .ok_or_else(|| Error::Consistency(format!("G_{k} vanished identically")))
}

/// gamma(k): the symbolic characteristic-p order, cross-checked
/// against two distinct concrete lattice specializations over F_q(T),
/// which must agree with it.
pub fn gamma(q: u32, k: usize) -> Result<i64> {
    use super::carlitz::{carlitz_d, FF};
    use crate::arith::{Fq, Poly, RatFunc};
    let symbolic = gamma_symbolic(q, k)?;
    let fq = Fq::new(q)?;
    let m = alphas_needed(q, k);
    let carlitz: Vec<FF> = (1..=m)
        .map(|i| RatFunc::from_poly(carlitz_d(&fq, i)).inv().unwrap())
        .collect();
    let other: Vec<FF> = (1..=m)
        .map(|i| RatFunc::from_poly(Poly::monomial(fq.one_elem(), i)))
        .collect();
    for spec in [carlitz, other] {
        let table = goss_polys(q, &fq, &spec, k)?;
        let g = table.gamma(k);
        if g != symbolic {
            return Err(Error::Consistency(format!(
                "gamma({k}) = {symbolic} symbolically but {g} after specialization"
            )));
        }
    }
    Ok(symbolic)
}
