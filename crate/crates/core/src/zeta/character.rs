//! Characters of Pic(A) and their L-functions, in exact cyclotomic
//! arithmetic.
//!
//! L_A(chi, S) = sum over classes of chi(c) Z_(c)(S); the trivial
//! character recovers Z_A. Values chi(c) are powers of zeta_m with m
//! the exponent of Pic(A), so products of L-values stay exact.

use super::partial::class_zeta;
use crate::arith::{CycElem, CycField, Field, Rat, RatFunc};
use crate::error::{Error, Result};
use crate::rings::{PicClass, PicGroup, RingSpec};

#[derive(Clone, Debug)]
pub struct Character {
    pic: PicGroup,
    cyc: CycField,
    /// zeta_m exponent per class index.
    exps: Vec<i64>,
}

impl Character {
    pub fn cyc_field(&self) -> &CycField {
        &self.cyc
    }

    pub fn value(&self, c: &PicClass) -> CycElem {
        self.cyc.root_of_unity(self.exps[c.index()])
    }

    pub fn is_trivial(&self) -> bool {
        self.exps
            .iter()
            .all(|&e| e.rem_euclid(self.cyc.m() as i64) == 0)
    }

    /// Multiplicativity check (exhaustive over the class group).
    pub fn verify(&self) -> Result<()> {
        for a in self.pic.classes() {
            for b in self.pic.classes() {
                let lhs = self.value(&a.op(&b));
                let rhs = self.value(&a).mul(&self.value(&b));
                if lhs != rhs {
                    return Err(Error::Consistency(format!(
                        "character not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Every character of Pic(A), enumerated through the cyclic
/// decomposition; all values live in Q(zeta_m), m = exponent of the
/// group.
pub fn all_characters(pic: &PicGroup) -> Vec<Character> {
    let m = pic.exponent() as i64;
    let cyc = CycField::new(m as u32);
    let decomp = pic.decomposition();
    let h = pic.order();
    let mut out = Vec::with_capacity(h);
    // character tuples: one exponent j_i mod d_i per cyclic factor
    let mut tuple = vec![0usize; decomp.len()];
    loop {
        let exps: Vec<i64> = (0..h)
            .map(|idx| {
                let coords = pic.coordinates(&pic.class_by_index(idx));
                let mut e = 0i64;
                for (k, (_, d)) in decomp.iter().enumerate() {
                    e += (coords[k] as i64) * (tuple[k] as i64) * (m / *d as i64);
                }
                e.rem_euclid(m)
            })
            .collect();
        out.push(Character {
            pic: pic.clone(),
            cyc: cyc.clone(),
            exps,
        });
        // advance the tuple
        let mut k = 0;
        loop {
            if k == decomp.len() {
                // trivial group: single character
                return out;
            }
            tuple[k] += 1;
            if tuple[k] < decomp[k].1 {
                break;
            }
            tuple[k] = 0;
            k += 1;
        }
        if tuple.iter().all(|&t| t == 0) {
            break;
        }
    }
    out
}

/// The L-function of a character as a rational function of S over
/// Q(zeta_m).
pub fn l_function(
    ring: &RingSpec,
    pic: &PicGroup,
    chi: &Character,
) -> Result<RatFunc<CycElem>> {
    let cyc = chi.cyc_field().clone();
    let mut acc = RatFunc::<CycElem>::zero(&cyc);
    for c in pic.classes() {
        let z = class_zeta(ring, pic, &c)?;
        debug_assert!(!z.has_polar_part());
        let z_cyc = z
            .rational_part()
            .map_coeffs(&cyc, |r: &Rat| cyc.from_rat(r.clone()));
        acc = acc.add(&z_cyc.scale(&chi.value(&c)));
    }
    Ok(acc)
}

/// L_A(chi, 1 - r): evaluation at S = q^(r-1), exact in Q(zeta_m).
pub fn l_special_value(
    ring: &RingSpec,
    pic: &PicGroup,
    chi: &Character,
    r: i64,
) -> Result<CycElem> {
    if r < 2 {
        return Err(Error::Parameter("special values need r >= 2".into()));
    }
    let cyc = chi.cyc_field().clone();
    let l = l_function(ring, pic, chi)?;
    let s = cyc.from_rat(Rat::pow_of(ring.q(), r - 1));
    l.eval(&s)
        .map_err(|_| Error::Parameter(format!("L-function pole at S = q^{}", r - 1)))
}
