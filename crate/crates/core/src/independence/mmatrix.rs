//! The Eisenstein-independence matrix over O_infinity.
//!
//! Entry (i, j) is the lattice sum over nonzero t in a_j a_i^-1 taken
//! modulo F* of t^-k, truncated at degree D with the discarded tail
//! certified below the working precision: a discarded t has
//! deg t > D, so val(t^-k) = k deg(t)/d_inf > P.
//!
//! The three facts that make the matrix invertible over O_infinity:
//! every entry has valuation >= 0; entries strictly above the diagonal
//! (reps ordered by nondecreasing degree) have valuation > 0; diagonal
//! entries are congruent to 1 mod pi. Hence det = 1 mod pi.

use super::completion::{CompletionContext, KInfElem};
use crate::arith::{Field, Poly};
use crate::error::{Error, Result};
use crate::rings::spec::PolyFq;
use crate::rings::{
    choose_representatives, ideal_elements_up_to_degree, FieldElement, IdealRep,
    PicGroup, RepMode, RingSpec,
};

#[derive(Clone, Debug)]
pub struct MMatrix {
    pub ring: String,
    /// weight, a multiple of q - 1
    pub weight: i64,
    pub reps: Vec<IdealRep>,
    pub entries: Vec<Vec<KInfElem>>,
    /// degree bound used for the defining sums
    pub degree_bound: i64,
    /// certified precision
    pub precision: i64,
}

#[derive(Clone, Debug)]
pub struct MMatrixCertificate {
    /// valuation table; `None` marks "all known digits vanish"
    pub valuations: Vec<Vec<Option<i64>>>,
    pub all_integral: bool,
    pub strictly_upper: bool,
    pub diagonal_unit: bool,
    /// determinant of the residue matrix equals 1 in the residue field
    pub det_residue_is_one: bool,
    /// human-readable violations, empty on success
    pub violations: Vec<String>,
}

impl MMatrixCertificate {
    pub fn passed(&self) -> bool {
        self.all_integral && self.strictly_upper && self.diagonal_unit && self.det_residue_is_one
    }
}

/// Group the nonzero elements into F*-orbits and pick the canonical
/// representative of each (minimal degree, then rendering).
fn orbit_representatives(ring: &RingSpec, elems: &[FieldElement]) -> Vec<FieldElement> {
    let fq = ring.fq();
    let mut seen: std::collections::BTreeSet<String> = Default::default();
    let mut reps = Vec::new();
    for x in elems {
        if x.is_zero() {
            continue;
        }
        let mut orbit: Vec<(i64, String, FieldElement)> = fq
            .units()
            .iter()
            .map(|c| {
                let y = x.mul(&FieldElement::from_constant(ring, c.clone()));
                (y.degree().unwrap(), y.render(), y)
            })
            .collect();
        orbit.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let key = orbit[0].1.clone();
        if seen.insert(key) {
            reps.push(orbit[0].2.clone());
        }
    }
    reps
}

/// Build the matrix at weight k (a multiple of q - 1) with working
/// precision `precision` digits; the degree bound is derived so the
/// truncation is certified, or can be overridden upward.
pub fn m_matrix(
    ring: &RingSpec,
    pic: &PicGroup,
    k: i64,
    precision: Option<i64>,
    degree_bound: Option<i64>,
) -> Result<MMatrix> {
    let q = ring.q() as i64;
    if k <= 0 || k % (q - 1).max(1) != 0 {
        return Err(Error::Parameter(format!(
            "weight {k} must be a positive multiple of q - 1"
        )));
    }
    let d_inf = ring.d_inf() as i64;
    // element degrees are multiples of d_inf, so the least discarded
    // degree past a bound D is d_inf (floor(D/d_inf) + 1) and the tail
    // has valuation at least V(D) = k (floor(D/d_inf) + 1): digits at
    // exponents below V(D) are exact
    let tail_val = |d: i64| k * (d.div_euclid(d_inf) + 1);
    // least D certifying at least p digits
    let bound_for = |p: i64| d_inf * ((p + k - 1) / k - 1).max(0);
    let (precision, dbound) = match (precision, degree_bound) {
        (Some(p), Some(d)) => {
            if tail_val(d) < p {
                return Err(Error::Precision(format!(
                    "degree bound {d} certifies only {} < {p} digits",
                    tail_val(d)
                )));
            }
            (p, d)
        }
        (p, None) => {
            // defining sums enumerate ~ q^(deg+1) elements; adapt the
            // default precision downward until that fits a fixed budget
            let mut p = p.unwrap_or(8).max(2);
            loop {
                let d = bound_for(p);
                let cost = (q as f64).powi(d as i32 + 2);
                if cost <= 4096.0 || p == 2 {
                    break (p, d);
                }
                p -= 1;
            }
        }
        (None, Some(d)) => {
            let p = tail_val(d);
            if p < 1 {
                return Err(Error::Precision(format!(
                    "degree bound {d} certifies no digits at weight {k}"
                )));
            }
            (p, d)
        }
    };
    // relative digit precision survives inversion, and the elliptic
    // series only invert negative-valuation elements, so a constant
    // slack suffices
    let work_prec = precision + 6;
    let ctx = CompletionContext::new(ring, work_prec)?;
    let reps = choose_representatives(ring, pic, RepMode::MinimalDegree)?;
    let h = reps.len();
    let mut entries = Vec::with_capacity(h);
    for i in 0..h {
        let mut row = Vec::with_capacity(h);
        for j in 0..h {
            let c = reps[j].mul(&reps[i].inv());
            let elems = ideal_elements_up_to_degree(ring, &c, dbound)?;
            let orbit_reps = orbit_representatives(ring, &elems);
            let mut acc: Option<KInfElem> = None;
            for t in &orbit_reps {
                let term = ctx.embed(t)?.pow_signed(-k)?;
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term),
                });
            }
            // representative-choice irrelevance (k = 0 mod q-1): the sum
            // over all q-1 scalings of every orbit equals (q-1) times
            // the orbit-rep sum; trivial for q = 2 where F* = {1}
            if q > 2 {
                let mut acc_full: Option<KInfElem> = None;
                for t in elems.iter().filter(|t| !t.is_zero()) {
                    let term = ctx.embed(t)?.pow_signed(-k)?;
                    acc_full = Some(match acc_full {
                        None => term,
                        Some(a) => a.add(&term),
                    });
                }
                if let (Some(a), Some(full)) = (&acc, &acc_full) {
                    let scale =
                        FieldElement::from_constant(ring, ring.fq().from_int(q - 1));
                    let scaled = ctx.embed(&scale)?.mul(a);
                    if !agree_to(&scaled, full, precision) {
                        return Err(Error::Consistency(
                            "orbit-representative choice affected the sum".into(),
                        ));
                    }
                }
            }
            let entry = acc.unwrap_or_else(|| zero_elem(ring, &ctx, work_prec));
            if entry.precision() < precision {
                return Err(Error::Precision(format!(
                    "entry ({i},{j}) certified to only {} < {precision} digits",
                    entry.precision()
                )));
            }
            row.push(entry);
        }
        entries.push(row);
    }
    Ok(MMatrix {
        ring: ring.to_string(),
        weight: k,
        reps,
        entries,
        degree_bound: dbound,
        precision,
    })
}

fn zero_elem(ring: &RingSpec, _ctx: &CompletionContext, prec: i64) -> KInfElem {
    match ring.kind() {
        crate::rings::RingKind::Elliptic { .. } => KInfElem::Series(
            crate::arith::TruncatedSeries::zero(ring.fq(), "z", prec),
        ),
        crate::rings::RingKind::Poly => KInfElem::Digits {
            modulus: Poly::x(ring.fq()),
            val: 0,
            residue: Poly::zero(ring.fq()),
            digits: prec,
        },
        crate::rings::RingKind::Shifted { .. } => KInfElem::Digits {
            modulus: ring.shifted_g().unwrap().clone(),
            val: 0,
            residue: Poly::zero(ring.fq()),
            digits: prec,
        },
    }
}

fn agree_to(a: &KInfElem, b: &KInfElem, prec: i64) -> bool {
    let lo = match (a.valuation(), b.valuation()) {
        (None, None) => return true,
        (Some(x), Some(y)) => x.min(y),
        (Some(x), None) | (None, Some(x)) => x,
    };
    for e in lo..prec {
        if a.digit(e) != b.digit(e) {
            return false;
        }
    }
    true
}

/// Verify the valuation constraints and conclude invertibility over
/// O_infinity.
pub fn independence_certificate(ring: &RingSpec, m: &MMatrix) -> MMatrixCertificate {
    let h = m.entries.len();
    let mut valuations = vec![vec![None; h]; h];
    let mut violations = Vec::new();
    let mut all_integral = true;
    let mut strictly_upper = true;
    let mut diagonal_unit = true;
    for i in 0..h {
        for j in 0..h {
            let v = m.entries[i][j].valuation();
            valuations[i][j] = v;
            if let Some(v) = v {
                if v < 0 {
                    all_integral = false;
                    violations.push(format!("entry ({i},{j}) has valuation {v} < 0"));
                }
                if i < j && v <= 0 {
                    strictly_upper = false;
                    violations.push(format!(
                        "above-diagonal entry ({i},{j}) has valuation {v} <= 0"
                    ));
                }
            }
            if i == j && !m.entries[i][j].is_one_mod_pi() {
                diagonal_unit = false;
                violations.push(format!("diagonal entry ({i},{i}) is not 1 mod pi"));
            }
        }
    }
    // determinant of the residue matrix in the residue field; with the
    // structure above it must be 1
    let det_residue_is_one = residue_det_is_one(ring, m);
    if !det_residue_is_one {
        violations.push("residue determinant differs from 1".into());
    }
    MMatrixCertificate {
        valuations,
        all_integral,
        strictly_upper,
        diagonal_unit,
        det_residue_is_one,
        violations,
    }
}

/// Compute det of the digit-0 matrix in the residue field
/// F_q[X]/(m(X)) and compare with 1.
fn residue_det_is_one(ring: &RingSpec, m: &MMatrix) -> bool {
    let h = m.entries.len();
    let modulus: PolyFq = match ring.kind() {
        crate::rings::RingKind::Poly => Poly::x(ring.fq()),
        crate::rings::RingKind::Shifted { .. } => ring.shifted_g().unwrap().clone(),
        crate::rings::RingKind::Elliptic { .. } => Poly::x(ring.fq()),
    };
    let mut a: Vec<Vec<PolyFq>> = (0..h)
        .map(|i| {
            (0..h)
                .map(|j| {
                    if m.entries[i][j].valuation() == Some(0) || (i == j) {
                        m.entries[i][j].digit(0)
                    } else {
                        Poly::zero(ring.fq())
                    }
                })
                .collect()
        })
        .collect();
    // Gaussian elimination over the field F_q[X]/(modulus)
    let inv_mod = |p: &PolyFq| -> Option<PolyFq> {
        super::completion::poly_inverse_mod(p, &modulus).ok()
    };
    let mut det = Poly::one(ring.fq());
    for k in 0..h {
        let Some(p) = (k..h).find(|&r| !a[r][k].is_zero()) else {
            return false;
        };
        if p != k {
            a.swap(k, p);
            det = det.neg();
        }
        det = det.mul(&a[k][k]).rem(&modulus).unwrap();
        let pivot_inv = inv_mod(&a[k][k]).expect("pivot is a unit");
        for j in k..h {
            a[k][j] = a[k][j].mul(&pivot_inv).rem(&modulus).unwrap();
        }
        for i in k + 1..h {
            if !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in k..h {
                    let sub = f.mul(&a[k][j]).rem(&modulus).unwrap();
                    a[i][j] = a[i][j].sub(&sub).rem(&modulus).unwrap();
                }
            }
        }
    }
    det.degree() == Some(0) && det.coeff(0).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Fq;

    fn shifted2() -> RingSpec {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(1)]);
        RingSpec::shifted(2, g).unwrap()
    }

    fn shifted3() -> RingSpec {
        let fq = Fq::new(2).unwrap();
        let g = Poly::from_coeffs(&fq, vec![fq.elem(1), fq.elem(1), fq.elem(0), fq.elem(1)]);
        RingSpec::shifted(2, g).unwrap()
    }

    #[test]
    fn poly_ring_one_by_one() {
        let ring = RingSpec::poly(2).unwrap();
        let pic = PicGroup::new(&ring).unwrap();
        let m = m_matrix(&ring, &pic, 1, Some(8), None).unwrap();
        assert_eq!(m.entries.len(), 1);
        assert!(m.entries[0][0].is_one_mod_pi());
        let cert = independence_certificate(&ring, &m);
        assert!(cert.passed(), "{:?}", cert.violations);
    }

    #[test]
    fn shifted_two_by_two_structure() {
        let ring = shifted2();
        let pic = PicGroup::new(&ring).unwrap();
        for k in [1i64, 2] {
            let m = m_matrix(&ring, &pic, k, None, None).unwrap();
            assert!(m.precision >= 2);
            let cert = independence_certificate(&ring, &m);
            assert!(cert.passed(), "k = {k}: {:?}", cert.violations);
            // above-diagonal entry has strictly positive valuation
            match cert.valuations[0][1] {
                None => {}
                Some(v) => assert!(v > 0),
            }
        }
    }

    #[test]
    fn shifted_degree_three_three_by_three() {
        let ring = shifted3();
        let pic = PicGroup::new(&ring).unwrap();
        let m = m_matrix(&ring, &pic, 1, Some(3), None).unwrap();
        assert_eq!(m.entries.len(), 3);
        let cert = independence_certificate(&ring, &m);
        assert!(cert.passed(), "{:?}", cert.violations);
    }

    #[test]
    fn elliptic_three_by_three_structure() {
        let ring = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let pic = PicGroup::new(&ring).unwrap();
        for k in [1i64, 2] {
            let m = m_matrix(&ring, &pic, k, None, None).unwrap();
            let cert = independence_certificate(&ring, &m);
            assert!(cert.passed(), "k = {k}: {:?}", cert.violations);
        }
    }

    #[test]
    fn diagonal_leading_term_accounting() {
        // the diagonal sum starts with the single degree-0 orbit (the
        // q-1 units collapse to one representative contributing exactly
        // 1), everything else has positive valuation
        let ring = shifted2();
        let pic = PicGroup::new(&ring).unwrap();
        let reps = choose_representatives(&ring, &pic, RepMode::MinimalDegree).unwrap();
        let unit_orbit = orbit_representatives(
            &ring,
            &ideal_elements_up_to_degree(&ring, &reps[0].mul(&reps[0].inv()), 0).unwrap(),
        );
        assert_eq!(unit_orbit.len(), 1);
        assert!(unit_orbit[0] == FieldElement::one(&ring));
    }

    #[test]
    fn doubling_precision_is_stable() {
        let ring = shifted2();
        let pic = PicGroup::new(&ring).unwrap();
        let m1 = m_matrix(&ring, &pic, 1, Some(2), None).unwrap();
        let m2 = m_matrix(&ring, &pic, 1, Some(4), None).unwrap();
        let c1 = independence_certificate(&ring, &m1);
        let c2 = independence_certificate(&ring, &m2);
        assert!(c1.passed() && c2.passed());
        for i in 0..2 {
            for j in 0..2 {
                // valuations agree wherever both are determined
                if let (Some(a), Some(b)) = (c1.valuations[i][j], c2.valuations[i][j]) {
                    assert_eq!(a, b);
                }
                // mod-pi residues agree
                assert_eq!(m1.entries[i][j].digit(0), m2.entries[i][j].digit(0));
            }
        }
    }
}
