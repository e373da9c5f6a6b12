//! Partial zeta functions: the ring zeta Z_A, the class zetas Z_(a),
//! and the coset zetas Z_{x,a}.
//!
//! Class zetas are assembled as a finite head (ideal counts from
//! Riemann-Roch dimensions) plus the geometric tail that sets in once
//! the relevant divisor degrees exceed 2g - 2 + d_inf. Coset zetas come
//! from the expansion formula
//!     Z_{x,a} = Q_{r(x,a)} Z_{0,a} + q^{w(x,a)} S^{r(x,a)}
//! with (r, w) the coset minimum data, and
//!     (q-1) Z_((a^-1))(S) = S^{-deg a} Z_{0,a}(S)
//! for the zero coset.

use super::curve::curve_zeta;
use super::ZetaFunction;
use crate::arith::ratfunc::RatFuncS;
use crate::arith::{Field, Poly, Rat, RatFunc};
use crate::error::Result;
use crate::rings::enumerate::{coset_min_degree, riemann_roch_count};
use crate::rings::{FieldElement, IdealRep, PicClass, PicGroup, RepMode, RingSpec};

/// S^e as a rational function.
fn s_power(e: i64) -> RatFuncS {
    let s = Poly::monomial(Rat::from_int(1), e.unsigned_abs() as usize);
    if e >= 0 {
        RatFunc::from_poly(s)
    } else {
        RatFunc::new(Poly::one(&()), s).unwrap()
    }
}

/// 1 - (qS)^d.
fn one_minus_qs_pow(q: u32, d: u32) -> Poly<Rat> {
    let mut coeffs = vec![Rat::from_int(0); d as usize + 1];
    coeffs[0] = Rat::from_int(1);
    coeffs[d as usize] = Rat::pow_of(q, d as i64).neg();
    Poly::from_coeffs(&(), coeffs)
}

/// Z_A = Z_K * (1 - S^{d_inf}): the curve zeta deprived of its Euler
/// factor at infinity.
pub fn ring_zeta(ring: &RingSpec) -> Result<ZetaFunction> {
    let zk = curve_zeta(ring)?.as_ratfunc();
    let d = ring.d_inf() as usize;
    let mut coeffs = vec![Rat::from_int(0); d + 1];
    coeffs[0] = Rat::from_int(1);
    coeffs[d] = Rat::from_int(-1);
    let factor = RatFunc::from_poly(Poly::from_coeffs(&(), coeffs));
    Ok(ZetaFunction::from_rational(ring.q(), zk.mul(&factor)))
}

/// Number of integral ideals of degree n in the given class, from
/// effective-divisor counts b(c_n) - b(c_n - infinity) where
/// b = (q^l - 1)/(q - 1) with l the Riemann-Roch dimension.
pub fn ideal_count_in_class(
    ring: &RingSpec,
    pic: &PicGroup,
    class: &PicClass,
    rep_of_class: &IdealRep,
    n: i64,
) -> Result<Rat> {
    debug_assert_eq!(&pic.class_of(rep_of_class), class);
    let q = Rat::from_int(ring.q() as i64);
    let d_inf = ring.d_inf() as i64;
    let rep_deg = rep_of_class.degree();
    if n < 0 || (n - rep_deg) % d_inf != 0 {
        return Ok(Rat::from_int(0));
    }
    let m = (n - rep_deg) / d_inf;
    let qm1_inv = q.sub(&Rat::from_int(1)).inv().unwrap();
    let b = |l: i64| -> Rat {
        if l <= 0 {
            Rat::from_int(0)
        } else {
            Rat::pow_of(ring.q(), l)
                .sub(&Rat::from_int(1))
                .mul(&qm1_inv)
        }
    };
    let l_full = riemann_roch_count(ring, rep_of_class, m)?;
    let l_minus = riemann_roch_count(ring, rep_of_class, m - 1)?;
    Ok(b(l_full).sub(&b(l_minus)))
}

/// The partial zeta function of an ideal class:
/// Z_(c)(S) = sum over integral ideals in c of S^deg.
pub fn class_zeta(ring: &RingSpec, pic: &PicGroup, class: &PicClass) -> Result<ZetaFunction> {
    let q = ring.q();
    let d_inf = ring.d_inf() as i64;
    let g = ring.genus() as i64;
    // canonical representative with minimal degree
    let reps = crate::rings::choose_representatives(ring, pic, RepMode::MinimalDegree)?;
    let rep = reps
        .iter()
        .find(|r| &pic.class_of(r) == class)
        .expect("every class has a representative")
        .clone();
    // tail is exact from degree 2g - 1 + d_inf on
    let stable = 2 * g - 1 + d_inf;
    let mut n0 = rep.degree();
    while n0 < stable {
        n0 += d_inf;
    }
    let mut head = Poly::zero(&());
    let mut n = rep.degree();
    while n < n0 {
        let c = ideal_count_in_class(ring, pic, class, &rep, n)?;
        head = head.add(&Poly::monomial(c, n as usize));
        n += d_inf;
    }
    let c0 = ideal_count_in_class(ring, pic, class, &rep, n0)?;
    // head + c0 * S^{n0} / (1 - (qS)^{d_inf})
    let tail = RatFunc::new(
        Poly::monomial(c0, n0 as usize),
        one_minus_qs_pow(q, d_inf as u32),
    )?;
    Ok(ZetaFunction::from_rational(
        q,
        RatFunc::from_poly(head).add(&tail),
    ))
}

/// Z_{0,a} = (q-1) S^{deg a} Z_((a^-1)).
pub fn zero_coset_zeta(ring: &RingSpec, pic: &PicGroup, a: &IdealRep) -> Result<ZetaFunction> {
    let inv_class = pic.class_of(a).inverse();
    let z = class_zeta(ring, pic, &inv_class)?;
    let factor = s_power(a.degree()).scale(&Rat::from_int(ring.q() as i64 - 1));
    Ok(ZetaFunction::from_rational(
        ring.q(),
        z.rational_part().mul(&factor),
    ))
}

/// The coset zeta Z_{x,a}. Handles x in a (the zero-coset form) and
/// x outside a (the cut-and-correct expansion formula).
pub fn coset_zeta(
    ring: &RingSpec,
    pic: &PicGroup,
    x: &FieldElement,
    a: &IdealRep,
) -> Result<ZetaFunction> {
    if x.in_ideal(a)? {
        return zero_coset_zeta(ring, pic, a);
    }
    let (r, w) = coset_min_degree(ring, x, a)?;
    let z0 = zero_coset_zeta(ring, pic, a)?;
    // head of Z_{0,a} through degree r (exponents <= r)
    let lo = z0.lowest_exponent().min(r);
    let len = (r - lo + 1) as usize;
    let head = z0.expand(lo, len);
    let mut extra: Vec<(i64, Rat)> = head
        .into_iter()
        .enumerate()
        .map(|(i, c)| (lo + i as i64, c.neg()))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    extra.push((r, Rat::pow_of(ring.q(), w)));
    Ok(z0.add(&ZetaFunction::new(ring.q(), RatFunc::zero(&()), extra)))
}

/// Brute-force oracle: coefficients of Z_{x,a} up to S^max_deg by
/// direct coset enumeration. Independent of the closed forms above.
pub fn coset_zeta_bruteforce(
    ring: &RingSpec,
    x: &FieldElement,
    a: &IdealRep,
    max_deg: i64,
) -> Result<Vec<(i64, u64)>> {
    let bound = max_deg.max(x.degree().unwrap_or(0));
    let mut counts: std::collections::BTreeMap<i64, u64> = Default::default();
    for z in crate::rings::ideal_elements_up_to_degree(ring, a, bound)? {
        let y = x.add(&z);
        if let Some(d) = y.degree() {
            if d <= max_deg {
                *counts.entry(d).or_insert(0) += 1;
            }
        }
    }
    Ok(counts.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Fq;
    use crate::rings::ideals_of_degree_in_class;
    use crate::rings::place::{monic_place, places_of_degree};

    fn shifted(q: u32, g_coeffs: &[u32]) -> RingSpec {
        let fq = Fq::new(q).unwrap();
        let g = Poly::from_coeffs(&fq, g_coeffs.iter().map(|&c| fq.elem(c)).collect());
        RingSpec::shifted(q, g).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFuncS {
        RatFunc::new(
            Poly::from_coeffs(&(), num.iter().map(|&c| Rat::from_int(c)).collect()),
            Poly::from_coeffs(&(), den.iter().map(|&c| Rat::from_int(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn ring_zeta_poly() {
        // Z_A = 1/(1 - qS)
        for q in [2u32, 3, 5] {
            let r = RingSpec::poly(q).unwrap();
            let z = ring_zeta(&r).unwrap();
            assert_eq!(z.rational_part(), &rf(&[1], &[1, -(q as i64)]));
        }
    }

    #[test]
    fn ring_zeta_shifted() {
        // Z_A = (1 - S^{d_inf})/((1-S)(1-qS)); for q=2, d_inf=2 this is
        // (1+S)/(1-2S)
        let r = shifted(2, &[1, 1, 1]);
        let z = ring_zeta(&r).unwrap();
        assert_eq!(z.rational_part(), &rf(&[1, 1], &[1, -2]));
    }

    #[test]
    fn ring_zeta_elliptic() {
        // (2S^2+1)/(1-2S) for y^2+y=x^3 over F_2
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let z = ring_zeta(&r).unwrap();
        assert_eq!(z.rational_part(), &rf(&[1, 0, 2], &[1, -2]));
    }

    #[test]
    fn ring_zeta_counts_ideals() {
        // S^n coefficient of Z_A = number of integral ideals of degree n
        let rings = [
            RingSpec::poly(2).unwrap(),
            shifted(2, &[1, 1, 1]),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
        ];
        for r in &rings {
            let z = ring_zeta(&r).unwrap();
            let coeffs = z.expand(0, 9);
            for n in 0..=8i64 {
                let count = crate::rings::integral_ideals_of_degree(r, n).unwrap().len();
                assert_eq!(
                    coeffs[n as usize],
                    Rat::from_int(count as i64),
                    "ring {r}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn class_zeta_elliptic_closed_forms() {
        // trivial class: 1 + qS^2/(1-qS); nontrivial: S + qS^2/(1-qS)
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let pic = PicGroup::new(&r).unwrap();
        let q = 2i64;
        let trivial = class_zeta(&r, &pic, &pic.identity()).unwrap();
        let expect_trivial = rf(&[1], &[1]).add(&rf(&[0, 0, q], &[1, -q]));
        assert_eq!(trivial.rational_part(), &expect_trivial);
        for c in pic.classes().iter().skip(1) {
            let z = class_zeta(&r, &pic, c).unwrap();
            let expect = rf(&[0, 1], &[1]).add(&rf(&[0, 0, q], &[1, -q]));
            assert_eq!(z.rational_part(), &expect, "class {c}");
        }
    }

    #[test]
    fn class_zeta_shifted_closed_form() {
        // Z_(p^i)(S) = S^i/(q-1) * ((q^{i+1}-1) + (q_inf - q^{i+1}) S^{d_inf})
        //              / (1 - (qS)^{d_inf})
        for (q, gc) in [(2u32, vec![1u32, 1, 1]), (3, vec![1, 0, 1]), (2, vec![1, 1, 0, 1])] {
            let r = shifted(q, &gc);
            let pic = PicGroup::new(&r).unwrap();
            let d_inf = r.d_inf() as i64;
            for i in 0..d_inf {
                let z = class_zeta(&r, &pic, &pic.class_by_index(i as usize)).unwrap();
                let qi = Rat::pow_of(q, i + 1);
                let qinf = Rat::pow_of(q, d_inf);
                let num = Poly::monomial(qi.sub(&Rat::from_int(1)), 0).add(
                    &Poly::monomial(qinf.sub(&qi), d_inf as usize),
                );
                let scaled = RatFunc::new(num, one_minus_qs_pow(q, d_inf as u32))
                    .unwrap()
                    .scale(&Rat::new(1, q as i64 - 1))
                    .mul(&s_power(i));
                assert_eq!(z.rational_part(), &scaled, "q={q} i={i}");
            }
        }
    }

    #[test]
    fn class_zetas_sum_to_ring_zeta() {
        let rings = [
            RingSpec::poly(3).unwrap(),
            shifted(2, &[1, 1, 1]),
            shifted(2, &[1, 1, 0, 1]),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
            RingSpec::elliptic(3, [0, 0, 0, 2, 1]).unwrap(),
        ];
        for r in &rings {
            let pic = PicGroup::new(r).unwrap();
            let mut sum = ZetaFunction::from_rational(r.q(), RatFunc::zero(&()));
            for c in pic.classes() {
                sum = sum.add(&class_zeta(r, &pic, &c).unwrap());
            }
            let za = ring_zeta(r).unwrap();
            assert!(sum.equal_as_function(&za), "ring {r}");
        }
    }

    #[test]
    fn class_zeta_heads_match_ideal_enumeration() {
        let rings = [
            shifted(2, &[1, 1, 1]),
            RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
        ];
        for r in &rings {
            let pic = PicGroup::new(r).unwrap();
            for c in pic.classes() {
                let z = class_zeta(r, &pic, &c).unwrap();
                let coeffs = z.expand(0, 8);
                for n in 0..8i64 {
                    let count =
                        ideals_of_degree_in_class(r, &pic, &c, n).unwrap().len();
                    assert_eq!(
                        coeffs[n as usize],
                        Rat::from_int(count as i64),
                        "ring {r} class {c} degree {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn class_zeta_coefficients_are_nonnegative_integers() {
        let r = RingSpec::elliptic(3, [0, 0, 0, 2, 1]).unwrap();
        let pic = PicGroup::new(&r).unwrap();
        for c in pic.classes() {
            let z = class_zeta(&r, &pic, &c).unwrap();
            assert!(!z.has_polar_part());
            for coeff in z.expand(0, 10) {
                let n = coeff.as_integer().expect("integral coefficient");
                assert!(n >= 0.into());
            }
        }
    }

    #[test]
    fn coset_zeta_poly_examples() {
        // Z_{0,(a)} = (q-1) S^{deg a}/(1-qS);
        // Z_{x,(a)} = S^{deg x} + Z_{0,(a)} for 0 <= deg x < deg a
        let r = RingSpec::poly(3).unwrap();
        let pic = PicGroup::new(&r).unwrap();
        let fq = r.fq();
        let t2 = Poly::from_coeffs(fq, vec![fq.elem(1), fq.elem(0), fq.elem(1)]); // T^2+1
        let a = IdealRep::from_place(&r, monic_place(&r, t2).unwrap());
        let z0 = zero_coset_zeta(&r, &pic, &a).unwrap();
        assert_eq!(z0.rational_part(), &rf(&[0, 0, 2], &[1, -3]));
        // x = T has degree 1 < 2
        let x = FieldElement::from_ratfunc(&r, RatFunc::from_poly(Poly::x(fq))).unwrap();
        let zx = coset_zeta(&r, &pic, &x, &a).unwrap();
        let diff = zx.sub(&z0);
        assert_eq!(diff.expand(0, 3), vec![
            Rat::from_int(0),
            Rat::from_int(1),
            Rat::from_int(0)
        ]);
    }

    #[test]
    fn coset_zeta_with_pole() {
        // x = 1/T, a = A over F_q[T]: Z = S^-1 + (q-1)/(1-qS)
        for q in [2u32, 3] {
            let r = RingSpec::poly(q).unwrap();
            let pic = PicGroup::new(&r).unwrap();
            let fq = r.fq();
            let x = FieldElement::from_ratfunc(
                &r,
                RatFunc::new(Poly::one(fq), Poly::x(fq)).unwrap(),
            )
            .unwrap();
            let a = IdealRep::unit(&r);
            let z = coset_zeta(&r, &pic, &x, &a).unwrap();
            assert!(z.has_polar_part());
            // expansion: S^-1, then (q-1) q^n at S^n
            let coeffs = z.expand(-1, 4);
            assert_eq!(coeffs[0], Rat::from_int(1));
            for n in 0..3 {
                assert_eq!(
                    coeffs[n + 1],
                    Rat::from_int((q as i64 - 1) * (q as i64).pow(n as u32))
                );
            }
        }
    }

    #[test]
    fn coset_zeta_matches_bruteforce_sample() {
        // a couple of deeper cases per family; the full 50-sample sweep
        // lives in the acceptance suite
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let pic = PicGroup::new(&r).unwrap();
        let p0 = IdealRep::from_place(&r, places_of_degree(&r, 1).unwrap()[0].clone());
        let one = FieldElement::one(&r);
        let z = coset_zeta(&r, &pic, &one, &p0).unwrap();
        let oracle = coset_zeta_bruteforce(&r, &one, &p0, 6).unwrap();
        let lo = z.lowest_exponent();
        let coeffs = z.expand(lo, (7 - lo) as usize);
        let mut expect: std::collections::BTreeMap<i64, u64> = Default::default();
        for (d, c) in oracle {
            expect.insert(d, c);
        }
        for (i, c) in coeffs.iter().enumerate() {
            let e = lo + i as i64;
            let want = expect.get(&e).copied().unwrap_or(0);
            assert_eq!(c, &Rat::from_int(want as i64), "exponent {e}");
        }
    }

    #[test]
    fn special_values_examples() {
        // (1 - q^r) zeta_A(1-r) = 1 for the polynomial ring
        for q in [2u32, 3, 4, 5] {
            let r = RingSpec::poly(q).unwrap();
            let z = ring_zeta(&r).unwrap();
            for rk in 2..=5i64 {
                let v = z.special_value(rk).unwrap();
                let lhs = Rat::from_int(1).sub(&Rat::pow_of(q, rk)).mul(&v);
                assert!(lhs.is_one(), "q={q} r={rk}");
            }
        }
        // elliptic examples: Z_A(2) = -3, Z_(A)(2) = -5/3
        let r = RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap();
        let pic = PicGroup::new(&r).unwrap();
        assert_eq!(
            ring_zeta(&r).unwrap().special_value(2).unwrap(),
            Rat::from_int(-3)
        );
        assert_eq!(
            class_zeta(&r, &pic, &pic.identity())
                .unwrap()
                .special_value(2)
                .unwrap(),
            Rat::new(-5, 3)
        );
        for c in pic.classes().iter().skip(1) {
            assert_eq!(
                class_zeta(&r, &pic, c).unwrap().special_value(2).unwrap(),
                Rat::new(-2, 3)
            );
        }
    }
}
