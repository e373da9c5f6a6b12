//! The aggregated property suites: every module's invariant checks
//! packaged as named pass/fail results, runnable from tests and from
//! the command line. Sampling is deterministic under a fixed seed.

use num_bigint::BigInt;

use crate::arith::{Field, Fq, Poly, Rat, RatFunc};
use crate::boundary::{
    cuspidal_matrix, divisor_of_discriminant, frobenius_det_crosscheck, ord_discriminant,
    ord_discriminant_twisted, ord_division_form, ramification_index,
};
use crate::error::Result;
use crate::expansions::{compare_routes, gamma, goss_polys, RouteVerdict};
use crate::independence::{independence_certificate, m_matrix};
use crate::rings::spec::PolyFq;
use crate::rings::{
    choose_representatives, ideal_elements_up_to_degree, integral_ideals_of_degree,
    FieldElement, IdealRep, PicGroup, RepMode, RingSpec,
};
use crate::zeta::partial::{
    class_zeta, coset_zeta, coset_zeta_bruteforce, ring_zeta, zero_coset_zeta,
};
use crate::zeta::ZetaFunction;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// Small deterministic generator for property sampling.
pub struct Sampler(u64);

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        // xorshift64
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn standard_rings() -> Vec<RingSpec> {
    let fq2 = Fq::new(2).unwrap();
    let g2 = Poly::from_coeffs(&fq2, vec![fq2.elem(1), fq2.elem(1), fq2.elem(1)]);
    vec![
        RingSpec::poly(2).unwrap(),
        RingSpec::shifted(2, g2).unwrap(),
        RingSpec::elliptic(2, [0, 0, 1, 0, 0]).unwrap(),
    ]
}

/// Nonzero elements of bounded degree, for sampling.
fn element_pool(ring: &RingSpec, bound: i64) -> Vec<FieldElement> {
    ideal_elements_up_to_degree(ring, &IdealRep::unit(ring), bound)
        .unwrap()
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect()
}

/// Representatives of the quotient a / na shifted by y: elements x with
/// x = y mod a, exactly one per class mod na.
fn coset_refinement_reps(
    ring: &RingSpec,
    y: &FieldElement,
    a: &IdealRep,
    na: &IdealRep,
) -> Result<Vec<FieldElement>> {
    let count = (ring.q() as u64).pow((na.degree() - a.degree()) as u32);
    let mut bound = a.degree().max(0) + ring.d_inf() as i64;
    loop {
        let mut reps: Vec<FieldElement> = Vec::new();
        for z in ideal_elements_up_to_degree(ring, a, bound)? {
            let cand = y.add(&z);
            let mut fresh = true;
            for r in &reps {
                let diff = cand.sub(r);
                if diff.is_zero() || diff.in_ideal(na)? {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(cand);
            }
            if reps.len() as u64 == count {
                return Ok(reps);
            }
        }
        bound += ring.d_inf() as i64;
        if bound > 20 {
            return Err(crate::Error::Consistency(
                "failed to exhaust the refinement classes".into(),
            ));
        }
    }
}

/// Scale a zeta function by S^e.
fn shift_zeta(z: &ZetaFunction, e: i64) -> ZetaFunction {
    let s = Poly::monomial(Rat::from_int(1), e.unsigned_abs() as usize);
    let factor = if e >= 0 {
        RatFunc::from_poly(s)
    } else {
        RatFunc::new(Poly::one(&()), s).unwrap()
    };
    let extra = z
        .polar_part()
        .iter()
        .map(|(k, c)| (k + e, c.clone()))
        .collect();
    ZetaFunction::new(z.q(), z.rational_part().mul(&factor), extra)
}

/// Zeta rules (i)-(vi) and the strict coset inequality, on sampled
/// data.
pub fn zeta_rule_checks(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = Sampler::new(seed);
    for ring in standard_rings() {
        let pic = PicGroup::new(&ring).unwrap();
        let pool = element_pool(&ring, 2 + ring.d_inf() as i64);
        let ideal_pool: Vec<IdealRep> = (1..=2)
            .flat_map(|n| integral_ideals_of_degree(&ring, n).unwrap())
            .collect();
        // rule (i): Z_{x,a} = Z_{y,a} for x = y mod a
        {
            let mut ok = true;
            for _ in 0..4 {
                let a = &ideal_pool[rng.below(ideal_pool.len())];
                let x = &pool[rng.below(pool.len())];
                if x.in_ideal(a).unwrap() {
                    continue;
                }
                let shift_pool = ideal_elements_up_to_degree(&ring, a, a.degree() + 2).unwrap();
                let y = x.add(&shift_pool[rng.below(shift_pool.len())]);
                let zx = coset_zeta(&ring, &pic, x, a).unwrap();
                let zy = coset_zeta(&ring, &pic, &y, a).unwrap();
                ok &= zx.equal_as_function(&zy);
            }
            out.push(check(&format!("zeta rule (i) [{ring}]"), ok, "coset invariance"));
        }
        // rule (ii): sum over the refinement of a by na
        {
            let mut ok = true;
            for _ in 0..2 {
                let a = IdealRep::unit(&ring);
                let n = &ideal_pool[rng.below(ideal_pool.len())];
                let na = a.mul(n);
                let y = &pool[rng.below(pool.len())];
                if y.in_ideal(&a).unwrap() {
                    continue;
                }
                let reps = coset_refinement_reps(&ring, y, &a, &na).unwrap();
                let mut sum: Option<ZetaFunction> = None;
                for x in &reps {
                    let z = coset_zeta(&ring, &pic, x, &na).unwrap();
                    sum = Some(match sum {
                        None => z,
                        Some(s) => s.add(&z),
                    });
                }
                let lhs = sum.unwrap();
                let rhs = coset_zeta(&ring, &pic, y, &a).unwrap();
                ok &= lhs.equal_as_function(&rhs);
            }
            out.push(check(
                &format!("zeta rule (ii) [{ring}]"),
                ok,
                "refinement sum",
            ));
        }
        // rules (iii) and (iv)
        {
            let mut ok3 = true;
            let mut ok4 = true;
            for _ in 0..4 {
                let a = &ideal_pool[rng.below(ideal_pool.len())];
                let x = &pool[rng.below(pool.len())];
                if x.in_ideal(a).unwrap() {
                    continue;
                }
                let f = &pool[rng.below(pool.len())];
                let fa = a.mul(&f.principal_ideal().unwrap());
                let fx = f.mul(x);
                let lhs = coset_zeta(&ring, &pic, &fx, &fa).unwrap();
                let rhs = shift_zeta(
                    &coset_zeta(&ring, &pic, x, a).unwrap(),
                    f.degree().unwrap(),
                );
                ok3 &= lhs.equal_as_function(&rhs);
                for c in ring.fq().units() {
                    let cx = x.mul(&FieldElement::from_constant(&ring, c));
                    let zc = coset_zeta(&ring, &pic, &cx, a).unwrap();
                    ok4 &= zc.equal_as_function(&coset_zeta(&ring, &pic, x, a).unwrap());
                }
            }
            out.push(check(
                &format!("zeta rule (iii) [{ring}]"),
                ok3,
                "principal rescale shifts by S^deg f",
            ));
            out.push(check(
                &format!("zeta rule (iv) [{ring}]"),
                ok4,
                "unit rescale invariance",
            ));
        }
        // rule (v): (q-1) Z_((a^-1)) = S^(-deg a) Z_{0,a}
        {
            let mut ok = true;
            for a in ideal_pool.iter().take(4) {
                let z0 = zero_coset_zeta(&ring, &pic, a).unwrap();
                let lhs = shift_zeta(&z0, -a.degree());
                let rhs = class_zeta(&ring, &pic, &pic.class_of(a).inverse())
                    .unwrap()
                    .scale(&Rat::from_int(ring.q() as i64 - 1));
                ok &= lhs.equal_as_function(&rhs);
            }
            out.push(check(&format!("zeta rule (v) [{ring}]"), ok, "zero coset"));
        }
        // rule (vi): sum of class zetas = Z_A
        {
            let mut sum: Option<ZetaFunction> = None;
            for c in pic.classes() {
                let z = class_zeta(&ring, &pic, &c).unwrap();
                sum = Some(match sum {
                    None => z,
                    Some(s) => s.add(&z),
                });
            }
            let ok = sum.unwrap().equal_as_function(&ring_zeta(&ring).unwrap());
            out.push(check(&format!("zeta rule (vi) [{ring}]"), ok, "class sum"));
        }
        // strict inequality Z_{x,a}(q^(r-1)) > Z_{0,a}(q^(r-1)) for x
        // outside a, r = 2..4
        {
            let mut ok = true;
            for _ in 0..4 {
                let a = &ideal_pool[rng.below(ideal_pool.len())];
                let x = &pool[rng.below(pool.len())];
                if x.in_ideal(a).unwrap() {
                    continue;
                }
                let zx = coset_zeta(&ring, &pic, x, a).unwrap();
                let z0 = zero_coset_zeta(&ring, &pic, a).unwrap();
                for r in 2..=4 {
                    let diff = zx
                        .special_value(r)
                        .unwrap()
                        .sub(&z0.special_value(r).unwrap());
                    ok &= diff.is_positive();
                }
            }
            out.push(check(
                &format!("coset strict inequality [{ring}]"),
                ok,
                "at S = q^(r-1), r = 2..4",
            ));
        }
    }
    out
}

/// Boundary-order invariants: integrality, positivity, aggregation,
/// twist invariance, determinant certificates.
pub fn boundary_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for ring in standard_rings() {
        let pic = PicGroup::new(&ring).unwrap();
        let reps = choose_representatives(&ring, &pic, RepMode::NontrivialMinimal).unwrap();
        // integrality and positivity across degree <= 3, r in {2, 3}
        {
            let mut ok = true;
            'outer: for deg in 1..=3i64 {
                for n in integral_ideals_of_degree(&ring, deg).unwrap() {
                    for class in pic.classes() {
                        for r in 2..=3 {
                            match ord_discriminant(&ring, &pic, &n, &class, r) {
                                Ok(rep) => ok &= rep.order > BigInt::from(0),
                                Err(_) => {
                                    ok = false;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
            out.push(check(
                &format!("discriminant order integrality [{ring}]"),
                ok,
                "every class, deg n <= 3, r in 2..3",
            ));
        }
        // principal twist invariance
        {
            let mut ok = true;
            let f = element_pool(&ring, 2 + ring.d_inf() as i64)
                .into_iter()
                .find(|x| x.degree().unwrap_or(0) > 0)
                .unwrap();
            let b = f.principal_ideal().unwrap();
            for class in pic.classes() {
                let plain = ord_discriminant(&ring, &pic, &reps[0], &class, 2).unwrap();
                let tw =
                    ord_discriminant_twisted(&ring, &pic, &reps[0], &b, &class, 2).unwrap();
                ok &= plain.order == tw.order;
            }
            out.push(check(
                &format!("principal twist invariance [{ring}]"),
                ok,
                "b = (f) leaves orders unchanged",
            ));
        }
        // determinant certificate and Frobenius cross-check
        {
            let m = cuspidal_matrix(&ring, &pic, 2, &reps, &IdealRep::unit(&ring));
            let fr = frobenius_det_crosscheck(&ring, &pic, 2, &reps, &IdealRep::unit(&ring));
            out.push(check(
                &format!("cuspidal matrix nonsingular [{ring}]"),
                m.is_ok(),
                m.map(|m| format!("det = {}", m.det)).unwrap_or_else(|e| e.to_string()),
            ));
            out.push(check(
                &format!("Frobenius determinant match [{ring}]"),
                fr.as_ref().map(|f| f.matched).unwrap_or(false),
                fr.map(|f| format!("det N = {}", f.det_n))
                    .unwrap_or_else(|e| e.to_string()),
            ));
        }
        // divisor aggregation against the ring zeta
        {
            let za = ring_zeta(&ring).unwrap();
            let mut ok = true;
            for n in reps.iter().take(2) {
                let div =
                    divisor_of_discriminant(&ring, &pic, n, &IdealRep::unit(&ring), 2)
                        .unwrap();
                let lhs = Rat::from_big(div.total());
                let rhs = Rat::from_int(1)
                    .sub(&Rat::pow_of(ring.q(), 2 * n.degree()))
                    .mul(&za.special_value(2).unwrap());
                ok &= lhs == rhs;
            }
            out.push(check(
                &format!("divisor aggregation [{ring}]"),
                ok,
                "sum of orders matches (1 - q^(r deg n)) zeta_A(1-r)",
            ));
        }
    }
    // division-form aggregation over nonzero u for the polynomial ring
    for q in [2u32, 3] {
        let ring = RingSpec::poly(q).unwrap();
        let pic = PicGroup::new(&ring).unwrap();
        let fq = ring.fq();
        let n = IdealRep::from_place(
            &ring,
            crate::rings::place::monic_place(&ring, Poly::x(fq)).unwrap(),
        );
        let a = IdealRep::unit(&ring);
        let r = 2i64;
        let mut total = BigInt::from(0);
        let u2_count = (q as u64).pow(((r - 1) * n.degree()) as u32);
        for c in 0..q {
            let k = if c == 0 {
                BigInt::from(0)
            } else {
                let u1 = FieldElement::from_ratfunc(
                    &ring,
                    RatFunc::new(Poly::constant(fq.elem(c)), Poly::x(fq)).unwrap(),
                )
                .unwrap();
                ord_division_form(&ring, &pic, &a, &n, &u1, r).unwrap().order
            };
            total += k * BigInt::from(u2_count);
        }
        let ram = ramification_index(&ring, &n, r).unwrap();
        let ord = ord_discriminant(&ring, &pic, &n, &pic.identity(), r)
            .unwrap()
            .order;
        out.push(check(
            &format!("division-form aggregation [poly q={q}]"),
            total == ram * ord,
            format!("sum over u of ord E_1u = {total}"),
        ));
    }
    out
}

/// Independence-matrix certificates on all families at weights q-1 and
/// 2(q-1).
pub fn independence_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for ring in standard_rings() {
        let pic = PicGroup::new(&ring).unwrap();
        let q = ring.q() as i64;
        for k in [q - 1, 2 * (q - 1)] {
            let m = m_matrix(&ring, &pic, k, None, None);
            match m {
                Ok(m) => {
                    let cert = independence_certificate(&ring, &m);
                    out.push(check(
                        &format!("independence matrix [{ring}] k={k}"),
                        cert.passed(),
                        format!(
                            "P={} D={} violations={:?}",
                            m.precision, m.degree_bound, cert.violations
                        ),
                    ));
                }
                Err(e) => out.push(check(
                    &format!("independence matrix [{ring}] k={k}"),
                    false,
                    e.to_string(),
                )),
            }
        }
    }
    out
}

/// Expansion-route invariants: the two-route equality, valuation
/// cross-law, gamma stability, round trips.
pub fn expansion_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for q in [2u32, 3] {
        let prec = (q * q * q) as i64 + 1;
        match compare_routes(q, prec) {
            Ok((prod, _eis, verdict)) => {
                let equal = matches!(verdict, RouteVerdict::Equal { .. });
                out.push(check(
                    &format!("two-route discriminant equality q={q}"),
                    equal,
                    format!("{verdict:?}"),
                ));
                out.push(check(
                    &format!("discriminant valuation q={q}"),
                    prod.series.valuation() == Some(q as i64 - 1),
                    "valuation q-1 = (q-1) x boundary order 1",
                ));
            }
            Err(e) => out.push(check(
                &format!("two-route discriminant equality q={q}"),
                false,
                e.to_string(),
            )),
        }
        // gamma stability across specializations is built into gamma()
        let mut ok = true;
        for k in 1..=(q * q) as usize {
            ok &= gamma(q, k).is_ok();
        }
        out.push(check(
            &format!("Goss gamma stability q={q}"),
            ok,
            "two specializations agree",
        ));
        // Goss low-index values against the closed forms
        let fq = Fq::new(q).unwrap();
        let alphas = crate::expansions::carlitz_exp_coeffs(&fq, 3);
        let table = goss_polys(q, &fq, &alphas, (q + 1) as usize).unwrap();
        let mut ok = true;
        for k in 1..=q as usize {
            ok &= table.gamma(k) == k as i64;
        }
        ok &= table.gamma(q as usize + 1) == 2;
        out.push(check(
            &format!("Goss vanishing orders q={q}"),
            ok,
            "gamma(k) = k for k <= q; gamma(q+1) = 2",
        ));
    }
    out
}

/// Counting identity for primitive vectors:
/// c_{r,1}(n) = (q-1)^-1 prod (q_i^r - 1) q_i^((s_i - 1) r), checked
/// against brute-force enumeration of (A/n)^r for the polynomial ring.
pub fn counting_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for q in [2u32, 3] {
        let fq = Fq::new(q).unwrap();
        let t = Poly::x(&fq);
        let cases: Vec<(PolyFq, &str)> = vec![
            (t.clone(), "(T)"),
            (t.mul(&t), "(T^2)"),
            (t.mul(&t.add(&Poly::one(&fq))), "(T(T+1))"),
        ];
        for r in 2..=2usize {
            for (n, label) in &cases {
                let formula = c_r1_formula(q, n, r as u32);
                let brute = primitive_count_bruteforce(&fq, n, r);
                out.push(check(
                    &format!("primitive count c_{{{r},1}}{label} q={q}"),
                    formula == brute,
                    format!("formula {formula}, enumeration {brute}"),
                ));
            }
        }
        // Moebius inversion sanity for n = T^2: the primitive count
        // equals sum over c | n of mu(c) q^(r (deg n - deg c))
        let n = t.mul(&t);
        let r = 2u32;
        let direct = primitive_count_bruteforce(&fq, &n, r as usize) * (q as u64 - 1);
        let via_mobius = (q as u64).pow(2 * r) - (q as u64).pow(r);
        out.push(check(
            &format!("Moebius inversion sanity q={q}"),
            direct == via_mobius,
            format!("{direct} = {via_mobius}"),
        ));
    }
    out
}

/// (q-1)^-1 prod over prime factors of (q_i^r - 1) q_i^((s_i-1) r).
fn c_r1_formula(q: u32, n: &PolyFq, r: u32) -> u64 {
    let factors = crate::rings::elements::factor_poly(n).unwrap();
    let mut prod = 1u64;
    for (p, e) in factors {
        let qi = (q as u64).pow(p.degree().unwrap() as u32);
        prod *= (qi.pow(r) - 1) * qi.pow((e as u32 - 1) * r);
    }
    prod / (q as u64 - 1)
}

/// Count primitive vectors of (A/n)^r modulo F*: u is primitive iff its
/// image in (A/p)^r is nonzero for every prime p | n.
fn primitive_count_bruteforce(fq: &Fq, n: &PolyFq, r: usize) -> u64 {
    let q = fq.q() as u64;
    let d = n.degree().unwrap();
    let factors = crate::rings::elements::factor_poly(n).unwrap();
    let residues: Vec<PolyFq> = (0..q.pow(d as u32))
        .map(|enc| {
            let mut coeffs = Vec::with_capacity(d);
            let mut v = enc;
            for _ in 0..d {
                coeffs.push(fq.elem((v % q) as u32));
                v /= q;
            }
            Poly::from_coeffs(fq, coeffs)
        })
        .collect();
    let total = residues.len().pow(r as u32);
    let mut count = 0u64;
    for idx in 0..total {
        let mut rem = idx;
        let mut coords = Vec::with_capacity(r);
        for _ in 0..r {
            coords.push(&residues[rem % residues.len()]);
            rem /= residues.len();
        }
        let primitive = factors.iter().all(|(p, _)| {
            coords
                .iter()
                .any(|c| !c.rem(p).unwrap().is_zero())
        });
        if primitive {
            count += 1;
        }
    }
    count / (q - 1)
}

/// Coset-zeta oracle sweep: closed forms against brute-force coset
/// enumeration on sampled (x, a) pairs per ring family.
pub fn coset_oracle_checks(seed: u64, samples_per_ring: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut rng = Sampler::new(seed);
    for ring in standard_rings() {
        let pic = PicGroup::new(&ring).unwrap();
        let pool = element_pool(&ring, 2 + ring.d_inf() as i64);
        let mut ideal_pool: Vec<IdealRep> = (1..=2)
            .flat_map(|n| integral_ideals_of_degree(&ring, n).unwrap())
            .collect();
        // include some fractional ideals
        let fractions: Vec<IdealRep> = ideal_pool.iter().take(3).map(|i| i.inv()).collect();
        ideal_pool.extend(fractions);
        let mut tested = 0usize;
        let mut ok = true;
        let mut tries = 0usize;
        while tested < samples_per_ring && tries < samples_per_ring * 10 {
            tries += 1;
            let a = &ideal_pool[rng.below(ideal_pool.len())];
            let x = match rng.below(8) {
                0 => FieldElement::zero(&ring),
                _ => pool[rng.below(pool.len())].clone(),
            };
            let z = coset_zeta(&ring, &pic, &x, a).unwrap();
            let oracle = coset_zeta_bruteforce(&ring, &x, a, 6).unwrap();
            let lo = z.lowest_exponent().min(0);
            let coeffs = z.expand(lo, (7 - lo) as usize);
            let mut expect: std::collections::BTreeMap<i64, u64> = Default::default();
            for (d, c) in oracle {
                expect.insert(d, c);
            }
            for (i, c) in coeffs.iter().enumerate() {
                let e = lo + i as i64;
                let want = Rat::from_int(expect.get(&e).copied().unwrap_or(0) as i64);
                if c != &want {
                    ok = false;
                }
            }
            tested += 1;
        }
        out.push(check(
            &format!("coset zeta oracle [{ring}]"),
            ok && tested >= samples_per_ring,
            format!("{tested} samples, coefficients through degree 6"),
        ));
    }
    out
}

/// Everything, in a deterministic order.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    out.extend(zeta_rule_checks(seed));
    out.extend(coset_oracle_checks(seed, 12));
    out.extend(boundary_checks());
    out.extend(independence_checks());
    out.extend(expansion_checks());
    out.extend(counting_checks());
    out
}
