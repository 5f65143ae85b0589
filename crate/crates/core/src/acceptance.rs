//! The acceptance checks, runnable from tests and from the command line.
//!
//! Each check returns a one-line summary on success and a description of the
//! first failure otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::basis::{omega_coeff, omega_truncated, pairing, pprime_product, BasisCombo, BasisTag};
use crate::error::Error;
use crate::evalx::{eval_padic, eval_rational, modp_value};
use crate::habiro::HabiroElem;
use crate::invariants::{
    congruence_report, jm_borromean, jm_from_surgery, knot_borromean, ohtsuki, poincare_series,
    reduced_jones, tilde_tau8_check, wrt, SurgeryPresentation,
};
use crate::rep::{braiding, Sign};
use crate::ring::qcomb::{falling_bal, qbinom_bal, qbinom_q, qfact_bal, qint_bal, qnum};
use crate::ring::{Base, Laurent, LaurentFrac, ModPoly};
use crate::tangle::{builtin, colored_jones, framing_adjust, jones_multilinear, parse_diagram};

/// Outcome of one criterion.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail
        )
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|err| format!("error: {}", err))
}

pub const TITLES: [&str; 12] = [
    "Hopf link colored Jones",
    "Borromean closed forms",
    "twist element",
    "Poincare sphere triple agreement",
    "J_M specializes to WRT",
    "known WRT values and presentation independence",
    "cyclotomic divisibility",
    "Ohtsuki congruences",
    "1/m-surgery congruence",
    "two-variable and Kashaev coherence",
    "property suites",
    "negative controls",
];

/// Runs criterion `id` (1-based).
pub fn run(id: usize) -> Outcome {
    let res = match id {
        1 => hopf(),
        2 => borromean_forms(),
        3 => twist(),
        4 => poincare(),
        5 => specialization(),
        6 => known_values(),
        7 => divisibility(),
        8 => congruences(),
        9 => one_over_m(),
        10 => knots(),
        11 => properties(),
        12 => negatives(),
        _ => Err(format!("no criterion {}", id)),
    };
    let (passed, detail) = match res {
        Ok(s) => (true, s),
        Err(s) => (false, s),
    };
    Outcome {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
    }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=TITLES.len()).map(run).collect()
}

fn hopf() -> Check {
    let d = e(builtin("hopf"))?;
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let j = e(colored_jones(&d, &[m, n]))?;
            ensure(j == qnum(((m + 1) * (n + 1)) as i64), || {
                format!("colors ({}, {})", m, n)
            })?;
        }
    }
    Ok("49 color pairs match [(m+1)(n+1)]".into())
}

/// Closed form for the Borromean rings colored by `V_i, V_j, V_k`.
pub fn borromean_closed_form(i: i64, j: i64, k: i64) -> Laurent {
    let mut s = Laurent::zero();
    for p in 0..=i.min(j).min(k) {
        let f = qfact_bal(p);
        let t = &(&(&qbinom_bal(i + 1 + p, 2 * p + 1) * &qbinom_bal(j + 1 + p, 2 * p + 1))
            * &qbinom_bal(k + 1 + p, 2 * p + 1))
            * &(&(&f * &f) * &falling_bal(2 * p + 1, 2 * p));
        s = if p % 2 == 0 { &s + &t } else { &s - &t };
    }
    s
}

fn borromean_forms() -> Check {
    let d = e(builtin("borromean"))?;
    for i in 0..=3u32 {
        for j in 0..=3u32 {
            for k in 0..=3u32 {
                let got = e(colored_jones(&d, &[i, j, k]))?;
                let want = borromean_closed_form(i as i64, j as i64, k as i64);
                ensure(got == want, || format!("V colors ({}, {}, {})", i, j, k))?;
            }
        }
    }
    let pp = |n| BasisCombo::basis(BasisTag::PPrime, n);
    for i in 0..=3usize {
        for j in 0..=3usize {
            for k in 0..=3usize {
                let got = e(jones_multilinear(&d, &[pp(i), pp(j), pp(k)]))?;
                let want = if i == j && j == k {
                    let ii = i as i64;
                    let v = e(falling_bal(2 * ii + 1, ii + 1).exact_div(&qint_bal(1)))?;
                    LaurentFrac::from_laurent(if i % 2 == 1 { -v } else { v })
                } else {
                    LaurentFrac::zero()
                };
                ensure(got == want, || format!("P' colors ({}, {}, {})", i, j, k))?;
            }
        }
    }
    Ok("64 V-colorings and 64 P'-colorings match".into())
}

fn twist() -> Check {
    let prod = e(pprime_product(
        &omega_truncated(1, 10),
        &omega_truncated(-1, 10),
        10,
    ))?;
    ensure(prod == BasisCombo::basis(BasisTag::PPrime, 0), || {
        "ω ω^{-1} != 1".into()
    })?;
    for sign in [1i64, -1] {
        let base = omega_truncated(sign, 8);
        let mut acc = BasisCombo::basis(BasisTag::PPrime, 0);
        for k in 1..=3i64 {
            acc = e(pprime_product(&acc, &base, 8))?;
            ensure(acc == omega_truncated(sign * k, 8), || {
                format!("ω^{}", sign * k)
            })?;
        }
    }
    for p in -3i64..=3 {
        for k in 0..=5usize {
            let w = omega_truncated(p, k + 1);
            let vp = BasisCombo::from_terms(
                BasisTag::V,
                [(
                    2 * k,
                    e(LaurentFrac::new(Laurent::one(), qnum(2 * k as i64 + 1)))?,
                )],
            );
            let got = e(pairing(&w, &vp))?;
            let want = LaurentFrac::from_laurent(Laurent::q_pow(p * (k * (k + 1)) as i64));
            ensure(got == want, || format!("<ω^{}, V'_{}>", p, 2 * k))?;
        }
    }
    Ok("inverse, powers |p| <= 3 and 42 pairings hold".into())
}

fn poincare() -> Check {
    let d = e(builtin("borromean"))?;
    let a = e(jm_from_surgery(&d, &[-1, -1, -1], 8))?;
    let b = e(jm_borromean(1, 1, 1, 8))?;
    let c = e(poincare_series(8))?;
    ensure(e(a.equals_at_depth(&b, 8))?, || {
        "surgery sum differs from closed form".into()
    })?;
    ensure(e(b.equals_at_depth(&c, 8))?, || {
        "closed form differs from Poincare series".into()
    })?;
    Ok("surgery sum = closed form = Poincare series at depth 8".into())
}

fn borromean_signs() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in [1i64, -1] {
        for b in [1i64, -1] {
            for c in [1i64, -1] {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn test_presentations() -> crate::Result<Vec<(String, SurgeryPresentation)>> {
    let mut out = vec![
        (
            "unknot +1".to_string(),
            SurgeryPresentation::diagram(builtin("unknot")?, vec![1])?,
        ),
        (
            "unknot -1".to_string(),
            SurgeryPresentation::diagram(builtin("unknot")?, vec![-1])?,
        ),
    ];
    let d = builtin("borromean")?;
    for f in borromean_signs() {
        out.push((
            format!("borromean {:?}", f),
            SurgeryPresentation::diagram(d.clone(), f.to_vec())?,
        ));
    }
    Ok(out)
}

fn to_q(m: &ModPoly) -> crate::Result<ModPoly> {
    m.change_base(Base::Q)
}

fn specialization() -> Check {
    let mut count = 0;
    for (name, pres) in e(test_presentations())? {
        let j = e(pres.jm(8))?;
        for r in 1..=8 {
            let w = e(wrt(&pres, r))?;
            let v = e(to_q(&e(j.eval_root(r))?))?;
            ensure(w == v, || format!("{} at r = {}: {} vs {}", name, r, w, v))?;
            count += 1;
        }
    }
    Ok(format!("{} (presentation, r) pairs agree", count))
}

fn is_pm_one(m: &ModPoly) -> bool {
    m.is_one() || m.neg().is_one()
}

fn sphere_presentations() -> crate::Result<Vec<SurgeryPresentation>> {
    let unlink = parse_diagram("U(0)\n|0 |0 U(1)\nA(0) A(1)\n")?;
    Ok(vec![
        SurgeryPresentation::sphere(),
        SurgeryPresentation::diagram(builtin("unknot")?, vec![1])?,
        SurgeryPresentation::diagram(builtin("unknot")?, vec![-1])?,
        SurgeryPresentation::diagram(unlink, vec![1, -1])?,
    ])
}

fn known_values() -> Check {
    for (name, pres) in e(test_presentations())? {
        for r in [1, 3, 6] {
            ensure(e(wrt(&pres, r))?.is_one(), || {
                format!("{}: τ_{} != 1", name, r)
            })?;
        }
        for r in [2, 4] {
            ensure(is_pm_one(&e(wrt(&pres, r))?), || {
                format!("{}: τ_{} != ±1", name, r)
            })?;
        }
    }
    let m211 = e(jm_borromean(2, 1, 1, 8))?;
    for r in [1, 3, 6] {
        ensure(e(m211.eval_root(r))?.is_one(), || {
            format!("M_(2,1,1): τ_{} != 1", r)
        })?;
    }
    for r in [2, 4] {
        ensure(is_pm_one(&e(m211.eval_root(r))?), || {
            format!("M_(2,1,1): τ_{} != ±1", r)
        })?;
    }
    let one = HabiroElem::one(10);
    for (k, pres) in e(sphere_presentations())?.iter().enumerate() {
        let j = e(pres.jm(10))?;
        ensure(e(j.equals_at_depth(&one, 10))?, || {
            format!("S^3 presentation {}: J != 1", k)
        })?;
        for r in 1..=8 {
            ensure(e(wrt(pres, r))?.is_one(), || {
                format!("S^3 presentation {}: τ_{} != 1", k, r)
            })?;
        }
    }
    Ok("τ values at r in {1,2,3,4,6} and four S^3 presentations agree".into())
}

const DIVISIBILITY_SET: [[i64; 3]; 4] = [[1, 1, 1], [1, 1, -1], [1, -1, -1], [2, 1, 1]];

fn divisibility() -> Check {
    let mut notes = Vec::new();
    for p in DIVISIBILITY_SET {
        let j = e(jm_borromean(p[0], p[1], p[2], 10))?;
        let d = j.sub(&HabiroElem::one(10));
        for n in [1, 2, 3, 6] {
            ensure(e(d.phi_order(n, 1))? == 1, || {
                format!("{:?}: Φ_{} does not divide J - 1", p, n)
            })?;
        }
        let l = e(ohtsuki(&j, 2))?;
        let l1 = l[1].clone();
        let shift = l1
            .to_string()
            .parse::<i64>()
            .map_err(|_| "λ_1 too large".to_string())?;
        let xt = e(j.scale(&Laurent::q_pow(-shift)))?.sub(&HabiroElem::one(10));
        ensure(e(xt.phi_order(1, 2))? == 2, || {
            format!("{:?}: Φ_1^2 does not divide x̃ - 1", p)
        })?;
        ensure(e(xt.phi_order(4, 1))? == 1, || {
            format!("{:?}: Φ_4 does not divide x̃ - 1", p)
        })?;
        let t = e(tilde_tau8_check(&j, &l1))?;
        ensure(t.in_lattice, || {
            format!("{:?}: τ̃_8 - 1 = {:?} outside the lattice", p, t.difference)
        })?;
        notes.push(format!(
            "{:?} small-span {}",
            p,
            if t.in_small_lattice { "yes" } else { "no" }
        ));
    }
    Ok(format!("all four manifolds pass; {}", notes.join(", ")))
}

fn congruences() -> Check {
    let mut lines = Vec::new();
    for p in DIVISIBILITY_SET {
        let j = e(jm_borromean(p[0], p[1], p[2], 10))?;
        let l = e(ohtsuki(&j, 6))?;
        let rep = e(congruence_report(&l))?;
        for r in &rep.relations {
            ensure(r.holds, || {
                format!("{:?}: {} fails for λ = {:?}", p, r.name, l)
            })?;
        }
        lines.push(format!("{:?} λ_1 = {}", p, l[1]));
    }
    Ok(format!(
        "mod 6, mod 12, a- and b-relations hold; {}",
        lines.join(", ")
    ))
}

fn one_over_m() -> Check {
    let mut count = 0;
    for k in 1..=3i64 {
        for i in -1..=1 {
            for j in -1..=1 {
                let x = e(jm_borromean(i, j, k, 10))?;
                for r in (1..=2 * k as usize).filter(|r| (2 * k as usize).is_multiple_of(*r)) {
                    ensure(e(x.eval_root(r))?.is_one(), || {
                        format!("M_({},{},{}) at r = {}", i, j, k, r)
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{} evaluations equal 1", count))
}

fn knots() -> Check {
    let tr = e(builtin("trefoil"))?;
    let a = e(reduced_jones(&tr, 6))?;
    let b = e(knot_borromean(1, 1, 6))?;
    ensure(a == b, || {
        "reduced Jones of the trefoil differs from K_(1,1)".into()
    })?;
    for i in 1..=4i64 {
        let n = (i - 1) as u32;
        let raw = e(colored_jones(&tr, &[n]))?;
        let j0 = e(e(framing_adjust(&raw, &tr, &[n], &[0]))?.exact_div(&qnum(i)))?;
        ensure(e(a.theta(i))? == j0, || {
            format!("θ_{} differs from the engine", i)
        })?;
        ensure(e(a.theta(-i))? == j0, || format!("θ_{} != θ_{}", -i, i))?;
    }
    // colored Jones of K_(i,j) summed in closed form
    for (ki, kj) in [(1i64, 1i64), (1, -1), (2, 1)] {
        let x = e(knot_borromean(ki, kj, 6))?;
        for l in 0..=3i64 {
            let mut s = Laurent::zero();
            for t in 0..=l {
                let w = &omega_coeff(ki, t as usize) * &omega_coeff(kj, t as usize);
                let f = e(falling_bal(l + t + 1, 2 * t + 1).exact_div(&qint_bal(1)))?;
                let term = &w * &f;
                s = if t % 2 == 0 { &s + &term } else { &s - &term };
            }
            let want = e(s.exact_div(&qnum(l + 1)))?;
            ensure(e(x.theta(l + 1))? == want, || {
                format!("K_({},{}) colored by V_{}", ki, kj, l)
            })?;
        }
    }
    let k0 = b.theta0();
    for r in 1..=6usize {
        let lhs = e(k0.eval_root(r))?;
        let rhs = e(e(HabiroElem::from_polynomial(e(b.theta(r as i64))?, 6))?.eval_root(r))?;
        ensure(lhs == rhs, || {
            format!("θ_0 at ζ_{} differs from θ_{}", r, r)
        })?;
    }
    Ok("trefoil two paths agree; θ_1..θ_4 match the engine; θ_0 matches for r <= 6".into())
}

type Vec3 = BTreeMap<Vec<usize>, Laurent>;

fn apply_crossing(v: &Vec3, dims: &[u32], pos: usize, sign: Sign) -> Vec3 {
    let (m, n) = (dims[pos], dims[pos + 1]);
    let b = match sign {
        Sign::Plus => braiding(m, n, Sign::Plus),
        Sign::Minus => braiding(m, n, Sign::Minus),
    };
    let mut out: Vec3 = BTreeMap::new();
    for (idx, c) in v {
        for (a, bb, x) in b.image(idx[pos], idx[pos + 1]) {
            let mut k = idx.clone();
            k[pos] = *a as usize;
            k[pos + 1] = *bb as usize;
            let e = out.entry(k).or_default();
            *e = &*e + &(c * x);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn basis_vec(idx: Vec<usize>) -> Vec3 {
    let mut v = BTreeMap::new();
    v.insert(idx, Laurent::one());
    v
}

fn yang_baxter() -> std::result::Result<usize, String> {
    let mut count = 0;
    for a in 0..=2u32 {
        for b in 0..=2u32 {
            for c in 0..=2u32 {
                for sign in [Sign::Plus, Sign::Minus] {
                    for i in 0..=a as usize {
                        for j in 0..=b as usize {
                            for k in 0..=c as usize {
                                let v = basis_vec(vec![i, j, k]);
                                // (ψ⊗1)(1⊗ψ)(ψ⊗1) against (1⊗ψ)(ψ⊗1)(1⊗ψ)
                                let l1 = apply_crossing(&v, &[a, b, c], 0, sign);
                                let l2 = apply_crossing(&l1, &[b, a, c], 1, sign);
                                let l3 = apply_crossing(&l2, &[b, c, a], 0, sign);
                                let r1 = apply_crossing(&v, &[a, b, c], 1, sign);
                                let r2 = apply_crossing(&r1, &[a, c, b], 0, sign);
                                let r3 = apply_crossing(&r2, &[c, a, b], 1, sign);
                                ensure(l3 == r3, || {
                                    format!("Yang-Baxter fails for ({}, {}, {})", a, b, c)
                                })?;
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

fn braiding_inverse() -> std::result::Result<usize, String> {
    let mut count = 0;
    for m in 0..=4u32 {
        for n in 0..=4u32 {
            for i in 0..=m as usize {
                for j in 0..=n as usize {
                    let v = basis_vec(vec![i, j]);
                    let w = apply_crossing(&v, &[m, n], 0, Sign::Plus);
                    let back = apply_crossing(&w, &[n, m], 0, Sign::Minus);
                    ensure(back == v, || format!("ψ^-1 ψ != 1 on V_{} ⊗ V_{}", m, n))?;
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn random_laurent_q(rng: &mut StdRng) -> Laurent {
    let lo = rng.gen_range(-3..=1);
    let len = rng.gen_range(1..=5);
    Laurent::from_i64(lo, (0..len).map(|_| rng.gen_range(-4..=4)).collect()).expand_var(4)
}

fn random_elem(rng: &mut StdRng, depth: usize) -> HabiroElem {
    let terms = (0..depth).map(|_| random_laurent_q(rng)).collect();
    HabiroElem::from_terms(terms, depth).expect("q-polynomials")
}

fn series_mul(a: &[ModPoly], b: &[ModPoly]) -> Vec<ModPoly> {
    (0..a.len())
        .map(|k| (0..=k).fold(a[0].zero_like(), |acc, i| acc.add(&a[i].mul(&b[k - i]))))
        .collect()
}

fn ring_and_homomorphisms() -> std::result::Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let depth = 12;
    let mut count = 0;
    for _ in 0..6 {
        let x = random_elem(&mut rng, depth);
        let y = random_elem(&mut rng, depth);
        let z = random_elem(&mut rng, depth);
        let eq = |a: &HabiroElem, b: &HabiroElem| e(a.equals_at_depth(b, depth));
        ensure(eq(&x.add(&y), &y.add(&x))?, || {
            "addition not commutative".into()
        })?;
        ensure(eq(&x.mul(&y), &y.mul(&x))?, || {
            "multiplication not commutative".into()
        })?;
        ensure(eq(&x.mul(&y).mul(&z), &x.mul(&y.mul(&z)))?, || {
            "multiplication not associative".into()
        })?;
        ensure(eq(&x.mul(&y.add(&z)), &x.mul(&y).add(&x.mul(&z)))?, || {
            "not distributive".into()
        })?;
        ensure(eq(&x.mul(&HabiroElem::one(depth)), &x)?, || {
            "1 is not a unit".into()
        })?;
        ensure(eq(&x.sub(&x), &HabiroElem::zero(depth))?, || {
            "x - x != 0".into()
        })?;
        ensure(eq(&x.mirror().mirror(), &x)?, || {
            "mirror is not an involution".into()
        })?;
        let (s, p) = (x.add(&y), x.mul(&y));
        for r in 1..=depth {
            let (ex, ey) = (e(x.eval_root(r))?, e(y.eval_root(r))?);
            ensure(e(s.eval_root(r))? == ex.add(&ey), || {
                format!("eval_root({}) not additive", r)
            })?;
            ensure(e(p.eval_root(r))? == ex.mul(&ey), || {
                format!("eval_root({}) not multiplicative", r)
            })?;
        }
        for (r, d) in [(1usize, 4usize), (2, 3), (3, 4), (4, 3), (6, 2)] {
            let (tx, ty) = (e(x.taylor(r, d))?, e(y.taylor(r, d))?);
            ensure(e(p.taylor(r, d))? == series_mul(&tx, &ty), || {
                format!("taylor({}) not multiplicative", r)
            })?;
        }
        let m = BigInt::from(91);
        let er = |w: &HabiroElem| {
            e(eval_rational(w, &BigInt::from(3), &BigInt::from(2), &m))
                .map(|v| v.as_int().unwrap().clone())
        };
        ensure(er(&p)? == (er(&x)? * er(&y)?) % &m, || {
            "eval_rational not multiplicative".into()
        })?;
        ensure(er(&s)? == (er(&x)? + er(&y)?) % &m, || {
            "eval_rational not additive".into()
        })?;
        let pe = BigInt::from(27);
        let ep = |w: &HabiroElem| {
            e(eval_padic(w, &BigInt::from(2), &BigInt::from(3), 3))
                .map(|v| v.as_int().unwrap().clone())
        };
        ensure(ep(&p)? == (ep(&x)? * ep(&y)?) % &pe, || {
            "eval_padic not multiplicative".into()
        })?;
        ensure(ep(&s)? == (ep(&x)? + ep(&y)?) % &pe, || {
            "eval_padic not additive".into()
        })?;
        for r in [1usize, 5, 8, 12] {
            let em = |w: &HabiroElem| {
                e(modp_value(w, &BigInt::from(7), r)).map(|v| v.as_poly().unwrap().clone())
            };
            ensure(em(&p)? == em(&x)?.mul(&em(&y)?), || {
                format!("modp_value({}) not multiplicative", r)
            })?;
            ensure(em(&s)? == em(&x)?.add(&em(&y)?), || {
                format!("modp_value({}) not additive", r)
            })?;
        }
        count += 1;
    }
    Ok(count)
}

fn gaussian_binomials() -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 0..=12i64 {
        for k in 0..=n {
            let g = qbinom_q(n, k);
            let gq = e(crate::habiro::to_q_var(&g))?;
            ensure(gq.min_exp() >= 0, || {
                format!("[{} choose {}] has negative powers", n, k)
            })?;
            ensure(gq.terms().iter().all(|(_, c)| c.is_positive()), || {
                format!("[{} choose {}] has a non-positive coefficient", n, k)
            })?;
            let binom = (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1));
            ensure(gq.eval_one() == binom, || {
                format!("[{} choose {}] at q = 1", n, k)
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn base_change() -> std::result::Result<usize, String> {
    let mut count = 0;
    for n in 0..=8 {
        let v = BasisCombo::basis(BasisTag::V, n);
        for tag in [
            BasisTag::P,
            BasisTag::PPrime,
            BasisTag::PDoublePrime,
            BasisTag::TildePPrime,
            BasisTag::S,
        ] {
            // the S_n only span the even V_n
            if tag != BasisTag::S || n % 2 == 0 {
                let there = e(v.convert(tag))?;
                ensure(e(there.to_v())? == v, || {
                    format!("V_{} via {}", n, tag.name())
                })?;
                count += 1;
            }
            let b = BasisCombo::basis(tag, n);
            ensure(e(e(b.to_v())?.convert(tag))? == b, || {
                format!("{}_{} via V", tag.name(), n)
            })?;
            count += 1;
        }
    }
    Ok(count)
}

fn pi_compat_and_depth() -> std::result::Result<usize, String> {
    let mut count = 0;
    let j12 = e(jm_borromean(1, 1, 1, 12))?;
    let j16 = e(jm_borromean(1, 1, 1, 16))?;
    for p in [2i64, 3, 5, 7, 11, 13] {
        for r in 1..=12usize {
            if r as i64 % p == 0 {
                continue;
            }
            let pb = BigInt::from(p);
            let a = e(modp_value(&j12, &pb, r))?;
            let b = e(e(j12.eval_root(r))?.change_base(Base::Fp(pb.clone())))?;
            ensure(a.as_poly() == Some(&b), || {
                format!("π-compatibility at p = {}, r = {}", p, r)
            })?;
            ensure(e(modp_value(&j16, &pb, r))? == a, || {
                format!("modp depth stability p = {} r = {}", p, r)
            })?;
            count += 1;
        }
    }
    for r in 1..=12 {
        ensure(e(j12.eval_root(r))? == e(j16.eval_root(r))?, || {
            format!("eval_root depth stability r = {}", r)
        })?;
    }
    ensure(e(j12.taylor(1, 6))? == e(j16.taylor(1, 6))?, || {
        "taylor depth stability".into()
    })?;
    for (a, b, m) in [(2i64, 1i64, 5i64), (3, 2, 7), (2, 5, 9), (5, 3, 11)] {
        let (a, b, m) = (BigInt::from(a), BigInt::from(b), BigInt::from(m));
        ensure(
            e(eval_rational(&j12, &a, &b, &m))? == e(eval_rational(&j16, &a, &b, &m))?,
            || format!("eval_rational depth stability at {}/{} mod {}", a, b, m),
        )?;
    }
    for (s, p, k) in [(2i64, 5i64, 1u32), (2, 3, 2), (3, 2, 3)] {
        let (s, p) = (BigInt::from(s), BigInt::from(p));
        ensure(
            e(eval_padic(&j12, &s, &p, k))? == e(eval_padic(&j16, &s, &p, k))?,
            || format!("eval_padic depth stability at s = {}, p = {}", s, p),
        )?;
    }
    Ok(count)
}

fn properties() -> Check {
    let yb = yang_baxter()?;
    let inv = braiding_inverse()?;
    let ring = ring_and_homomorphisms()?;
    let gb = gaussian_binomials()?;
    let bc = base_change()?;
    let pi = pi_compat_and_depth()?;
    Ok(format!(
        "{} Yang-Baxter, {} inverse, {} ring/homomorphism rounds, {} binomials, {} base changes, {} π-compatibility cases",
        yb, inv, ring, gb, bc, pi
    ))
}

fn negatives() -> Check {
    let a = &Laurent::one() + &Laurent::q_pow(1);
    let b = &Laurent::one() + &Laurent::q_pow(2);
    ensure(
        matches!(a.exact_div(&b), Err(Error::NonExactDivision(_))),
        || "exact_div accepted a non-divisible pair".into(),
    )?;
    ensure(
        matches!(
            parse_diagram("U(0)\nA(0) A(1)\n"),
            Err(Error::InterfaceMismatch { .. })
        ),
        || "parse_diagram accepted mismatched interfaces".into(),
    )?;
    let hopf = e(builtin("hopf"))?;
    let linked = SurgeryPresentation::Diagram {
        diagram: hopf,
        framings: vec![1, 1],
    };
    ensure(
        matches!(wrt(&linked, 3), Err(Error::NotAdmissible(_))),
        || "wrt accepted a linked presentation".into(),
    )?;
    ensure(
        matches!(
            wrt(&SurgeryPresentation::borromean(2, 1, 1), 3),
            Err(Error::NotAdmissible(_))
        ),
        || "wrt accepted a non-integral surgery".into(),
    )?;
    let unknot = e(builtin("unknot"))?;
    ensure(
        matches!(
            SurgeryPresentation::diagram(unknot, vec![2]),
            Err(Error::NotAdmissible(_))
        ),
        || "framing 2 accepted".into(),
    )?;
    Ok("all five rejections raised the expected errors".into())
}
