//! The nine acceptance criteria, one line of output each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use common::*;
use knotsig::matrix::{det_rows, e8_gram, signature_exact, IntMatrix};
use knotsig::milnor::{assignments_for, mil_enum, mil_nonempty};
use knotsig::modpoly::{symmetric_common_factor, PolyModP};
use knotsig::obstruction::{obstruction_group, pi_set};
use knotsig::pipeline::{analyze, AnalysisRequest, Verdict};
use knotsig::poly::{delta_to_p, resultant, sylvester_matrix};
use knotsig::realroots::{rho_delta, rho_p, sturm_count, Endpoint};
use knotsig::seifert::{
    alexander_of_form, base_change_form, charpoly_of_pair, e8_half, form_to_pair,
    milnor_signatures, pair_to_form, unimodular_t, SeifertPair,
};
use knotsig::zfactor::{factor_z, standing_assumptions};
use knotsig::IntPoly;
use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion_1_transforms() -> Outcome {
    ensure!(delta_to_p(&delta1()).unwrap() == f1(), "delta_to_p(Δ₁) ≠ f₁");
    ensure!(delta_to_p(&delta2()).unwrap() == f2(), "delta_to_p(Δ₂) ≠ f₂");
    Ok(())
}

fn criterion_2_factorization() -> Outcome {
    let fac = factor_z(&(&f1() * &f2()), 0).unwrap();
    ensure!(
        fac.factors == vec![(f1(), 1), (f2(), 1)],
        "factors of f₁f₂: {:?}",
        fac.factors
    );
    let set = standing_assumptions(&(&f1() * &f2()), 0).unwrap();
    ensure!(set.all_symmetric && set.satisfied(), "f₁, f₂ not flagged symmetric");
    for a in 0..=10 {
        let fac = factor_z(&delta_a(a), 0).unwrap();
        ensure!(fac.is_irreducible(), "Δ_{a} factors as {:?}", fac.factors);
    }
    Ok(())
}

fn group_of(delta: &IntPoly) -> (Vec<u64>, usize) {
    let set = standing_assumptions(&delta_to_p(delta).unwrap(), 0).unwrap();
    let (g, table) = obstruction_group(&set, 0).unwrap();
    let mut primes: Vec<u64> = table.iter().flat_map(|e| e.primes.clone()).collect();
    primes.sort();
    primes.dedup();
    (primes, g.rank)
}

fn criterion_3_obstruction() -> Outcome {
    let e = pi_set(&f1(), &f2(), 0).unwrap();
    ensure!(e.primes == vec![2], "Π(f₁, f₂) = {:?}", e.primes);
    ensure!(group_of(&(&delta1() * &delta2())) == (vec![2], 0), "group of Δ₁Δ₂");
    let (pi, rank) = group_of(&(&g1() * &g2()));
    ensure!(pi.is_empty() && rank == 1, "g₁g₂: Π = {pi:?}, rank {rank}");
    let (pi, rank) = group_of(&(&delta_a(0) * &delta_a(2)));
    ensure!(pi == vec![2] && rank == 0, "Δ₀Δ₂: Π = {pi:?}, rank {rank}");
    Ok(())
}

/// Roots of Δ with |z| = 1 from floating eigenvalues; None when some root is
/// too close to the circle to call.
fn float_rho(delta: &IntPoly) -> Option<usize> {
    let roots = float_roots(delta)?;
    let mut count = 0;
    for (re, im) in roots {
        let r = (re * re + im * im).sqrt();
        if (r - 1.0).abs() < 1e-6 {
            count += 1;
        } else if (r - 1.0).abs() < 1e-3 {
            return None;
        }
    }
    Some(count)
}

fn float_roots(f: &IntPoly) -> Option<Vec<(f64, f64)>> {
    let n = f.degree()?;
    if n == 0 {
        return Some(vec![]);
    }
    let lc = f.leading().to_f64()?;
    let m = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -f.coeff(i).to_f64().unwrap() / lc
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let schur = Schur::try_new(m, 1e-14, 100_000)?;
    Some(schur.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect())
}

fn criterion_4_rho() -> Outcome {
    ensure!(rho_delta(&(&delta1() * &delta2())) == Ok(8), "ρ(Δ₁Δ₂)");
    ensure!(rho_delta(&(&g1() * &g2())) == Ok(8), "ρ(g₁g₂)");
    for a in 0..=5 {
        ensure!(rho_delta(&delta_a(a)) == Ok(4), "ρ(Δ_{a})");
    }
    for d in corpus() {
        let lhs = rho_p(&delta_to_p(&d).unwrap()).unwrap();
        ensure!(Ok(lhs) == rho_delta(&d), "ρ mismatch on corpus {d}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(1..=5);
        let d = random_reciprocal(n, 6, &mut rng);
        let at = |v: i64| d.eval_int(&BigInt::from(v));
        if !d.is_squarefree() || at(1).is_zero() || at(-1).is_zero() {
            continue;
        }
        let via_delta = rho_delta(&d).unwrap();
        let via_p = rho_p(&delta_to_p(&d).unwrap()).unwrap();
        ensure!(via_delta == via_p, "ρ(Δ) = {via_delta} but ρ(P) = {via_p} for {d}");
        if let Some(fr) = float_rho(&d) {
            ensure!(fr == via_delta, "float oracle gives ρ = {fr} for {d}");
        }
        checked += 1;
    }
    Ok(())
}

fn criterion_5_verdicts() -> Outcome {
    let d = &delta1() * &delta2();
    let run = |delta: &IntPoly, m, s| analyze(&AnalysisRequest::signature(delta.clone(), m, s)).unwrap();
    let r = run(&d, 7, 8);
    ensure!(r.verdict == Verdict::Realizable, "Δ₁Δ₂, m=7, s=8: {}", r.verdict);
    for s in [8, -8] {
        let r = run(&(&g1() * &g2()), 7, s);
        ensure!(
            r.verdict == Verdict::ObstructionUnknown && r.group.as_ref().map(|g| g.rank) == Some(1),
            "g₁g₂, s={s}: {}",
            r.verdict
        );
    }
    let r = run(&d, 3, 8);
    ensure!(r.verdict == Verdict::NotAdmissible, "m=3, s=8: {}", r.verdict);
    let r = run(&d, 3, 16);
    ensure!(r.verdict == Verdict::NotAdmissible, "m=3, s=16: {}", r.verdict);
    ensure!(
        r.witnesses.reasons.iter().any(|m| m.contains("exceeds ρ")),
        "m=3, s=16 does not name the ρ bound"
    );
    let r = run(&(&delta_a(0) * &delta_a(2)), 7, 8);
    ensure!(r.verdict == Verdict::Realizable, "Δ₀Δ₂, s=8: {}", r.verdict);
    Ok(())
}

fn is_palindrome(f: &IntPoly) -> bool {
    f.reversed() == *f
}

fn check_form(a: &IntMatrix) -> Outcome {
    let pair = form_to_pair(a).map_err(|e| e.to_string())?;
    ensure!(pair_to_form(&pair.s, &pair.a).unwrap() == *a, "form round trip");
    let back = form_to_pair(&pair_to_form(&pair.s, &pair.a).unwrap()).unwrap();
    ensure!(back == pair, "pair round trip");
    let delta = alexander_of_form(a).unwrap();
    ensure!(is_palindrome(&delta), "Δ_A = {delta} not palindromic");
    let p = charpoly_of_pair(&pair.s, &pair.a).unwrap();
    ensure!(p == delta_to_p(&delta).unwrap(), "P_a ≠ delta_to_p(Δ_A)");
    let det = a.det().unwrap();
    if det == BigInt::from(1) || det == BigInt::from(-1) {
        let t = unimodular_t(a).unwrap();
        ensure!(t.transpose().mul(&pair.s).unwrap().mul(&t).unwrap() == pair.s, "t not an isometry");
        ensure!(t.charpoly().unwrap() == delta.scale(&det), "charpoly(t) ≠ det(A)·Δ_A");
    }
    Ok(())
}

fn form_fixtures() -> Vec<IntMatrix> {
    vec![hyperbolic_form(), e8_half(), e8_half().direct_sum(&e8_half())]
}

fn criterion_6_seifert() -> Outcome {
    for a in form_fixtures() {
        check_form(&a)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let fixtures = form_fixtures();
    for k in 0..50 {
        let a = &fixtures[k % fixtures.len()];
        let g = random_unimodular(a.nrows(), &mut rng);
        check_form(&base_change_form(a, &g).unwrap())?;
    }
    Ok(())
}

fn criterion_7_milnor() -> Outcome {
    let mut pairs: Vec<SeifertPair> = form_fixtures()
        .iter()
        .map(|a| form_to_pair(a).unwrap())
        .collect();
    pairs.push(form_to_pair(&e8_half().neg()).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let g = random_unimodular(8, &mut rng);
        pairs.push(form_to_pair(&base_change_form(&e8_half(), &g).unwrap()).unwrap());
    }
    let mut certified = 0;
    for pair in &pairs {
        let Ok(mil) = milnor_signatures(&pair.s, &pair.a) else {
            continue;
        };
        certified += 1;
        let sig = signature_exact(&pair.s).unwrap();
        ensure!(mil.total == sig, "Σ = {} but signature {sig}", mil.total);
        ensure!(mil.values.iter().all(|v| [-2, 0, 2].contains(v)), "values {:?}", mil.values);
        ensure!(mil.kernel_dims.iter().all(|d| *d == 2), "kernel dims {:?}", mil.kernel_dims);
    }
    let e8 = form_to_pair(&e8_half()).unwrap();
    ensure!(e8.s == e8_gram(), "E8-half does not symmetrize to E8");
    let total = milnor_signatures(&e8.s, &e8.a).map(|m| m.total);
    ensure!(total == Ok(8), "E8 pair total {total:?}");
    ensure!(certified >= 8, "only {certified} pairs certified");
    Ok(())
}

/// Every monic h over F_p with 1 ≤ deg h ≤ max_deg.
fn monic_polys(p: u64, max_deg: usize) -> Vec<PolyModP> {
    let mut out = Vec::new();
    for d in 1..=max_deg {
        let total = p.pow(d as u32);
        for idx in 0..total {
            let mut c = Vec::with_capacity(d + 1);
            let mut k = idx;
            for _ in 0..d {
                c.push(k % p);
                k /= p;
            }
            c.push(1);
            out.push(PolyModP::new(p, c));
        }
    }
    out
}

fn brute_symmetric_divisor(f: &PolyModP, g: &PolyModP, all: &[PolyModP]) -> bool {
    let p = f.modulus();
    let one_minus_x = PolyModP::new(p, vec![1, p - 1]);
    all.iter()
        .any(|h| h.divides(f) && h.divides(g) && h.compose(&one_minus_x) == *h)
}

fn float_count(f: &IntPoly, a: f64, b: f64) -> Option<usize> {
    let roots = float_roots(f)?;
    let mut count = 0;
    for (re, im) in roots {
        if im.abs() > 1e-5 {
            if im.abs() < 1e-3 {
                return None;
            }
            continue;
        }
        if (re - a).abs() < 1e-4 || (re - b).abs() < 1e-4 {
            return None;
        }
        if a < re && re < b {
            count += 1;
        }
    }
    Some(count)
}

fn criterion_8_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    // symmetric common factors against exhaustive enumeration
    for p in [2u64, 3, 5, 7] {
        let all = monic_polys(p, 4);
        for _ in 0..60 {
            let rand_poly = |rng: &mut ChaCha8Rng| loop {
                let d = rng.gen_range(1..=4);
                let c: Vec<u64> = (0..=d).map(|_| rng.gen_range(0..p)).collect();
                let f = PolyModP::new(p, c);
                if !f.is_zero() {
                    break f;
                }
            };
            let f = rand_poly(&mut rng);
            // bias toward shared factors
            let g = if rng.gen_bool(0.5) {
                f.mul(&rand_poly(&mut rng))
            } else {
                rand_poly(&mut rng)
            };
            let got = symmetric_common_factor(&f, &g, 0).unwrap();
            let want = brute_symmetric_divisor(&f, &g, &all);
            ensure!(got.exists == want, "p={p}, f={f}, g={g}: got {}, oracle {want}", got.exists);
            if let Some(h) = got.witness {
                ensure!(h.divides(&f) && h.divides(&g), "witness {h} does not divide");
            }
        }
    }
    // Sturm counts against floating eigenvalues
    let mut done = 0;
    while done < 200 {
        let f = random_poly(rng.gen_range(1..=8), 9, &mut rng);
        if !f.is_squarefree() {
            continue;
        }
        let a = rng.gen_range(-40..40);
        let b = a + rng.gen_range(1..60);
        let (ea, eb) = (
            Endpoint::Finite(BigRational::new(a.into(), 4.into())),
            Endpoint::Finite(BigRational::new(b.into(), 4.into())),
        );
        let Ok(exact) = sturm_count(&f.to_rat(), &ea, &eb) else {
            continue;
        };
        let Some(fl) = float_count(&f, a as f64 / 4.0, b as f64 / 4.0) else {
            continue;
        };
        ensure!(exact == fl, "Sturm {exact} vs float {fl} for {f} on ({a}/4, {b}/4)");
        done += 1;
    }
    // resultants against Sylvester determinants
    for _ in 0..100 {
        let f = random_poly(rng.gen_range(1..=6), 20, &mut rng);
        let g = random_poly(rng.gen_range(1..=6), 20, &mut rng);
        let want = det_rows(&sylvester_matrix(&f, &g));
        ensure!(resultant(&f, &g) == want, "Res({f}, {g})");
    }
    // enumeration counts against the binomial formula and brute force
    for rho in (0..=12usize).step_by(2) {
        let k = rho / 2;
        for s in -14i64..=14 {
            let got = assignments_for(k, s).unwrap();
            let brute = (0..1u32 << k)
                .filter(|mask| (0..k).map(|i| if mask >> i & 1 == 1 { 2 } else { -2 }).sum::<i64>() == s)
                .count();
            let formula = if (s + 2 * k as i64) % 4 == 0 && (s + 2 * k as i64) >= 0 {
                binomial(k as u64, ((s + 2 * k as i64) / 4) as u64) as usize
            } else {
                0
            };
            ensure!(got.len() == brute && brute == formula, "ρ={rho}, s={s}: {} vs {brute} vs {formula}", got.len());
        }
    }
    Ok(())
}

fn criterion_9_mil() -> Outcome {
    let p = &f1() * &f2();
    ensure!(mil_enum(&p, 0).unwrap().assignments.len() == 6, "|Mil_0| ≠ 6");
    let top = mil_enum(&p, 8).unwrap().assignments;
    ensure!(top.len() == 1 && top[0].values == vec![2; 4], "Mil_8 = {top:?}");
    for rho in (0..=12usize).step_by(2) {
        for s in -16i64..=16 {
            let nonempty = !assignments_for(rho / 2, s).unwrap().is_empty();
            ensure!(mil_nonempty(rho, s) == nonempty, "ρ={rho}, s={s}");
            for a in assignments_for(rho / 2, s).unwrap() {
                ensure!(a.sum() == s, "assignment {a:?} does not sum to {s}");
            }
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("transform fixtures", criterion_1_transforms),
        ("factorization", criterion_2_factorization),
        ("obstruction groups", criterion_3_obstruction),
        ("rho", criterion_4_rho),
        ("verdicts", criterion_5_verdicts),
        ("Seifert identities", criterion_6_seifert),
        ("Milnor reconciliation", criterion_7_milnor),
        ("oracle equivalences", criterion_8_oracles),
        ("Mil_s combinatorics", criterion_9_mil),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
