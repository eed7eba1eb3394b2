//! Seeded property sweeps over the whole library surface.
//!
//! Each check draws its own deterministic RNG from a caller seed, runs a
//! randomized sweep, and reports pass/fail with a short detail string.
//! The CLI `verify` subcommand prints these as a table; the acceptance
//! test suite runs the same sweeps at pinned sizes.

use crate::chebyshev::{
    cheb_t, cheb_u, cyclic_sine_sums, identity_residuals, largest_root_t, largest_root_u, tau,
    IDENTITY_ATOL, IDENTITY_RTOL,
};
use crate::contraction::ContractionProblem;
use crate::means::{
    c_constant, cosine_bound_check, f_lower_bound, f_rk, mean_of_chord_ratios, power_mean,
    sharpness_witness, MeanSpec,
};
use crate::sequences::{
    affine_coeffs, affine_envelope, chord_ratios, classify, make_affine, pointwise_min,
    support_chord, three_term_inequality, AffineRep, Verdict, WindowSequence,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::f64::consts::PI;

/// Result of one named check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        CheckReport {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

fn rng_for(seed: u64, salt: u64) -> StdRng {
    StdRng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Residuals of the six T/U product identities over random integer triples
/// and real arguments.
pub fn chebyshev_identities(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 1);
    let mut worst = 0.0_f64;
    for _ in 0..cases {
        let i = rng.random_range(-8..=8_i64);
        let j = rng.random_range(-8..=8_i64);
        let k = rng.random_range(-8..=8_i64);
        let q = rng.random_range(-2.0..2.0);
        let r = identity_residuals(i, j, k, q).expect("finite q");
        worst = worst.max(r.max_abs() / (IDENTITY_ATOL / IDENTITY_RTOL + r.scale));
    }
    CheckReport::new(
        "chebyshev identities",
        worst <= IDENTITY_RTOL,
        format!("max scaled residual {worst:.3e} over {cases} cases (limit {IDENTITY_RTOL:.0e})"),
    )
}

/// The cyclic sine sums vanish for odd lengths 1, 3, 5, 7.
pub fn sine_sum_identity(seed: u64, draws: usize) -> CheckReport {
    let mut rng = rng_for(seed, 2);
    let mut worst = 0.0_f64;
    for &n in &[1usize, 3, 5, 7] {
        for _ in 0..draws {
            let xs: Vec<f64> = (0..n).map(|_| rng.random_range(-PI..PI)).collect();
            let (s, c) = cyclic_sine_sums(&xs).expect("finite input");
            worst = worst.max(s.abs()).max(c.abs());
        }
    }
    CheckReport::new(
        "cyclic sine sums",
        worst <= 1e-10,
        format!("max |sum| {worst:.3e} over odd lengths 1,3,5,7 (limit 1e-10)"),
    )
}

/// Three-term recurrence consistency of `cheb_t`/`cheb_u` and exactness of
/// the negative-order reductions.
pub fn recurrence_and_reflection(seed: u64, draws: usize) -> CheckReport {
    let mut rng = rng_for(seed, 3);
    let mut worst = 0.0_f64;
    let mut exact = true;
    for _ in 0..draws {
        let x = rng.random_range(-3.0..3.0);
        for k in -20..=20_i64 {
            let t = |k| cheb_t(k, x).unwrap();
            let u = |k| cheb_u(k, x).unwrap();
            let res_t = (t(k + 1) - (2.0 * x * t(k) - t(k - 1))).abs() / t(k + 1).abs().max(1.0);
            let res_u = (u(k + 1) - (2.0 * x * u(k) - u(k - 1))).abs() / u(k + 1).abs().max(1.0);
            worst = worst.max(res_t).max(res_u);
            if k > 0 {
                exact &= t(-k) == t(k);
                exact &= u(-k) == -u(k - 2);
            }
        }
    }
    CheckReport::new(
        "recurrence + reflection",
        worst <= 1e-9 && exact,
        format!("max relative recurrence residual {worst:.3e}; reflections exact: {exact}"),
    )
}

/// Closed forms against `cos(ku)` and `sin((k+1)u)/sin(u)`, plus largest
/// roots and the monotone ranges of `T_k`.
pub fn closed_forms_roots_monotonicity(seed: u64, draws: usize) -> CheckReport {
    let mut rng = rng_for(seed, 4);
    let mut worst = 0.0_f64;
    let mut ok = true;
    for _ in 0..draws {
        let u = rng.random_range(1e-6..PI - 1e-6);
        let x = u.cos();
        for k in 0..=80_i64 {
            worst = worst.max((cheb_t(k, x).unwrap() - (k as f64 * u).cos()).abs());
            worst =
                worst.max((cheb_u(k, x).unwrap() * u.sin() - ((k as f64 + 1.0) * u).sin()).abs());
        }
    }
    for k in 1..=40_i64 {
        ok &= cheb_t(k, largest_root_t(k).unwrap()).unwrap().abs() <= 1e-9;
        ok &= cheb_u(k, largest_root_u(k).unwrap()).unwrap().abs() <= 1e-9;
    }
    for _ in 0..draws {
        let x = rng.random_range(1.0 + 1e-9..5.0);
        let mut prev = cheb_t(0, x).unwrap();
        for k in 1..=30 {
            let cur = cheb_t(k, x).unwrap();
            ok &= cur > prev;
            prev = cur;
        }
        let x = rng.random_range(0.0..0.99);
        let stop = tau(x).unwrap();
        let mut prev = cheb_t(1, x).unwrap();
        for k in 2..=stop {
            let cur = cheb_t(k, x).unwrap();
            ok &= cur < prev;
            prev = cur;
        }
    }
    CheckReport::new(
        "closed forms, roots, monotone ranges",
        worst <= 1e-10 && ok,
        format!("max closed-form deviation {worst:.3e}; root/monotone checks: {ok}"),
    )
}

/// make_affine -> affine_coeffs round trip with QAffine classification.
pub fn affine_round_trip(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 5);
    let mut worst = 0.0_f64;
    let mut all_affine = true;
    for _ in 0..cases {
        let a = rng.random_range(1e-3..3.0);
        let b = rng.random_range(1e-3..3.0);
        let q = rng.random_range(1e-2..3.0);
        let start = rng.random_range(-10..10_i64);
        let len = rng.random_range(3..=40_i64);
        let rep = AffineRep::new(a, b, q, start).unwrap();
        let p = make_affine(&rep, start + len - 1).unwrap();
        all_affine &= classify(&p, q).unwrap().verdict == Verdict::QAffine;
        let rec = affine_coeffs(&p, q).unwrap();
        worst = worst.max((rec.a() - a).abs() / a.abs().max(1.0));
        worst = worst.max((rec.b() - b).abs() / b.abs().max(1.0));
    }
    CheckReport::new(
        "affine round trip",
        worst <= 1e-9 && all_affine,
        format!("max relative coefficient error {worst:.3e} over {cases} cases; all QAffine: {all_affine}"),
    )
}

fn random_positive_with_q(rng: &mut StdRng, len: usize) -> (WindowSequence, f64) {
    let values: Vec<f64> = (0..len).map(|_| rng.random_range(0.5..2.0)).collect();
    let p = WindowSequence::new(0, values).unwrap();
    let q = chord_ratios(&p)
        .unwrap()
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    (p, q)
}

// Positive q-concave instances with q near 1, where materializing envelope
// members from the window-start basis is well-conditioned.
fn random_concave_with_q(rng: &mut StdRng, len: usize) -> (WindowSequence, f64) {
    let values: Vec<f64> = if rng.random_bool(0.5) {
        (0..len).map(|_| rng.random_range(0.9..1.1)).collect()
    } else {
        let mut inc: Vec<f64> = (0..len).map(|_| rng.random_range(0.05..1.0)).collect();
        inc.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut acc = rng.random_range(0.2..1.0);
        inc.into_iter()
            .map(|d| {
                acc += d;
                acc
            })
            .collect()
    };
    let p = WindowSequence::new(0, values).unwrap();
    let q = chord_ratios(&p)
        .unwrap()
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    (p, q)
}

/// Equality of the three-term relation on q-affine sequences and the
/// guaranteed inequality on q-concave ones under the angle condition.
pub fn three_term_relations(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 6);
    let mut worst_eq = 0.0_f64;
    let mut all_hold = true;
    for _ in 0..cases {
        let a = rng.random_range(0.05..2.0);
        let b = rng.random_range(0.05..2.0);
        let q = rng.random_range(0.1..2.5);
        let rep = AffineRep::new(a, b, q, 0).unwrap();
        let p = make_affine(&rep, 9).unwrap();
        for _ in 0..5 {
            let i = rng.random_range(0..8_i64);
            let j = rng.random_range(i + 1..9_i64);
            let k = rng.random_range(j + 1..=9_i64);
            let r = three_term_inequality(&p, q, i, j, k).unwrap();
            let scale = r.lhs.abs().max(r.rhs.abs()).max(1.0);
            worst_eq = worst_eq.max((r.lhs - r.rhs).abs() / scale);
        }

        let len = rng.random_range(4..=12);
        let (p, q) = random_positive_with_q(&mut rng, len);
        for i in p.start()..p.end() - 1 {
            for j in i + 1..p.end() {
                for k in j + 1..=p.end() {
                    let r = three_term_inequality(&p, q, i, j, k).unwrap();
                    if r.condition_met {
                        all_hold &= r.holds;
                    }
                }
            }
        }
    }
    CheckReport::new(
        "three-term relations",
        worst_eq <= 1e-9 && all_hold,
        format!("max affine-equality deviation {worst_eq:.3e}; concave triples hold: {all_hold}"),
    )
}

/// Support-chord interpolation/dominance pattern on random q-concave input.
pub fn support_chord_pattern(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 7);
    let mut ok = true;
    let mut done = 0;
    while done < cases {
        let len = rng.random_range(4..=14);
        let (p, q) = random_positive_with_q(&mut rng, len);
        let j = rng.random_range(p.start()..p.end());
        let k = rng.random_range(j + 1..=p.end());
        if q <= (PI / (k - j) as f64).cos() {
            continue;
        }
        let r = support_chord(&p, q, j, k).unwrap();
        for i in p.start()..=p.end() {
            let tol = 1e-9 * (1.0 + p.value_at(i).abs());
            if i == j || i == k {
                ok &= (r.value_at(i) - p.value_at(i)).abs() <= tol;
            } else if i > j && i < k {
                ok &= r.value_at(i) <= p.value_at(i) + tol;
            } else {
                ok &= r.value_at(i) >= p.value_at(i) - tol;
            }
        }
        done += 1;
    }
    CheckReport::new(
        "support chord pattern",
        ok,
        format!("interpolation and dominance pattern over {cases} instances: {ok}"),
    )
}

/// Envelope members dominate and their pointwise min reconstructs the input.
pub fn envelope_reconstruction(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 8);
    let mut worst = 0.0_f64;
    let mut dominate = true;
    for _ in 0..cases {
        let len = rng.random_range(4..=14);
        let (p, q) = random_concave_with_q(&mut rng, len);
        let members = affine_envelope(&p, q).unwrap();
        let mats: Vec<WindowSequence> = members
            .iter()
            .map(|rep| make_affine(rep, p.end()).unwrap())
            .collect();
        for r in &mats {
            for i in p.start()..=p.end() {
                dominate &= r.value_at(i) >= p.value_at(i) - 1e-9 * (1.0 + p.value_at(i).abs());
            }
        }
        let min = pointwise_min(&mats).unwrap();
        for i in p.start()..=p.end() {
            worst = worst.max((min.value_at(i) - p.value_at(i)).abs());
        }
    }
    CheckReport::new(
        "envelope reconstruction",
        worst <= 1e-9 && dominate,
        format!("max |min(envelope) - p| = {worst:.3e} over {cases} cases; members dominate: {dominate}"),
    )
}

/// `F_{r,k}` never dips below its reported lower bounds; sharp points
/// attain them.
pub fn f_bounds(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 9);
    let mut violation = 0.0_f64;
    for _ in 0..cases {
        let r = rng.random_range(1e-3..4.0);
        let k = rng.random_range(1..=12usize);
        let u: Vec<f64> = (0..k).map(|_| rng.random_range(1e-3..10.0)).collect();
        let val = f_rk(r, &u).unwrap();
        let bound = f_lower_bound(r, k).unwrap().best;
        violation = violation.max((bound - val) / val.max(1.0));
    }
    // sharp points: k = 1 at u = 1; k = 2 at the two-point witness; r = 1 at ones
    let mut sharp = 0.0_f64;
    for &r in &[0.25, 0.5, 1.0, 2.0, 3.5] {
        let v = f_rk(r, &[1.0]).unwrap();
        sharp = sharp.max((v - f_lower_bound(r, 1).unwrap().best).abs());
        let u1 = ((r - 1.0) / (2.0 * r)).exp2();
        let u2 = ((1.0 - r) / (2.0 * r)).exp2();
        let v = f_rk(r, &[u1, u2]).unwrap();
        sharp = sharp.max((v - f_lower_bound(r, 2).unwrap().best).abs());
    }
    for k in 1..=12usize {
        let v = f_rk(1.0, &vec![1.0; k]).unwrap();
        sharp = sharp.max((v - f_lower_bound(1.0, k).unwrap().best).abs());
    }
    CheckReport::new(
        "power-sum lower bounds",
        violation <= 1e-9 && sharp <= 1e-10,
        format!("worst relative violation {violation:.3e} over {cases} cases; sharp-point gap {sharp:.3e}"),
    )
}

/// Means of chord ratios stay above the minimax constants; witnesses attain
/// the exact ones; means are monotone in the exponent.
pub fn minimax_constants(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 10);
    let specs = [
        MeanSpec::arithmetic(),
        MeanSpec::geometric(),
        MeanSpec::new(2.0).unwrap(),
        MeanSpec::new(0.5).unwrap(),
        MeanSpec::maximum(),
    ];
    let mut violation = 0.0_f64;
    let mut monotone = true;
    for _ in 0..cases {
        let len = rng.random_range(3..=12usize);
        let mut values: Vec<f64> = (0..len).map(|_| rng.random_range(0.05..5.0)).collect();
        if rng.random_bool(0.3) {
            values[0] = 0.0;
        }
        if rng.random_bool(0.3) {
            let last = values.len() - 1;
            values[last] = 0.0;
        }
        let p = WindowSequence::new(0, values).unwrap();
        for spec in specs {
            let mean = mean_of_chord_ratios(spec, &p).unwrap();
            let bound = c_constant(spec, p.start(), p.end()).unwrap().value;
            violation = violation.max(bound - mean);
        }
        // monotone in r over an increasing exponent ladder
        let mut prev = f64::NEG_INFINITY;
        for r in [-1.0, 0.0, 0.5, 1.0, 2.0, f64::INFINITY] {
            let mean = mean_of_chord_ratios(MeanSpec::new(r).unwrap(), &p).unwrap();
            monotone &= mean >= prev - 1e-9 * mean.abs().max(1.0);
            prev = mean;
        }
    }
    // witnesses
    let mut witness_gap = 0.0_f64;
    for m in 3..=30_i64 {
        let w = sharpness_witness(MeanSpec::arithmetic(), 0, m, 1.0).unwrap();
        let mean = mean_of_chord_ratios(MeanSpec::arithmetic(), &w).unwrap();
        witness_gap = witness_gap.max((mean - (m as f64 - 2.0) / (m as f64 - 1.0)).abs());
        let w = sharpness_witness(MeanSpec::maximum(), 0, m, 1.0).unwrap();
        let mean = mean_of_chord_ratios(MeanSpec::maximum(), &w).unwrap();
        witness_gap = witness_gap.max((mean - (PI / m as f64).cos()).abs());
    }
    for m in [5_i64, 7, 9] {
        let eps = 1e-3;
        let w = sharpness_witness(MeanSpec::geometric(), 0, m, eps).unwrap();
        let mean = mean_of_chord_ratios(MeanSpec::geometric(), &w).unwrap();
        witness_gap = witness_gap.max((mean - (1.0 + eps) / 2.0).abs());
    }
    CheckReport::new(
        "minimax constants",
        violation <= 1e-9 && monotone && witness_gap <= 1e-12,
        format!(
            "worst bound violation {violation:.3e}; monotone in r: {monotone}; witness gap {witness_gap:.3e}"
        ),
    )
}

/// The cosine inequality over `3..=limit` with equality at 4.
pub fn cosine_inequality(limit: i64) -> CheckReport {
    let mut ok = true;
    for m in 3..=limit {
        ok &= cosine_bound_check(m).unwrap().holds;
    }
    let b = cosine_bound_check(4).unwrap();
    let eq = (b.lhs - b.rhs).abs();
    CheckReport::new(
        "cosine inequality",
        ok && eq <= 1e-12,
        format!("holds on 3..={limit}: {ok}; equality gap at m = 4: {eq:.3e}"),
    )
}

/// Empirical Lipschitz ratios stay below the paper bound for default
/// weights and below `q*` for random strictly concave weights.
pub fn lipschitz_bound(seed: u64, max_n: usize, pairs: usize) -> CheckReport {
    let mut rng = rng_for(seed, 11);
    let mut worst_excess = f64::NEG_INFINITY;
    for n in 1..=max_n {
        let gamma: Vec<f64> = (0..n.div_ceil(2)).map(|_| rng.random_range(-2.0..2.0)).collect();
        let p = ContractionProblem::with_default_weights(n, gamma.clone()).unwrap();
        let nf = n as f64;
        let bound = (nf - 1.0) * (nf + 3.0) / ((nf + 1.0) * (nf + 1.0));
        let lip = p.empirical_lipschitz(pairs, 5.0, &mut rng).unwrap();
        worst_excess = worst_excess.max(lip - bound);

        // random strictly concave positive weights: w_i = s_i cumulative sums
        // of decreasing increments stay concave; check against q*.
        let mut inc: Vec<f64> = (0..n + 1).map(|_| rng.random_range(0.1..1.0)).collect();
        inc.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let mut w = Vec::with_capacity(n);
        let mut acc = 0.0;
        for item in inc.iter().take(n) {
            acc += item;
            w.push(acc + 0.05);
        }
        let p = ContractionProblem::new(n, gamma, w).unwrap();
        let cert = p.certificate();
        let lip = p.empirical_lipschitz(pairs / 2, 5.0, &mut rng).unwrap();
        worst_excess = worst_excess.max(lip - cert.q_star);
    }
    CheckReport::new(
        "lipschitz bound",
        worst_excess <= 1e-12,
        format!("worst (ratio - bound) = {worst_excess:.3e} for n up to {max_n}"),
    )
}

/// Fixed-point solves converge with certified residuals and are
/// start-independent.
pub fn fixed_points(seed: u64, max_n: usize, gammas_per_n: usize) -> CheckReport {
    let mut rng = rng_for(seed, 12);
    let mut worst_residual = 0.0_f64;
    let mut worst_disagreement = 0.0_f64;
    for n in 1..=max_n {
        for _ in 0..gammas_per_n {
            let gamma: Vec<f64> = (0..n.div_ceil(2)).map(|_| rng.random_range(-2.0..2.0)).collect();
            let p = ContractionProblem::with_default_weights(n, gamma).unwrap();
            let r = p.solve_fixed_point(4e-10, 5_000_000).expect("contraction");
            worst_residual = worst_residual.max(r.residual_norm);
            let start: Vec<f64> = (0..n).map(|_| rng.random_range(-4.0..4.0)).collect();
            let r2 = p.solve_from(&start, 1e-9, 5_000_000).expect("contraction");
            let gap = p
                .norm(&r.point.iter().zip(&r2.point).map(|(a, b)| a - b).collect::<Vec<_>>())
                .unwrap();
            worst_disagreement = worst_disagreement.max(gap);
        }
    }
    CheckReport::new(
        "fixed points",
        worst_residual <= 1e-9 && worst_disagreement <= 1e-8,
        format!(
            "max residual {worst_residual:.3e} (limit 1e-9); max start disagreement {worst_disagreement:.3e} (limit 1e-8) for n up to {max_n}"
        ),
    )
}

/// Power means of fixed samples are ordered in the exponent.
pub fn power_mean_comparison(seed: u64, cases: usize) -> CheckReport {
    let mut rng = rng_for(seed, 13);
    let mut ok = true;
    for _ in 0..cases {
        let k = rng.random_range(1..=9usize);
        let u: Vec<f64> = (0..k).map(|_| rng.random_range(0.1..10.0)).collect();
        let mut prev = f64::NEG_INFINITY;
        for r in [
            f64::NEG_INFINITY,
            -2.0,
            0.0,
            0.5,
            1.0,
            3.0,
            f64::INFINITY,
        ] {
            let m = power_mean(MeanSpec::new(r).unwrap(), &u).unwrap();
            ok &= m >= prev - 1e-9 * m.abs().max(1.0);
            prev = m;
        }
    }
    CheckReport::new(
        "power mean comparison",
        ok,
        format!("H_r ordered over the exponent ladder for {cases} samples: {ok}"),
    )
}

/// Run every check with default sizes. With `parallel` the checks fan out
/// across threads; output order is fixed either way.
pub fn run_all(seed: u64, parallel: bool) -> Vec<CheckReport> {
    let jobs: Vec<Box<dyn Fn() -> CheckReport + Send + Sync>> = vec![
        Box::new(move || chebyshev_identities(seed, 1000)),
        Box::new(move || sine_sum_identity(seed, 100)),
        Box::new(move || recurrence_and_reflection(seed, 100)),
        Box::new(move || closed_forms_roots_monotonicity(seed, 50)),
        Box::new(move || affine_round_trip(seed, 500)),
        Box::new(move || three_term_relations(seed, 50)),
        Box::new(move || support_chord_pattern(seed, 200)),
        Box::new(move || envelope_reconstruction(seed, 200)),
        Box::new(move || f_bounds(seed, 1000)),
        Box::new(move || minimax_constants(seed, 300)),
        Box::new(move || cosine_inequality(10_000)),
        Box::new(move || power_mean_comparison(seed, 300)),
        Box::new(move || lipschitz_bound(seed, 20, 100)),
        Box::new(move || fixed_points(seed, 15, 5)),
    ];
    if parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = jobs.iter().map(|job| scope.spawn(job)).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    } else {
        jobs.iter().map(|job| job()).collect()
    }
}
