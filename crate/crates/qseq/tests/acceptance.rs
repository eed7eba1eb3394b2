//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use qseq::chebyshev::{cyclic_sine_sums, identity_residuals};
use qseq::contraction::ContractionProblem;
use qseq::means::{f_lower_bound, f_rk, mean_of_chord_ratios, sharpness_witness, MeanSpec};
use qseq::means::cosine_bound_check;
use qseq::sequences::{
    affine_coeffs, affine_envelope, chord_ratios, classify, make_affine, pointwise_min, AffineRep,
    Verdict, WindowSequence,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::sync::Mutex;
use std::time::Instant;

// Timed criteria take this lock so their stopwatches never overlap under
// the parallel test runner.
static TIMING_GATE: Mutex<()> = Mutex::new(());

fn report(id: u32, name: &str, passed: bool, detail: &str) {
    println!(
        "criterion {id:02} {name}: {} ({detail})",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {id:02} {name} failed: {detail}");
}

#[test]
fn acceptance_01_identity_suite() {
    let _gate = TIMING_GATE.lock().unwrap();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(101);
    let mut worst_rel = 0.0_f64;
    for _ in 0..1000 {
        let i = rng.random_range(-8..=8_i64);
        let j = rng.random_range(-8..=8_i64);
        let k = rng.random_range(-8..=8_i64);
        let q = rng.random_range(-2.0..2.0);
        let r = identity_residuals(i, j, k, q).unwrap();
        worst_rel = worst_rel.max(r.max_abs() / r.scale);
    }
    let mut worst_sum = 0.0_f64;
    for &n in &[1usize, 3, 5, 7] {
        for _ in 0..100 {
            let xs: Vec<f64> = (0..n).map(|_| rng.random_range(-PI..PI)).collect();
            let (s, c) = cyclic_sine_sums(&xs).unwrap();
            worst_sum = worst_sum.max(s.abs()).max(c.abs());
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        1,
        "identity suite",
        worst_rel <= 1e-9 && worst_sum <= 1e-10 && elapsed < 1.0,
        &format!(
            "{elapsed:.3} s; max relative residual {worst_rel:.3e} (limit 1e-9); max sine sum {worst_sum:.3e} (limit 1e-10)"
        ),
    );
}

#[test]
fn acceptance_02_affine_round_trip() {
    let _gate = TIMING_GATE.lock().unwrap();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(102);
    let mut worst = 0.0_f64;
    let mut all_affine = true;
    for _ in 0..500 {
        let a = rng.random_range(0.0f64..3.0).max(1e-6);
        let b = rng.random_range(0.0f64..3.0).max(1e-6);
        let q = rng.random_range(0.0f64..3.0).max(1e-3);
        let s = rng.random_range(-20..20_i64);
        let len = rng.random_range(3..=40_i64);
        let rep = AffineRep::new(a, b, q, s).unwrap();
        let p = make_affine(&rep, s + len - 1).unwrap();
        all_affine &= classify(&p, q).unwrap().verdict == Verdict::QAffine;
        let rec = affine_coeffs(&p, q).unwrap();
        worst = worst.max(((rec.a() - a) / a).abs());
        worst = worst.max(((rec.b() - b) / b).abs());
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        2,
        "affine round trip",
        worst <= 1e-9 && all_affine && elapsed < 1.0,
        &format!(
            "{elapsed:.3} s; max relative coefficient error {worst:.3e} (limit 1e-9); all QAffine: {all_affine}"
        ),
    );
}

#[test]
fn acceptance_03_max_mean_sine_exactness() {
    let mut worst = 0.0_f64;
    for span in 3..=50_i64 {
        let w = sharpness_witness(MeanSpec::maximum(), 0, span, 1.0).unwrap();
        let max_ratio = chord_ratios(&w)
            .unwrap()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max);
        worst = worst.max((max_ratio - (PI / span as f64).cos()).abs());
    }
    report(
        3,
        "sine witness max-ratio exactness",
        worst <= 1e-12,
        &format!("max |ratio - cos(pi/span)| = {worst:.3e} over spans 3..=50 (limit 1e-12)"),
    );
}

#[test]
fn acceptance_04_arithmetic_witness_exactness() {
    let mut worst = 0.0_f64;
    for span in 2..=50_i64 {
        let w = sharpness_witness(MeanSpec::arithmetic(), 0, span, 1.0).unwrap();
        let mean = mean_of_chord_ratios(MeanSpec::arithmetic(), &w).unwrap();
        worst = worst.max((mean - (span as f64 - 2.0) / (span as f64 - 1.0)).abs());
    }
    report(
        4,
        "arithmetic witness exactness",
        worst <= 1e-12,
        &format!("max |mean - (s-2)/(s-1)| = {worst:.3e} over spans 2..=50 (limit 1e-12)"),
    );
}

#[test]
fn acceptance_05_geometric_witnesses() {
    let mut worst_odd = 0.0_f64;
    let eps = 1e-3;
    for span in [3_i64, 5, 7, 9, 21, 49] {
        let w = sharpness_witness(MeanSpec::geometric(), 0, span, eps).unwrap();
        let mean = mean_of_chord_ratios(MeanSpec::geometric(), &w).unwrap();
        worst_odd = worst_odd.max((mean - (1.0 + eps) / 2.0).abs());
    }
    let w = sharpness_witness(MeanSpec::geometric(), 0, 4, 1e-6).unwrap();
    let even_mean = mean_of_chord_ratios(MeanSpec::geometric(), &w).unwrap();
    report(
        5,
        "geometric witnesses",
        worst_odd <= 1e-12 && even_mean <= 1e-2 * (1.0 + 1e-9),
        &format!(
            "odd-case |mean - (1+eps)/2| = {worst_odd:.3e} (limit 1e-12); even-case mean {even_mean:.6e} (limit 1e-2)"
        ),
    );
}

#[test]
fn acceptance_06_power_sum_lower_bounds() {
    let mut rng = StdRng::seed_from_u64(106);
    let mut violation = 0.0_f64;
    for _ in 0..1000 {
        let r = rng.random_range(0.0f64..4.0).max(1e-3);
        let k = rng.random_range(1..=12usize);
        let u: Vec<f64> = (0..k).map(|_| rng.random_range(0.0f64..10.0).max(1e-3)).collect();
        let val = f_rk(r, &u).unwrap();
        let bound = f_lower_bound(r, k).unwrap().best;
        violation = violation.max((bound - val) / val);
    }
    let mut sharp = 0.0_f64;
    for &r in &[0.25_f64, 0.5, 1.0, 2.0, 3.5] {
        sharp = sharp.max((f_rk(r, &[1.0]).unwrap() - f_lower_bound(r, 1).unwrap().best).abs());
        let u1 = ((r - 1.0) / (2.0 * r)).exp2();
        let u2 = ((1.0 - r) / (2.0 * r)).exp2();
        sharp = sharp.max((f_rk(r, &[u1, u2]).unwrap() - f_lower_bound(r, 2).unwrap().best).abs());
    }
    for k in 1..=12usize {
        sharp = sharp
            .max((f_rk(1.0, &vec![1.0; k]).unwrap() - f_lower_bound(1.0, k).unwrap().best).abs());
    }
    report(
        6,
        "power-sum lower bounds",
        violation <= 1e-9 && sharp <= 1e-10,
        &format!(
            "worst relative violation {violation:.3e} over 1000 samples (limit 1e-9); sharp-point gap {sharp:.3e} (limit 1e-10)"
        ),
    );
}

#[test]
fn acceptance_07_cosine_inequality() {
    let mut all_hold = true;
    for m in 3..=10_000_i64 {
        all_hold &= cosine_bound_check(m).unwrap().holds;
    }
    let b = cosine_bound_check(4).unwrap();
    let eq_gap = (b.lhs - b.rhs).abs();
    report(
        7,
        "cosine inequality",
        all_hold && eq_gap <= 1e-12,
        &format!("holds on 3..=10000: {all_hold}; equality gap at m = 4: {eq_gap:.3e} (limit 1e-12)"),
    );
}

#[test]
fn acceptance_08_lipschitz_bound() {
    let _gate = TIMING_GATE.lock().unwrap();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(108);
    let mut worst_excess = f64::NEG_INFINITY;
    for n in 1..=30usize {
        let gamma: Vec<f64> = (0..n.div_ceil(2)).map(|_| rng.random_range(-2.0..2.0)).collect();
        let p = ContractionProblem::with_default_weights(n, gamma).unwrap();
        let lip = p.empirical_lipschitz(200, 5.0, &mut rng).unwrap();
        let nf = n as f64;
        let bound = (nf - 1.0) * (nf + 3.0) / ((nf + 1.0) * (nf + 1.0));
        worst_excess = worst_excess.max(lip - bound);
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        8,
        "operator lipschitz bound",
        worst_excess <= 1e-12 && elapsed < 5.0,
        &format!(
            "{elapsed:.3} s; worst ratio excess over (n-1)(n+3)/(n+1)^2 = {worst_excess:.3e} (limit 1e-12), n up to 30, 200 pairs each"
        ),
    );
}

// ---- brute-force oracle for the fixed-point criterion -------------------

// Gaussian elimination with partial pivoting; None when near-singular.
#[allow(clippy::needless_range_loop)] // col-row elimination reads one row while updating another
fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for c in col..n {
                a[row][c] -= f * a[col][c];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for c in row + 1..n {
            acc -= a[row][c] * x[c];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

// Every fixed point of the min-of-averages map: enumerate which branch is
// active per coordinate, solve the resulting linear system, and keep the
// solutions consistent with their own argmin pattern.
fn brute_force_fixed_points(n: usize, gamma: &[f64]) -> Vec<Vec<f64>> {
    let branch_count: Vec<usize> = (1..=n).map(|i| i.min(n + 1 - i)).collect();
    let total: usize = branch_count.iter().product();
    let ext = |x: &[f64], idx: usize| -> f64 {
        if idx == 0 || idx == n + 1 {
            0.0
        } else {
            x[idx - 1]
        }
    };
    let mut solutions = Vec::new();
    for code in 0..total {
        let mut rem = code;
        let choice: Vec<usize> = branch_count
            .iter()
            .map(|&c| {
                let j = rem % c + 1;
                rem /= c;
                j
            })
            .collect();
        // x_i - (x_{i-j} + x_{i+j})/2 = gamma_j for the chosen j per row
        let mut a = vec![vec![0.0; n]; n];
        let mut b = vec![0.0; n];
        for i in 1..=n {
            let j = choice[i - 1];
            a[i - 1][i - 1] += 1.0;
            if i - j >= 1 {
                a[i - 1][i - j - 1] -= 0.5;
            }
            if i + j <= n {
                a[i - 1][i + j - 1] -= 0.5;
            }
            b[i - 1] = gamma[j - 1];
        }
        let Some(x) = solve_linear(a, b) else {
            continue;
        };
        // consistency: each chosen branch must attain the min
        let consistent = (1..=n).all(|i| {
            let chosen = (ext(&x, i - choice[i - 1]) + ext(&x, i + choice[i - 1])) / 2.0
                + gamma[choice[i - 1] - 1];
            let best = (1..=i.min(n + 1 - i))
                .map(|j| (ext(&x, i - j) + ext(&x, i + j)) / 2.0 + gamma[j - 1])
                .fold(f64::INFINITY, f64::min);
            (chosen - best).abs() <= 1e-9 * (1.0 + best.abs())
        });
        if consistent {
            solutions.push(x);
        }
    }
    solutions
}

#[test]
fn acceptance_09_fixed_points() {
    let _gate = TIMING_GATE.lock().unwrap();
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(109);
    let mut worst_residual = 0.0_f64;
    let mut worst_disagreement = 0.0_f64;
    for n in 1..=50usize {
        for _ in 0..20 {
            let gamma: Vec<f64> = (0..n.div_ceil(2)).map(|_| rng.random_range(-2.0..2.0)).collect();
            let p = ContractionProblem::with_default_weights(n, gamma).unwrap();
            let r = p.solve_fixed_point(4e-10, 10_000_000).unwrap();
            worst_residual = worst_residual.max(r.residual_norm);
            let alt: Vec<f64> = (0..n).map(|_| rng.random_range(-4.0..4.0)).collect();
            let r2 = p.solve_from(&alt, 1e-9, 10_000_000).unwrap();
            let diff: Vec<f64> = r.point.iter().zip(&r2.point).map(|(a, b)| a - b).collect();
            worst_disagreement = worst_disagreement.max(p.norm(&diff).unwrap());
        }
    }
    // brute-force oracle comparison for small dimensions
    let mut worst_oracle_gap = 0.0_f64;
    let mut oracle_always_found = true;
    for n in 1..=4usize {
        for _ in 0..100 {
            let gamma: Vec<f64> = (0..n.div_ceil(2)).map(|_| rng.random_range(-2.0..2.0)).collect();
            let p = ContractionProblem::with_default_weights(n, gamma.clone()).unwrap();
            let r = p.solve_fixed_point(1e-10, 1_000_000).unwrap();
            let candidates = brute_force_fixed_points(n, &gamma);
            oracle_always_found &= !candidates.is_empty();
            for x in candidates {
                for (a, b) in x.iter().zip(&r.point) {
                    worst_oracle_gap = worst_oracle_gap.max((a - b).abs());
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    report(
        9,
        "fixed points",
        worst_residual <= 1e-9
            && worst_disagreement <= 1e-8
            && worst_oracle_gap <= 1e-8
            && oracle_always_found
            && elapsed < 10.0,
        &format!(
            "{elapsed:.3} s; max residual {worst_residual:.3e} (limit 1e-9); start disagreement {worst_disagreement:.3e} (limit 1e-8); oracle gap {worst_oracle_gap:.3e} (limit 1e-8)"
        ),
    );
}

#[test]
fn acceptance_10_envelope_reconstruction() {
    let mut rng = StdRng::seed_from_u64(110);
    let mut worst = 0.0_f64;
    let mut dominate = true;
    for _ in 0..200 {
        let len = rng.random_range(4..=14usize);
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
        let members = affine_envelope(&p, q).unwrap();
        let mats: Vec<WindowSequence> = members
            .iter()
            .map(|rep| make_affine(rep, p.end()).unwrap())
            .collect();
        for r in &mats {
            for i in p.start()..=p.end() {
                dominate &= r.value_at(i) >= p.value_at(i) - 1e-9;
            }
        }
        let min = pointwise_min(&mats).unwrap();
        for i in p.start()..=p.end() {
            worst = worst.max((min.value_at(i) - p.value_at(i)).abs());
        }
    }
    report(
        10,
        "envelope reconstruction",
        worst <= 1e-9 && dominate,
        &format!(
            "max |min(envelope) - p| = {worst:.3e} over 200 instances (limit 1e-9); members dominate: {dominate}"
        ),
    );
}
