//! Chebyshev polynomials of the first and second kind for arbitrary
//! integer order, plus root helpers and identity-residual checks.
//!
//! `T_k` and `U_k` are defined by the three-term recurrence
//! `f_{k+1}(x) = 2x f_k(x) - f_{k-1}(x)` with `T_0 = 1, T_1 = x` and
//! `U_0 = 1, U_1 = 2x`. Negative orders reduce through the reflection
//! rules `T_{-k} = T_k` and `U_{-k} = -U_{k-2}` (so `U_{-1} = 0`).

use crate::error::{Error, Result};
use std::f64::consts::{LN_2, PI};

/// Absolute part of the mixed tolerance used by identity checks.
pub const IDENTITY_ATOL: f64 = 1e-10;
/// Relative part of the mixed tolerance used by identity checks.
pub const IDENTITY_RTOL: f64 = 1e-9;

/// Which family a [`ChebEval`] request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebKind {
    FirstKind,
    SecondKind,
}

/// A single evaluation request: kind, integer order (may be negative),
/// and a finite real argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebEval {
    pub kind: ChebKind,
    pub order: i64,
    pub argument: f64,
}

impl ChebEval {
    pub fn value(&self) -> Result<f64> {
        match self.kind {
            ChebKind::FirstKind => cheb_t(self.order, self.argument),
            ChebKind::SecondKind => cheb_u(self.order, self.argument),
        }
    }
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be finite, got {x}")))
    }
}

/// Evaluate `T_k(x)` for any integer order `k`.
///
/// Uses `cos(k arccos x)` on `|x| <= 1` and `sign(x)^k cosh(k arccosh|x|)`
/// outside, falling back to the three-term recurrence for small orders
/// near `|x| = 1` where the forward recurrence is the better-conditioned
/// route. `T_{-k} = T_k` is applied before evaluation.
pub fn cheb_t(k: i64, x: f64) -> Result<f64> {
    check_finite("x", x)?;
    Ok(eval_t(k, x))
}

/// Evaluate `U_k(x)` for any integer order `k`.
///
/// `U_{-1} = 0` exactly and `U_{-k} = -U_{k-2}` for other negative orders.
/// On `|x| < 1` the closed form `sin((k+1)u)/sin(u)` with `u = arccos x`
/// is used; at `x = ±1` the removable singularity is replaced by the limit
/// values `U_k(1) = k + 1`, `U_k(-1) = (-1)^k (k+1)`.
pub fn cheb_u(k: i64, x: f64) -> Result<f64> {
    check_finite("x", x)?;
    Ok(eval_u(k, x))
}

// Orders up to this bound near |x| = 1 go through the recurrence.
const RECURRENCE_MAX_ORDER: u64 = 64;
// Half-width of the band around |x| = 1 where the recurrence is preferred.
const NEAR_UNIT_BAND: f64 = 0.125;

fn use_recurrence(k: u64, x: f64) -> bool {
    k <= RECURRENCE_MAX_ORDER && (x - 1.0).abs() <= NEAR_UNIT_BAND
}

fn forward_recurrence(k: u64, x: f64, f0: f64, f1: f64) -> f64 {
    let (mut prev, mut cur) = (f0, f1);
    for _ in 1..k {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

// arccosh with full relative accuracy near 1; the textbook
// ln(x + sqrt(x^2 - 1)) cancels badly for x close to 1.
fn acosh_stable(x: f64) -> f64 {
    debug_assert!(x >= 1.0);
    let t = x - 1.0;
    (t + (t * (t + 2.0)).sqrt()).ln_1p()
}

// cosh(a) for a >= 0 without overflowing until the result itself overflows.
fn cosh_stable(a: f64) -> f64 {
    if a < 700.0 {
        a.cosh()
    } else {
        (a - LN_2).exp()
    }
}

// sinh(a)/sinh(u) for 0 < u <= a, avoiding premature overflow of sinh(a).
fn sinh_ratio(a: f64, u: f64) -> f64 {
    if a < 700.0 {
        a.sinh() / u.sinh()
    } else {
        (a - u).exp() / (-(-2.0 * u).exp_m1())
    }
}

pub(crate) fn eval_t(k: i64, x: f64) -> f64 {
    eval_t_nonneg(k.unsigned_abs(), x)
}

fn eval_t_nonneg(k: u64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if k == 1 {
        return x;
    }
    if x < 0.0 {
        // T_k(-x) = (-1)^k T_k(x)
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        return sign * eval_t_nonneg(k, -x);
    }
    if x == 1.0 {
        return 1.0;
    }
    if use_recurrence(k, x) {
        return forward_recurrence(k, x, 1.0, x);
    }
    if x < 1.0 {
        (k as f64 * x.acos()).cos()
    } else {
        cosh_stable(k as f64 * acosh_stable(x))
    }
}

pub(crate) fn eval_u(k: i64, x: f64) -> f64 {
    if k == -1 {
        return 0.0;
    }
    if k < -1 {
        // U_{-k} = -U_{k-2}; reduction is exact (a sign flip only).
        return -eval_u_nonneg((-k - 2) as u64, x);
    }
    eval_u_nonneg(k as u64, x)
}

fn eval_u_nonneg(k: u64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    if k == 1 {
        return 2.0 * x;
    }
    if x < 0.0 {
        // U_k(-x) = (-1)^k U_k(x)
        let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
        return sign * eval_u_nonneg(k, -x);
    }
    if x == 1.0 {
        // limit of sin((k+1)u)/sin(u) as u -> 0
        return (k + 1) as f64;
    }
    if use_recurrence(k, x) {
        return forward_recurrence(k, x, 1.0, 2.0 * x);
    }
    if x < 1.0 {
        let u = x.acos();
        ((k as f64 + 1.0) * u).sin() / u.sin()
    } else {
        let u = acosh_stable(x);
        sinh_ratio((k as f64 + 1.0) * u, u)
    }
}

/// Largest root of `T_k`, namely `cos(pi/(2k))`.
pub fn largest_root_t(k: i64) -> Result<f64> {
    if k < 1 {
        return Err(Error::domain(format!(
            "largest_root_t requires k >= 1 (T_0 is constant), got {k}"
        )));
    }
    Ok((PI / (2.0 * k as f64)).cos())
}

/// Largest root of `U_k`, namely `cos(pi/(k+1))`.
pub fn largest_root_u(k: i64) -> Result<f64> {
    if k < 1 {
        return Err(Error::domain(format!(
            "largest_root_u requires k >= 1 (U_0 is constant), got {k}"
        )));
    }
    Ok((PI / (k as f64 + 1.0)).cos())
}

/// Last index through which `(T_k(x))_{k>=1}` is strictly decreasing for
/// `0 <= x < 1`: `floor(pi / arccos(x))`.
///
/// When `pi / arccos(x)` sits within 1e-12 of an integer it is snapped to
/// that integer before flooring, so arguments like `x = cos(pi/5)` count
/// the boundary index the way exact arithmetic would.
pub fn tau(x: f64) -> Result<i64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::domain(format!("tau requires 0 <= x < 1, got {x}")));
    }
    let v = PI / x.acos();
    let nearest = v.round();
    if (v - nearest).abs() <= 1e-12 {
        Ok(nearest as i64)
    } else {
        Ok(v.floor() as i64)
    }
}

/// Left-minus-right residuals of the six product identities linking
/// `T` and `U`, evaluated at one `(i, j, k, q)`.
///
/// All six vanish identically in exact arithmetic, for every integer
/// triple and every real `q`; the residuals quantify floating-point error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityResiduals {
    /// `U_{k-j-1} U_i + U_{j-i-1} U_k - U_{k-i-1} U_j`
    pub idu_u: f64,
    /// `U_{k-j-1} T_i + U_{j-i-1} T_k - U_{k-i-1} T_j`
    pub idu_t: f64,
    /// `U_{i-j} + U_{i+j} - 2 T_j U_i`
    pub ut_u: f64,
    /// `T_{i-j} + T_{i+j} - 2 T_j T_i`
    pub ut_t: f64,
    /// `U_{i+j} - U_{i-j} - 2 T_{i+1} U_{j-1}`
    pub ut1: f64,
    /// `T_{j-i} - T_{j+i} - 2 (1-q^2) U_{j-1} U_{i-1}`
    pub ut2: f64,
    /// Largest magnitude among the participating terms, for relative checks.
    pub scale: f64,
}

impl IdentityResiduals {
    pub fn max_abs(&self) -> f64 {
        self.idu_u
            .abs()
            .max(self.idu_t.abs())
            .max(self.ut_u.abs())
            .max(self.ut_t.abs())
            .max(self.ut1.abs())
            .max(self.ut2.abs())
    }

    /// True when every residual passes the mixed tolerance
    /// `atol + rtol * scale`.
    pub fn within(&self, atol: f64, rtol: f64) -> bool {
        self.max_abs() <= atol + rtol * self.scale
    }
}

/// Evaluate the residuals of the six `T`/`U` identities at `(i, j, k, q)`.
pub fn identity_residuals(i: i64, j: i64, k: i64, q: f64) -> Result<IdentityResiduals> {
    check_finite("q", q)?;
    let t = |n: i64| eval_t(n, q);
    let u = |n: i64| eval_u(n, q);

    let terms = [
        u(k - j - 1) * u(i),
        u(j - i - 1) * u(k),
        u(k - i - 1) * u(j),
        u(k - j - 1) * t(i),
        u(j - i - 1) * t(k),
        u(k - i - 1) * t(j),
        u(i - j),
        u(i + j),
        2.0 * t(j) * u(i),
        t(i - j),
        t(i + j),
        2.0 * t(j) * t(i),
        2.0 * t(i + 1) * u(j - 1),
        t(j - i),
        t(j + i),
        2.0 * (1.0 - q * q) * u(j - 1) * u(i - 1),
    ];
    let scale = terms.iter().fold(1.0_f64, |m, t| m.max(t.abs()));

    Ok(IdentityResiduals {
        idu_u: terms[0] + terms[1] - terms[2],
        idu_t: terms[3] + terms[4] - terms[5],
        ut_u: terms[6] + terms[7] - terms[8],
        ut_t: terms[9] + terms[10] - terms[11],
        ut1: terms[7] - terms[6] - terms[12],
        ut2: terms[13] - terms[14] - terms[15],
        scale,
    })
}

/// The two cyclic alternating-argument sine sums
/// `sum_i sin(y_i) sin(x_i)` and `sum_i sin(y_i) cos(x_i)` with
/// `y_i = sum_{j=1}^{n-1} (-1)^j x_{i+j}` (indices cyclic).
///
/// Both sums vanish identically whenever the input length is odd.
pub fn cyclic_sine_sums(xs: &[f64]) -> Result<(f64, f64)> {
    if xs.is_empty() {
        return Err(Error::domain("cyclic_sine_sums requires a nonempty input"));
    }
    for &x in xs {
        check_finite("x", x)?;
    }
    let n = xs.len();
    let mut sum_sin = 0.0;
    let mut sum_cos = 0.0;
    for i in 0..n {
        let mut y = 0.0;
        for j in 1..n {
            let v = xs[(i + j) % n];
            if j % 2 == 1 {
                y -= v;
            } else {
                y += v;
            }
        }
        sum_sin += y.sin() * xs[i].sin();
        sum_cos += y.sin() * xs[i].cos();
    }
    Ok((sum_sin, sum_cos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    // Independent oracle: plain three-term recurrence, negative orders
    // reduced by the reflection rules first.
    fn oracle_t(k: i64, x: f64) -> f64 {
        let k = k.unsigned_abs();
        let (mut prev, mut cur) = (1.0, x);
        if k == 0 {
            return 1.0;
        }
        for _ in 1..k {
            let next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    fn oracle_u(k: i64, x: f64) -> f64 {
        if k == -1 {
            return 0.0;
        }
        let (k, sign) = if k < -1 { (-k - 2, -1.0) } else { (k, 1.0) };
        let (mut prev, mut cur) = (1.0, 2.0 * x);
        if k == 0 {
            return sign;
        }
        for _ in 1..k {
            let next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        sign * cur
    }

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got}, want {want} (diff {:e})",
            (got - want).abs()
        );
    }

    #[test]
    fn t_base_cases() {
        assert_eq!(cheb_t(0, 0.3).unwrap(), 1.0);
        assert_eq!(cheb_t(1, 0.3).unwrap(), 0.3);
        // T_2 = 2x T_1 - T_0 at x = 2: 2*2*2 - 1 = 7 (recurrence oracle)
        assert_close(cheb_t(2, 2.0).unwrap(), oracle_t(2, 2.0), 1e-12);
        assert_close(cheb_t(2, 2.0).unwrap(), 7.0, 1e-12);
    }

    #[test]
    fn t_reflection_is_exact() {
        for &x in &[0.4, -1.7, 3.0, 0.999] {
            for k in 0..10 {
                assert_eq!(cheb_t(-k, x).unwrap(), cheb_t(k, x).unwrap());
            }
        }
    }

    #[test]
    fn u_base_cases() {
        assert_eq!(cheb_u(-1, 0.7).unwrap(), 0.0);
        assert_eq!(cheb_u(1, 0.5).unwrap(), 1.0);
        // U_k(1) = k + 1, forced by the recurrence
        assert_close(cheb_u(3, 1.0).unwrap(), oracle_u(3, 1.0), 1e-12);
        assert_eq!(cheb_u(3, 1.0).unwrap(), 4.0);
        assert_eq!(cheb_u(5, -1.0).unwrap(), -6.0);
    }

    #[test]
    fn u_negative_order_reduction_is_exact() {
        for &x in &[0.2, -0.9, 2.5] {
            for k in 2..12 {
                assert_eq!(cheb_u(-k, x).unwrap(), -cheb_u(k - 2, x).unwrap());
            }
        }
        assert_eq!(cheb_u(-2, 0.3).unwrap(), -1.0); // -U_0
    }

    #[test]
    fn non_finite_arguments_are_rejected() {
        assert!(cheb_t(3, f64::NAN).is_err());
        assert!(cheb_t(3, f64::INFINITY).is_err());
        assert!(cheb_u(3, f64::NEG_INFINITY).is_err());
        assert!(identity_residuals(1, 2, 3, f64::NAN).is_err());
    }

    #[test]
    fn matches_recurrence_oracle_broadly() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for _ in 0..200 {
            let x: f64 = rng.random_range(-3.0..3.0);
            for k in -20..=20_i64 {
                let scale = oracle_t(k, x).abs().max(1.0);
                assert_close(cheb_t(k, x).unwrap(), oracle_t(k, x), 1e-9 * scale);
                let scale = oracle_u(k, x).abs().max(1.0);
                assert_close(cheb_u(k, x).unwrap(), oracle_u(k, x), 1e-9 * scale);
            }
        }
    }

    #[test]
    fn recurrence_consistency() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0002);
        for _ in 0..200 {
            let x: f64 = rng.random_range(-3.0..3.0);
            for k in -20..=20_i64 {
                let (tm, t0, tp) = (
                    cheb_t(k - 1, x).unwrap(),
                    cheb_t(k, x).unwrap(),
                    cheb_t(k + 1, x).unwrap(),
                );
                assert!((tp - (2.0 * x * t0 - tm)).abs() <= 1e-9 * tp.abs().max(1.0));
                let (um, u0, up) = (
                    cheb_u(k - 1, x).unwrap(),
                    cheb_u(k, x).unwrap(),
                    cheb_u(k + 1, x).unwrap(),
                );
                assert!((up - (2.0 * x * u0 - um)).abs() <= 1e-9 * up.abs().max(1.0));
            }
        }
    }

    #[test]
    fn closed_forms_on_the_unit_interval() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0003);
        for _ in 0..200 {
            let u: f64 = rng.random_range(1e-6..PI - 1e-6);
            let x = u.cos();
            for k in 0..=100_i64 {
                let t = cheb_t(k, x).unwrap();
                assert_close(t, (k as f64 * u).cos(), 1e-10);
                let uval = cheb_u(k, x).unwrap();
                assert_close(uval * u.sin(), ((k as f64 + 1.0) * u).sin(), 1e-10);
            }
        }
    }

    #[test]
    fn large_order_closed_form_stays_accurate() {
        // k > 64 takes the closed-form path; compare against cos(ku).
        let u = 0.731_f64;
        let x = u.cos();
        for k in [65_i64, 200, 1000, 100_000] {
            assert_close(cheb_t(k, x).unwrap(), (k as f64 * u).cos(), 1e-9);
        }
        // Hyperbolic branch at a large argument stays finite and ordered.
        let big = cheb_t(80, 5.0).unwrap();
        assert!(big > cheb_t(79, 5.0).unwrap() && big.is_finite());
    }

    #[test]
    fn largest_roots() {
        assert!(largest_root_t(0).is_err());
        assert!(largest_root_u(-2).is_err());
        assert!(largest_root_t(1).unwrap().abs() <= 1e-15);
        assert!(largest_root_u(1).unwrap().abs() <= 1e-15);
        // T_2 = 2x^2 - 1 has roots +-1/sqrt(2) (quadratic formula)
        assert_close(largest_root_t(2).unwrap(), (0.5_f64).sqrt(), 1e-15);
        // U_2 = 4x^2 - 1 has largest root 1/2 (quadratic formula)
        assert_close(largest_root_u(2).unwrap(), 0.5, 1e-15);
        assert_close(largest_root_t(3).unwrap(), (PI / 6.0).cos(), 1e-15);
        assert_close(largest_root_u(3).unwrap(), (PI / 4.0).cos(), 1e-15);
        for k in 1..=40_i64 {
            let rt = largest_root_t(k).unwrap();
            assert!(cheb_t(k, rt).unwrap().abs() <= 1e-9);
            let ru = largest_root_u(k).unwrap();
            assert!(cheb_u(k, ru).unwrap().abs() <= 1e-9);
            // strictly positive beyond the largest root
            for step in 1..=4 {
                let x = rt + step as f64 * (1.0 - rt) / 5.0;
                assert!(cheb_t(k, x).unwrap() > 0.0);
                let x = ru + step as f64 * (1.0 - ru) / 5.0;
                assert!(cheb_u(k, x).unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau(0.0).unwrap(), 2); // pi / (pi/2)
        assert_eq!(tau(0.6).unwrap(), 3); // pi / 0.927295... = 3.388
        assert_eq!(tau(0.9).unwrap(), 6); // pi / 0.451027... = 6.965
        // boundary snapping: x = cos(pi/5) must give exactly 5
        assert_eq!(tau((PI / 5.0).cos()).unwrap(), 5);
        assert!(tau(-0.1).is_err());
        assert!(tau(1.0).is_err());
        assert!(tau(f64::NAN).is_err());
    }

    #[test]
    fn monotone_ranges() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0004);
        for _ in 0..50 {
            let x: f64 = rng.random_range(1.0 + 1e-9..5.0);
            let mut prev = cheb_t(0, x).unwrap();
            for k in 1..=30 {
                let cur = cheb_t(k, x).unwrap();
                assert!(cur > prev, "T_k({x}) not increasing at k={k}");
                prev = cur;
            }
        }
        for _ in 0..50 {
            let x: f64 = rng.random_range(0.0..0.99);
            let stop = tau(x).unwrap();
            let mut prev = cheb_t(1, x).unwrap();
            for k in 2..=stop {
                let cur = cheb_t(k, x).unwrap();
                assert!(cur < prev, "T_k({x}) not decreasing at k={k} (tau={stop})");
                prev = cur;
            }
        }
    }

    #[test]
    fn identity_residuals_examples() {
        let r = identity_residuals(1, 2, 3, 0.5).unwrap();
        assert!(r.within(IDENTITY_ATOL, IDENTITY_RTOL));
        // coincides symbol-by-symbol after reflection: residuals exactly zero
        let r = identity_residuals(0, 0, 0, 0.37).unwrap();
        assert_eq!(r.max_abs(), 0.0);
        // polynomial identities hold for every real q, including |q| > 1
        let r = identity_residuals(2, 5, 9, -1.3).unwrap();
        assert!(r.within(IDENTITY_ATOL, IDENTITY_RTOL));
    }

    #[test]
    fn identity_residual_sweep() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0005);
        for _ in 0..1000 {
            let i = rng.random_range(-8..=8_i64);
            let j = rng.random_range(-8..=8_i64);
            let k = rng.random_range(-8..=8_i64);
            let q: f64 = rng.random_range(-2.0..2.0);
            let r = identity_residuals(i, j, k, q).unwrap();
            assert!(
                r.within(IDENTITY_ATOL, IDENTITY_RTOL),
                "residual {:e} at ({i},{j},{k},{q}), scale {:e}",
                r.max_abs(),
                r.scale
            );
        }
    }

    #[test]
    fn cyclic_sine_sums_vanish_for_odd_lengths() {
        let mut rng = StdRng::seed_from_u64(0x5eed_0006);
        for &n in &[1usize, 3, 5, 7] {
            for _ in 0..100 {
                let xs: Vec<f64> = (0..n).map(|_| rng.random_range(-PI..PI)).collect();
                let (s, c) = cyclic_sine_sums(&xs).unwrap();
                assert!(s.abs() <= 1e-10, "sin-sum {s:e} for n={n}");
                assert!(c.abs() <= 1e-10, "cos-sum {c:e} for n={n}");
            }
        }
        assert!(cyclic_sine_sums(&[]).is_err());
    }

    #[test]
    fn cheb_eval_dispatch() {
        let e = ChebEval {
            kind: ChebKind::FirstKind,
            order: 2,
            argument: 2.0,
        };
        assert_close(e.value().unwrap(), 7.0, 1e-12);
        let e = ChebEval {
            kind: ChebKind::SecondKind,
            order: -1,
            argument: 0.7,
        };
        assert_eq!(e.value().unwrap(), 0.0);
    }
}
