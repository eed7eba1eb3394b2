//! Power means, the auxiliary sum `F_{r,k}`, and the minimax constants
//! bounding any power mean of a sequence's chord ratios from below.
//!
//! For an admissible sequence (nonnegative endpoints, positive interior)
//! the r-th power mean of the chord ratios is bounded below by a constant
//! depending only on the window span: exactly `(span-2)/(span-1)` for the
//! arithmetic mean, `(1+(-1)^{span-1})/4` for the geometric mean, and
//! `cos(pi/span)` for the maximum. For other positive exponents only lower
//! bounds are known, sharp when the span is 3 or 4.

use crate::error::{Error, Result};
use crate::sequences::{chord_ratios, WindowSequence};
use serde::Serialize;
use std::f64::consts::PI;

/// Selector for the k-variable r-th power mean, `r` in `[-inf, +inf]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSpec {
    exponent: f64,
}

impl MeanSpec {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_nan() {
            return Err(Error::domain("mean exponent must not be NaN"));
        }
        Ok(MeanSpec { exponent: r })
    }

    pub const fn arithmetic() -> Self {
        MeanSpec { exponent: 1.0 }
    }

    pub const fn geometric() -> Self {
        MeanSpec { exponent: 0.0 }
    }

    pub const fn maximum() -> Self {
        MeanSpec {
            exponent: f64::INFINITY,
        }
    }

    pub const fn minimum() -> Self {
        MeanSpec {
            exponent: f64::NEG_INFINITY,
        }
    }

    pub fn exponent(self) -> f64 {
        self.exponent
    }
}

/// Provenance of a [`BoundReport`] value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundSource {
    ArithmeticExact,
    GeometricExact,
    MaxExact,
    PowerLower,
    PowerLowerOdd,
}

/// A lower bound for the minimax constant `C_M`, flagged exact only in the
/// cases where sharpness is proved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub value: f64,
    pub exact: bool,
    pub source: BoundSource,
}

fn check_positive_entries(u: &[f64]) -> Result<()> {
    if u.is_empty() {
        return Err(Error::domain("mean of an empty array is undefined"));
    }
    if let Some(v) = u.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
        return Err(Error::domain(format!(
            "entries must be positive and finite, got {v}"
        )));
    }
    Ok(())
}

/// The k-variable r-th power mean of positive entries: min at `r = -inf`,
/// geometric mean at `r = 0`, max at `r = +inf`, `((sum u_i^r)/k)^{1/r}`
/// otherwise. The geometric mean is computed in log space.
pub fn power_mean(spec: MeanSpec, u: &[f64]) -> Result<f64> {
    check_positive_entries(u)?;
    Ok(power_mean_impl(spec.exponent(), u))
}

// Assumes a nonempty slice of nonnegative entries. Zeros take their limit
// values: they force the mean to 0 for every r <= 0 and contribute 0^r = 0
// for finite r > 0; IEEE semantics of ln/powf produce exactly that.
fn power_mean_impl(r: f64, u: &[f64]) -> f64 {
    let k = u.len() as f64;
    if r == f64::NEG_INFINITY {
        u.iter().copied().fold(f64::INFINITY, f64::min)
    } else if r == f64::INFINITY {
        u.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    } else if r == 0.0 {
        (u.iter().map(|v| v.ln()).sum::<f64>() / k).exp()
    } else {
        (u.iter().map(|v| v.powf(r)).sum::<f64>() / k).powf(1.0 / r)
    }
}

fn check_positive_finite_r(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::domain(format!(
            "exponent r must be positive and finite, got {r}"
        )));
    }
    Ok(())
}

/// `F_{r,k}(u) = u_1^r + sum_{i=1}^{k-1} (1/u_i + u_{i+1})^r + 1/u_k^r`
/// for `r > 0` and positive `u`.
pub fn f_rk(r: f64, u: &[f64]) -> Result<f64> {
    check_positive_finite_r(r)?;
    check_positive_entries(u)?;
    let mut sum = u[0].powf(r) + u[u.len() - 1].powf(-r);
    for w in u.windows(2) {
        sum += (1.0 / w[0] + w[1]).powf(r);
    }
    Ok(sum)
}

/// The family of lower bounds for `F_{r,k}` and their maximum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FLowerBounds {
    /// Piecewise bound: `2` for `k = 1`, `2^{(r+1)/2} + (k-2) 2^r + 2^{(r+1)/2}`
    /// for `k >= 2, r <= 1`, and
    /// `2^r k^{1-r} (2^{(1-r)/(2r)} + (k-2) + 2^{(1-r)/(2r)})^r` for `r >= 1`.
    pub primary: f64,
    /// `k 2^{r + (1-r)/k}`, valid for every k.
    pub secondary: f64,
    /// `k + 1`, valid for odd k only; beats the others for small r.
    pub odd_bonus: Option<f64>,
    /// Largest applicable bound.
    pub best: f64,
}

/// Lower bounds for `F_{r,k}`, sharp for `k in {1, 2}` and for `r = 1`.
pub fn f_lower_bound(r: f64, k: usize) -> Result<FLowerBounds> {
    check_positive_finite_r(r)?;
    if k < 1 {
        return Err(Error::domain("k must be at least 1"));
    }
    let kf = k as f64;
    let primary = if k == 1 {
        2.0
    } else if r <= 1.0 {
        2.0 * ((r + 1.0) / 2.0).exp2() + (kf - 2.0) * r.exp2()
    } else {
        r.exp2() * kf.powf(1.0 - r) * (2.0 * ((1.0 - r) / (2.0 * r)).exp2() + (kf - 2.0)).powf(r)
    };
    let secondary = kf * (r + (1.0 - r) / kf).exp2();
    let odd_bonus = (k % 2 == 1).then_some(kf + 1.0);
    let best = primary.max(secondary).max(odd_bonus.unwrap_or(f64::NEG_INFINITY));
    Ok(FLowerBounds {
        primary,
        secondary,
        odd_bonus,
        best,
    })
}

fn check_window(n: i64, m: i64) -> Result<i64> {
    let span = m - n;
    if span < 2 {
        return Err(Error::domain(format!(
            "window must satisfy m - n >= 2, got n = {n}, m = {m}"
        )));
    }
    Ok(span)
}

/// The minimax constant `C_M` for the mean `M` on windows `{n, ..., m}`:
/// the largest constant below every admissible sequence's mean of chord
/// ratios. Exact for the arithmetic, geometric, and maximum means; a lower
/// bound otherwise, flagged exact only for spans 3 and 4.
pub fn c_constant(spec: MeanSpec, n: i64, m: i64) -> Result<BoundReport> {
    let span = check_window(n, m)?;
    let spanf = span as f64;
    let r = spec.exponent();

    if r == 1.0 {
        return Ok(BoundReport {
            value: (spanf - 2.0) / (spanf - 1.0),
            exact: true,
            source: BoundSource::ArithmeticExact,
        });
    }
    if r == 0.0 {
        let value = if span % 2 == 0 { 0.0 } else { 0.5 };
        return Ok(BoundReport {
            value,
            exact: true,
            source: BoundSource::GeometricExact,
        });
    }
    if r == f64::INFINITY {
        return Ok(BoundReport {
            value: (PI / spanf).cos(),
            exact: true,
            source: BoundSource::MaxExact,
        });
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::domain(format!(
            "no bound is available for exponent r = {r}; supported: r = 0, finite r > 0, r = +inf"
        )));
    }

    // finite positive r, r != 1
    let value = if span == 2 {
        0.0
    } else if span == 3 {
        0.5
    } else if r <= 1.0 {
        ((2.0 * ((1.0 - r) / 2.0).exp2() + (spanf - 4.0)) / (spanf - 1.0)).powf(1.0 / r)
    } else {
        ((spanf - 2.0) / (spanf - 1.0)).powf(1.0 / r)
            * (2.0 * ((1.0 - r) / (2.0 * r)).exp2() + (spanf - 4.0))
            / (spanf - 2.0)
    };
    let (value, source) = if span % 2 == 1 && 0.5 > value {
        (0.5, BoundSource::PowerLowerOdd)
    } else {
        (value, BoundSource::PowerLower)
    };
    Ok(BoundReport {
        value,
        exact: span == 3 || span == 4,
        source,
    })
}

/// Apply `spec` to the chord ratios of `p`. Requires nonnegative endpoints
/// and a positive interior; the result is never below the matching
/// [`c_constant`].
///
/// Zero endpoints can make a boundary ratio zero (e.g. `(0, 1, 0)`); such
/// ratios enter the mean with their limit conventions rather than being
/// rejected.
pub fn mean_of_chord_ratios(spec: MeanSpec, p: &WindowSequence) -> Result<f64> {
    let first = p.values()[0];
    let last = p.values()[p.len() - 1];
    if first < 0.0 || last < 0.0 {
        return Err(Error::domain(format!(
            "endpoints must be nonnegative, got p_n = {first}, p_m = {last}"
        )));
    }
    let ratios = chord_ratios(p)?;
    Ok(power_mean_impl(spec.exponent(), &ratios))
}

/// A sequence witnessing (or approaching) the sharpness of `c_constant`.
///
/// - `r = 1`: `(0, 1, ..., 1, 0)`, exact.
/// - `r = +inf`: the sine sequence `sin((i-n) pi / span)`, exact
///   (`epsilon` ignored).
/// - `r = 0`, even span: `(eps, 1, eps, ..., eps)`, mean `eps^{1/(span-1)}`.
/// - `r = 0`, odd span: the eps-power sequence with mean `(1+eps)/2`.
/// - other finite `r > 0`: no sharp witness is known; returns the sine
///   sequence (whose mean upper-bounds `C` but need not attain it).
pub fn sharpness_witness(spec: MeanSpec, n: i64, m: i64, epsilon: f64) -> Result<WindowSequence> {
    let span = check_window(n, m)?;
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::domain(format!(
            "epsilon must be positive and finite, got {epsilon}"
        )));
    }
    let r = spec.exponent();
    if r == 1.0 {
        return WindowSequence::from_fn(n, m, |i| if i == n || i == m { 0.0 } else { 1.0 });
    }
    if r == 0.0 {
        if span % 2 == 0 {
            return WindowSequence::from_fn(n, m, |i| if (i - n) % 2 == 0 { epsilon } else { 1.0 });
        }
        return WindowSequence::from_fn(n, m, |i| {
            let e = if (i - n) % 2 == 0 {
                (m - i - 1) / 2
            } else {
                (i - n - 1) / 2
            };
            epsilon.powi(e as i32)
        });
    }
    if r == f64::INFINITY || (r.is_finite() && r > 0.0) {
        // sin((i-n) pi / span); the endpoints are exact zeros of the sine
        return WindowSequence::from_fn(n, m, |i| {
            if i == n || i == m {
                0.0
            } else {
                ((i - n) as f64 * PI / span as f64).sin()
            }
        });
    }
    Err(Error::domain(format!(
        "no witness is available for exponent r = {r}; supported: r = 0, finite r > 0, r = +inf"
    )))
}

/// Both sides of the cosine inequality `(m-4+sqrt(2))/(m-2) <= cos(pi/m)`
/// for `m >= 3`; equality holds at `m = 4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CosineBound {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

pub fn cosine_bound_check(m: i64) -> Result<CosineBound> {
    if m < 3 {
        return Err(Error::domain(format!("m must be at least 3, got {m}")));
    }
    let mf = m as f64;
    let lhs = (mf - 4.0 + std::f64::consts::SQRT_2) / (mf - 2.0);
    let rhs = (PI / mf).cos();
    let holds = lhs <= rhs + 1e-12;
    Ok(CosineBound { lhs, rhs, holds })
}
