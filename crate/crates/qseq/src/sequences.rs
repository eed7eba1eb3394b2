//! Finite real sequences on an integer window `{n, ..., m}` and their
//! q-convexity structure.
//!
//! A sequence is q-convex when `2q p_i <= p_{i-1} + p_{i+1}` at every
//! interior index, q-concave under the reversed inequality, and q-affine
//! when both hold. q-affine sequences form a two-dimensional space spanned
//! by `U_{i-n}(q)` and `T_{i-n}(q)`; q-concave sequences are pointwise
//! minima of q-affine ones, which this module materializes as support
//! chords and min-envelopes.

use crate::chebyshev::{eval_t, eval_u, IDENTITY_ATOL, IDENTITY_RTOL};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Default relative tolerance for the floating-point inequality checks.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// A real-valued sequence indexed over a window `{start, ..., end}` with
/// `end - start >= 2`. The start may be negative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWindowSequence")]
pub struct WindowSequence {
    start: i64,
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct RawWindowSequence {
    start: i64,
    values: Vec<f64>,
}

impl TryFrom<RawWindowSequence> for WindowSequence {
    type Error = Error;
    fn try_from(raw: RawWindowSequence) -> Result<Self> {
        WindowSequence::new(raw.start, raw.values)
    }
}

impl WindowSequence {
    pub fn new(start: i64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::domain(format!(
                "window must satisfy end - start >= 2, got {} value(s)",
                values.len()
            )));
        }
        if start.checked_add(values.len() as i64 - 1).is_none() {
            return Err(Error::domain("window end overflows the index range"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!("sequence values must be finite, got {v}")));
        }
        Ok(WindowSequence { start, values })
    }

    /// Build from a closure over absolute indices.
    pub fn from_fn(start: i64, end: i64, f: impl FnMut(i64) -> f64) -> Result<Self> {
        if end - start < 2 {
            return Err(Error::domain(format!(
                "window must satisfy end - start >= 2, got [{start}, {end}]"
            )));
        }
        let values = (start..=end).map(f).collect();
        WindowSequence::new(start, values)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction enforces at least three values
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at absolute index `i`; panics outside the window.
    pub fn value_at(&self, i: i64) -> f64 {
        assert!(
            i >= self.start && i <= self.end(),
            "index {i} outside window [{}, {}]",
            self.start,
            self.end()
        );
        self.values[(i - self.start) as usize]
    }

    /// Interior indices `start+1 ..= end-1`.
    pub fn interior(&self) -> impl Iterator<Item = i64> {
        self.start + 1..self.end()
    }

    fn interior_positive(&self) -> bool {
        self.values[1..self.values.len() - 1].iter().all(|&v| v > 0.0)
    }
}

/// Coefficients of the q-affine sequence `p_i = a U_{i-n}(q) + b T_{i-n}(q)`
/// anchored at window start `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawAffineRep")]
pub struct AffineRep {
    a: f64,
    b: f64,
    q: f64,
    start: i64,
}

#[derive(Deserialize)]
struct RawAffineRep {
    a: f64,
    b: f64,
    q: f64,
    start: i64,
}

impl TryFrom<RawAffineRep> for AffineRep {
    type Error = Error;
    fn try_from(raw: RawAffineRep) -> Result<Self> {
        AffineRep::new(raw.a, raw.b, raw.q, raw.start)
    }
}

impl AffineRep {
    pub fn new(a: f64, b: f64, q: f64, start: i64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::domain("affine coefficients must be finite"));
        }
        check_q(q)?;
        Ok(AffineRep { a, b, q, start })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn start(&self) -> i64 {
        self.start
    }
}

/// Verdict of [`classify`] at a particular `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    QConvex,
    QConcave,
    QAffine,
    Neither,
}

/// Classification of a sequence at a given `q`, together with the chord-ratio
/// thresholds when the interior is positive: such a sequence is q-convex for
/// exactly the `q` up to the minimum ratio and q-concave from the maximum
/// ratio upward.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub convexity_threshold: Option<f64>,
    pub concavity_threshold: Option<f64>,
}

fn check_q(q: f64) -> Result<()> {
    if !q.is_finite() || q <= 0.0 {
        return Err(Error::domain(format!("q must be positive and finite, got {q}")));
    }
    Ok(())
}

// Tolerance for one three-term inequality at interior index i.
fn qj_tol(rel: f64, q: f64, left: f64, center: f64, right: f64) -> f64 {
    rel * (1.0 + left.abs() + right.abs() + 2.0 * q * center.abs())
}

fn ineq_tol(lhs: f64, rhs: f64) -> f64 {
    IDENTITY_ATOL + IDENTITY_RTOL * lhs.abs().max(rhs.abs())
}

/// Chord ratios `(p_{i-1} + p_{i+1}) / (2 p_i)` over the interior indices.
///
/// Requires a positive interior; the endpoints are unconstrained.
pub fn chord_ratios(p: &WindowSequence) -> Result<Vec<f64>> {
    let v = p.values();
    for (off, w) in v.windows(3).enumerate() {
        if w[1] <= 0.0 {
            return Err(Error::domain(format!(
                "chord ratios require a positive interior; p[{}] = {}",
                p.start() + off as i64 + 1,
                w[1]
            )));
        }
    }
    Ok(v.windows(3).map(|w| (w[0] + w[2]) / (2.0 * w[1])).collect())
}

/// Classify `p` at `q` with the default tolerance.
pub fn classify(p: &WindowSequence, q: f64) -> Result<Classification> {
    classify_with_tol(p, q, DEFAULT_REL_TOL)
}

/// Classify `p` at `q`, treating each inequality as satisfied up to
/// `rel_tol * (1 + |p_{i-1}| + |p_{i+1}| + 2q|p_i|)`.
pub fn classify_with_tol(p: &WindowSequence, q: f64, rel_tol: f64) -> Result<Classification> {
    check_q(q)?;
    let mut convex = true;
    let mut concave = true;
    for w in p.values().windows(3) {
        let lhs = 2.0 * q * w[1];
        let rhs = w[0] + w[2];
        let tol = qj_tol(rel_tol, q, w[0], w[1], w[2]);
        if lhs > rhs + tol {
            convex = false;
        }
        if rhs > lhs + tol {
            concave = false;
        }
    }
    let verdict = match (convex, concave) {
        (true, true) => Verdict::QAffine,
        (true, false) => Verdict::QConvex,
        (false, true) => Verdict::QConcave,
        (false, false) => Verdict::Neither,
    };
    let (convexity_threshold, concavity_threshold) = if p.interior_positive() {
        let ratios = chord_ratios(p)?;
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (Some(min), Some(max))
    } else {
        (None, None)
    };
    Ok(Classification {
        verdict,
        convexity_threshold,
        concavity_threshold,
    })
}

fn is_q_concave(p: &WindowSequence, q: f64, rel_tol: f64) -> Result<bool> {
    let verdict = classify_with_tol(p, q, rel_tol)?.verdict;
    Ok(matches!(verdict, Verdict::QConcave | Verdict::QAffine))
}

/// Materialize `p_i = a U_{i-n}(q) + b T_{i-n}(q)` on `{n, ..., end}`.
pub fn make_affine(rep: &AffineRep, end: i64) -> Result<WindowSequence> {
    WindowSequence::from_fn(rep.start, end, |i| {
        let k = i - rep.start;
        rep.a * eval_u(k, rep.q) + rep.b * eval_t(k, rep.q)
    })
}

/// Recover the `(a, b)` coefficients of a q-affine sequence from its first
/// two values: `a = p_{n+1}/q - p_n`, `b = 2 p_n - p_{n+1}/q`.
pub fn affine_coeffs(p: &WindowSequence, q: f64) -> Result<AffineRep> {
    affine_coeffs_with_tol(p, q, DEFAULT_REL_TOL)
}

pub fn affine_coeffs_with_tol(p: &WindowSequence, q: f64, rel_tol: f64) -> Result<AffineRep> {
    let cls = classify_with_tol(p, q, rel_tol)?;
    if cls.verdict != Verdict::QAffine {
        return Err(Error::precondition(format!(
            "sequence is not q-affine at q = {q} (verdict {:?})",
            cls.verdict
        )));
    }
    let p0 = p.values()[0];
    let p1 = p.values()[1];
    AffineRep::new(p1 / q - p0, 2.0 * p0 - p1 / q, q, p.start())
}

/// Outcome of one three-term inequality
/// `U_{k-j-1}(q) p_i + U_{j-i-1}(q) p_k <= U_{k-i-1}(q) p_j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThreeTermReport {
    pub lhs: f64,
    pub rhs: f64,
    /// Whether `q >= cos(pi / max(j-i, k-j))`, the hypothesis under which
    /// the inequality is guaranteed for q-concave sequences.
    pub condition_met: bool,
    pub holds: bool,
}

/// Evaluate the three-term inequality at indices `i < j < k` of `p`.
///
/// Equality holds for q-affine sequences at every triple.
pub fn three_term_inequality(
    p: &WindowSequence,
    q: f64,
    i: i64,
    j: i64,
    k: i64,
) -> Result<ThreeTermReport> {
    if !(p.start() <= i && i < j && j < k && k <= p.end()) {
        return Err(Error::domain(format!(
            "indices must satisfy {} <= i < j < k <= {}, got ({i}, {j}, {k})",
            p.start(),
            p.end()
        )));
    }
    if !q.is_finite() {
        return Err(Error::domain("q must be finite"));
    }
    let lhs = eval_u(k - j - 1, q) * p.value_at(i) + eval_u(j - i - 1, q) * p.value_at(k);
    let rhs = eval_u(k - i - 1, q) * p.value_at(j);
    let gap = (j - i).max(k - j);
    let condition_met = q >= (PI / gap as f64).cos();
    let holds = lhs <= rhs + ineq_tol(lhs, rhs);
    Ok(ThreeTermReport {
        lhs,
        rhs,
        condition_met,
        holds,
    })
}

/// Outcome of the symmetric inequality `p_{i-j} + p_{i+j} <= 2 T_j(q) p_i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetricReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluate the symmetric inequality at interior index `i` and offset
/// `j in {1, ..., min(i-n, m-i)}`. Equality holds on q-affine sequences.
pub fn symmetric_inequality(p: &WindowSequence, q: f64, i: i64, j: i64) -> Result<SymmetricReport> {
    if i <= p.start() || i >= p.end() {
        return Err(Error::domain(format!(
            "i must be an interior index of [{}, {}], got {i}",
            p.start(),
            p.end()
        )));
    }
    let max_j = (i - p.start()).min(p.end() - i);
    if j < 1 || j > max_j {
        return Err(Error::domain(format!(
            "offset j must lie in 1..={max_j}, got {j}"
        )));
    }
    if !q.is_finite() {
        return Err(Error::domain("q must be finite"));
    }
    let lhs = p.value_at(i - j) + p.value_at(i + j);
    let rhs = 2.0 * eval_t(j, q) * p.value_at(i);
    let holds = lhs <= rhs + ineq_tol(lhs, rhs);
    Ok(SymmetricReport { lhs, rhs, holds })
}

// Chord values with the numerically safe route per region: the anchors are
// copied exactly; strictly inside them every term of the closed form
// U_{i-j-1}(q) r_k/U_{k-j-1}(q) + U_{k-i-1}(q) r_j/U_{k-j-1}(q) is positive
// (q exceeds the largest root of every factor), so no cancellation occurs;
// outside, the three-term recurrence is run outward from the nearest
// adjacent pair, following the locally growing solution.
fn chord_values(p: &WindowSequence, q: f64, j: i64, k: i64, denom: f64) -> Result<WindowSequence> {
    let n = p.start();
    let m = p.end();
    let pj = p.value_at(j);
    let pk = p.value_at(k);
    let mut r = vec![0.0; p.len()];
    let at = |i: i64| (i - n) as usize;
    r[at(j)] = pj;
    r[at(k)] = pk;
    for i in j + 1..k {
        r[at(i)] = (pk * eval_u(i - j - 1, q) + pj * eval_u(k - i - 1, q)) / denom;
    }
    if j > n {
        let mut cur = pj;
        let mut right = if k == j + 1 { pk } else { r[at(j + 1)] };
        for i in (n..j).rev() {
            let v = 2.0 * q * cur - right;
            r[at(i)] = v;
            right = cur;
            cur = v;
        }
    }
    if k < m {
        let mut cur = pk;
        let mut left = if k == j + 1 { pj } else { r[at(k - 1)] };
        for i in k + 1..=m {
            let v = 2.0 * q * cur - left;
            r[at(i)] = v;
            left = cur;
            cur = v;
        }
    }
    WindowSequence::new(n, r)
}

/// The q-affine sequence through `(j, p_j)` and `(k, p_k)`.
///
/// For q-concave `p` with `q > cos(pi/(k-j))` the chord matches `p` at `j`
/// and `k`, lies below it strictly between them, and above it outside.
pub fn support_chord(p: &WindowSequence, q: f64, j: i64, k: i64) -> Result<WindowSequence> {
    support_chord_with_tol(p, q, j, k, DEFAULT_REL_TOL)
}

pub fn support_chord_with_tol(
    p: &WindowSequence,
    q: f64,
    j: i64,
    k: i64,
    rel_tol: f64,
) -> Result<WindowSequence> {
    if !(p.start() <= j && j < k && k <= p.end()) {
        return Err(Error::domain(format!(
            "chord anchors must satisfy {} <= j < k <= {}, got ({j}, {k})",
            p.start(),
            p.end()
        )));
    }
    check_q(q)?;
    let bound = (PI / (k - j) as f64).cos();
    if q <= bound {
        return Err(Error::precondition(format!(
            "support chord requires q > cos(pi/(k-j)) = {bound}, got q = {q}"
        )));
    }
    if !is_q_concave(p, q, rel_tol)? {
        return Err(Error::precondition(format!(
            "support chord requires a q-concave sequence at q = {q}"
        )));
    }
    let denom = eval_u(k - j - 1, q);
    if denom <= 1e-14 {
        return Err(Error::precondition(format!(
            "U_{{k-j-1}}(q) = {denom} is not positive; chord is ill-defined"
        )));
    }
    chord_values(p, q, j, k, denom)
}

/// One q-affine dominating sequence per consecutive pair of `p`: member `j`
/// agrees with `p` at `j` and `j+1` and lies on or above `p` everywhere.
/// The pointwise minimum of the materialized members reproduces `p`.
///
/// Requires a positive interior, `q > cos(pi/(m-n))`, and q-concavity; under
/// these the dominance hypotheses hold at every triple the chords touch.
pub fn affine_envelope(p: &WindowSequence, q: f64) -> Result<Vec<AffineRep>> {
    affine_envelope_with_tol(p, q, DEFAULT_REL_TOL)
}

pub fn affine_envelope_with_tol(
    p: &WindowSequence,
    q: f64,
    rel_tol: f64,
) -> Result<Vec<AffineRep>> {
    check_q(q)?;
    if !p.interior_positive() {
        return Err(Error::precondition(
            "affine envelope requires a positive interior",
        ));
    }
    let span = p.end() - p.start();
    let bound = (PI / span as f64).cos();
    if q <= bound {
        return Err(Error::precondition(format!(
            "affine envelope requires q > cos(pi/(m-n)) = {bound}, got q = {q}"
        )));
    }
    if !is_q_concave(p, q, rel_tol)? {
        return Err(Error::precondition(format!(
            "affine envelope requires a q-concave sequence at q = {q}"
        )));
    }
    let n = p.start();
    let mut members = Vec::with_capacity(span as usize);
    for j in n..p.end() {
        // chord through (j, j+1), extended across the window
        let chord = chord_values(p, q, j, j + 1, 1.0)?;
        let r0 = chord.value_at(n);
        let r1 = chord.value_at(n + 1);
        members.push(AffineRep::new(r1 / q - r0, 2.0 * r0 - r1 / q, q, n)?);
    }
    Ok(members)
}

fn check_same_window(ps: &[WindowSequence]) -> Result<()> {
    if ps.is_empty() {
        return Err(Error::domain("need at least one sequence"));
    }
    let (start, len) = (ps[0].start(), ps[0].len());
    if ps.iter().any(|p| p.start() != start || p.len() != len) {
        return Err(Error::domain("sequences must share the same window"));
    }
    Ok(())
}

/// Index-wise minimum of sequences on a common window. Preserves
/// q-concavity: the minimum of q-concave sequences is q-concave.
pub fn pointwise_min(ps: &[WindowSequence]) -> Result<WindowSequence> {
    check_same_window(ps)?;
    let mut values = ps[0].values().to_vec();
    for p in &ps[1..] {
        for (v, &w) in values.iter_mut().zip(p.values()) {
            *v = v.min(w);
        }
    }
    WindowSequence::new(ps[0].start(), values)
}

/// Index-wise maximum; preserves q-convexity.
pub fn pointwise_max(ps: &[WindowSequence]) -> Result<WindowSequence> {
    check_same_window(ps)?;
    let mut values = ps[0].values().to_vec();
    for p in &ps[1..] {
        for (v, &w) in values.iter_mut().zip(p.values()) {
            *v = v.max(w);
        }
    }
    WindowSequence::new(ps[0].start(), values)
}
