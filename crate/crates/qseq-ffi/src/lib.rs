//! C ABI for the qseq library.
//!
//! Conventions:
//! - Handles (`QseqSequence`, `QseqProblem`) are opaque; create them with
//!   the matching `_new` function and release them with `_free`.
//! - Every function returns a [`QseqStatus`]; outputs are written through
//!   pointers only on `QSEQ_STATUS_OK`.
//! - On failure, `qseq_last_error_message` returns a thread-local,
//!   NUL-terminated description valid until the next failing call on the
//!   same thread.
//! - Buffer-filling functions take the buffer length and fail with
//!   `QSEQ_STATUS_INVALID_ARGUMENT` on a size mismatch.

use qseq::chebyshev::{self, IdentityResiduals};
use qseq::contraction::ContractionProblem;
use qseq::means::{self, BoundSource, MeanSpec};
use qseq::sequences::{self, AffineRep, Verdict, WindowSequence};
use std::cell::RefCell;
use std::ffi::{c_char, CString};

/// Status code returned by every qseq function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QseqStatus {
    /// Success.
    Ok = 0,
    /// Null pointer, bad buffer length, or otherwise malformed call.
    InvalidArgument = 1,
    /// An argument lies outside the operation's domain.
    DomainError = 2,
    /// Arguments are valid but violate a precondition.
    PreconditionError = 3,
    /// Fixed-point iteration hit the iteration cap.
    NoConvergence = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn fail(err: qseq::Error) -> QseqStatus {
    let status = match &err {
        qseq::Error::Domain(_) => QseqStatus::DomainError,
        qseq::Error::Precondition(_) | qseq::Error::NotContraction { .. } => {
            QseqStatus::PreconditionError
        }
        qseq::Error::NoConvergence { .. } => QseqStatus::NoConvergence,
    };
    set_error(err.to_string());
    status
}

fn invalid(msg: &str) -> QseqStatus {
    set_error(msg.to_string());
    QseqStatus::InvalidArgument
}

/// Message describing the most recent failure on this thread, or NULL when
/// no failure has been recorded. The pointer stays valid until the next
/// failing qseq call on the same thread.
#[no_mangle]
pub extern "C" fn qseq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

// ---- small utilities ----------------------------------------------------

unsafe fn slice_in<'a>(ptr: *const f64, len: usize) -> Option<&'a [f64]> {
    if ptr.is_null() && len > 0 {
        None
    } else if len == 0 {
        Some(&[])
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

unsafe fn write_out<T>(ptr: *mut T, value: T) -> QseqStatus {
    if ptr.is_null() {
        return invalid("output pointer is null");
    }
    ptr.write(value);
    QseqStatus::Ok
}

macro_rules! out_or_invalid {
    ($ptr:expr) => {
        if $ptr.is_null() {
            return invalid("output pointer is null");
        }
    };
}

// ---- Chebyshev ------------------------------------------------------------

/// Evaluate the first-kind Chebyshev polynomial T_order(x).
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn qseq_cheb_t(order: i64, x: f64, out: *mut f64) -> QseqStatus {
    match chebyshev::cheb_t(order, x) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Evaluate the second-kind Chebyshev polynomial U_order(x).
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn qseq_cheb_u(order: i64, x: f64, out: *mut f64) -> QseqStatus {
    match chebyshev::cheb_u(order, x) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Largest root of T_order, cos(pi/(2 order)); requires order >= 1.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn qseq_largest_root_t(order: i64, out: *mut f64) -> QseqStatus {
    match chebyshev::largest_root_t(order) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Largest root of U_order, cos(pi/(order+1)); requires order >= 1.
///
/// # Safety
/// `out` must point to writable memory for one double.
#[no_mangle]
pub unsafe extern "C" fn qseq_largest_root_u(order: i64, out: *mut f64) -> QseqStatus {
    match chebyshev::largest_root_u(order) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// floor(pi/arccos(x)) for 0 <= x < 1, the last strictly decreasing index
/// of (T_k(x))_{k>=1}.
///
/// # Safety
/// `out` must point to writable memory for one int64.
#[no_mangle]
pub unsafe extern "C" fn qseq_tau(x: f64, out: *mut i64) -> QseqStatus {
    match chebyshev::tau(x) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Residuals of the six T/U product identities at (i, j, k, q); all are
/// zero up to rounding for every input.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqIdentityResiduals {
    pub idu_u: f64,
    pub idu_t: f64,
    pub ut_u: f64,
    pub ut_t: f64,
    pub ut1: f64,
    pub ut2: f64,
    /// Largest participating term magnitude, for relative comparisons.
    pub scale: f64,
}

impl From<IdentityResiduals> for QseqIdentityResiduals {
    fn from(r: IdentityResiduals) -> Self {
        QseqIdentityResiduals {
            idu_u: r.idu_u,
            idu_t: r.idu_t,
            ut_u: r.ut_u,
            ut_t: r.ut_t,
            ut1: r.ut1,
            ut2: r.ut2,
            scale: r.scale,
        }
    }
}

/// Evaluate the identity residual record at (i, j, k, q).
///
/// # Safety
/// `out` must point to writable memory for one `QseqIdentityResiduals`.
#[no_mangle]
pub unsafe extern "C" fn qseq_identity_residuals(
    i: i64,
    j: i64,
    k: i64,
    q: f64,
    out: *mut QseqIdentityResiduals,
) -> QseqStatus {
    match chebyshev::identity_residuals(i, j, k, q) {
        Ok(r) => write_out(out, r.into()),
        Err(e) => fail(e),
    }
}

// ---- sequences ------------------------------------------------------------

/// Opaque handle to a windowed sequence.
pub struct QseqSequence {
    inner: WindowSequence,
}

fn seq_ref<'a>(ptr: *const QseqSequence) -> Option<&'a WindowSequence> {
    unsafe { ptr.as_ref().map(|s| &s.inner) }
}

fn boxed_sequence(seq: WindowSequence, out: *mut *mut QseqSequence) -> QseqStatus {
    if out.is_null() {
        return invalid("output pointer is null");
    }
    unsafe {
        *out = Box::into_raw(Box::new(QseqSequence { inner: seq }));
    }
    QseqStatus::Ok
}

/// Create a sequence on the window {start, ..., start + len - 1}; len must
/// be at least 3 and every value finite.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_new(
    start: i64,
    values: *const f64,
    len: usize,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let Some(values) = slice_in(values, len) else {
        return invalid("values pointer is null");
    };
    match WindowSequence::new(start, values.to_vec()) {
        Ok(seq) => boxed_sequence(seq, out),
        Err(e) => fail(e),
    }
}

/// Release a sequence handle; NULL is ignored.
///
/// # Safety
/// `seq` must be a pointer from a qseq function, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_free(seq: *mut QseqSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Window start index of a sequence.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_start(seq: *const QseqSequence, out: *mut i64) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    write_out(out, s.start())
}

/// Number of values in a sequence.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_len(seq: *const QseqSequence, out: *mut usize) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    write_out(out, s.len())
}

/// Copy the sequence values into `buf` (length must equal the sequence
/// length).
///
/// # Safety
/// `seq` must be a live handle; `buf` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_values(
    seq: *const QseqSequence,
    buf: *mut f64,
    len: usize,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    if buf.is_null() || len != s.len() {
        return invalid("buffer is null or has the wrong length");
    }
    std::slice::from_raw_parts_mut(buf, len).copy_from_slice(s.values());
    QseqStatus::Ok
}

/// Chord ratios (p_{i-1}+p_{i+1})/(2 p_i) over the interior; `buf` length
/// must equal sequence length - 2. Requires a positive interior.
///
/// # Safety
/// `seq` must be a live handle; `buf` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_chord_ratios(
    seq: *const QseqSequence,
    buf: *mut f64,
    len: usize,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    if buf.is_null() || len != s.len() - 2 {
        return invalid("buffer is null or has the wrong length");
    }
    match sequences::chord_ratios(s) {
        Ok(r) => {
            std::slice::from_raw_parts_mut(buf, len).copy_from_slice(&r);
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Verdict of a classification at a given q.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QseqVerdict {
    QConvex = 0,
    QConcave = 1,
    QAffine = 2,
    Neither = 3,
}

impl From<Verdict> for QseqVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::QConvex => QseqVerdict::QConvex,
            Verdict::QConcave => QseqVerdict::QConcave,
            Verdict::QAffine => QseqVerdict::QAffine,
            Verdict::Neither => QseqVerdict::Neither,
        }
    }
}

/// Classification result. The thresholds are the min/max chord ratios and
/// are present only when the interior is positive.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqClassification {
    pub verdict: QseqVerdict,
    pub has_thresholds: bool,
    pub convexity_threshold: f64,
    pub concavity_threshold: f64,
}

/// Classify a sequence at q (q-convex / q-concave / q-affine / neither).
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_sequence_classify(
    seq: *const QseqSequence,
    q: f64,
    out: *mut QseqClassification,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    match sequences::classify(s, q) {
        Ok(c) => write_out(
            out,
            QseqClassification {
                verdict: c.verdict.into(),
                has_thresholds: c.convexity_threshold.is_some(),
                convexity_threshold: c.convexity_threshold.unwrap_or(f64::NAN),
                concavity_threshold: c.concavity_threshold.unwrap_or(f64::NAN),
            },
        ),
        Err(e) => fail(e),
    }
}

/// Coefficients of the representation p_i = a U_{i-start}(q) + b T_{i-start}(q).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqAffineCoeffs {
    pub a: f64,
    pub b: f64,
    pub q: f64,
    pub start: i64,
}

/// Materialize a q-affine sequence from coefficients on {start, ..., end}.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_make_affine(
    coeffs: QseqAffineCoeffs,
    end: i64,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let rep = match AffineRep::new(coeffs.a, coeffs.b, coeffs.q, coeffs.start) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    match sequences::make_affine(&rep, end) {
        Ok(seq) => boxed_sequence(seq, out),
        Err(e) => fail(e),
    }
}

/// Recover the (a, b) coefficients of a q-affine sequence.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_affine_coeffs(
    seq: *const QseqSequence,
    q: f64,
    out: *mut QseqAffineCoeffs,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    match sequences::affine_coeffs(s, q) {
        Ok(rep) => write_out(
            out,
            QseqAffineCoeffs {
                a: rep.a(),
                b: rep.b(),
                q: rep.q(),
                start: rep.start(),
            },
        ),
        Err(e) => fail(e),
    }
}

/// q-affine chord through (j, p_j) and (k, p_k) of a q-concave sequence;
/// requires q > cos(pi/(k-j)).
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_support_chord(
    seq: *const QseqSequence,
    q: f64,
    j: i64,
    k: i64,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    match sequences::support_chord(s, q, j, k) {
        Ok(chord) => boxed_sequence(chord, out),
        Err(e) => fail(e),
    }
}

/// Envelope of dominating q-affine members, one per consecutive index pair;
/// `buf` length must equal sequence length - 1.
///
/// # Safety
/// `seq` must be a live handle; `buf` must hold `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn qseq_affine_envelope(
    seq: *const QseqSequence,
    q: f64,
    buf: *mut QseqAffineCoeffs,
    len: usize,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    if buf.is_null() || len != s.len() - 1 {
        return invalid("buffer is null or has the wrong length");
    }
    match sequences::affine_envelope(s, q) {
        Ok(members) => {
            let dst = std::slice::from_raw_parts_mut(buf, len);
            for (slot, rep) in dst.iter_mut().zip(&members) {
                *slot = QseqAffineCoeffs {
                    a: rep.a(),
                    b: rep.b(),
                    q: rep.q(),
                    start: rep.start(),
                };
            }
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Index-wise minimum of two sequences on the same window.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_pointwise_min(
    a: *const QseqSequence,
    b: *const QseqSequence,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let (Some(a), Some(b)) = (seq_ref(a), seq_ref(b)) else {
        return invalid("sequence handle is null");
    };
    match sequences::pointwise_min(&[a.clone(), b.clone()]) {
        Ok(seq) => boxed_sequence(seq, out),
        Err(e) => fail(e),
    }
}

/// Index-wise maximum of two sequences on the same window.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_pointwise_max(
    a: *const QseqSequence,
    b: *const QseqSequence,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let (Some(a), Some(b)) = (seq_ref(a), seq_ref(b)) else {
        return invalid("sequence handle is null");
    };
    match sequences::pointwise_max(&[a.clone(), b.clone()]) {
        Ok(seq) => boxed_sequence(seq, out),
        Err(e) => fail(e),
    }
}

// ---- means ----------------------------------------------------------------

/// Power mean with exponent r of positive entries; r may be -inf (min),
/// 0 (geometric), or +inf (max).
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_power_mean(
    r: f64,
    values: *const f64,
    len: usize,
    out: *mut f64,
) -> QseqStatus {
    let Some(values) = slice_in(values, len) else {
        return invalid("values pointer is null");
    };
    let spec = match MeanSpec::new(r) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match means::power_mean(spec, values) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// The sum u_1^r + sum (1/u_i + u_{i+1})^r + u_k^{-r} for r > 0.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_f_rk(
    r: f64,
    values: *const f64,
    len: usize,
    out: *mut f64,
) -> QseqStatus {
    let Some(values) = slice_in(values, len) else {
        return invalid("values pointer is null");
    };
    match means::f_rk(r, values) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Lower bounds for the power sum; `odd_bonus` is meaningful only when
/// `has_odd_bonus` is set (odd k).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqFLowerBounds {
    pub primary: f64,
    pub secondary: f64,
    pub has_odd_bonus: bool,
    pub odd_bonus: f64,
    pub best: f64,
}

/// Lower bounds for the k-variable power sum at exponent r > 0.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_f_lower_bound(
    r: f64,
    k: usize,
    out: *mut QseqFLowerBounds,
) -> QseqStatus {
    match means::f_lower_bound(r, k) {
        Ok(b) => write_out(
            out,
            QseqFLowerBounds {
                primary: b.primary,
                secondary: b.secondary,
                has_odd_bonus: b.odd_bonus.is_some(),
                odd_bonus: b.odd_bonus.unwrap_or(f64::NAN),
                best: b.best,
            },
        ),
        Err(e) => fail(e),
    }
}

/// Provenance of a minimax-constant bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QseqBoundSource {
    ArithmeticExact = 0,
    GeometricExact = 1,
    MaxExact = 2,
    PowerLower = 3,
    PowerLowerOdd = 4,
}

impl From<BoundSource> for QseqBoundSource {
    fn from(s: BoundSource) -> Self {
        match s {
            BoundSource::ArithmeticExact => QseqBoundSource::ArithmeticExact,
            BoundSource::GeometricExact => QseqBoundSource::GeometricExact,
            BoundSource::MaxExact => QseqBoundSource::MaxExact,
            BoundSource::PowerLower => QseqBoundSource::PowerLower,
            BoundSource::PowerLowerOdd => QseqBoundSource::PowerLowerOdd,
        }
    }
}

/// A minimax-constant value with its exactness flag and provenance.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqBoundReport {
    pub value: f64,
    pub exact: bool,
    pub source: QseqBoundSource,
}

/// The largest constant below every admissible sequence's r-mean of chord
/// ratios on the window {n, ..., m}.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_c_constant(
    r: f64,
    n: i64,
    m: i64,
    out: *mut QseqBoundReport,
) -> QseqStatus {
    let spec = match MeanSpec::new(r) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match means::c_constant(spec, n, m) {
        Ok(b) => write_out(
            out,
            QseqBoundReport {
                value: b.value,
                exact: b.exact,
                source: b.source.into(),
            },
        ),
        Err(e) => fail(e),
    }
}

/// Apply the r-mean to the chord ratios of a sequence with nonnegative
/// endpoints and positive interior.
///
/// # Safety
/// `seq` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_mean_of_chord_ratios(
    r: f64,
    seq: *const QseqSequence,
    out: *mut f64,
) -> QseqStatus {
    let Some(s) = seq_ref(seq) else {
        return invalid("sequence handle is null");
    };
    let spec = match MeanSpec::new(r) {
        Ok(sp) => sp,
        Err(e) => return fail(e),
    };
    match means::mean_of_chord_ratios(spec, s) {
        Ok(v) => write_out(out, v),
        Err(e) => fail(e),
    }
}

/// Sequence witnessing (or approaching) the sharpness of the minimax
/// constant for exponent r on {n, ..., m}.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_sharpness_witness(
    r: f64,
    n: i64,
    m: i64,
    epsilon: f64,
    out: *mut *mut QseqSequence,
) -> QseqStatus {
    let spec = match MeanSpec::new(r) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    match means::sharpness_witness(spec, n, m, epsilon) {
        Ok(seq) => boxed_sequence(seq, out),
        Err(e) => fail(e),
    }
}

/// Both sides of (m-4+sqrt(2))/(m-2) <= cos(pi/m) for m >= 3.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqCosineBound {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Evaluate the cosine inequality at m.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_cosine_bound_check(m: i64, out: *mut QseqCosineBound) -> QseqStatus {
    match means::cosine_bound_check(m) {
        Ok(b) => write_out(
            out,
            QseqCosineBound {
                lhs: b.lhs,
                rhs: b.rhs,
                holds: b.holds,
            },
        ),
        Err(e) => fail(e),
    }
}

// ---- contraction ----------------------------------------------------------

/// Opaque handle to a min-of-averages fixed-point problem.
pub struct QseqProblem {
    inner: ContractionProblem,
}

fn problem_ref<'a>(ptr: *const QseqProblem) -> Option<&'a ContractionProblem> {
    unsafe { ptr.as_ref().map(|p| &p.inner) }
}

/// Lipschitz certificate: q is the maximum chord ratio of the
/// zero-extended weights, q_star the operator's Lipschitz constant.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QseqCertificate {
    pub q: f64,
    pub q_star: f64,
    pub is_contraction: bool,
}

/// The weights i(n+1-i) into `buf` of length `len == n`.
///
/// # Safety
/// `buf` must hold `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn qseq_default_weights(n: usize, buf: *mut f64, len: usize) -> QseqStatus {
    if buf.is_null() || len != n {
        return invalid("buffer is null or has the wrong length");
    }
    match qseq::default_weights(n) {
        Ok(w) => {
            std::slice::from_raw_parts_mut(buf, len).copy_from_slice(&w);
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// max_i |values_i| / weights_i over positive weights.
///
/// # Safety
/// `weights` and `values` must each point to `len` readable doubles; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_weighted_norm(
    weights: *const f64,
    values: *const f64,
    len: usize,
    out: *mut f64,
) -> QseqStatus {
    let (Some(w), Some(v)) = (slice_in(weights, len), slice_in(values, len)) else {
        return invalid("weights or values pointer is null");
    };
    match qseq::weighted_norm(w, v) {
        Ok(n) => write_out(out, n),
        Err(e) => fail(e),
    }
}

/// Create a problem of dimension n. `gamma` must have length
/// floor((n+1)/2). Pass `weights = NULL` (with `weights_len = 0`) for the
/// default weights i(n+1-i); otherwise `weights_len` must equal n.
///
/// # Safety
/// `gamma` must point to `gamma_len` readable doubles, `weights` to
/// `weights_len` when non-null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_problem_new(
    n: usize,
    gamma: *const f64,
    gamma_len: usize,
    weights: *const f64,
    weights_len: usize,
    out: *mut *mut QseqProblem,
) -> QseqStatus {
    out_or_invalid!(out);
    let Some(gamma) = slice_in(gamma, gamma_len) else {
        return invalid("gamma pointer is null");
    };
    let built = if weights.is_null() {
        ContractionProblem::with_default_weights(n, gamma.to_vec())
    } else {
        let Some(w) = slice_in(weights, weights_len) else {
            return invalid("weights pointer is null");
        };
        ContractionProblem::new(n, gamma.to_vec(), w.to_vec())
    };
    match built {
        Ok(p) => {
            *out = Box::into_raw(Box::new(QseqProblem { inner: p }));
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Release a problem handle; NULL is ignored.
///
/// # Safety
/// `prob` must be a pointer from `qseq_problem_new`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qseq_problem_free(prob: *mut QseqProblem) {
    if !prob.is_null() {
        drop(Box::from_raw(prob));
    }
}

/// Dimension n of a problem.
///
/// # Safety
/// `prob` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_problem_dimension(
    prob: *const QseqProblem,
    out: *mut usize,
) -> QseqStatus {
    let Some(p) = problem_ref(prob) else {
        return invalid("problem handle is null");
    };
    write_out(out, p.dimension())
}

/// Lipschitz certificate of a problem.
///
/// # Safety
/// `prob` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qseq_problem_certificate(
    prob: *const QseqProblem,
    out: *mut QseqCertificate,
) -> QseqStatus {
    let Some(p) = problem_ref(prob) else {
        return invalid("problem handle is null");
    };
    let c = p.certificate();
    write_out(
        out,
        QseqCertificate {
            q: c.q,
            q_star: c.q_star,
            is_contraction: c.is_contraction,
        },
    )
}

/// Apply the operator once; `input` and `output` both have length
/// `len == n` and may not alias.
///
/// # Safety
/// `input` must point to `len` readable doubles and `output` to `len`
/// writable doubles; `prob` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qseq_problem_apply(
    prob: *const QseqProblem,
    input: *const f64,
    output: *mut f64,
    len: usize,
) -> QseqStatus {
    let Some(p) = problem_ref(prob) else {
        return invalid("problem handle is null");
    };
    let Some(input) = slice_in(input, len) else {
        return invalid("input pointer is null");
    };
    if output.is_null() || len != p.dimension() {
        return invalid("output is null or has the wrong length");
    }
    match p.apply(input) {
        Ok(v) => {
            std::slice::from_raw_parts_mut(output, len).copy_from_slice(&v);
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Banach iteration from 0 until the certified error drops below `tol`.
/// `point` receives the fixed point (length `len == n`). `iterations` and
/// `residual` are optional (may be NULL).
///
/// # Safety
/// `prob` must be a live handle; `point` must hold `len` writable doubles;
/// `iterations`/`residual` must be writable when non-null.
#[no_mangle]
pub unsafe extern "C" fn qseq_solve_fixed_point(
    prob: *const QseqProblem,
    tol: f64,
    max_iter: usize,
    point: *mut f64,
    len: usize,
    iterations: *mut usize,
    residual: *mut f64,
) -> QseqStatus {
    let Some(p) = problem_ref(prob) else {
        return invalid("problem handle is null");
    };
    if point.is_null() || len != p.dimension() {
        return invalid("point buffer is null or has the wrong length");
    }
    match p.solve_fixed_point(tol, max_iter) {
        Ok(r) => {
            std::slice::from_raw_parts_mut(point, len).copy_from_slice(&r.point);
            if !iterations.is_null() {
                iterations.write(r.iterations);
            }
            if !residual.is_null() {
                residual.write(r.residual_norm);
            }
            QseqStatus::Ok
        }
        Err(e) => fail(e),
    }
}
