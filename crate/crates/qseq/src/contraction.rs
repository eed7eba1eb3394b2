//! The min-of-averages operator on `R^n`, weighted maximum norms, and
//! certified Banach fixed-point iteration.
//!
//! For an offset vector `gamma` of length `floor((n+1)/2)` the operator is
//!
//! ```text
//! (T(a))_i = min_{1 <= j <= min(i, n+1-i)} ( (a_{i-j} + a_{i+j})/2 + gamma_j )
//! ```
//!
//! with the convention `a_0 = a_{n+1} = 0`. Under the norm
//! `||a||_p = max_i |a_i| / p_i` built from positive weights `p`, the
//! operator is `q*`-Lipschitz where `q` is the maximum chord ratio of the
//! zero-extended weights and `q* = q` for `q <= 1`, `T_{floor((n+1)/2)}(q)`
//! otherwise. Strictly concave weights give `q* < 1` and a unique fixed
//! point by Banach iteration.

use crate::chebyshev::eval_t;
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Lipschitz certificate for a [`ContractionProblem`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ContractionCertificate {
    /// Maximum chord ratio of the zero-extended weight sequence.
    pub q: f64,
    /// `q` when `q <= 1`, else `T_{floor((n+1)/2)}(q)`.
    pub q_star: f64,
    /// True exactly when `q_star < 1`.
    pub is_contraction: bool,
}

/// Outcome of a successful fixed-point solve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixedPointResult {
    pub point: Vec<f64>,
    /// Number of operator applications performed before stopping.
    pub iterations: usize,
    /// Directly measured `||T(x) - x||_p` at the returned point.
    pub residual_norm: f64,
    pub certificate: ContractionCertificate,
}

/// Dimension, offsets, and norm weights for one operator instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawProblem", into = "RawProblem")]
pub struct ContractionProblem {
    gamma: Vec<f64>,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawProblem {
    n: usize,
    gamma: Vec<f64>,
    weights: WeightsField,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WeightsField {
    Named(String),
    Explicit(Vec<f64>),
}

impl TryFrom<RawProblem> for ContractionProblem {
    type Error = Error;
    fn try_from(raw: RawProblem) -> Result<Self> {
        let weights = match raw.weights {
            WeightsField::Explicit(w) => w,
            WeightsField::Named(name) if name == "default" => default_weights(raw.n)?,
            WeightsField::Named(name) => {
                return Err(Error::domain(format!(
                    "unknown weights spec {name:?}; expected \"default\" or an array"
                )))
            }
        };
        ContractionProblem::new(raw.n, raw.gamma, weights)
    }
}

impl From<ContractionProblem> for RawProblem {
    fn from(p: ContractionProblem) -> RawProblem {
        RawProblem {
            n: p.weights.len(),
            gamma: p.gamma,
            weights: WeightsField::Explicit(p.weights),
        }
    }
}

/// The weights `p_i = i (n+1-i)`, strictly concave and positive on
/// `{1, ..., n}`; the resulting certificate always has `q < 1`.
pub fn default_weights(n: usize) -> Result<Vec<f64>> {
    if n < 1 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    Ok((1..=n).map(|i| (i * (n + 1 - i)) as f64).collect())
}

/// `max_i |a_i| / weights_i`.
pub fn weighted_norm(weights: &[f64], a: &[f64]) -> Result<f64> {
    if weights.len() != a.len() {
        return Err(Error::domain(format!(
            "length mismatch: {} weights vs {} entries",
            weights.len(),
            a.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::domain(format!("weights must be positive, got {w}")));
    }
    Ok(weights
        .iter()
        .zip(a)
        .map(|(w, v)| v.abs() / w)
        .fold(0.0, f64::max))
}

fn check_vector(name: &str, expected: usize, a: &[f64]) -> Result<()> {
    if a.len() != expected {
        return Err(Error::domain(format!(
            "{name} must have length {expected}, got {}",
            a.len()
        )));
    }
    if let Some(v) = a.iter().find(|v| !v.is_finite()) {
        return Err(Error::domain(format!("{name} entries must be finite, got {v}")));
    }
    Ok(())
}

impl ContractionProblem {
    pub fn new(n: usize, gamma: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        let expected = n.div_ceil(2);
        if gamma.len() != expected {
            return Err(Error::domain(format!(
                "gamma must have length floor((n+1)/2) = {expected} for n = {n}, got {}",
                gamma.len()
            )));
        }
        if let Some(g) = gamma.iter().find(|g| !g.is_finite()) {
            return Err(Error::domain(format!("gamma entries must be finite, got {g}")));
        }
        check_vector("weights", n, &weights)?;
        if let Some(w) = weights.iter().find(|w| **w <= 0.0) {
            return Err(Error::domain(format!("weights must be positive, got {w}")));
        }
        Ok(ContractionProblem { gamma, weights })
    }

    /// Problem with the default weights `p_i = i (n+1-i)`.
    pub fn with_default_weights(n: usize, gamma: Vec<f64>) -> Result<Self> {
        let weights = default_weights(n)?;
        ContractionProblem::new(n, gamma, weights)
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Apply the operator to `a`.
    pub fn apply(&self, a: &[f64]) -> Result<Vec<f64>> {
        check_vector("input", self.dimension(), a)?;
        let n = self.dimension();
        let mut padded = vec![0.0; n + 2];
        padded[1..=n].copy_from_slice(a);
        let mut out = vec![0.0; n + 2];
        self.apply_padded(&padded, &mut out);
        Ok(out[1..=n].to_vec())
    }

    // Operator on zero-padded buffers of length n+2 (entries 0 and n+1 are
    // the boundary zeros). Written j-outermost over contiguous ranges.
    fn apply_padded(&self, a: &[f64], out: &mut [f64]) {
        let n = self.dimension();
        let g1 = self.gamma[0];
        for i in 1..=n {
            out[i] = 0.5 * (a[i - 1] + a[i + 1]) + g1;
        }
        for j in 2..=self.gamma.len() {
            let g = self.gamma[j - 1];
            let lo = j;
            let hi = n + 1 - j;
            let (left, right) = (&a[lo - j..=hi - j], &a[lo + j..=hi + j]);
            for ((dst, &l), &r) in out[lo..=hi].iter_mut().zip(left).zip(right) {
                *dst = dst.min(0.5 * (l + r) + g);
            }
        }
        out[0] = 0.0;
        out[n + 1] = 0.0;
    }

    /// `||a||_p` with this problem's weights.
    pub fn norm(&self, a: &[f64]) -> Result<f64> {
        weighted_norm(&self.weights, a)
    }

    /// The Lipschitz certificate `(q, q*)` for this problem.
    pub fn certificate(&self) -> ContractionCertificate {
        let w = &self.weights;
        let n = w.len();
        let ext = |i: usize| if i == 0 || i == n + 1 { 0.0 } else { w[i - 1] };
        let q = (1..=n)
            .map(|i| (ext(i - 1) + ext(i + 1)) / (2.0 * w[i - 1]))
            .fold(f64::NEG_INFINITY, f64::max);
        let q_star = if q <= 1.0 {
            q
        } else {
            eval_t(n.div_ceil(2) as i64, q)
        };
        ContractionCertificate {
            q,
            q_star,
            is_contraction: q_star < 1.0,
        }
    }

    /// Iterate `x <- T(x)` from `x_0 = 0` until the a-posteriori bound
    /// certifies `||x - x*||_p <= tol`, i.e. until successive iterates
    /// differ by at most `tol (1 - q*)/q*` in the weighted norm.
    ///
    /// Refuses when the certificate has `q* >= 1`; returns
    /// [`Error::NoConvergence`] with the best iterate when `max_iter`
    /// applications do not reach the threshold.
    pub fn solve_fixed_point(&self, tol: f64, max_iter: usize) -> Result<FixedPointResult> {
        self.solve_from(&vec![0.0; self.dimension()], tol, max_iter)
    }

    /// Same as [`solve_fixed_point`](Self::solve_fixed_point) from an
    /// explicit starting point.
    pub fn solve_from(&self, start: &[f64], tol: f64, max_iter: usize) -> Result<FixedPointResult> {
        let cert = self.certificate();
        if !cert.is_contraction {
            return Err(Error::NotContraction {
                q: cert.q,
                q_star: cert.q_star,
            });
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::domain(format!("tol must be positive, got {tol}")));
        }
        check_vector("start", self.dimension(), start)?;

        let n = self.dimension();
        // q* = 0 means T is constant: the first application lands exactly.
        let threshold = if cert.q_star > 0.0 {
            tol * (1.0 - cert.q_star) / cert.q_star
        } else {
            f64::INFINITY
        };

        let mut cur = vec![0.0; n + 2];
        cur[1..=n].copy_from_slice(start);
        let mut next = vec![0.0; n + 2];
        let mut last_step = f64::INFINITY;

        for iter in 1..=max_iter {
            self.apply_padded(&cur, &mut next);
            let step = self.padded_diff_norm(&next, &cur);
            std::mem::swap(&mut cur, &mut next);
            last_step = step;
            if step <= threshold {
                self.apply_padded(&cur, &mut next);
                let residual = self.padded_diff_norm(&next, &cur);
                return Ok(FixedPointResult {
                    point: cur[1..=n].to_vec(),
                    iterations: iter,
                    residual_norm: residual,
                    certificate: cert,
                });
            }
        }
        Err(Error::NoConvergence {
            iterations: max_iter,
            last_step,
            best: cur[1..=n].to_vec(),
        })
    }

    fn padded_diff_norm(&self, a: &[f64], b: &[f64]) -> f64 {
        let n = self.dimension();
        self.weights
            .iter()
            .zip(&a[1..=n])
            .zip(&b[1..=n])
            .map(|((w, x), y)| (x - y).abs() / w)
            .fold(0.0, f64::max)
    }

    /// Largest observed ratio `||T(a) - T(b)||_p / ||a - b||_p` over random
    /// pairs with entries in `[-scale, scale]`. Never exceeds the
    /// certificate's `q*`. Pairs with `a = b` are skipped.
    pub fn empirical_lipschitz(
        &self,
        trials: usize,
        scale: f64,
        rng: &mut impl Rng,
    ) -> Result<f64> {
        if trials < 1 {
            return Err(Error::domain("trials must be at least 1"));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::domain(format!("scale must be positive, got {scale}")));
        }
        let n = self.dimension();
        let mut worst = 0.0_f64;
        for _ in 0..trials {
            let a: Vec<f64> = (0..n).map(|_| rng.random_range(-scale..scale)).collect();
            let b: Vec<f64> = (0..n).map(|_| rng.random_range(-scale..scale)).collect();
            let dist = self.norm(&sub(&a, &b))?;
            if dist == 0.0 {
                continue;
            }
            let ta = self.apply(&a)?;
            let tb = self.apply(&b)?;
            worst = worst.max(self.norm(&sub(&ta, &tb))? / dist);
        }
        Ok(worst)
    }
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!(
            (got - want).abs() <= tol,
            "got {got}, want {want} (diff {:e})",
            (got - want).abs()
        );
    }

    #[test]
    fn construction_invariants() {
        assert!(ContractionProblem::new(0, vec![], vec![]).is_err());
        assert!(ContractionProblem::new(3, vec![1.0], vec![1.0; 3]).is_err()); // gamma len
        assert!(ContractionProblem::new(3, vec![1.0, 2.0], vec![1.0; 2]).is_err()); // weights len
        assert!(ContractionProblem::new(3, vec![1.0, 2.0], vec![1.0, -1.0, 1.0]).is_err());
        assert!(ContractionProblem::new(3, vec![f64::NAN, 2.0], vec![1.0; 3]).is_err());
        let p = ContractionProblem::with_default_weights(4, vec![0.0, 1.0]).unwrap();
        assert_eq!(p.weights(), &[4.0, 6.0, 6.0, 4.0]);
    }

    #[test]
    fn default_weights_examples() {
        assert_eq!(default_weights(1).unwrap(), vec![1.0]);
        assert_eq!(default_weights(3).unwrap(), vec![3.0, 4.0, 3.0]);
        assert_eq!(default_weights(4).unwrap(), vec![4.0, 6.0, 6.0, 4.0]);
        assert!(default_weights(0).is_err());
    }

    #[test]
    fn apply_examples() {
        // n = 1: only j = 1 and (a_0 + a_2)/2 = 0, so T(a) = (gamma_1)
        let p = ContractionProblem::with_default_weights(1, vec![3.25]).unwrap();
        assert_eq!(p.apply(&[17.0]).unwrap(), vec![3.25]);

        // n = 2: T(x, y) = (y/2 + c, x/2 + c)
        let p = ContractionProblem::with_default_weights(2, vec![0.5]).unwrap();
        assert_eq!(p.apply(&[2.0, 4.0]).unwrap(), vec![2.5, 1.5]);

    }

    #[test]
    fn apply_middle_component_min() {
        let p = ContractionProblem::with_default_weights(3, vec![1.0, -2.0]).unwrap();
        let out = p.apply(&[6.0, 0.0, 2.0]).unwrap();
        // components: i=1: a_2/2 + 1; i=2: min((a_1+a_3)/2 + 1, -2); i=3: a_2/2 + 1
        assert_eq!(out, vec![1.0, -2.0, 1.0]);
        let out = p.apply(&[-6.0, 0.0, -2.0]).unwrap();
        assert_eq!(out[1], (-6.0 + -2.0) / 2.0 + 1.0); // j=1 branch wins
        assert!(p.apply(&[1.0, 2.0]).is_err());
        assert!(p.apply(&[1.0, f64::NAN, 2.0]).is_err());
    }

    #[test]
    fn weighted_norm_examples() {
        assert_eq!(weighted_norm(&[1.0, 1.0], &[3.0, -4.0]).unwrap(), 4.0);
        assert_eq!(weighted_norm(&[1.0, 2.0], &[1.0, 4.0]).unwrap(), 2.0);
        assert!(weighted_norm(&[1.0], &[1.0, 2.0]).is_err());
        assert!(weighted_norm(&[0.0, 1.0], &[1.0, 2.0]).is_err());
    }

    proptest! {
        #[test]
        fn norm_axioms(
            a in proptest::collection::vec(-10.0f64..10.0, 4),
            b in proptest::collection::vec(-10.0f64..10.0, 4),
            c in -5.0f64..5.0,
        ) {
            let w = vec![1.0, 2.0, 3.0, 4.0];
            let na = weighted_norm(&w, &a).unwrap();
            let nb = weighted_norm(&w, &b).unwrap();
            prop_assert!(na >= 0.0);
            // homogeneity
            let scaled: Vec<f64> = a.iter().map(|x| c * x).collect();
            let ns = weighted_norm(&w, &scaled).unwrap();
            prop_assert!((ns - c.abs() * na).abs() <= 1e-12 * (1.0 + ns));
            // triangle inequality
            let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let nsum = weighted_norm(&w, &sum).unwrap();
            prop_assert!(nsum <= na + nb + 1e-12);
        }

        // |min(x) - min(y)| <= max_i |x_i - y_i|
        #[test]
        fn min_is_one_lipschitz(
            x in proptest::collection::vec(-100.0f64..100.0, 1..10),
            delta in proptest::collection::vec(-5.0f64..5.0, 10),
        ) {
            let y: Vec<f64> = x.iter().zip(&delta).map(|(a, d)| a + d).collect();
            let min_x = x.iter().copied().fold(f64::INFINITY, f64::min);
            let min_y = y.iter().copied().fold(f64::INFINITY, f64::min);
            let max_diff = x.iter().zip(&y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
            prop_assert!((min_x - min_y).abs() <= max_diff + 1e-12);
        }
    }

    #[test]
    fn certificate_examples() {
        // n = 3 default weights: ratios (4/6, 6/8, 4/6), q = 0.75
        let p = ContractionProblem::with_default_weights(3, vec![0.0, 0.0]).unwrap();
        let c = p.certificate();
        assert_eq!(c.q, 0.75);
        assert_eq!(c.q_star, 0.75);
        assert!(c.is_contraction);
        // paper bound (n-1)(n+3)/(n+1)^2 is attained for odd n
        assert_close(c.q, 2.0 * 6.0 / 16.0, 1e-15);

        // n = 1: zero extension gives q = 0, a constant map
        let p = ContractionProblem::new(1, vec![2.0], vec![5.0]).unwrap();
        let c = p.certificate();
        assert_eq!(c.q, 0.0);
        assert_eq!(c.q_star, 0.0);
        assert!(c.is_contraction);

        // constant weights: q = 1, not a contraction
        let p = ContractionProblem::new(3, vec![0.0, 0.0], vec![1.0; 3]).unwrap();
        let c = p.certificate();
        assert_eq!(c.q, 1.0);
        assert!(!c.is_contraction);

        // convex weights: q > 1, q* = T_{floor((n+1)/2)}(q)
        let p = ContractionProblem::new(3, vec![0.0, 0.0], vec![4.0, 1.0, 4.0]).unwrap();
        let c = p.certificate();
        assert_eq!(c.q, 4.0);
        assert_close(c.q_star, eval_t(2, 4.0), 1e-12);
        assert!(!c.is_contraction);
    }

    #[test]
    fn certificate_upper_bounded_by_paper_formula() {
        for n in 1..=60usize {
            let p = ContractionProblem::with_default_weights(n, vec![0.0; n.div_ceil(2)]).unwrap();
            let c = p.certificate();
            let nf = n as f64;
            let bound = (nf - 1.0) * (nf + 3.0) / ((nf + 1.0) * (nf + 1.0));
            assert!(c.q <= bound + 1e-12, "n = {n}: q = {} > {bound}", c.q);
            if n % 2 == 1 {
                assert_close(c.q, bound, 1e-12); // attained at the middle index
            }
            assert!(c.is_contraction);
        }
    }

    #[test]
    fn solve_examples() {
        // n = 1: constant map, fixed point = gamma in one application
        let p = ContractionProblem::with_default_weights(1, vec![5.0]).unwrap();
        let r = p.solve_fixed_point(1e-12, 100).unwrap();
        assert_eq!(r.point, vec![5.0]);
        assert_eq!(r.iterations, 1);
        assert_eq!(r.residual_norm, 0.0);

        // n = 2: solve x = y/2 + c, y = x/2 + c -> (2c, 2c)
        let p = ContractionProblem::with_default_weights(2, vec![1.0]).unwrap();
        let r = p.solve_fixed_point(1e-11, 10_000).unwrap();
        assert_close(r.point[0], 2.0, 1e-9);
        assert_close(r.point[1], 2.0, 1e-9);
        assert!(r.residual_norm <= 1e-11 * (1.0 + r.certificate.q_star));
    }

    #[test]
    fn solve_rejects_non_contractions() {
        let p = ContractionProblem::new(3, vec![0.0, 0.0], vec![1.0; 3]).unwrap();
        match p.solve_fixed_point(1e-9, 100) {
            Err(Error::NotContraction { q, q_star }) => {
                assert_eq!(q, 1.0);
                assert_eq!(q_star, 1.0);
            }
            other => panic!("expected NotContraction, got {other:?}"),
        }
    }

    #[test]
    fn solve_reports_non_convergence_with_best_iterate() {
        let n = 20;
        let p = ContractionProblem::with_default_weights(n, vec![-1.0; n.div_ceil(2)]).unwrap();
        match p.solve_fixed_point(1e-12, 3) {
            Err(Error::NoConvergence {
                iterations, best, ..
            }) => {
                assert_eq!(iterations, 3);
                assert_eq!(best.len(), n);
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn iteration_count_respects_a_priori_bound() {
        let mut rng = StdRng::seed_from_u64(0x5eed_3001);
        for n in [2usize, 5, 9, 16] {
            let gamma: Vec<f64> = (0..n.div_ceil(2))
                .map(|_| rand::Rng::random_range(&mut rng, -2.0..2.0))
                .collect();
            let p = ContractionProblem::with_default_weights(n, gamma).unwrap();
            let tol = 1e-10;
            let r = p.solve_fixed_point(tol, 2_000_000).unwrap();
            let c = r.certificate;
            if c.q_star > 0.0 {
                let x1 = p.apply(&vec![0.0; n]).unwrap();
                let d0 = p.norm(&x1).unwrap();
                if d0 > 0.0 {
                    let bound =
                        (d0 / (tol * (1.0 - c.q_star))).ln() / (1.0 / c.q_star).ln();
                    assert!(
                        (r.iterations as f64) <= bound.ceil() + 1.0,
                        "n = {n}: {} iterations > bound {bound}",
                        r.iterations
                    );
                }
            }
        }
    }

    #[test]
    fn gamma_shift_commutes_with_output_shift() {
        let mut rng = StdRng::seed_from_u64(0x5eed_3002);
        for _ in 0..200 {
            let n = rand::Rng::random_range(&mut rng, 1..=12usize);
            let gamma: Vec<f64> = (0..n.div_ceil(2))
                .map(|_| rand::Rng::random_range(&mut rng, -3.0..3.0))
                .collect();
            let shift: f64 = rand::Rng::random_range(&mut rng, -2.0..2.0);
            let a: Vec<f64> = (0..n)
                .map(|_| rand::Rng::random_range(&mut rng, -5.0..5.0))
                .collect();
            let p = ContractionProblem::with_default_weights(n, gamma.clone()).unwrap();
            let shifted = ContractionProblem::with_default_weights(
                n,
                gamma.iter().map(|g| g + shift).collect(),
            )
            .unwrap();
            let base = p.apply(&a).unwrap();
            let out = shifted.apply(&a).unwrap();
            for (x, y) in base.iter().zip(&out) {
                assert_close(*y, x + shift, 1e-12 * (1.0 + x.abs()));
            }
        }
    }

    #[test]
    fn empirical_lipschitz_examples() {
        let mut rng = StdRng::seed_from_u64(0x5eed_3003);
        // n = 1: constant map, ratio identically zero
        let p = ContractionProblem::with_default_weights(1, vec![0.7]).unwrap();
        assert_eq!(p.empirical_lipschitz(100, 2.0, &mut rng).unwrap(), 0.0);

        // n = 5 default weights: ratio bounded by q = 32/36
        let p = ContractionProblem::with_default_weights(5, vec![0.1, -0.4, 2.0]).unwrap();
        let lip = p.empirical_lipschitz(1000, 3.0, &mut rng).unwrap();
        assert!(lip <= 32.0 / 36.0 + 1e-12, "lip = {lip}");

        assert!(p.empirical_lipschitz(0, 1.0, &mut rng).is_err());
    }

    #[test]
    fn problem_json_round_trip() {
        let p = ContractionProblem::with_default_weights(3, vec![0.5, -1.0]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"n\":3"));
        let back: ContractionProblem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);

        let named: ContractionProblem =
            serde_json::from_str(r#"{"n":3,"gamma":[0.5,-1.0],"weights":"default"}"#).unwrap();
        assert_eq!(named, p);

        let bad: std::result::Result<ContractionProblem, _> =
            serde_json::from_str(r#"{"n":3,"gamma":[0.5],"weights":"default"}"#);
        assert!(bad.is_err());
        let bad: std::result::Result<ContractionProblem, _> =
            serde_json::from_str(r#"{"n":3,"gamma":[0.5,-1.0],"weights":"uniform"}"#);
        assert!(bad.is_err());
    }
}
