//! Minimax disparity models.
//!
//! Both formulations minimize the largest gap `delta` between adjacent
//! weights subject to a prescribed orness `eta`:
//!
//! * **weight space**, over `(w_1..w_n, delta)`:
//!   `sum w = 1`, `orness(w) = eta`, `|w_i - w_{i+1}| <= delta`, `0 <= w_i <= 1`;
//! * **alpha space**, over `(alpha_1..alpha_k, delta)` with the remaining
//!   coefficients fixed at zero: the same objective and gap rows written
//!   through the binomial weights, plus the decomposition conditions that keep
//!   the encoded weights inside the simplex.
//!
//! With `k = n` the two are the same problem. Optimal vertices need not
//! coincide when the optimum is degenerate; only `delta` is comparable.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics;
use crate::decomposition::{
    self, binomial_orness_f64, check_alpha_feasibility, AlphaVector, KLevel,
};
use crate::error::{Error, Result};
use crate::lp::{self, Bound, LinearProgram, LpStatus};
use crate::owa::{disparity_raw, orness_raw, OrnessLevel, WeightVector, FEAS_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "weights")]
    WeightSpace,
    #[serde(rename = "alpha")]
    AlphaSpace,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::WeightSpace => "weights",
            Self::AlphaSpace => "alpha",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "weights" | "weight-space" => Ok(Self::WeightSpace),
            "alpha" | "alpha-space" => Ok(Self::AlphaSpace),
            other => Err(format!(
                "unknown method '{other}' (expected weights or alpha)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Optimal,
    Infeasible,
}

/// One solved (or infeasible) minimax disparity instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisparitySolution {
    pub n: usize,
    pub eta: OrnessLevel,
    pub method: Method,
    /// Truncation level; `n` for the weight-space method.
    pub k: usize,
    pub status: Status,
    pub weights: Option<WeightVector>,
    pub alpha: Option<AlphaVector>,
    pub delta: Option<f64>,
    /// Simplex pivots used.
    #[serde(default)]
    pub iterations: usize,
}

impl DisparitySolution {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    /// Check every solution invariant; used after each solve.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.status == Status::Infeasible {
            if self.weights.is_some() || self.alpha.is_some() || self.delta.is_some() {
                return fail("infeasible solution carries values".into());
            }
            return Ok(());
        }
        let (Some(w), Some(alpha), Some(delta)) = (&self.weights, &self.alpha, self.delta) else {
            return fail("optimal solution is missing weights, alpha or delta".into());
        };
        if w.n() != self.n || alpha.n() != self.n {
            return fail(format!(
                "dimension mismatch: n={} w={} alpha={}",
                self.n,
                w.n(),
                alpha.n()
            ));
        }
        let violation = w.max_violation();
        if violation > FEAS_TOL {
            return fail(format!("weights leave the simplex by {violation:e}"));
        }
        let orness_gap = (orness_raw(w.as_slice()) - self.eta.value()).abs();
        if orness_gap > FEAS_TOL {
            return fail(format!("orness off by {orness_gap:e}"));
        }
        let delta_gap = (disparity_raw(w.as_slice()) - delta).abs();
        if delta_gap > FEAS_TOL {
            return fail(format!("disparity differs from delta by {delta_gap:e}"));
        }
        if self.method == Method::AlphaSpace && alpha.k_level() > self.k {
            return fail(format!("alpha has nonzero entries beyond k={}", self.k));
        }
        let floor = alpha.representation_floor();
        let gap = decomposition::mutual_transform_gap(alpha, w);
        if gap > FEAS_TOL + floor {
            return fail(format!(
                "alpha does not reproduce the weights (gap {gap:e})"
            ));
        }
        let report = check_alpha_feasibility(alpha, FEAS_TOL + floor);
        if let Some(err) = report.violation() {
            return fail(format!("alpha fails the decomposition conditions: {err}"));
        }
        if let Some(err) = report.diagnostic() {
            return Err(err);
        }
        Ok(())
    }
}

fn check_eta(eta: f64) -> Result<OrnessLevel> {
    OrnessLevel::new(eta)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Dimension(n));
    }
    Ok(())
}

/// Weight-space model over `(w_1, ..., w_n, delta)`.
pub fn build_weight_model(n: usize, eta: f64) -> Result<LinearProgram> {
    check_n(n)?;
    let eta = check_eta(eta)?.value();
    let vars = n + 1;
    let mut objective = vec![0.0; vars];
    objective[n] = 1.0;
    let mut lp = LinearProgram::new(vars).minimize(objective);

    let mut sum = vec![1.0; vars];
    sum[n] = 0.0;
    lp.add_eq(sum, 1.0);
    let mut orness: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
    orness.push(0.0);
    lp.add_eq(orness, eta);

    for i in 0..n - 1 {
        let mut up = vec![0.0; vars];
        up[i] = 1.0;
        up[i + 1] = -1.0;
        up[n] = -1.0;
        let mut down = vec![0.0; vars];
        down[i] = -1.0;
        down[i + 1] = 1.0;
        down[n] = -1.0;
        lp.add_le(up, 0.0);
        lp.add_le(down, 0.0);
    }
    for i in 0..n {
        lp.set_bounds(i, Bound::between(0.0, 1.0));
    }
    lp.set_bounds(n, Bound::NONNEGATIVE);
    Ok(lp)
}

/// Alpha-space model over `(alpha_1, ..., alpha_k, delta)`.
///
/// `alpha_1 >= 0` enters as a bound; `alpha_2..alpha_k` are free.
pub fn build_alpha_model(n: usize, eta: f64, k: usize) -> Result<LinearProgram> {
    check_n(n)?;
    let eta = check_eta(eta)?.value();
    let k = KLevel::new(k, n)?.get();
    let vars = k + 1;
    let mut objective = vec![0.0; vars];
    objective[k] = 1.0;
    let mut lp = LinearProgram::new(vars).minimize(objective);

    let mut sum = vec![1.0; vars];
    sum[k] = 0.0;
    lp.add_eq(sum, 1.0);
    let mut orness: Vec<f64> = (1..=k).map(|j| binomial_orness_f64(n, j)).collect();
    orness.push(0.0);
    lp.add_eq(orness, eta);

    // rows[j][i] = w_{j+1, i+1}
    let rows: Vec<Vec<f64>> = (1..=k)
        .map(|j| combinatorics::weight_row_f64(n, j))
        .collect::<Result<_>>()?;

    for i in 0..n - 1 {
        let gap: Vec<f64> = rows.iter().map(|r| r[i] - r[i + 1]).collect();
        let mut up = gap.clone();
        up.push(-1.0);
        let mut down: Vec<f64> = gap.iter().map(|g| -g).collect();
        down.push(-1.0);
        lp.add_le(up, 0.0);
        lp.add_le(down, 0.0);
    }

    // sum_{j>=2} [1 - n C(i-1, j-1) / C(n, j)] alpha_j <= 1, i = 2..n,
    // where C(i-1, j-1) / C(n, j) = w_{j, n-i+1}.
    let nf = n as f64;
    for i in 2..=n {
        let mut row = vec![0.0; vars];
        for (j, r) in rows.iter().enumerate().skip(1) {
            row[j] = 1.0 - nf * r[n - i];
        }
        lp.add_le(row, 1.0);
    }

    lp.set_bounds(0, Bound::NONNEGATIVE);
    for j in 1..k {
        lp.set_bounds(j, Bound::FREE);
    }
    lp.set_bounds(k, Bound::NONNEGATIVE);
    Ok(lp)
}

/// Solve one instance and validate the result.
///
/// `k` only applies to the alpha-space method and defaults to `n`.
pub fn solve_minimax_disparity(
    n: usize,
    eta: f64,
    method: Method,
    k: Option<usize>,
) -> Result<DisparitySolution> {
    check_n(n)?;
    let level = check_eta(eta)?;
    let k = match method {
        Method::WeightSpace => n,
        Method::AlphaSpace => KLevel::new(k.unwrap_or(n), n)?.get(),
    };
    let lp = match method {
        Method::WeightSpace => build_weight_model(n, eta)?,
        Method::AlphaSpace => build_alpha_model(n, eta, k)?,
    };
    let outcome = lp::solve_lp(&lp)?;
    let mut solution = DisparitySolution {
        n,
        eta: level,
        method,
        k,
        status: Status::Infeasible,
        weights: None,
        alpha: None,
        delta: None,
        iterations: outcome.iterations,
    };
    match outcome.status {
        LpStatus::Infeasible => return Ok(solution),
        LpStatus::Unbounded => {
            return Err(Error::Consistency(
                "minimax disparity LP reported unbounded".into(),
            ))
        }
        LpStatus::Optimal => {}
    }
    let z = outcome.solution.expect("optimal outcome has a solution");
    let delta = outcome
        .objective_value
        .expect("optimal outcome has an objective");

    let (weights, alpha) = match method {
        Method::WeightSpace => {
            let w = WeightVector::with_tolerance(z[..n].to_vec(), FEAS_TOL)
                .map_err(|e| Error::Consistency(format!("solver weights invalid: {e}")))?;
            let alpha = decomposition::weights_to_alpha(&w);
            (w, alpha)
        }
        Method::AlphaSpace => {
            let alpha = AlphaVector::truncated(n, &z[..k])?;
            let w = decomposition::alpha_to_weights(&alpha)
                .map_err(|e| Error::Consistency(format!("solver alpha invalid: {e}")))?;
            (w, alpha)
        }
    };
    solution.status = Status::Optimal;
    solution.weights = Some(weights);
    solution.alpha = Some(alpha);
    solution.delta = Some(delta);
    solution.validate()?;
    Ok(solution)
}

/// One point of the `delta(k)` curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KPoint {
    pub k: usize,
    pub status: Status,
    pub delta: Option<f64>,
}

/// Alpha-space `delta` for each truncation level in `k_values`.
pub fn kcurve(n: usize, eta: f64, k_values: &[usize]) -> Result<Vec<KPoint>> {
    check_n(n)?;
    check_eta(eta)?;
    for &k in k_values {
        KLevel::new(k, n)?;
    }
    k_values
        .par_iter()
        .map(|&k| {
            let s = solve_minimax_disparity(n, eta, Method::AlphaSpace, Some(k))?;
            Ok(KPoint {
                k,
                status: s.status,
                delta: s.delta,
            })
        })
        .collect()
}

/// Solve for each orness level, in input order. Infeasible entries are
/// reported per entry.
pub fn sweep(
    n: usize,
    eta_values: &[f64],
    method: Method,
    k: Option<usize>,
) -> Result<Vec<DisparitySolution>> {
    check_n(n)?;
    for &eta in eta_values {
        check_eta(eta)?;
    }
    if let (Method::AlphaSpace, Some(k)) = (method, k) {
        KLevel::new(k, n)?;
    }
    eta_values
        .par_iter()
        .map(|&eta| solve_minimax_disparity(n, eta, method, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::solve_lp;

    fn delta(n: usize, eta: f64, method: Method, k: Option<usize>) -> Option<f64> {
        solve_minimax_disparity(n, eta, method, k).unwrap().delta
    }

    #[test]
    fn weight_model_shape() {
        let lp = build_weight_model(10, 0.3).unwrap();
        assert_eq!(lp.num_vars, 11);
        assert_eq!(lp.eq_constraints.len(), 2);
        assert_eq!(lp.ineq_constraints.len(), 18);
        assert!(build_weight_model(10, 1.2).is_err());
        assert!(build_weight_model(1, 0.5).is_err());
    }

    #[test]
    fn alpha_model_shape() {
        let lp = build_alpha_model(10, 0.3, 4).unwrap();
        assert_eq!(lp.num_vars, 5);
        assert_eq!(lp.eq_constraints.len(), 2);
        assert_eq!(lp.ineq_constraints.len(), 18 + 9);
        assert!(build_alpha_model(10, 0.3, 0).is_err());
        assert!(build_alpha_model(10, 0.3, 11).is_err());
        assert!(build_alpha_model(10, -0.1, 3).is_err());
    }

    #[test]
    fn weight_model_examples() {
        let out = solve_lp(&build_weight_model(10, 0.5).unwrap()).unwrap();
        let z = out.solution.unwrap();
        assert!(out.objective_value.unwrap().abs() < 1e-12);
        assert!(z[..10].iter().all(|w| (w - 0.1).abs() < 1e-12));

        let s = solve_minimax_disparity(10, 1.0, Method::WeightSpace, None).unwrap();
        assert!((s.delta.unwrap() - 1.0).abs() < 1e-9);
        let w = s.weights.unwrap();
        assert!((w[9] - 1.0).abs() < 1e-9);

        let s = solve_minimax_disparity(3, 0.0, Method::WeightSpace, None).unwrap();
        assert!((s.delta.unwrap() - 1.0).abs() < 1e-9);
        assert!((s.weights.unwrap()[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn alpha_model_examples() {
        let s = solve_minimax_disparity(10, 0.5, Method::AlphaSpace, Some(1)).unwrap();
        assert_eq!(s.alpha.unwrap().as_slice()[0], 1.0);
        assert_eq!(s.delta.unwrap(), 0.0);

        let s = solve_minimax_disparity(10, 0.2, Method::AlphaSpace, Some(2)).unwrap();
        assert_eq!(s.status, Status::Infeasible);
        assert!(s.weights.is_none() && s.alpha.is_none() && s.delta.is_none());

        let s = solve_minimax_disparity(10, 0.7, Method::AlphaSpace, Some(2)).unwrap();
        let a = s.alpha.unwrap();
        assert!((a.as_slice()[0] - 1.98).abs() < 0.01);
        assert!((a.as_slice()[1] + 0.98).abs() < 0.01);
        assert!((s.delta.unwrap() - 0.02).abs() <= 0.005);
    }

    #[test]
    fn solve_examples() {
        let d = delta(10, 0.9, Method::WeightSpace, None).unwrap();
        assert!((d - 0.12).abs() <= 0.005);
        let s = solve_minimax_disparity(10, 0.6, Method::AlphaSpace, Some(2)).unwrap();
        assert!((s.delta.unwrap() - 0.01).abs() <= 0.005);
        let a = s.alpha.unwrap();
        assert!((a.as_slice()[0] - 1.49).abs() < 0.01 && (a.as_slice()[1] + 0.49).abs() < 0.01);
        let full = delta(10, 0.3, Method::AlphaSpace, Some(10)).unwrap();
        let weights = delta(10, 0.3, Method::WeightSpace, None).unwrap();
        assert!((full - weights).abs() <= 1e-8);
    }

    #[test]
    fn solve_rejects_bad_input() {
        assert!(solve_minimax_disparity(10, 1.5, Method::AlphaSpace, None).is_err());
        assert!(solve_minimax_disparity(10, 0.5, Method::AlphaSpace, Some(11)).is_err());
        assert!(solve_minimax_disparity(1, 0.5, Method::WeightSpace, None).is_err());
        // k is ignored for the weight-space method.
        let s = solve_minimax_disparity(4, 0.5, Method::WeightSpace, Some(99)).unwrap();
        assert_eq!(s.k, 4);
    }

    #[test]
    fn kcurve_examples() {
        let pts = kcurve(10, 0.2, &[1, 2]).unwrap();
        assert!(pts
            .iter()
            .all(|p| p.status == Status::Infeasible && p.delta.is_none()));
        let pts = kcurve(10, 0.2, &[10]).unwrap();
        assert!((pts[0].delta.unwrap() - 0.04).abs() <= 0.005);
        let pts = kcurve(10, 0.5, &(1..=10).collect::<Vec<_>>()).unwrap();
        assert!(pts.iter().all(|p| p.delta.unwrap().abs() < 1e-12));
        assert!(kcurve(10, 0.5, &[0]).is_err());
    }

    #[test]
    fn sweep_examples() {
        assert!(sweep(10, &[], Method::AlphaSpace, None).unwrap().is_empty());
        let etas = [0.9, 0.1, 0.5];
        let out = sweep(10, &etas, Method::WeightSpace, None).unwrap();
        let got: Vec<f64> = out.iter().map(|s| s.eta.value()).collect();
        assert_eq!(got, etas);
        assert!((out[0].delta.unwrap() - out[1].delta.unwrap()).abs() <= 1e-8);
        let mixed = sweep(10, &[0.2, 0.7], Method::AlphaSpace, Some(2)).unwrap();
        assert_eq!(mixed[0].status, Status::Infeasible);
        assert_eq!(mixed[1].status, Status::Optimal);
    }

    #[test]
    fn validate_catches_tampering() {
        let mut s = solve_minimax_disparity(6, 0.35, Method::WeightSpace, None).unwrap();
        s.delta = Some(s.delta.unwrap() + 1e-3);
        assert!(matches!(s.validate(), Err(Error::Consistency(_))));
        let mut s = solve_minimax_disparity(6, 0.35, Method::AlphaSpace, None).unwrap();
        let mut a = s.alpha.clone().unwrap().into_inner();
        a[1] += 1e-3;
        s.alpha = Some(AlphaVector::new(a).unwrap());
        assert!(s.validate().is_err());
        let mut s = solve_minimax_disparity(6, 0.35, Method::AlphaSpace, Some(3)).unwrap();
        s.eta = OrnessLevel::new(0.36).unwrap();
        assert!(s.validate().is_err());
    }

    #[test]
    fn alpha_rows_match_exact_weights() {
        let m = combinatorics::weight_matrix(9).unwrap().to_f64();
        let lp = build_alpha_model(9, 0.3, 9).unwrap();
        for i in 0..8 {
            let up = &lp.ineq_constraints[2 * i].coefficients;
            for j in 0..9 {
                assert!((up[j] - (m[j][i] - m[j][i + 1])).abs() < 1e-15);
            }
            assert_eq!(up[9], -1.0);
        }
        // Decomposition rows: i = 2 involves C(1, j-1), nonzero only for j = 2.
        let first = &lp.ineq_constraints[16].coefficients;
        assert_eq!(first[0], 0.0);
        assert!((first[1] - (1.0 - 9.0 / 36.0)).abs() < 1e-15);
        assert!(first[2..9].iter().all(|&c| c == 1.0));
    }
}
