//! OWA weighting vectors and their two characterizing measures.
//!
//! Inputs are sorted increasingly, so `w_1` multiplies the smallest value and
//! `w_n` the largest. Under this convention `(1, 0, ..., 0)` is the minimum
//! (orness 0) and `(0, ..., 0, 1)` is the maximum (orness 1).

use serde::{Deserialize, Serialize};

use crate::combinatorics;
use crate::error::{Error, Result};

/// Feasibility tolerance for weight vectors recovered from solver output.
pub const FEAS_TOL: f64 = 1e-9;

/// Slack for validating user-supplied decimals.
pub const INPUT_TOL: f64 = 1e-12;

/// An OWA weighting vector: `n >= 2` entries in `[0, 1]` summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validates against `[0, 1]` and unit sum with [`INPUT_TOL`] slack.
    pub fn new(w: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(w, INPUT_TOL)
    }

    /// Validates with an explicit tolerance, e.g. [`FEAS_TOL`] for solver output.
    pub fn with_tolerance(w: Vec<f64>, tol: f64) -> Result<Self> {
        validate_weights(&w, tol)?;
        Ok(Self(w))
    }

    /// The arithmetic mean `(1/n, ..., 1/n)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension(n));
        }
        Ok(Self(vec![1.0 / n as f64; n]))
    }

    /// `(1, 0, ..., 0)`, the minimum operator.
    pub fn min_operator(n: usize) -> Result<Self> {
        Self::vertex(n, 0)
    }

    /// `(0, ..., 0, 1)`, the maximum operator.
    pub fn max_operator(n: usize) -> Result<Self> {
        Self::vertex(n, n.saturating_sub(1))
    }

    fn vertex(n: usize, at: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension(n));
        }
        let mut w = vec![0.0; n];
        w[at] = 1.0;
        Ok(Self(w))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// `(w_n, ..., w_1)`.
    pub fn reverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Largest bound or normalization violation, zero for an exact vector.
    pub fn max_violation(&self) -> f64 {
        weight_violation(&self.0)
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(w: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(w, FEAS_TOL)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

pub(crate) fn weight_violation(w: &[f64]) -> f64 {
    let sum: f64 = w.iter().sum();
    w.iter()
        .map(|&x| (-x).max(x - 1.0))
        .fold((sum - 1.0).abs(), f64::max)
}

fn validate_weights(w: &[f64], tol: f64) -> Result<()> {
    if w.len() < 2 {
        return Err(Error::Dimension(w.len()));
    }
    if let Some((i, x)) = w.iter().enumerate().find(|(_, x)| !x.is_finite()) {
        return Err(Error::InvalidWeights(format!(
            "w_{} = {x} is not finite",
            i + 1
        )));
    }
    if let Some((i, x)) = w
        .iter()
        .enumerate()
        .find(|(_, &x)| x < -tol || x > 1.0 + tol)
    {
        return Err(Error::InvalidWeights(format!(
            "w_{} = {x} outside [0, 1]",
            i + 1
        )));
    }
    let sum: f64 = w.iter().sum();
    if (sum - 1.0).abs() > tol {
        return Err(Error::InvalidWeights(format!(
            "weights sum to {sum}, not 1"
        )));
    }
    Ok(())
}

/// A prescribed or measured orness level in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct OrnessLevel(f64);

impl OrnessLevel {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::Orness(value));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - eta`, the orness of the reversed weighting.
    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }
}

impl TryFrom<f64> for OrnessLevel {
    type Error = Error;

    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

impl From<OrnessLevel> for f64 {
    fn from(o: OrnessLevel) -> f64 {
        o.0
    }
}

/// `A(x) = sum_i w_i x_(i)` with `x_(1) <= ... <= x_(n)`.
pub fn evaluate_owa(w: &WeightVector, x: &[f64]) -> Result<f64> {
    if x.len() != w.n() {
        return Err(Error::Length {
            expected: w.n(),
            got: x.len(),
        });
    }
    Ok(dot_sorted(w.as_slice(), x))
}

fn dot_sorted(w: &[f64], x: &[f64]) -> f64 {
    let mut sorted = x.to_vec();
    sorted.sort_by(f64::total_cmp);
    w.iter().zip(&sorted).map(|(w, x)| w * x).sum()
}

/// `(1 / (n - 1)) sum_i (i - 1) w_i`.
///
/// Solver noise can push the raw value a hair outside `[0, 1]`; it is clamped.
pub fn orness(w: &WeightVector) -> OrnessLevel {
    OrnessLevel(orness_raw(w.as_slice()).clamp(0.0, 1.0))
}

pub(crate) fn orness_raw(w: &[f64]) -> f64 {
    let n = w.len();
    let s: f64 = w.iter().enumerate().map(|(i, w)| i as f64 * w).sum();
    s / (n - 1) as f64
}

/// `max_i |w_i - w_{i+1}|`.
pub fn disparity(w: &WeightVector) -> f64 {
    disparity_raw(w.as_slice())
}

pub(crate) fn disparity_raw(w: &[f64]) -> f64 {
    w.windows(2)
        .map(|p| (p[0] - p[1]).abs())
        .fold(0.0, f64::max)
}

/// The binomial OWA function `C_j(x)`.
pub fn evaluate_binomial_owa(n: usize, j: usize, x: &[f64]) -> Result<f64> {
    let row = combinatorics::weight_row_f64(n, j)?;
    if x.len() != n {
        return Err(Error::Length {
            expected: n,
            got: x.len(),
        });
    }
    Ok(dot_sorted(&row, x))
}
