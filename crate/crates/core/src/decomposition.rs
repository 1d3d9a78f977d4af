//! The binomial decomposition of OWA functions.
//!
//! Every OWA weighting `w` is uniquely `w_i = sum_j w_ji alpha_j`, where
//! `w_ji` are the binomial weights of [`crate::combinatorics`]. Row `i` of
//! this system only involves `alpha_1..alpha_{n-i+1}`, so it is solved bottom
//! up: `w_n = alpha_1 / n` gives `alpha_1`, then `w_{n-1}` gives `alpha_2`, and
//! so on.
//!
//! Substituting `beta_j = alpha_j / C(n, j)` turns the system into
//! `w_{n-m+1} = sum_{j<=m} C(m-1, j-1) beta_j`, which has integer
//! coefficients. The exact path runs the same bottom-up substitution on that
//! form with big integers over a common denominator.
//!
//! The map `alpha -> w` is badly conditioned in the reverse direction: for a
//! generic `w`, `|alpha_j|` grows like `C(n, j)`. Rounding `alpha` to `f64`
//! alone perturbs the reconstructed weights by roughly
//! `eps * sum_j w_ji |alpha_j|`, which already exceeds `1e-10` for random
//! weightings at `n = 20`. Lossless round trips need [`ExactAlpha`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{self, ratio_to_f64, EXACT_LIMIT};
use crate::error::{Error, Result};
use crate::owa::{self, OrnessLevel, WeightVector, FEAS_TOL};

/// Arithmetic used by the transforms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arithmetic {
    /// Exact rationals on the (dyadic) values of the `f64` inputs; the result
    /// is rounded once.
    Exact,
    /// Plain `f64` substitution through the ratio-product weights.
    Float,
}

impl Arithmetic {
    /// Exact up to [`EXACT_LIMIT`], float above.
    pub fn auto(n: usize) -> Self {
        if n <= EXACT_LIMIT {
            Self::Exact
        } else {
            Self::Float
        }
    }
}

/// Coefficients `alpha_1..alpha_n` of the binomial decomposition.
///
/// Construction only checks shape; use [`check_alpha_feasibility`] to check
/// that the coefficients describe an OWA weighting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct AlphaVector(Vec<f64>);

impl AlphaVector {
    pub fn new(alpha: Vec<f64>) -> Result<Self> {
        if alpha.len() < 2 {
            return Err(Error::Dimension(alpha.len()));
        }
        if alpha.iter().any(|a| !a.is_finite()) {
            return Err(Error::InfeasibleAlpha {
                condition: "finite coefficients".into(),
                slack: f64::NAN,
            });
        }
        Ok(Self(alpha))
    }

    /// A k-additive vector: `leading` holds `alpha_1..alpha_k`, the rest are zero.
    pub fn truncated(n: usize, leading: &[f64]) -> Result<Self> {
        if leading.len() > n {
            return Err(Error::Length {
                expected: n,
                got: leading.len(),
            });
        }
        let mut alpha = leading.to_vec();
        alpha.resize(n, 0.0);
        Self::new(alpha)
    }

    /// The unit vector `e_j`, i.e. the binomial OWA function `C_j` itself.
    pub fn unit(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::Index { index: j, n });
        }
        let mut alpha = vec![0.0; n];
        alpha[j - 1] = 1.0;
        Self::new(alpha)
    }

    /// `((-1)^{j-1} C(n, j))_j`, the decomposition of the maximum operator.
    pub fn max_operator(n: usize) -> Result<Self> {
        let alpha = exact_max_operator(n)?;
        Self::new(alpha.iter().map(ratio_to_f64).collect())
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

    /// Highest index with a nonzero coefficient (the additivity level).
    pub fn k_level(&self) -> usize {
        self.0.iter().rposition(|a| *a != 0.0).map_or(1, |p| p + 1)
    }

    /// Weight-level perturbation caused by storing these coefficients as
    /// `f64`: `4 eps max_i sum_j w_ji |alpha_j|`.
    pub fn representation_floor(&self) -> f64 {
        let n = self.n();
        let mut acc = vec![0.0f64; n];
        for (j, a) in self.0.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            let row = combinatorics::weight_row_f64(n, j + 1).expect("valid level");
            for (s, w) in acc.iter_mut().zip(row) {
                *s += w * a.abs();
            }
        }
        4.0 * f64::EPSILON * acc.into_iter().fold(0.0, f64::max)
    }
}

impl TryFrom<Vec<f64>> for AlphaVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<AlphaVector> for Vec<f64> {
    fn from(a: AlphaVector) -> Self {
        a.0
    }
}

/// Exact decomposition coefficients. Round trips through this type are lossless.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactAlpha(pub Vec<BigRational>);

impl ExactAlpha {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Weights `w_i = sum_j w_ji alpha_j`, exactly.
    pub fn to_weights(&self) -> Vec<BigRational> {
        alpha_to_weights_exact(&self.0)
    }

    /// Nearest `f64` per coefficient.
    pub fn to_f64(&self) -> AlphaVector {
        AlphaVector(self.0.iter().map(ratio_to_f64).collect())
    }
}

/// The k-additive truncation level: `alpha_{k+1}..alpha_n` are fixed to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KLevel(usize);

impl KLevel {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::KLevel { k, n });
        }
        Ok(Self(k))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

// ---------------------------------------------------------------------------
// exact integer machinery

/// Binomial tables for one dimension.
struct Tables {
    n: usize,
    /// `pascal[p][q] = C(p, q)` for `p <= n`.
    pascal: Vec<Vec<BigInt>>,
    /// `lcm_j C(n, j)` for `j = 1..=n`.
    lcm: BigInt,
}

impl Tables {
    fn new(n: usize) -> Self {
        let mut pascal: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        pascal.push(vec![BigInt::one()]);
        for p in 1..=n {
            let prev = &pascal[p - 1];
            let mut row = Vec::with_capacity(p + 1);
            row.push(BigInt::one());
            for q in 1..p {
                row.push(&prev[q - 1] + &prev[q]);
            }
            row.push(BigInt::one());
            pascal.push(row);
        }
        let lcm = pascal[n][1..].iter().fold(BigInt::one(), |l, c| l.lcm(c));
        Self { n, pascal, lcm }
    }

    fn c(&self, p: usize, q: usize) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if q > p {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.pascal[p][q]
    }

    /// `lcm / C(n, j)`.
    fn cofactor(&self, j: usize) -> BigInt {
        &self.lcm / self.c(self.n, j)
    }
}

/// Integer numerators over one shared denominator.
struct Scaled {
    num: Vec<BigInt>,
    den: BigInt,
}

impl Scaled {
    fn from_f64(xs: &[f64]) -> Self {
        let parts: Vec<(BigInt, i32)> = xs.iter().map(|&x| decode(x)).collect();
        let shift = parts
            .iter()
            .filter(|(m, _)| !m.is_zero())
            .map(|(_, e)| -e)
            .max()
            .unwrap_or(0)
            .max(0);
        let num = parts
            .into_iter()
            .map(|(m, e)| m << ((e + shift) as usize))
            .collect();
        Self {
            num,
            den: BigInt::one() << (shift as usize),
        }
    }

    fn from_ratios(xs: &[BigRational]) -> Self {
        let den = xs.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let num = xs.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        Self { num, den }
    }

    fn ratio(&self, num: BigInt, extra_den: &BigInt) -> BigRational {
        BigRational::new(num, &self.den * extra_den)
    }
}

/// `x = m * 2^e` exactly, for finite `x`.
fn decode(x: f64) -> (BigInt, i32) {
    assert!(x.is_finite(), "exact arithmetic needs finite inputs");
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let negative = bits >> 63 == 1;
    let exp_field = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, e) = if exp_field == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_field - 1075)
    };
    let m = BigInt::from(m);
    (if negative { -m } else { m }, e)
}

/// Bottom-up substitution on the integer form. `u[t]` holds the numerator of
/// `w_{n-t}` (0-based `t`); returns numerators of `alpha` over the same
/// denominator.
fn substitute_exact(t: &Tables, u: &[BigInt]) -> Vec<BigInt> {
    let n = t.n;
    let mut beta: Vec<BigInt> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut b = u[m - 1].clone();
        for (j, bj) in beta.iter().enumerate() {
            b -= t.c(m - 1, j) * bj;
        }
        beta.push(b);
    }
    beta.into_iter()
        .enumerate()
        .map(|(j, b)| b * t.c(n, j + 1))
        .collect()
}

/// Numerators of `w_i * lcm` for alpha numerators `a`.
fn combine_exact(t: &Tables, a: &[BigInt]) -> Vec<BigInt> {
    let n = t.n;
    let scaled: Vec<BigInt> = a
        .iter()
        .enumerate()
        .map(|(j, a)| a * t.cofactor(j + 1))
        .collect();
    (1..=n)
        .map(|i| {
            scaled
                .iter()
                .enumerate()
                .take(n - i + 1)
                .filter(|(_, s)| !s.is_zero())
                .map(|(j, s)| t.c(n - i, j) * s)
                .sum()
        })
        .collect()
}

/// Exact `alpha` for exact weights.
pub fn weights_to_alpha_exact(w: &[BigRational]) -> Vec<BigRational> {
    let s = Scaled::from_ratios(w);
    let t = Tables::new(w.len());
    let u: Vec<BigInt> = s.num.iter().rev().cloned().collect();
    substitute_exact(&t, &u)
        .into_iter()
        .map(|a| s.ratio(a, &BigInt::one()))
        .collect()
}

/// Exact weights for exact `alpha`.
pub fn alpha_to_weights_exact(alpha: &[BigRational]) -> Vec<BigRational> {
    let s = Scaled::from_ratios(alpha);
    let t = Tables::new(alpha.len());
    combine_exact(&t, &s.num)
        .into_iter()
        .map(|w| s.ratio(w, &t.lcm))
        .collect()
}

/// Exact `alpha` for the exact values of a float weighting.
pub fn weights_to_alpha_exact_f64(w: &WeightVector) -> ExactAlpha {
    let exact: Vec<BigRational> = w
        .as_slice()
        .iter()
        .map(|&x| BigRational::from_float(x).expect("finite"))
        .collect();
    ExactAlpha(weights_to_alpha_exact(&exact))
}

/// Exact decomposition of the maximum operator, `((-1)^{j-1} C(n, j))_j`.
pub fn exact_max_operator(n: usize) -> Result<Vec<BigRational>> {
    if n < 2 {
        return Err(Error::Dimension(n));
    }
    let t = Tables::new(n);
    Ok((1..=n)
        .map(|j| {
            let c = BigRational::from_integer(t.c(n, j).clone());
            if j % 2 == 1 {
                c
            } else {
                -c
            }
        })
        .collect())
}

// ---------------------------------------------------------------------------
// float machinery

/// Column `i` of the weight matrix, `(w_1i, ..., w_ni)`, by the recurrence
/// `w_{j+1,i} = w_ji * (n-i+1-j)(j+1) / (j (n-j))`.
fn weight_column_f64(n: usize, i: usize) -> Vec<f64> {
    let mut col = vec![0.0; n];
    let support = n - i + 1;
    let mut w = 1.0 / n as f64;
    for j in 1..=support {
        col[j - 1] = w;
        if j < n {
            w *= ((support - j) * (j + 1)) as f64 / (j * (n - j)) as f64;
        }
    }
    col
}

fn substitute_float(w: &[f64]) -> Vec<f64> {
    let n = w.len();
    let mut alpha = Vec::with_capacity(n);
    for m in 1..=n {
        let i = n - m + 1;
        let col = weight_column_f64(n, i);
        let partial: f64 = col.iter().zip(&alpha).map(|(c, a)| c * a).sum();
        alpha.push((w[i - 1] - partial) / col[m - 1]);
    }
    alpha
}

fn combine_float(alpha: &[f64]) -> Vec<f64> {
    let n = alpha.len();
    let mut w = vec![0.0; n];
    for (j, a) in alpha.iter().enumerate() {
        if *a == 0.0 {
            continue;
        }
        let row = combinatorics::weight_row_f64(n, j + 1).expect("valid level");
        for (wi, r) in w.iter_mut().zip(row) {
            *wi += r * a;
        }
    }
    w
}

// ---------------------------------------------------------------------------
// public transforms

/// Weights `w_i = sum_j w_ji alpha_j` without any feasibility check.
pub fn combine(alpha: &[f64], mode: Arithmetic) -> Vec<f64> {
    match mode {
        Arithmetic::Float => combine_float(alpha),
        Arithmetic::Exact => {
            let s = Scaled::from_f64(alpha);
            let t = Tables::new(alpha.len());
            combine_exact(&t, &s.num)
                .into_iter()
                .map(|w| ratio_to_f64(&s.ratio(w, &t.lcm)))
                .collect()
        }
    }
}

/// Solve the decomposition system for `alpha`, without validation of `w`.
pub fn decompose(w: &[f64], mode: Arithmetic) -> Vec<f64> {
    match mode {
        Arithmetic::Float => substitute_float(w),
        Arithmetic::Exact => {
            let s = Scaled::from_f64(w);
            let t = Tables::new(w.len());
            let u: Vec<BigInt> = s.num.iter().rev().cloned().collect();
            substitute_exact(&t, &u)
                .into_iter()
                .map(|a| ratio_to_f64(&s.ratio(a, &BigInt::one())))
                .collect()
        }
    }
}

/// Weights encoded by `alpha`.
///
/// Rejects coefficients that violate the decomposition conditions by more
/// than [`FEAS_TOL`], naming the first violated condition.
pub fn alpha_to_weights(alpha: &AlphaVector) -> Result<WeightVector> {
    alpha_to_weights_with_tolerance(alpha, FEAS_TOL)
}

pub fn alpha_to_weights_with_tolerance(alpha: &AlphaVector, tol: f64) -> Result<WeightVector> {
    let report = check_alpha_feasibility(alpha, tol);
    if let Some(err) = report.violation() {
        return Err(err);
    }
    WeightVector::with_tolerance(report.direct_weights, tol + report.rounding_floor)
}

/// The unique `alpha` of a weighting, in [`Arithmetic::auto`] mode.
pub fn weights_to_alpha(w: &WeightVector) -> AlphaVector {
    AlphaVector(decompose(w.as_slice(), Arithmetic::auto(w.n())))
}

/// Orness of `C_j`: `(n - j) / ((n - 1)(j + 1))`.
pub fn binomial_orness(n: usize, j: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Dimension(n));
    }
    if j == 0 || j > n {
        return Err(Error::Index { index: j, n });
    }
    Ok(BigRational::new(
        BigInt::from(n - j),
        BigInt::from((n - 1) * (j + 1)),
    ))
}

pub fn binomial_orness_f64(n: usize, j: usize) -> f64 {
    (n - j) as f64 / ((n - 1) * (j + 1)) as f64
}

/// `sum_j alpha_j (n - j) / ((n - 1)(j + 1))`, clamped into `[0, 1]`.
pub fn orness_from_alpha(alpha: &AlphaVector) -> OrnessLevel {
    let raw = orness_from_alpha_raw(alpha.as_slice());
    OrnessLevel::new(raw.clamp(0.0, 1.0)).expect("clamped")
}

pub(crate) fn orness_from_alpha_raw(alpha: &[f64]) -> f64 {
    let n = alpha.len();
    alpha
        .iter()
        .enumerate()
        .map(|(j, a)| a * binomial_orness_f64(n, j + 1))
        .sum()
}

// ---------------------------------------------------------------------------
// feasibility

/// Signed slack of one decomposition condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConditionSlack {
    /// `1` for `alpha_1 = 1 - sum_{j>=2} alpha_j >= 0`; `i = 2..=n` for
    /// `sum_{j>=2} [1 - n C(i-1, j-1) / C(n, j)] alpha_j <= 1`.
    pub index: usize,
    /// Nonnegative when the condition holds.
    pub slack: f64,
}

/// Outcome of [`check_alpha_feasibility`].
///
/// Each condition row equals `n` times one weight of the normalized vector
/// (`alpha_1` replaced by `1 - sum_{j>=2} alpha_j`), so rows are compared
/// against `-n * tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub tol: f64,
    pub arithmetic: &'static str,
    /// `sum_j alpha_j - 1`.
    pub normalization_residual: f64,
    pub conditions: Vec<ConditionSlack>,
    /// `w_i = sum_j w_ji alpha_j` for the coefficients as given.
    pub direct_weights: Vec<f64>,
    /// Bound on float evaluation error; zero in exact mode.
    pub rounding_floor: f64,
    /// Verdict of the decomposition conditions.
    pub feasible: bool,
    /// Verdict of the direct test on `direct_weights`.
    pub direct_feasible: bool,
    /// Largest disagreement between each condition row and the weight it
    /// should reproduce. Anything beyond rounding means the two routes
    /// disagree about the algebra.
    pub consistency_gap: f64,
}

impl FeasibilityReport {
    /// The first violated condition, as an error.
    pub fn violation(&self) -> Option<Error> {
        let n = self.direct_weights.len() as f64;
        if self.normalization_residual.abs() > self.tol + self.rounding_floor {
            return Some(Error::InfeasibleAlpha {
                condition: "normalization (sum of alpha = 1)".into(),
                slack: -self.normalization_residual.abs(),
            });
        }
        self.conditions
            .iter()
            .find(|c| c.slack < -(n * self.tol + self.rounding_floor))
            .map(|c| Error::InfeasibleAlpha {
                condition: format!("{}", c.index),
                slack: c.slack,
            })
    }

    /// Internal-consistency diagnostic when the two routes disagree.
    pub fn diagnostic(&self) -> Option<Error> {
        let limit = 1e-9 + 4.0 * self.rounding_floor;
        (self.consistency_gap > limit).then(|| {
            Error::Consistency(format!(
                "decomposition conditions disagree with direct weights by {:e}",
                self.consistency_gap
            ))
        })
    }
}

/// Evaluate the decomposition conditions for `alpha` next to the direct
/// weight-space test.
///
/// Exact for `n <= EXACT_LIMIT`: slacks are computed from the exact values of
/// the `f64` coefficients and rounded once.
pub fn check_alpha_feasibility(alpha: &AlphaVector, tol: f64) -> FeasibilityReport {
    let n = alpha.n();
    let mode = Arithmetic::auto(n);
    let a = alpha.as_slice();

    let (norm, conditions, direct, floor) = match mode {
        Arithmetic::Exact => {
            let (norm, conditions, direct) = conditions_exact(a);
            (norm, conditions, direct, 0.0)
        }
        Arithmetic::Float => conditions_float(a),
    };

    let nf = n as f64;
    let mut gap = (conditions[0].slack - (nf * direct[n - 1] - norm)).abs();
    for c in &conditions[1..] {
        let w = direct[n - c.index];
        gap = gap.max((c.slack - (nf * w - norm)).abs());
    }

    let feasible =
        norm.abs() <= tol + floor && conditions.iter().all(|c| c.slack >= -(nf * tol + floor));
    let direct_feasible = (direct.iter().sum::<f64>() - 1.0).abs() <= tol + floor
        && direct
            .iter()
            .all(|&w| w >= -(tol + floor) && w <= 1.0 + tol + floor);

    FeasibilityReport {
        tol,
        arithmetic: match mode {
            Arithmetic::Exact => "exact",
            Arithmetic::Float => "float",
        },
        normalization_residual: norm,
        conditions,
        direct_weights: direct,
        rounding_floor: floor,
        feasible,
        direct_feasible,
        consistency_gap: gap,
    }
}

fn conditions_exact(a: &[f64]) -> (f64, Vec<ConditionSlack>, Vec<f64>) {
    let n = a.len();
    let t = Tables::new(n);
    let s = Scaled::from_f64(a);
    let nn = BigInt::from(n);

    let total: BigInt = s.num.iter().sum();
    let norm = ratio_to_f64(&s.ratio(&total - &s.den, &BigInt::one()));

    let tail: BigInt = s.num[1..].iter().sum();
    let mut conditions = vec![ConditionSlack {
        index: 1,
        slack: ratio_to_f64(&s.ratio(&s.den - tail, &BigInt::one())),
    }];
    // Over the denominator lcm * den:
    //   lcm * den - sum_{j>=2} (lcm - n C(i-1, j-1) lcm / C(n, j)) a_j
    let scale = &t.lcm * &s.den;
    for i in 2..=n {
        let mut acc = scale.clone();
        for j in 2..=n {
            let aj = &s.num[j - 1];
            if aj.is_zero() {
                continue;
            }
            let coef = &t.lcm - &nn * t.c(i - 1, j - 1) * t.cofactor(j);
            acc -= coef * aj;
        }
        conditions.push(ConditionSlack {
            index: i,
            slack: ratio_to_f64(&s.ratio(acc, &t.lcm)),
        });
    }

    let direct = combine_exact(&t, &s.num)
        .into_iter()
        .map(|w| ratio_to_f64(&s.ratio(w, &t.lcm)))
        .collect();
    (norm, conditions, direct)
}

fn conditions_float(a: &[f64]) -> (f64, Vec<ConditionSlack>, Vec<f64>, f64) {
    let n = a.len();
    let nf = n as f64;
    let norm = a.iter().sum::<f64>() - 1.0;
    let tail: f64 = a[1..].iter().sum();

    // C(i-1, j-1) / C(n, j) is the binomial weight w_{j, n-i+1}.
    let mut row_sums = vec![0.0f64; n + 1];
    let mut row_mags = vec![0.0f64; n + 1];
    let mut abs_tail = 0.0;
    for (j, aj) in a.iter().enumerate().skip(1) {
        if *aj == 0.0 {
            continue;
        }
        abs_tail += aj.abs();
        let row = combinatorics::weight_row_f64(n, j + 1).expect("valid level");
        for i in 2..=n {
            let w = row[n - i];
            row_sums[i] += w * aj;
            row_mags[i] += w * aj.abs();
        }
    }
    let mut conditions = vec![ConditionSlack {
        index: 1,
        slack: 1.0 - tail,
    }];
    let mut floor: f64 = 0.0;
    for i in 2..=n {
        conditions.push(ConditionSlack {
            index: i,
            slack: 1.0 - tail + nf * row_sums[i],
        });
        floor = floor.max(1.0 + abs_tail + nf * row_mags[i]);
    }
    let direct = combine_float(a);
    let floor = 8.0 * (n + 1) as f64 * f64::EPSILON * floor;
    (norm, conditions, direct, floor)
}

/// Checks that `alpha_to_weights(alpha)` reproduces `w` within `tol` plus the
/// representation floor of `alpha`.
pub fn mutual_transform_gap(alpha: &AlphaVector, w: &WeightVector) -> f64 {
    let rebuilt = combine(alpha.as_slice(), Arithmetic::auto(alpha.n()));
    rebuilt
        .iter()
        .zip(w.as_slice())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// True when every weight is within `tol` of `[0, 1]` and the sum within `tol` of 1.
pub fn weights_in_range(w: &[f64], tol: f64) -> bool {
    owa::weight_violation(w) <= tol
}
