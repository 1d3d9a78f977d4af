//! Binomial coefficients and the binomial OWA weight matrix.
//!
//! The binomial weight of level `j` at sorted position `i` is
//!
//! ```text
//! w_ji = C(n - i, j - 1) / C(n, j)        1 <= i, j <= n
//! ```
//!
//! which vanishes exactly when `i + j > n + 1`. Row `j = 1` is the
//! arithmetic mean and row `j = n` puts all mass on the smallest input.
//!
//! Two evaluation paths are provided. The exact path works in arbitrary
//! precision rationals and is the reference for `n <= EXACT_LIMIT`. The float
//! path multiplies ratios that never exceed one, so it neither overflows nor
//! needs raw binomials:
//!
//! ```text
//! w_ji = (j / n) * prod_{t=0}^{i-2} (n - j - t) / (n - 1 - t)
//! ```

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest dimension for which the exact rational path is the default.
pub const EXACT_LIMIT: usize = 64;

/// `C(p, q)` as an exact `u128`, with the convention `C(p, q) = 0` for `p < q`.
///
/// Returns [`Error::Overflow`] when the value does not fit.
pub fn binomial(p: u64, q: u64) -> Result<u128> {
    if q > p {
        return Ok(0);
    }
    let q = q.min(p - q);
    let mut acc: u128 = 1;
    for t in 1..=q as u128 {
        // acc = C(p - q + t - 1, t - 1); the next value is acc * x / t.
        let x = (p - q) as u128 + t;
        let g = acc.gcd(&t);
        let x = x / (t / g);
        acc = (acc / g).checked_mul(x).ok_or(Error::Overflow { p, q })?;
    }
    Ok(acc)
}

/// `C(p, q)` in arbitrary precision. Zero for `p < q`.
pub fn binomial_big(p: u64, q: u64) -> BigUint {
    if q > p {
        return BigUint::zero();
    }
    let q = q.min(p - q);
    let mut acc = BigUint::one();
    for t in 1..=q {
        acc = acc * BigUint::from(p - q + t) / BigUint::from(t);
    }
    acc
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Dimension(n));
    }
    Ok(())
}

fn check_index(index: usize, n: usize) -> Result<()> {
    if index == 0 || index > n {
        return Err(Error::Index { index, n });
    }
    Ok(())
}

/// Exact binomial weight `w_ji = C(n-i, j-1) / C(n, j)`.
pub fn binomial_weight(n: usize, j: usize, i: usize) -> Result<BigRational> {
    check_dim(n)?;
    check_index(j, n)?;
    check_index(i, n)?;
    Ok(exact_weight(n, j, i))
}

fn exact_weight(n: usize, j: usize, i: usize) -> BigRational {
    let num = binomial_big((n - i) as u64, (j - 1) as u64);
    let den = binomial_big(n as u64, j as u64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial weight through the overflow-free ratio product.
pub fn binomial_weight_f64(n: usize, j: usize, i: usize) -> Result<f64> {
    check_dim(n)?;
    check_index(j, n)?;
    check_index(i, n)?;
    if i + j > n + 1 {
        return Ok(0.0);
    }
    let mut w = j as f64 / n as f64;
    for t in 0..i - 1 {
        w *= (n - j - t) as f64 / (n - 1 - t) as f64;
    }
    Ok(w)
}

/// Row `j` of the weight matrix as floats: `(w_j1, ..., w_jn)`.
///
/// Rounded from the exact value for `n <= EXACT_LIMIT`, ratio recurrence above.
pub fn weight_row_f64(n: usize, j: usize) -> Result<Vec<f64>> {
    check_dim(n)?;
    check_index(j, n)?;
    if n <= EXACT_LIMIT {
        return Ok((1..=n)
            .map(|i| ratio_to_f64(&exact_weight(n, j, i)))
            .collect());
    }
    let mut row = Vec::with_capacity(n);
    let mut w = j as f64 / n as f64;
    for i in 1..=n {
        if i + j > n + 1 {
            row.push(0.0);
            continue;
        }
        row.push(w);
        if i < n {
            // w_{j,i+1} = w_ji * (n - j - i + 1) / (n - i)
            w *= (n + 1 - j - i) as f64 / (n - i) as f64;
        }
    }
    Ok(row)
}

/// Float rows `j = 1..=n` produced one at a time, for dimensions where a
/// dense matrix would not fit.
pub fn weight_rows_f64(n: usize) -> Result<impl Iterator<Item = Vec<f64>>> {
    check_dim(n)?;
    Ok((1..=n).map(move |j| weight_row_f64(n, j).expect("indices in range")))
}

/// The dense exact `n x n` matrix of binomial OWA weights.
///
/// Entry `(j, i)` (both 1-based) is `w_ji`. Memory is quadratic in `n`; use
/// [`weight_rows_f64`] for very large dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialWeightMatrix {
    n: usize,
    rows: Vec<Vec<BigRational>>,
}

impl BinomialWeightMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `w_ji`, 1-based.
    pub fn get(&self, j: usize, i: usize) -> &BigRational {
        &self.rows[j - 1][i - 1]
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &[BigRational] {
        &self.rows[j - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(ratio_to_f64).collect())
            .collect()
    }
}

/// Build the exact binomial weight matrix of dimension `n`.
pub fn weight_matrix(n: usize) -> Result<BinomialWeightMatrix> {
    check_dim(n)?;
    let rows = (1..=n)
        .map(|j| (1..=n).map(|i| exact_weight(n, j, i)).collect())
        .collect();
    Ok(BinomialWeightMatrix { n, rows })
}

/// Nearest float to an exact rational.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.numer().sign() == r.denom().sign() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(10, 3).unwrap(), 120);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(7, 0).unwrap(), 1);
        assert_eq!(binomial(7, 7).unwrap(), 1);
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![1u128];
        for p in 1..=60u64 {
            let mut next = vec![1u128; p as usize + 1];
            for q in 1..p as usize {
                next[q] = row[q - 1] + row[q];
            }
            row = next;
            for (q, &v) in row.iter().enumerate() {
                assert_eq!(binomial(p, q as u64).unwrap(), v, "C({p},{q})");
                assert_eq!(binomial_big(p, q as u64), BigUint::from(v));
            }
        }
    }

    #[test]
    fn binomial_overflow_is_reported() {
        // C(130, 65) ~ 9.5e37 still fits, C(140, 70) ~ 9.4e40 does not.
        assert!(binomial(130, 65).is_ok());
        assert_eq!(binomial(140, 70), Err(Error::Overflow { p: 140, q: 70 }));
        let big = binomial_big(140, 70);
        assert!(big > BigUint::from(u128::MAX));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(binomial_weight(10, 1, 7).unwrap(), q(1, 10));
        assert_eq!(binomial_weight(10, 5, 7).unwrap(), q(0, 1));
        let row: Vec<_> = (1..=4).map(|i| binomial_weight(4, 2, i).unwrap()).collect();
        assert_eq!(row, vec![q(1, 2), q(1, 3), q(1, 6), q(0, 1)]);
    }

    #[test]
    fn weight_index_errors() {
        assert_eq!(
            binomial_weight(4, 0, 1),
            Err(Error::Index { index: 0, n: 4 })
        );
        assert_eq!(
            binomial_weight(4, 1, 5),
            Err(Error::Index { index: 5, n: 4 })
        );
        assert_eq!(binomial_weight(1, 1, 1), Err(Error::Dimension(1)));
        assert!(binomial_weight_f64(4, 5, 1).is_err());
    }

    #[test]
    fn matrix_examples() {
        let m = weight_matrix(2).unwrap();
        assert_eq!(m.row(1), &[q(1, 2), q(1, 2)]);
        assert_eq!(m.row(2), &[q(1, 1), q(0, 1)]);
        let m = weight_matrix(4).unwrap();
        assert_eq!(m.row(4), &[q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let m = weight_matrix(10).unwrap();
        assert!(m.row(1).iter().all(|w| *w == q(1, 10)));
        assert!(weight_matrix(1).is_err());
    }

    #[test]
    fn matrix_invariants_up_to_30() {
        for n in 2..=30 {
            let m = weight_matrix(n).unwrap();
            for j in 1..=n {
                let row = m.row(j);
                let sum: BigRational = row.iter().sum();
                assert!(sum.is_one(), "n={n} j={j}");
                for i in 1..=n {
                    assert_eq!(row[i - 1].is_zero(), i + j > n + 1, "n={n} j={j} i={i}");
                }
                let support = n - j + 1;
                if j >= 2 {
                    assert!(row[..support].windows(2).all(|p| p[0] > p[1]));
                } else {
                    assert!(row.iter().all(|w| *w == q(1, n as i64)));
                }
            }
        }
    }

    #[test]
    fn float_path_agrees_with_exact() {
        for n in 2..=100 {
            for j in 1..=n {
                for i in 1..=n {
                    let exact = ratio_to_f64(&binomial_weight(n, j, i).unwrap());
                    let fast = binomial_weight_f64(n, j, i).unwrap();
                    if exact == 0.0 {
                        assert_eq!(fast, 0.0);
                    } else {
                        let rel = ((fast - exact) / exact).abs();
                        assert!(rel < 1e-12, "n={n} j={j} i={i} rel={rel:e}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_recurrence_matches_ratio_product() {
        let n = 200;
        for j in [1, 2, 3, 50, 199, 200] {
            let row = weight_row_f64(n, j).unwrap();
            for (i, w) in row.iter().enumerate() {
                let direct = binomial_weight_f64(n, j, i + 1).unwrap();
                assert!((w - direct).abs() <= 1e-13 * direct.abs().max(1e-300));
            }
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() < 1e-12);
        }
        assert_eq!(weight_rows_f64(5).unwrap().count(), 5);
    }
}
