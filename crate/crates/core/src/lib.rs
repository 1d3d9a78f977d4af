//! Minimax disparity OWA weights.
//!
//! The crate determines ordered weighted averaging (OWA) weights that
//! minimize the largest gap between adjacent weights at a prescribed orness,
//! either directly over the weights or over the coefficients of the binomial
//! decomposition truncated at a k-additive level.
//!
//! ```
//! use owa_minimax::{solve_minimax_disparity, Method};
//!
//! let s = solve_minimax_disparity(10, 0.7, Method::AlphaSpace, Some(2)).unwrap();
//! let alpha = s.alpha.unwrap();
//! assert!((alpha.as_slice()[0] - 1.98).abs() < 0.01);
//! assert!((s.delta.unwrap() - 0.0218).abs() < 1e-4);
//! ```

pub mod cli;
pub mod combinatorics;
pub mod decomposition;
pub mod error;
pub mod lp;
pub mod models;
pub mod owa;

pub use decomposition::{
    alpha_to_weights, check_alpha_feasibility, orness_from_alpha, weights_to_alpha, AlphaVector,
    Arithmetic, ExactAlpha, FeasibilityReport, KLevel,
};
pub use error::{Error, Result};
pub use lp::{solve_lp, LinearProgram, LpOutcome, LpStatus};
pub use models::{
    build_alpha_model, build_weight_model, kcurve, solve_minimax_disparity, sweep,
    DisparitySolution, KPoint, Method, Status,
};
pub use owa::{disparity, evaluate_owa, orness, OrnessLevel, WeightVector};
