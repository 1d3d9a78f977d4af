//! A 500-input instance: the alpha-space model with three coefficients
//! against the full weight-space model.
//!
//! cargo run --release --example large_scale

use std::time::Instant;

use owa_minimax::{orness, solve_minimax_disparity, Method};

fn main() -> owa_minimax::Result<()> {
    let (n, eta) = (500, 0.3);
    for (method, k) in [(Method::AlphaSpace, Some(3)), (Method::WeightSpace, None)] {
        let start = Instant::now();
        let s = solve_minimax_disparity(n, eta, method, k)?;
        let elapsed = start.elapsed();
        let w = s.weights.as_ref().expect("feasible");
        println!(
            "{:<8} k = {:>3}  delta = {:.3e}  orness = {:.6}  pivots = {:>4}  {:.2?}",
            method.as_str(),
            s.k,
            s.delta.unwrap(),
            orness(w).value(),
            s.iterations,
            elapsed
        );
        println!(
            "         w_1 = {:.6}  w_250 = {:.6}  w_500 = {:.6}",
            w[0], w[249], w[499]
        );
    }
    Ok(())
}
