//! Moving between weights and binomial decomposition coefficients, in
//! floating point and in exact rational arithmetic.
//!
//! cargo run --release --example transforms

use num_rational::BigRational;
use owa_minimax::decomposition::{alpha_to_weights_exact, weights_to_alpha_exact};
use owa_minimax::{
    alpha_to_weights, check_alpha_feasibility, orness_from_alpha, weights_to_alpha, AlphaVector,
    WeightVector,
};

fn main() -> owa_minimax::Result<()> {
    // The maximum operator needs every coefficient, with alternating signs.
    let max = WeightVector::max_operator(10)?;
    println!("alpha(max) = {:?}", weights_to_alpha(&max).as_slice());

    // Two coefficients describe a linear weight profile.
    let alpha = AlphaVector::truncated(10, &[1.98, -0.98])?;
    let w = alpha_to_weights(&alpha)?;
    println!("w(1.98, -0.98) = {:.4?}", w.as_slice());
    println!(
        "orness from alpha = {:.4}",
        orness_from_alpha(&alpha).value()
    );

    // Exact round trip on a rational weighting.
    let exact: Vec<BigRational> = [1, 2, 3, 4]
        .iter()
        .map(|&k| BigRational::new(k.into(), 10.into()))
        .collect();
    let a = weights_to_alpha_exact(&exact);
    let strings: Vec<String> = a.iter().map(|r| r.to_string()).collect();
    println!("alpha(0.1, 0.2, 0.3, 0.4) = {strings:?}");
    assert_eq!(alpha_to_weights_exact(&a), exact);

    // Coefficients that do not encode a weighting are rejected with the
    // offending condition named.
    let bad = AlphaVector::new(vec![3.0, -2.0, 0.0])?;
    let report = check_alpha_feasibility(&bad, 1e-9);
    println!(
        "direct weights of (3, -2, 0) = {:.4?}",
        report.direct_weights
    );
    if let Err(e) = alpha_to_weights(&bad) {
        println!("rejected: {e}");
    }
    Ok(())
}
