//! Aggregating data with OWA operators and measuring their orness and
//! disparity.
//!
//! cargo run --release --example measures

use owa_minimax::owa::evaluate_binomial_owa;
use owa_minimax::{disparity, evaluate_owa, orness, WeightVector};

fn main() -> owa_minimax::Result<()> {
    let scores = [6.5, 9.0, 4.0, 7.5, 8.0];
    let operators = [
        ("min", WeightVector::min_operator(5)?),
        ("mean", WeightVector::uniform(5)?),
        ("linear", WeightVector::new(vec![0.0, 0.1, 0.2, 0.3, 0.4])?),
        ("max", WeightVector::max_operator(5)?),
    ];
    println!("{:<8}{:>8}{:>9}{:>11}", "", "value", "orness", "disparity");
    for (name, w) in &operators {
        println!(
            "{name:<8}{:>8.3}{:>9.3}{:>11.3}",
            evaluate_owa(w, &scores)?,
            orness(w).value(),
            disparity(w)
        );
    }
    // C_j averages the smallest value of every j-element subset.
    for j in 1..=5 {
        println!(
            "C_{j}(scores) = {:.4}",
            evaluate_binomial_owa(5, j, &scores)?
        );
    }
    Ok(())
}
