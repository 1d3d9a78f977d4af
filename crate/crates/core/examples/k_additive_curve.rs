//! How the optimal disparity at orness 0.2 falls as more binomial
//! coefficients are allowed. Levels 1 and 2 admit no valid weights.
//!
//! cargo run --release --example k_additive_curve [eta]

use owa_minimax::{kcurve, Status};

fn main() -> owa_minimax::Result<()> {
    let eta: f64 = std::env::args()
        .nth(1)
        .map_or(0.2, |s| s.parse().expect("eta"));
    let ks: Vec<usize> = (1..=10).collect();
    println!("n = 10, orness = {eta}");
    for p in kcurve(10, eta, &ks)? {
        match (p.status, p.delta) {
            (Status::Optimal, Some(d)) => {
                let bar = "#".repeat((d * 600.0).round() as usize);
                println!("k = {:>2}  delta = {d:.5}  {bar}", p.k);
            }
            _ => println!("k = {:>2}  infeasible", p.k),
        }
    }
    Ok(())
}
