//! The n = 10 table: minimax disparity weights at orness 0, 0.1, ..., 1,
//! solved in both spaces.
//!
//! cargo run --release --example reproduce_table

use owa_minimax::{sweep, Method};

fn main() -> owa_minimax::Result<()> {
    let n = 10;
    let etas: Vec<f64> = (0..=10).rev().map(|i| f64::from(i) / 10.0).collect();
    let alpha_space = sweep(n, &etas, Method::AlphaSpace, None)?;
    let weight_space = sweep(n, &etas, Method::WeightSpace, None)?;

    print!("{:<10}", "orness");
    for eta in &etas {
        print!("{eta:>9.1}");
    }
    println!();
    for j in 0..n {
        print!("{:<10}", format!("alpha_{}", j + 1));
        for s in &alpha_space {
            print!("{:>9}", two_places(s.alpha.as_ref().unwrap().as_slice()[j]));
        }
        println!();
    }
    for i in 0..n {
        print!("{:<10}", format!("w_{}", i + 1));
        for s in &alpha_space {
            print!("{:>9}", two_places(s.weights.as_ref().unwrap()[i]));
        }
        println!();
    }
    for (label, rows) in [("delta", &alpha_space), ("delta (w)", &weight_space)] {
        print!("{label:<10}");
        for s in rows.iter() {
            print!("{:>9.4}", s.delta.unwrap());
        }
        println!();
    }
    Ok(())
}

fn two_places(x: f64) -> String {
    let x = if x.abs() < 0.005 { 0.0 } else { x };
    format!("{x:.2}")
}
