//! Using the bundled simplex solver on a problem of your own, here a small
//! diet problem, and inspecting the model the disparity solver builds.
//!
//! cargo run --release --example custom_lp

use owa_minimax::lp::Bound;
use owa_minimax::{build_alpha_model, solve_lp, LinearProgram, LpStatus};

fn main() -> owa_minimax::Result<()> {
    // Two foods, minimize cost subject to nutrient floors and a portion cap.
    let mut lp = LinearProgram::new(2).minimize(vec![0.6, 0.35]);
    lp.add_ge(vec![5.0, 7.0], 8.0);
    lp.add_ge(vec![4.0, 2.0], 15.0);
    lp.add_ge(vec![2.0, 1.0], 3.0);
    lp.set_bounds(1, Bound::between(0.0, 2.5));
    let out = solve_lp(&lp)?;
    assert_eq!(out.status, LpStatus::Optimal);
    println!(
        "diet: x = {:?}, cost = {:.4}",
        out.solution.unwrap(),
        out.objective_value.unwrap()
    );

    let model = build_alpha_model(10, 0.2, 3)?;
    println!(
        "alpha model n = 10, k = 3: {} variables, {} constraints",
        model.num_vars,
        model.num_constraints()
    );
    println!("status: {:?}", solve_lp(&model)?.status);
    Ok(())
}
