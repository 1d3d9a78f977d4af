//! Driving the command-line front end from code and reading its JSON back.
//!
//! cargo run --release --example cli_json

use owa_minimax::cli::{main_with_args, solutions_from_json};

fn main() -> owa_minimax::Result<()> {
    let mut out = Vec::new();
    let args = [
        "owa-minimax",
        "sweep",
        "--n",
        "6",
        "--eta",
        "0.2:0.8:0.2",
        "--output",
        "json",
    ];
    let code = main_with_args(args, &mut out);
    println!("exit code {code}");
    let json = String::from_utf8(out).expect("utf-8");
    for s in solutions_from_json(&json)? {
        println!(
            "eta = {:.1}  delta = {:.5}",
            s.eta.value(),
            s.delta.unwrap()
        );
    }
    Ok(())
}
