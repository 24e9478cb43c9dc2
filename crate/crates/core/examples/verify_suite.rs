//! Runs the seeded verification suite and prints the text report.
//!
//! `cargo run --example verify_suite -- 1 4 50 42` (n, max degree, trials, seed).

use monogenic::verify::{run, VerifyParams};

fn main() -> monogenic::error::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer argument")).collect();
    let get = |i: usize, d: u64| args.get(i).copied().unwrap_or(d);
    let params = VerifyParams { n: get(0, 1) as usize, max_degree: get(1, 4) as u32, trials: get(2, 50) as usize, seed: get(3, 42) };
    let report = run(params)?;
    print!("{}", report.to_text());
    std::process::exit(if report.passed { 0 } else { 1 });
}
