//! Randomized round trip: sample (y, u, P), conjugate, classify, compare.
//!
//!     cargo run --release --example audit -- 9 100 7

use braidrep::classify::audit_theorem;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(9) as usize;
    let trials = args.next().unwrap_or(20) as usize;
    let seed = args.next().unwrap_or(7);
    let s = audit_theorem(n, trials, seed, 1e-9).unwrap();
    println!("n={n} trials={trials} seed={seed}: {} passed, {} failed", s.passed, s.failed);
    println!("worst errors: y {:.1e}, u {:.1e}, residual {:.1e}", s.worst_y_error, s.worst_u_error, s.worst_relative_residual);
    for r in s.rows.iter().filter(|r| !r.passed) {
        println!("  trial {} failed: {:?}", r.trial, r.error);
    }
}
