//! Build the standard representation over Z[t, 1/t], check the braid
//! relations symbolically, specialize it and write it out as JSON.
//!
//!     cargo run --example standard_rep -- 4 3/2

use braidrep::braid::parse_word;
use braidrep::io::rep_to_json;
use braidrep::rep::{specialize, standard_rep};
use braidrep::scalar::Rational;

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse().expect("strand count")).unwrap_or(4);
    let u: Rational = args.next().map(|s| s.parse().expect("rational u")).unwrap_or_else(|| Rational::from_integer(2.into()));

    let tau = standard_rep(n).unwrap();
    for (i, g) in tau.gens().iter().enumerate() {
        println!("s{} =", i + 1);
        for r in 0..g.rows() {
            let row: Vec<String> = (0..g.cols()).map(|c| g[(r, c)].to_string()).collect();
            println!("  [{}]", row.join(", "));
        }
    }
    let report = tau.check_braid_relations(0.0);
    println!("{} relations checked, all hold: {}", report.relations.len(), report.all_hold);

    let text = if n >= 3 { "s1 s2^-1 s1" } else { "s1 s1" };
    let w = parse_word(n, text).unwrap();
    println!("rho({text}) =");
    let m = tau.eval_word(&w).unwrap();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m[(r, c)].to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    let rho = specialize(&tau, &u, 0.0).unwrap();
    println!("{}", serde_json::to_string_pretty(&rep_to_json(&rho)).unwrap());
}
