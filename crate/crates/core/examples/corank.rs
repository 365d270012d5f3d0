//! Corank of the standard representation against the Burau representation,
//! exactly at a rational point and generically over Z[t, 1/t].

use braidrep::analysis::{corank, corank_generic};
use braidrep::rep::{burau_rep, specialize, standard_rep};
use braidrep::scalar::rational;

fn main() {
    let u = rational(5, 2);
    for n in 3..=8 {
        let tau = specialize(&standard_rep(n).unwrap(), &u, 0.0).unwrap();
        let burau = specialize(&burau_rep(n).unwrap(), &u, 0.0).unwrap();
        let a = corank(&tau, 1e-9).unwrap();
        let b = corank(&burau, 1e-9).unwrap();
        println!(
            "n={n}: standard corank {} at y={}, burau corank {} at y={}",
            a.corank(),
            a.best_y_exact.as_deref().unwrap_or("?"),
            b.corank(),
            b.best_y_exact.as_deref().unwrap_or("?"),
        );
    }

    let tau = specialize(&standard_rep(5).unwrap(), &u, 0.0).unwrap();
    println!("eigenvalues of s1 for n=5, u={u}:");
    for e in corank(&tau, 1e-9).unwrap().per_eigenvalue {
        let exact = e.exact.unwrap_or_else(|| "irrational".into());
        println!("  y={:.6} ({exact}) multiplicity {} rank(s1 - y) = {}", e.y, e.multiplicity, e.rank);
    }

    let generic = corank_generic(&standard_rep(6).unwrap(), 1e-9, 42).unwrap();
    println!("generic corank for n=6: {}", generic.corank());
}
