//! Burnside test at a generic point, and the reducibility witnesses at u = 1
//! where the representation factors through the symmetric group.

use braidrep::analysis::{burnside_dimension, burnside_dimension_generic, common_eigenvector, invariant_subspace_search};
use braidrep::rep::{specialize, standard_rep};
use braidrep::scalar::rational;

fn main() {
    for n in 3..=6 {
        let rho = specialize(&standard_rep(n).unwrap(), &rational(7, 3), 0.0).unwrap();
        let b = burnside_dimension(&rho, 0.0).unwrap();
        println!("n={n} u=7/3: algebra dimension {} of {} after {} passes", b.dimension, n * n, b.passes);
    }
    let generic = burnside_dimension_generic(&standard_rep(5).unwrap(), 1).unwrap();
    println!("n=5 over Z[t,1/t]: irreducible = {}", generic.irreducible);

    let perm = specialize(&standard_rep(5).unwrap(), &rational(1, 1), 0.0).unwrap();
    let b = burnside_dimension(&perm, 0.0).unwrap();
    println!("n=5 u=1: algebra dimension {} of 25", b.dimension);
    if let Some(v) = common_eigenvector(&perm, 0.0).unwrap() {
        let coords: Vec<String> = v.vector.iter().map(|x| x.to_string()).collect();
        println!("common eigenvector [{}]", coords.join(", "));
    }
    if let Some(basis) = invariant_subspace_search(&perm, 0.0, 20, 9).unwrap() {
        println!("invariant subspace of dimension {}:", basis.len());
        for v in basis {
            let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            println!("  [{}]", coords.join(", "));
        }
    }
}
