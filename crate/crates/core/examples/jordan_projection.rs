//! Image of f(A)/(A - lambda) for the minimal polynomial f of A: its dimension
//! counts the Jordan blocks of maximal size for lambda.

use braidrep::analysis::{jordan_projection, subgroup_invariance_check};
use braidrep::linalg::numeric::{complexify, jordan_structure};
use braidrep::rep::{specialize, standard_rep};
use braidrep::scalar::rational;

fn main() {
    let n = 9;
    let y = rational(2, 1);
    let rho = specialize(&standard_rep(n).unwrap(), &rational(3, 1), 0.0).unwrap().character_twist(&y, "2").unwrap();
    let m = rho.generator(n - 1);
    let p = jordan_projection(m, &y, 0.0).unwrap();
    println!("minimal polynomial: {}", p.minpoly);
    println!("cofactor:           {}", p.cofactor);
    println!("image dimension d = {}", p.d);

    let commuting: Vec<usize> = (1..=n - 3).chain([n - 1]).collect();
    let ok = subgroup_invariance_check(&rho, &p.basis, &commuting, 0.0).unwrap();
    println!("image invariant under s{commuting:?}: {ok}");

    let blocks = jordan_structure(&complexify(m), 1e-9).unwrap();
    for e in &blocks.eigenvalues {
        println!("  eigenvalue {:.4}: blocks {:?}, ranks {:?}", e.value, e.block_sizes, e.rank_sequence);
    }
}
