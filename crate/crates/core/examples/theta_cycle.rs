//! Line witness for the subgroup generated by s1..s(m-3) and s(m-1), then the
//! eigenvector table of its images under powers of theta.

use braidrep::analysis::{rank_conclusion_check, subgroup_line_witness, theta_cycle_audit, AnalysisError};
use braidrep::rep::{specialize, standard_rep};
use braidrep::scalar::{rational, Complex};

fn main() {
    let m = 9;
    let rho = specialize(&standard_rep(m).unwrap(), &rational(3, 1), 0.0).unwrap();
    match subgroup_line_witness(&rho, 0.0) {
        Err(AnalysisError::NeedsComplexDomain { x }) => println!("over Q: x = {x} is irrational, switching to C"),
        other => println!("over Q: {other:?}"),
    }

    let y = Complex::new(2.0, 0.0);
    let rho = specialize(&standard_rep(m).unwrap(), &Complex::new(3.0, 0.0), 1e-12)
        .unwrap()
        .character_twist(&y, "2")
        .unwrap();
    let w = subgroup_line_witness(&rho, 1e-9).unwrap().expect("witness");
    println!("witness x = {:.6}, y = {:.6}", w.x, w.y);
    let audit = theta_cycle_audit(&rho, &w.vector, &w.x, &w.y, 1e-9).unwrap();
    println!("full twist scalar {:.4}, residual {:.1e}", audit.d_scalar, audit.d_residual);
    println!("cycle ok: {}, table ok: {} (worst residual {:.1e})", audit.cycle_ok, audit.table_ok, audit.max_table_residual);
    println!("independent vectors: {} of {}", audit.independence, m);
    for c in &audit.degeneracies {
        println!("  degenerate cell: s{} v{} also has eigenvalue y", c.generator, c.vector);
    }
    println!("rank(s1 - y) = {}", rank_conclusion_check(&rho, &w.y, 1e-9));
}
