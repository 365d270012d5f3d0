//! Recognize a conjugated, twisted specialization and certify the
//! equivalence with an explicit intertwiner.

use braidrep::classify::{certify_equivalence, classify, model_rep};
use braidrep::linalg::Mat;
use braidrep::scalar::Complex;

fn main() {
    let n = 9;
    let (y, u) = (Complex::new(0.8, 0.6), Complex::new(-1.5, 2.0));
    let p = Mat::from_fn(n, n, |i, j| Complex::new(((3 * i + 5 * j) % 7) as f64 - 3.0, if i == j { 4.0 } else { 0.0 }));
    let rho = model_rep(n, y, u).unwrap().conjugate_by(&p, 1e-9).unwrap();

    let res = classify(&rho, 1e-9).unwrap();
    println!("verdict {:?}", res.verdict);
    println!("y = {:.9} (true {y})", res.y);
    println!("u = {:.9} (true {u})", res.u);
    println!("intertwiner residual {:.2e} relative, condition {:.2e}", res.relative_residual(), res.condition);
    for d in &res.diagnostics {
        println!("{}: {}", d.severity, d.message);
    }

    let wrong = certify_equivalence(&rho, y, u + Complex::new(0.5, 0.0), 1e-9).unwrap();
    println!("against u + 0.5: {:?}, obstruction {:?}", wrong.verdict, wrong.obstruction.map(|o| format!("{o:?}").split(' ').next().unwrap().to_string()));
}
