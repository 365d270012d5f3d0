//! The full twist acts by a scalar: symbolically t^(n-1) on the standard
//! representation, and y^(n(n-1)) u^(n-1) after twisting and specializing.

use braidrep::analysis::central_scalar;
use braidrep::rep::{specialize, standard_rep};
use braidrep::scalar::rational;

fn main() {
    for n in 2..=6 {
        let d = central_scalar(&standard_rep(n).unwrap(), 0.0).unwrap();
        println!("n={n}: theta^n = ({}) I", d.d);
    }
    let (u, y) = (rational(3, 2), rational(-2, 1));
    for n in 3..=6 {
        let rho = specialize(&standard_rep(n).unwrap(), &u, 0.0).unwrap().character_twist(&y, "-2").unwrap();
        let d = central_scalar(&rho, 0.0).unwrap().d;
        let expected = num_traits::pow(y.clone(), n * (n - 1)) * num_traits::pow(u.clone(), n - 1);
        println!("n={n} u={u} y={y}: d = {d} (closed form {expected})");
    }
}
