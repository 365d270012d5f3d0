//! Exact Laurent polynomial arithmetic in t with rational coefficients.

use braidrep::laurent::LaurentPoly;
use braidrep::scalar::{rational, Complex};
use num_traits::One;

fn main() {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let a: LaurentPoly = "-1/2*t^-1 + 3*t^0 + 1*t^2".parse().unwrap();
    let b = t.clone() - one.clone();
    let p = a.clone() * b.clone();
    println!("a         = {a}");
    println!("b         = {b}");
    println!("a*b       = {p}");
    println!("(a*b)/b   = {}", p.divide_exact(&b).unwrap());
    println!("a(2)      = {}", a.eval_rational(&rational(2, 1)).unwrap());
    println!("a(i)      = {}", a.eval_complex(Complex::new(0.0, 1.0)).unwrap());
    println!("t*t^-1    = {}", t.clone() * LaurentPoly::monomial(rational(1, 1), -1));
    println!("unit t^3: {}, unit 2t: {}", LaurentPoly::monomial(rational(1, 1), 3).is_unit(), (t.clone() + t).is_unit());
    match a.eval_rational(&rational(0, 1)) {
        Ok(v) => println!("a(0) = {v}"),
        Err(e) => println!("a(0): {e}"),
    }
    match p.divide_exact(&(one.clone() + one)) {
        Ok(q) => println!("(a*b)/2 = {q}"),
        Err(e) => println!("(a*b)/2: {e}"),
    }
}
