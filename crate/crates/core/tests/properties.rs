use braidrep::analysis::{central_scalar, corank, jordan_projection};
use braidrep::braid::{BraidWord, Letter};
use braidrep::classify::{certify_equivalence, classify, model_rep, Obstruction, Verdict};
use braidrep::laurent::LaurentPoly;
use braidrep::linalg::numeric::{complexify, jordan_structure};
use braidrep::linalg::{Mat, Poly};
use braidrep::rep::{burau_rep, specialize, standard_rep, Rep};
use braidrep::scalar::{Complex, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=8).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

/// A specialization point away from 0 and 1.
fn generic_u() -> impl Strategy<Value = Rational> {
    nonzero_rational().prop_filter("not the permutation point", |x| !x.is_one())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..5).prop_map(LaurentPoly::from_terms)
}

fn word(strands: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..strands, any::<bool>()), 0..8).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(i, inv)| if inv { Letter::inv(i) } else { Letter::gen(i) }).collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

/// A complex number with modulus in `[lo, hi]`.
fn complex_in(lo: f64, hi: f64) -> impl Strategy<Value = Complex> {
    (lo..hi, 0.0..std::f64::consts::TAU).prop_map(|(r, a)| Complex::from_polar(r, a))
}

fn rational_tau(n: usize, u: &Rational) -> Rep<Rational> {
    specialize(&standard_rep(n).unwrap(), u, 0.0).unwrap()
}

/// `A X` against a plain triple loop.
fn naive_product(a: &Mat<Rational>, b: &Mat<Rational>) -> Mat<Rational> {
    Mat::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).fold(Rational::zero(), |acc, k| acc + a[(i, k)].clone() * b[(k, j)].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * LaurentPoly::one(), a);
    }

    #[test]
    fn laurent_evaluation_is_a_ring_map(a in laurent(), b in laurent(), u in nonzero_rational()) {
        let at = |p: &LaurentPoly| p.eval_rational(&u).unwrap();
        prop_assert_eq!(at(&(a.clone() * b.clone())), at(&a) * at(&b));
        prop_assert_eq!(at(&(a.clone() + b.clone())), at(&a) + at(&b));
        // direct power sum as the oracle
        let direct = a.terms().fold(Rational::zero(), |acc, (k, c)| {
            let p = if k >= 0 { num_traits::pow(u.clone(), k as usize) } else { num_traits::pow(u.recip(), (-k) as usize) };
            acc + c.clone() * p
        });
        prop_assert_eq!(at(&a), direct);
    }

    #[test]
    fn laurent_division_undoes_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((a.clone() * b.clone()).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let text = a.to_string();
        let back: LaurentPoly = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn word_evaluation_is_a_homomorphism(u in generic_u(), w1 in word(4), w2 in word(4)) {
        let rho = rational_tau(4, &u);
        let lhs = rho.eval_word(&w1.concat(&w2).unwrap()).unwrap();
        let rhs = naive_product(&rho.eval_word(&w1).unwrap(), &rho.eval_word(&w2).unwrap());
        prop_assert_eq!(lhs, rhs);
        let id = rho.eval_word(&w1.concat(&w1.inverse()).unwrap()).unwrap();
        prop_assert_eq!(id, Mat::identity(4));
    }

    #[test]
    fn specializations_satisfy_the_relations(n in 2usize..7, u in nonzero_rational(), y in nonzero_rational()) {
        let tau = rational_tau(n, &u);
        prop_assert!(tau.check_braid_relations(0.0).all_hold);
        let twisted = tau.character_twist(&y, "y").unwrap();
        prop_assert!(twisted.check_braid_relations(0.0).all_hold);
        let burau = specialize(&burau_rep(n).unwrap(), &u, 0.0).unwrap();
        prop_assert!(burau.check_braid_relations(0.0).all_hold);
    }

    #[test]
    fn corank_does_not_depend_on_the_generator(n in 3usize..8, u in generic_u(), y in nonzero_rational()) {
        let rho = rational_tau(n, &u).character_twist(&y, "y").unwrap();
        let report = corank(&rho, 1e-9).unwrap();
        prop_assert_eq!(report.corank(), 2);
        // every generator is conjugate to s1, so ranks at the rational eigenvalues agree
        for e in report.per_eigenvalue.iter().filter(|e| e.exact.is_some()) {
            let value: Rational = e.exact.as_ref().unwrap().parse().unwrap();
            for k in 2..n {
                prop_assert_eq!(rho.generator(k).shift_diagonal(&value).rank(0.0), e.rank);
            }
        }
    }

    #[test]
    fn full_twist_scalar_closed_form(m in 2usize..8, u in nonzero_rational(), y in nonzero_rational()) {
        let rho = rational_tau(m, &u).character_twist(&y, "y").unwrap();
        let d = central_scalar(&rho, 0.0).unwrap().d;
        let expected = num_traits::pow(y.clone(), m * (m - 1)) * num_traits::pow(u.clone(), m - 1);
        prop_assert_eq!(d, expected);
    }

    #[test]
    fn jordan_projection_counts_largest_blocks(n in 4usize..8, u in generic_u(), y in nonzero_rational(), k in 1usize..7) {
        let rho = rational_tau(n, &u).character_twist(&y, "y").unwrap();
        let k = 1 + (k - 1) % (n - 1);
        let m = rho.generator(k);
        let p = jordan_projection(m, &y, 0.0).unwrap();
        let blocks = jordan_structure(&complexify(m), 1e-9).unwrap();
        let yc = Complex::new(braidrep::scalar::rational_to_f64(&y), 0.0);
        prop_assert_eq!(Some(p.d), blocks.find(yc, 1e-6).map(|e| e.largest_block_count()));
        // the cofactor times (x - y) is the minimal polynomial
        prop_assert_eq!(p.cofactor.mul(&Poly::linear(y.clone())), p.minpoly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classify_recovers_parameters_after_conjugation(
        n in 5usize..8,
        y in complex_in(0.5, 2.0),
        u in complex_in(0.5, 3.0).prop_filter("away from 1", |u| (u - Complex::new(1.0, 0.0)).norm() > 0.3),
        p in prop::collection::vec(-2.0f64..2.0, 64),
        scale in 0.1f64..10.0,
    ) {
        let model = model_rep(n, y, u).unwrap();
        let mut pm = Mat::from_fn(n, n, |i, j| Complex::new(p[i * n + j], p[(i * n + j + 17) % 64]));
        pm = pm.shift_diagonal(&Complex::new(-4.0, 0.0));
        prop_assume!(pm.inverse(1e-12).is_some());
        let rho = model.conjugate_by(&pm, 1e-9).unwrap();
        let res = classify(&rho, 1e-9).unwrap();
        prop_assert_eq!(res.verdict, Verdict::Equivalent);
        prop_assert!((res.y - y).norm() < 1e-6 * y.norm(), "y {} vs {}", res.y, y);
        prop_assert!((res.u - u).norm() < 1e-6 * u.norm(), "u {} vs {}", res.u, u);
        // the verdict ignores a rescaling of the conjugating matrix
        let scaled = model.conjugate_by(&pm.scale(&Complex::new(scale, 0.0)), 1e-9).unwrap();
        let again = classify(&scaled, 1e-9).unwrap();
        prop_assert_eq!(again.verdict, Verdict::Equivalent);
        prop_assert!((again.y - res.y).norm() < 1e-6 && (again.u - res.u).norm() < 1e-6);
    }

    #[test]
    fn correct_parameters_give_a_one_dimensional_schur_space(
        n in 5usize..9,
        y in complex_in(0.5, 2.0),
        u in complex_in(1.5, 3.0),
    ) {
        let res = certify_equivalence(&model_rep(n, y, u).unwrap(), y, u, 1e-9).unwrap();
        prop_assert_eq!(res.schur_dimension, 1);
        prop_assert_eq!(res.verdict, Verdict::Equivalent);
    }

    #[test]
    fn obstructions_are_sound(n in 5usize..9, y in complex_in(0.5, 2.0), u in complex_in(1.5, 3.0), shift in 0.2f64..1.0) {
        let rho = model_rep(n, y, u).unwrap();
        let wrong_u = u + Complex::new(shift, 0.0);
        let res = certify_equivalence(&rho, y, wrong_u, 1e-9).unwrap();
        prop_assert_eq!(res.verdict, Verdict::NotEquivalent);
        match res.obstruction {
            Some(Obstruction::EigenvalueMismatch { observed, model }) => {
                let close = observed.len() == model.len()
                    && observed.iter().zip(&model).all(|(a, b)| a.1 == b.1 && (a.0 - b.0).norm() < 1e-6);
                prop_assert!(!close, "reported spectra agree");
            }
            Some(Obstruction::ZeroSchurSpace { system_rank, unknowns }) => prop_assert_eq!(system_rank, unknowns),
            None => prop_assert!(false, "no obstruction"),
        }
    }
}
