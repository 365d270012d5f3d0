//! Laurent polynomials in one variable `t` with exact rational coefficients.
//!
//! This is the coefficient ring `Q[t, t^-1]` of the standard representation.
//! Storage is sparse (exponent -> coefficient) and always canonical: zero
//! coefficients are never stored, so derived equality is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{Complex, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("substitution t = 0 into a polynomial with negative exponents")]
    ZeroSubstitution,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    /// The monomial `c * t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in iter {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Units of `Q[t^±1]` are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&0))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Largest coefficient magnitude, as a float.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Substitutes a rational value for `t`.
    pub fn eval_rational(&self, u: &Rational) -> Result<Rational, LaurentError> {
        if u.is_zero() {
            return match self.min_degree() {
                Some(k) if k < 0 => Err(LaurentError::ZeroSubstitution),
                _ => Ok(self.coeff(0)),
            };
        }
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            acc += c * rational_pow(u, *k);
        }
        Ok(acc)
    }

    /// Substitutes a complex value for `t`.
    pub fn eval_complex(&self, u: Complex) -> Result<Complex, LaurentError> {
        if u == Complex::new(0.0, 0.0) {
            return match self.min_degree() {
                Some(k) if k < 0 => Err(LaurentError::ZeroSubstitution),
                _ => Ok(Complex::new(self.coeff(0).to_f64().unwrap_or(f64::NAN), 0.0)),
            };
        }
        let mut acc = Complex::new(0.0, 0.0);
        for (k, c) in &self.terms {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += u.powi(*k as i32) * cf;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor` in `Q[t^±1]`.
    ///
    /// Since `t` is a unit, both operands are first shifted to ordinary
    /// polynomials with nonzero constant term; the division is then carried
    /// out in `Q[t]` and the quotient shifted back.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        let (Some(dmin), Some(dmax)) = (divisor.min_degree(), divisor.max_degree()) else {
            return Err(LaurentError::DivisionByZero);
        };
        let Some(fmin) = self.min_degree() else {
            return Ok(LaurentPoly::zero());
        };
        if divisor.is_unit() {
            let c = divisor.terms.values().next().expect("unit has one term");
            return Ok(self.scale(&c.recip()).shift(-dmin));
        }
        // dense ascending coefficient vectors of the shifted polynomials
        let fmax = self.max_degree().expect("nonzero");
        let mut rem: Vec<Rational> = (fmin..=fmax).map(|k| self.coeff(k)).collect();
        let div: Vec<Rational> = (dmin..=dmax).map(|k| divisor.coeff(k)).collect();
        if rem.len() < div.len() {
            return Err(LaurentError::NotDivisible);
        }
        let lead = div.last().expect("nonzero divisor").clone();
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + div.len() - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in div.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::NotDivisible);
        }
        let offset = fmin - dmin;
        Ok(LaurentPoly::from_terms(
            quot.into_iter().enumerate().map(|(i, c)| (i as i64 + offset, c)),
        ))
    }
}

/// `u^k` for a nonzero rational and any integer exponent.
pub(crate) fn rational_pow(u: &Rational, k: i64) -> Rational {
    let base = if k < 0 { u.recip() } else { u.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: `c*t^k` terms in ascending exponent order joined
    /// by ` + `, e.g. `-1/2*t^-3 + 4*t^0 + 1*t^2`. The zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*t^{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Parses the canonical text form. A bare rational term is read as `c*t^0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(LaurentError::Parse("empty input".into()));
        }
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        for raw in s.split(" + ") {
            let term = raw.trim();
            let (coef, exp) = match term.split_once('*') {
                Some((c, rest)) => {
                    let e = rest
                        .trim()
                        .strip_prefix("t^")
                        .ok_or_else(|| LaurentError::Parse(format!("bad term `{term}`")))?;
                    let e: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| LaurentError::Parse(format!("bad exponent in `{term}`")))?;
                    (c.trim(), e)
                }
                None => (term, 0),
            };
            let c: Rational = coef
                .parse()
                .map_err(|_| LaurentError::Parse(format!("bad coefficient in `{term}`")))?;
            p.add_term(exp, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn products() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let tinv = LaurentPoly::monomial(q(1, 1), -1);
        assert_eq!(
            (t.clone() + one.clone()) * (tinv.clone() + one.clone()),
            lp("1*t^-1 + 2*t^0 + 1*t^1")
        );
        assert!((LaurentPoly::zero() * lp("-5*t^0 + 1*t^3")).is_zero());
        assert_eq!(
            (t.clone() - one.clone()) * (t + one),
            lp("-1*t^0 + 1*t^2")
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(lp("1*t^2").eval_rational(&q(3, 1)).unwrap(), q(9, 1));
        assert_eq!(lp("1*t^-1 + 1*t^1").eval_rational(&q(2, 1)).unwrap(), q(5, 2));
        assert_eq!(
            lp("1*t^-1").eval_rational(&q(0, 1)),
            Err(LaurentError::ZeroSubstitution)
        );
        assert_eq!(
            lp("1*t^-1").eval_complex(Complex::new(0.0, 0.0)),
            Err(LaurentError::ZeroSubstitution)
        );
        let z = lp("1*t^-1 + 1*t^1").eval_complex(Complex::new(0.0, 1.0)).unwrap();
        assert!(z.norm() < 1e-15);
    }

    #[test]
    fn exact_division() {
        let f = lp("-1*t^0 + 1*t^2");
        assert_eq!(f.divide_exact(&lp("-1*t^0 + 1*t^1")).unwrap(), lp("1*t^0 + 1*t^1"));
        assert_eq!(f.divide_exact(&lp("-2*t^0 + 1*t^1")), Err(LaurentError::NotDivisible));
        assert_eq!(f.divide_exact(&f).unwrap(), LaurentPoly::one());
        assert_eq!(
            f.divide_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
        // units divide everything
        let u = LaurentPoly::monomial(q(-3, 2), 4);
        assert_eq!(f.divide_exact(&u).unwrap() * u, f);
        // negative exponents on both sides
        let g = lp("1*t^-2 + 1*t^-1");
        assert_eq!((f.clone() * g.clone()).divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn text_form() {
        let p = LaurentPoly::from_terms([(-3, q(-1, 2)), (0, q(4, 1)), (2, q(1, 1))]);
        assert_eq!(p.to_string(), "-1/2*t^-3 + 4*t^0 + 1*t^2");
        assert_eq!(lp("-1/2*t^-3 + 4*t^0 + 1*t^2"), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!("1*x^2".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert_eq!(lp("3/6"), LaurentPoly::constant(q(1, 2)));
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(q(-1, 1), 1).is_unit());
        assert!(!lp("1*t^0 + 1*t^1").is_unit());
        assert!(!LaurentPoly::zero().is_unit());
    }
}
