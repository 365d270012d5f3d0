//! Braid words in the generators `s1 … s(m-1)` of `B_m`.
//!
//! Words are kept freely reduced only; braid relations are never applied to
//! them. Equality of group elements is decided through representations.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("words on {0} and {1} strands cannot be combined")]
    StrandMismatch(usize, usize),
    #[error("cannot parse braid word: {0}")]
    Parse(String),
}

/// A generator `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(index: usize) -> Self {
        Letter { index, inverse: false }
    }

    pub fn inv(index: usize) -> Self {
        Letter { index, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Validates indices and freely reduces. Reduction uses a stack, so the
    /// result does not depend on the order in which pairs are cancelled.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        let mut reduced: Vec<Letter> = Vec::with_capacity(letters.len());
        for l in letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange { index: l.index, strands });
            }
            match reduced.last() {
                Some(&top) if top.cancels(l) => {
                    reduced.pop();
                }
                _ => reduced.push(l),
            }
        }
        Ok(BraidWord { strands, letters: reduced })
    }

    pub fn generator(strands: usize, index: usize) -> Result<Self, BraidError> {
        Self::new(strands, vec![Letter::gen(index)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Freely reduced concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(self.strands, letters)
    }

    pub fn pow(&self, k: usize) -> Self {
        let letters = std::iter::repeat_n(self.letters.iter().copied(), k).flatten().collect();
        Self::new(self.strands, letters).expect("indices already validated")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WordJson { strands: self.strands, word: self.to_string() })
            .expect("plain struct serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, BraidError> {
        let w: WordJson =
            serde_json::from_value(v.clone()).map_err(|e| BraidError::Parse(e.to_string()))?;
        parse_word(w.strands, &w.word)
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    strands: usize,
    word: String,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Freely reduces a raw letter list.
pub fn free_reduce(letters: Vec<Letter>, strands: usize) -> Result<BraidWord, BraidError> {
    BraidWord::new(strands, letters)
}

/// `θ = σ₁σ₂…σ_{m-1}` in `B_m`. Conjugation by `θ` shifts `σ_i` to `σ_{i+1}`.
pub fn theta_word(strands: usize) -> Result<BraidWord, BraidError> {
    BraidWord::new(strands, (1..strands).map(Letter::gen).collect())
}

/// Freely reduced `g · w · g⁻¹`.
pub fn conjugate(w: &BraidWord, g: &BraidWord) -> Result<BraidWord, BraidError> {
    g.concat(w)?.concat(&g.inverse())
}

/// `σ₀ = θ σ_{m-1} θ⁻¹`, closing the cycle of conjugates under `θ`.
pub fn sigma_zero(strands: usize) -> Result<BraidWord, BraidError> {
    conjugate(&BraidWord::generator(strands, strands - 1)?, &theta_word(strands)?)
}

/// Parses whitespace-separated tokens `s3`, `s3^-1` (also `s3^1`).
pub fn parse_word(strands: usize, text: &str) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let body = tok
            .strip_prefix('s')
            .ok_or_else(|| BraidError::Parse(format!("token `{tok}` must start with `s`")))?;
        let (idx, inverse) = match body.split_once('^') {
            Some((i, "-1")) => (i, true),
            Some((i, "1")) => (i, false),
            Some(_) => return Err(BraidError::Parse(format!("exponent in `{tok}` must be 1 or -1"))),
            None => (body, false),
        };
        let index: usize =
            idx.parse().map_err(|_| BraidError::Parse(format!("bad index in `{tok}`")))?;
        letters.push(Letter { index, inverse });
    }
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert!(free_reduce(vec![Letter::gen(1), Letter::inv(1)], 3).unwrap().is_empty());
        let w = free_reduce(vec![Letter::gen(1), Letter::gen(2), Letter::inv(2), Letter::gen(1)], 3)
            .unwrap();
        assert_eq!(w.letters(), &[Letter::gen(1), Letter::gen(1)]);
        assert_eq!(
            free_reduce(vec![Letter::gen(5)], 4),
            Err(BraidError::IndexOutOfRange { index: 5, strands: 4 })
        );
        assert!(matches!(free_reduce(vec![Letter::gen(0)], 4), Err(BraidError::IndexOutOfRange { .. })));
        assert_eq!(BraidWord::identity(1), Err(BraidError::TooFewStrands(1)));
    }

    #[test]
    fn theta() {
        assert_eq!(theta_word(4).unwrap().to_string(), "s1 s2 s3");
        assert_eq!(theta_word(2).unwrap().to_string(), "s1");
        assert_eq!(theta_word(3).unwrap().to_string(), "s1 s2");
    }

    #[test]
    fn conjugation() {
        let s3 = BraidWord::generator(4, 3).unwrap();
        let c = conjugate(&s3, &theta_word(4).unwrap()).unwrap();
        assert_eq!(c.to_string(), "s1 s2 s3 s2^-1 s1^-1");
        assert_eq!(sigma_zero(4).unwrap(), c);
        let empty = BraidWord::identity(4).unwrap();
        assert_eq!(conjugate(&s3, &empty).unwrap(), s3);
        assert_eq!(conjugate(&empty, &s3).unwrap(), empty);
        assert_eq!(
            conjugate(&s3, &BraidWord::identity(3).unwrap()),
            Err(BraidError::StrandMismatch(3, 4))
        );
    }

    #[test]
    fn syntax() {
        let w = parse_word(4, "s1 s3^-1  s2^1").unwrap();
        assert_eq!(w.to_string(), "s1 s3^-1 s2");
        assert_eq!(parse_word(4, &w.to_string()).unwrap(), w);
        assert!(parse_word(4, "t1").is_err());
        assert!(parse_word(4, "s1^2").is_err());
        assert!(parse_word(4, "s9").is_err());
        let j = w.to_json();
        assert_eq!(j, serde_json::json!({"strands": 4, "word": "s1 s3^-1 s2"}));
        assert_eq!(BraidWord::from_json(&j).unwrap(), w);
    }

    #[test]
    fn powers_and_inverses() {
        let th = theta_word(3).unwrap();
        assert_eq!(th.pow(3).len(), 6);
        assert!(th.concat(&th.inverse()).unwrap().is_empty());
    }
}
