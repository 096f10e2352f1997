//! Words in the generators `e, f, k, k^-1, l`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::AlgebraError;
use crate::field::RationalFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E,
    F,
    K,
    KInv,
    L,
}

impl Letter {
    pub const ALL: [Letter; 5] = [Letter::E, Letter::F, Letter::K, Letter::KInv, Letter::L];

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::E => "e",
            Letter::F => "f",
            Letter::K => "k",
            Letter::KInv => "k^-1",
            Letter::L => "l",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `scalar * letters[0] * letters[1] * ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    pub scalar: RationalFunction,
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(scalar: RationalFunction, letters: Vec<Letter>) -> Self {
        GeneratorWord { scalar, letters }
    }

    pub fn letters(letters: &[Letter]) -> Self {
        GeneratorWord { scalar: RationalFunction::one(), letters: letters.to_vec() }
    }

    /// Concatenation (product) of two words.
    pub fn then(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GeneratorWord { scalar: &self.scalar * &other.scalar, letters }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.scalar.is_one() || self.letters.is_empty() {
            parts.push(alloc::format!("({})", self.scalar));
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let n = j - i;
            parts.push(match (l, n) {
                (_, 1) => l.symbol().to_string(),
                (Letter::KInv, _) => alloc::format!("k^-{n}"),
                _ => alloc::format!("{}^{n}", l.symbol()),
            });
            i = j;
        }
        f.write_str(&parts.join(" "))
    }
}

fn word_err(s: &str) -> AlgebraError {
    AlgebraError::WordParse(s.to_string())
}

impl FromStr for GeneratorWord {
    type Err = AlgebraError;

    /// Parses whitespace-separated tokens `e`, `f`, `k`, `l` with optional
    /// exponents (`e^2`, `k^-1`), after an optional parenthesised scalar, for
    /// example `(v^-1) e^2 l f k^-2`.
    fn from_str(s: &str) -> Result<Self, AlgebraError> {
        let mut rest = s.trim();
        let mut scalar = RationalFunction::one();
        if rest.starts_with('(') {
            let mut depth = 0;
            let mut end = None;
            for (i, c) in rest.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let end = end.ok_or_else(|| word_err(s))?;
            scalar = rest[1..end].parse()?;
            rest = &rest[end + 1..];
        }
        let mut letters = Vec::new();
        for tok in rest.split_whitespace() {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| word_err(tok))?),
                None => (tok, 1),
            };
            let letter = match base {
                "e" => Letter::E,
                "f" => Letter::F,
                "k" => Letter::K,
                "l" => Letter::L,
                _ => return Err(word_err(tok)),
            };
            let (letter, n) = match (letter, exp < 0) {
                (Letter::K, true) => (Letter::KInv, exp.unsigned_abs()),
                (_, true) => return Err(word_err(tok)),
                (l, false) => (l, exp as u64),
            };
            letters.extend(core::iter::repeat_n(letter, n as usize));
        }
        Ok(GeneratorWord { scalar, letters })
    }
}
