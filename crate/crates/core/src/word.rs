//! Words in the free group on generators `a, b, c, ...`.
//!
//! Lowercase letters are generators, uppercase letters their inverses, so
//! `bAB` is b·a⁻¹·b⁻¹. The identity is written `1`. Whitespace is ignored.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A generator or inverse generator, stored as `2 * generator + inverse`.
///
/// The encoding matches the half-edge numbering of [`crate::graph::Graph::rose`],
/// so a letter is also the rose edge it labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub usize);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter(2 * generator + inverse as usize)
    }

    pub fn generator(self) -> usize {
        self.0 / 2
    }

    pub fn is_inverse(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generator();
        if g < 26 {
            let c = (b'a' + g as u8) as char;
            let c = if self.is_inverse() { c.to_ascii_uppercase() } else { c };
            write!(f, "{c}")
        } else if self.is_inverse() {
            write!(f, "X{g}")
        } else {
            write!(f, "x{g}")
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Free reduction.
    pub fn reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Fails if the word uses a generator outside `0..rank`.
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.generator() >= rank) {
            Some(l) => Err(Error::GeneratorOutOfRange {
                index: l.generator(),
                rank,
            }),
            None => Ok(()),
        }
    }

    /// Parses a comma-separated list such as `a,bAB,bb`.
    pub fn parse_list(s: &str) -> Result<Vec<Word>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;

    /// Concatenation followed by free reduction.
    fn mul(self, rhs: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&rhs.0);
        Word(letters).reduce()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" {
            return Ok(Word::identity());
        }
        let mut letters = Vec::with_capacity(compact.len());
        for c in compact.chars() {
            let letter = match c {
                'a'..='z' => Letter::new(c as usize - 'a' as usize, false),
                'A'..='Z' => Letter::new(c as usize - 'A' as usize, true),
                _ => {
                    return Err(Error::Word {
                        token: s.to_string(),
                        message: format!("unexpected character {c:?}"),
                    })
                }
            };
            letters.push(letter);
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
