use std::fmt;

use serde::Serialize;

use super::{Label, Shape};
use crate::{Error, Generator, Result};

/// A non-empty word: a basis element of the free nonunital associative algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Word<L: Label = Generator>(Vec<L>);

impl<L: Label> Word<L> {
    pub fn new(letters: Vec<L>) -> Result<Self> {
        if letters.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(Word(letters))
        }
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; words are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().cloned().collect())
    }

    /// Concatenation, the product of the free associative algebra.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn map_labels<M: Label>(&self, f: impl Fn(&L) -> M) -> Word<M> {
        Word(self.0.iter().map(f).collect())
    }
}

impl<L: Label> Shape for Word<L> {
    type Label = L;

    fn labels(&self) -> Vec<L> {
        self.0.clone()
    }

    fn weight(&self) -> usize {
        self.0.len()
    }
}

/// Juxtaposed (`abc`) when every letter prints as one character, otherwise
/// space separated (`x1 x2`).
impl<L: Label> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        if parts.iter().all(|p| p.chars().count() == 1) {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}
