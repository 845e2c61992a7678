//! Freely reduced words in the generators and their inverses.
//!
//! Words are witnesses for group elements. No relator rewriting is ever
//! applied, so two different words may name the same element of `Γ`.

use alloc::vec::Vec;
use core::fmt;

use crate::Gen;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Gen,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: Gen, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: Gen) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: Gen) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word. Every constructor reduces.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalWord {
    letters: Vec<Letter>,
}

impl FormalWord {
    pub fn identity() -> Self {
        FormalWord::default()
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = FormalWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// The positive word `x_{i_0} x_{i_1} ...`.
    pub fn positive(generators: &[Gen]) -> Self {
        FormalWord::from_letters(generators.iter().map(|&g| Letter::pos(g)))
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

    /// Freely reduced words are the identity exactly when empty.
    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter, cancelling against the last one if possible.
    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn mul(&self, other: &FormalWord) -> FormalWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FormalWord {
        FormalWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// `self · inner · self⁻¹`.
    pub fn conjugate(&self, inner: &FormalWord) -> FormalWord {
        self.mul(inner).mul(&self.inverse())
    }

    /// Exponent sum of each generator, indexed by generator.
    pub fn exponent_sums(&self, generator_count: usize) -> Vec<i64> {
        let mut sums = alloc::vec![0i64; generator_count];
        for l in &self.letters {
            sums[l.generator as usize] += i64::from(l.exponent());
        }
        sums
    }
}

impl fmt::Display for FormalWord {
    /// Renders as `x6^-1 x2 x6`; the identity renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}
