//! Reduced words in a free group of finite rank.
//!
//! Free reduction is a normal form, so two [`FreeWord`]s are equal as group
//! elements exactly when their letter sequences are equal. Every constructor in
//! this module returns a reduced word.

use std::fmt;

use crate::error::BraidError;

/// A generator `x_i` or its inverse. Generators are numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter(i32);

impl FreeLetter {
    pub fn new(index: usize, exponent: i8) -> Self {
        assert!(index >= 1, "free generators are numbered from 1");
        assert!(exponent == 1 || exponent == -1, "exponent must be +1 or -1");
        let i = index as i32;
        FreeLetter(if exponent > 0 { i } else { -i })
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn exponent(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        FreeLetter(-self.0)
    }
}

/// A freely reduced word over `x_1, ..., x_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<FreeLetter>,
}

/// Appends `letter` to a reduced word, cancelling against the last letter.
#[inline]
pub(crate) fn push_reduced(letters: &mut Vec<FreeLetter>, letter: FreeLetter) {
    if letters.last() == Some(&letter.inverse()) {
        letters.pop();
    } else {
        letters.push(letter);
    }
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, index: usize) -> Self {
        assert!(
            index >= 1 && index <= rank,
            "generator x{index} outside rank {rank}"
        );
        FreeWord {
            rank,
            letters: vec![FreeLetter::new(index, 1)],
        }
    }

    /// Builds the reduced form of an arbitrary letter sequence.
    pub fn from_letters<I>(rank: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator<Item = FreeLetter>,
    {
        let mut out = Vec::new();
        for l in letters {
            if l.index() > rank {
                return Err(BraidError::AlphabetViolation(format!(
                    "free generator {} exceeds rank {rank}",
                    l.index()
                )));
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    /// Builds a word from `(index, exponent)` pairs.
    pub fn from_pairs(rank: usize, pairs: &[(usize, i8)]) -> Result<Self, BraidError> {
        Self::from_letters(rank, pairs.iter().map(|&(i, e)| FreeLetter::new(i, e)))
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<FreeLetter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inverse()));
        FreeWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reinterprets the word in a larger rank.
    pub fn with_rank(&self, rank: usize) -> Self {
        assert!(
            self.letters.iter().all(|l| l.index() <= rank),
            "word does not fit in rank {rank}"
        );
        FreeWord {
            rank,
            letters: self.letters.clone(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        FreeWord {
            rank: self.rank.max(other.rank),
            letters,
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Substitutes `images[i - 1]` for every occurrence of `x_i`, inverting
    /// the image for inverse letters. The result is reduced.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let image = &images[l.index() - 1];
            if l.exponent() > 0 {
                for &m in &image.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in image.letters.iter().rev() {
                    push_reduced(&mut out, m.inverse());
                }
            }
        }
        FreeWord { rank, letters: out }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.index())?;
            if l.exponent() < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}
