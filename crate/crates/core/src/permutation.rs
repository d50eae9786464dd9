use std::fmt;

use crate::error::{BraidError, Result};

/// A bijection of `{1, ..., n}`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinPermutation {
    images: Vec<usize>,
}

impl FinPermutation {
    pub fn identity(size: usize) -> Self {
        FinPermutation {
            images: (1..=size).collect(),
        }
    }

    /// `images[i - 1]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(BraidError::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(FinPermutation { images })
    }

    pub fn transposition(size: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(size);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Points beyond `size` are fixed.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.images.len() {
            self.images[i - 1]
        } else {
            i
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        FinPermutation { images: inv }
    }

    /// `self` first, then `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &FinPermutation) -> Self {
        let n = self.size().max(other.size());
        FinPermutation {
            images: (1..=n).map(|i| other.apply(self.apply(i))).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Extends by fixed points up to `size`.
    pub fn extended(&self, size: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len() + 1..=size);
        FinPermutation { images }
    }

    /// Largest moved point, or 0 for the identity.
    pub fn support_bound(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(k, &v)| v != k + 1)
            .map(|(k, _)| k + 1)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for FinPermutation {
    /// Writes the finitely supported format `perm: 1->2 2->1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("perm:")?;
        for (k, &v) in self.images.iter().enumerate() {
            if v != k + 1 {
                write!(f, " {}->{}", k + 1, v)?;
            }
        }
        Ok(())
    }
}
