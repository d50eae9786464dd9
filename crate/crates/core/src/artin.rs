//! The Artin action of `B_n` on the free group `F_n`, used as an exact
//! decision procedure for the word problem.
//!
//! `s_i` sends `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i` and fixes the
//! other generators. Letters act in reading order, so the automorphism of
//! `uv` is that of `v` applied after that of `u`.

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::free_group::{push_reduced, FreeLetter, FreeWord};

/// An automorphism of `F_rank` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism {
            images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [FreeLetter::new(k + 1, 1)])
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism {
            images: self
                .images
                .iter()
                .map(|w| w.substitute(&next.images))
                .collect(),
        }
    }

    /// Applies the automorphism to a word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    /// Post-composes with a single Artin generator, rewriting the images in place.
    fn push_generator(&mut self, g: Generator) {
        let i = g.index();
        for w in self.images.iter_mut() {
            if w.letters()
                .iter()
                .all(|l| l.index() != i && l.index() != i + 1)
            {
                continue;
            }
            let mut out = Vec::with_capacity(w.len() + 4);
            for &l in w.letters() {
                let img = generator_image(g, l.index());
                if l.exponent() > 0 {
                    for &m in img.iter() {
                        push_reduced(&mut out, m);
                    }
                } else {
                    for &m in img.iter().rev() {
                        push_reduced(&mut out, m.inverse());
                    }
                }
            }
            *w = FreeWord::from_reduced_unchecked(w.rank(), out);
        }
    }
}

/// Image of `x_index` under the automorphism of a single generator.
fn generator_image(g: Generator, index: usize) -> GenImage {
    let i = g.index();
    let x = |k: usize, e: i8| FreeLetter::new(k, e);
    if g.sign() > 0 {
        if index == i {
            GenImage::three(x(i, 1), x(i + 1, 1), x(i, -1))
        } else if index == i + 1 {
            GenImage::one(x(i, 1))
        } else {
            GenImage::one(x(index, 1))
        }
    } else {
        // inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        if index == i {
            GenImage::one(x(i + 1, 1))
        } else if index == i + 1 {
            GenImage::three(x(i + 1, -1), x(i, 1), x(i + 1, 1))
        } else {
            GenImage::one(x(index, 1))
        }
    }
}

/// A generator image has at most three letters.
struct GenImage {
    letters: [FreeLetter; 3],
    len: usize,
}

impl GenImage {
    fn one(a: FreeLetter) -> Self {
        GenImage {
            letters: [a, a, a],
            len: 1,
        }
    }

    fn three(a: FreeLetter, b: FreeLetter, c: FreeLetter) -> Self {
        GenImage {
            letters: [a, b, c],
            len: 3,
        }
    }

    fn iter(&self) -> std::slice::Iter<'_, FreeLetter> {
        self.letters[..self.len].iter()
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", k + 1, w)?;
        }
        Ok(())
    }
}

/// The automorphism of `F_n` induced by `w`, images reduced.
pub fn artin_action(w: &BraidWord) -> FreeAutomorphism {
    let mut aut = FreeAutomorphism::identity(w.strands());
    for &g in w.letters() {
        aut.push_generator(g);
    }
    aut
}

/// Decides whether `w` is the identity braid.
pub fn is_identity(w: &BraidWord) -> bool {
    w.perm_of().is_identity() && artin_action(w).is_identity()
}

/// Decides whether two words on the same strands represent the same braid.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> bool {
    let n = u.strands().max(v.strands());
    let u = u.with_strands(n).expect("growing strands never fails");
    let v = v.with_strands(n).expect("growing strands never fails");
    u.perm_of() == v.perm_of() && artin_action(&u) == artin_action(&v)
}
