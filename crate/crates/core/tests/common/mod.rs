#![allow(dead_code)]

use infbraid::braid::{BraidWord, Generator};
use infbraid::free_group::{FreeLetter, FreeWord};
use infbraid::permutation::FinPermutation;
use infbraid::pure::{BandLetter, PureBraidWord};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn sign<R: Rng>(rng: &mut R) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

pub fn random_sigma<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Generator::new(rng.gen_range(1..strands), sign(rng)))
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_band<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> PureBraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let j = rng.gen_range(2..=strands);
            let i = rng.gen_range(1..j);
            BandLetter::new(i, j, sign(rng)).unwrap()
        })
        .collect();
    PureBraidWord::new(strands, letters).unwrap()
}

/// A random element of `K_level` as a free word in `x_1 .. x_{level-1}`.
pub fn random_kernel<R: Rng>(rng: &mut R, level: usize, max_len: usize) -> FreeWord {
    if level < 2 {
        return FreeWord::identity(level.saturating_sub(1));
    }
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<_> = (0..len)
        .map(|_| FreeLetter::new(rng.gen_range(1..level), sign(rng)))
        .collect();
    FreeWord::from_letters(level - 1, letters).unwrap()
}

/// A uniformly random permutation of `1..=size`.
pub fn random_perm<R: Rng>(rng: &mut R, size: usize) -> FinPermutation {
    let mut images: Vec<usize> = (1..=size).collect();
    images.shuffle(rng);
    FinPermutation::from_images(images).unwrap()
}
