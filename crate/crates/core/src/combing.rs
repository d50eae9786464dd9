//! Artin combing of pure braids.
//!
//! The kernel `K_n` of forgetting strand `n` is free on `A[1,n], ..., A[n-1,n]`;
//! we store its elements as reduced [`FreeWord`]s of rank `n - 1`, with `x_i`
//! standing for `A[i,n]`. Conjugation by a braid `b` on the first `n - 1`
//! strands, `k -> b^-1 k b`, is then exactly the Artin action of `b` on
//! `F_{n-1}`.

use std::collections::HashMap;
use std::fmt;

use crate::artin::{artin_action, FreeAutomorphism};
use crate::braid::{BraidWord, Generator};
use crate::error::{BraidError, Result};
use crate::free_group::{push_reduced, FreeLetter, FreeWord};
use crate::pure::{band_to_sigma, band_tokens, BandLetter, PureBraidWord};

/// Combing coordinates `(k_1, ..., k_depth)` of a pure braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombedForm {
    coords: Vec<FreeWord>,
}

impl CombedForm {
    pub fn identity(depth: usize) -> Self {
        CombedForm {
            coords: (1..=depth).map(|n| FreeWord::identity(n - 1)).collect(),
        }
    }

    /// Checks that coordinate `n` has rank `n - 1` (so `k_1` is empty).
    pub fn from_coords(coords: Vec<FreeWord>) -> Result<Self> {
        for (k, c) in coords.iter().enumerate() {
            let level = k + 1;
            if c.letters().iter().any(|l| l.index() >= level) {
                return Err(BraidError::AlphabetViolation(format!(
                    "coordinate k{level} uses a generator outside A[1,{level}]..A[{},{level}]",
                    level.saturating_sub(1)
                )));
            }
        }
        let coords = coords
            .into_iter()
            .enumerate()
            .map(|(k, c)| c.with_rank(k))
            .collect();
        Ok(CombedForm { coords })
    }

    pub fn depth(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FreeWord] {
        &self.coords
    }

    /// Coordinate `k_level`, 1-based.
    pub fn coord(&self, level: usize) -> &FreeWord {
        &self.coords[level - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(FreeWord::is_empty)
    }

    pub fn into_coords(self) -> Vec<FreeWord> {
        self.coords
    }

    pub fn parse(text: &str) -> Result<CombedForm> {
        let mut coords = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| {
                BraidError::Syntax(format!("expected `kN = ...`, found `{line}`"))
            })?;
            let level: usize = lhs
                .trim()
                .strip_prefix('k')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| BraidError::Syntax(format!("bad coordinate label `{lhs}`")))?;
            if level != coords.len() + 1 {
                return Err(BraidError::Syntax(format!(
                    "coordinate k{level} out of order (expected k{})",
                    coords.len() + 1
                )));
            }
            coords.push(parse_kernel_word(rhs, level)?);
        }
        Ok(CombedForm { coords })
    }
}

impl fmt::Display for CombedForm {
    /// One line per coordinate: `k3 = A[1,3] A[2,3]^-1`, empty ones as `k1 =`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coords.iter().enumerate() {
            let level = k + 1;
            write!(f, "k{level} =")?;
            for l in c.letters() {
                write!(f, " {}", kernel_letter(*l, level))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn kernel_letter(l: FreeLetter, level: usize) -> BandLetter {
    BandLetter::new_unchecked(l.index(), level, l.exponent())
}

/// Reads a `K_level` element written in band letters `A[i,level]`.
pub fn parse_kernel_word(text: &str, level: usize) -> Result<FreeWord> {
    let mut letters = Vec::new();
    for tok in band_tokens(text)? {
        let w = crate::pure::parse_band_word_auto(&tok)?;
        let b = w.letters()[0];
        if b.j() != level {
            return Err(BraidError::AlphabetViolation(format!(
                "{b} is not in the strand-{level} alphabet"
            )));
        }
        letters.push(FreeLetter::new(b.i(), b.exponent()));
    }
    FreeWord::from_letters(level.saturating_sub(1), letters)
}

/// The band word of a `K_level` element, on `level` strands.
pub fn kernel_to_band(k: &FreeWord, level: usize) -> PureBraidWord {
    PureBraidWord::from_letters_unchecked(
        level,
        k.letters()
            .iter()
            .map(|&l| kernel_letter(l, level))
            .collect(),
    )
}

/// Reads a band word as a `K_level` element; every letter must be `A[i,level]`.
pub fn band_to_kernel(w: &PureBraidWord, level: usize) -> Result<FreeWord> {
    let mut letters = Vec::with_capacity(w.len());
    for &b in w.letters() {
        if b.j() != level {
            return Err(BraidError::AlphabetViolation(format!(
                "{b} is not in the strand-{level} alphabet"
            )));
        }
        letters.push(FreeLetter::new(b.i(), b.exponent()));
    }
    FreeWord::from_letters(level.saturating_sub(1), letters)
}

/// Caches the conjugation automorphisms of `K_n` by single band letters.
#[derive(Default)]
struct ConjCache {
    by_letter: HashMap<(BandLetter, usize), FreeAutomorphism>,
}

impl ConjCache {
    fn get(&mut self, b: BandLetter, level: usize) -> &FreeAutomorphism {
        self.by_letter.entry((b, level)).or_insert_with(|| {
            let mut letters = Vec::new();
            b.expand_into(&mut letters);
            artin_action(&BraidWord::from_letters_unchecked(level - 1, letters))
        })
    }
}

/// Combs a band word into coordinates `k_1, ..., k_depth`.
///
/// Single pass: a letter `A[i,j]` appends `x_i` to `k_j` and conjugates every
/// `k_n` with `n > j` (moving the letter left past the kernel parts).
pub fn comb(w: &PureBraidWord, depth: usize) -> Result<CombedForm> {
    if depth < w.strands() {
        return Err(BraidError::DepthTooSmall {
            depth,
            strands: w.strands(),
        });
    }
    let mut cache = ConjCache::default();
    let mut coords: Vec<Vec<FreeLetter>> = vec![Vec::new(); depth + 1];
    for &b in w.letters() {
        for (n, k) in coords.iter_mut().enumerate().skip(b.j() + 1) {
            if k.is_empty() {
                continue;
            }
            let aut = cache.get(b, n);
            let word = FreeWord::from_reduced_unchecked(n - 1, std::mem::take(k));
            *k = aut.apply(&word).letters().to_vec();
        }
        push_reduced(&mut coords[b.j()], FreeLetter::new(b.i(), b.exponent()));
    }
    Ok(CombedForm {
        coords: coords
            .into_iter()
            .enumerate()
            .skip(1)
            .map(|(n, k)| FreeWord::from_reduced_unchecked(n - 1, k))
            .collect(),
    })
}

/// Combs a pure Artin word directly, without first converting to band letters.
///
/// Level by level, the position `p` of strand `n` is tracked and each letter is
/// rewritten as `t_p s t_{p'}^-1` with `t_p = s_{n-1} ... s_p`; those factors
/// are either Artin letters on `n - 1` strands or `A[q,n]^{±1}`.
pub fn comb_sigma(w: &BraidWord) -> Result<CombedForm> {
    if !w.is_pure() {
        return Err(BraidError::NotPure(format!(
            "{} on {} strands",
            w,
            w.strands()
        )));
    }
    let depth = w.strands();
    let mut coords = vec![FreeWord::identity(0); depth];
    let mut current = w.letters().to_vec();
    for n in (2..=depth).rev() {
        let mut p = n;
        let mut rest = Vec::with_capacity(current.len());
        let mut k = KernelAccumulator::new(n - 1);
        for &g in &current {
            let j = g.index();
            if j + 1 < p {
                rest.push(g);
                k.conjugate_by(g);
            } else if j > p {
                let h = Generator::new(j - 1, g.sign());
                rest.push(h);
                k.conjugate_by(h);
            } else if j + 1 == p {
                if g.sign() < 0 {
                    k.append(FreeLetter::new(p - 1, -1));
                }
                p -= 1;
            } else {
                if g.sign() > 0 {
                    k.append(FreeLetter::new(p, 1));
                }
                p += 1;
            }
        }
        debug_assert_eq!(p, n, "pure input returns strand n home");
        coords[n - 1] = k.finish();
        current = rest;
    }
    Ok(CombedForm { coords })
}

/// Running kernel word under left-to-right conjugation by Artin letters.
struct KernelAccumulator {
    rank: usize,
    letters: Vec<FreeLetter>,
}

impl KernelAccumulator {
    fn new(rank: usize) -> Self {
        KernelAccumulator {
            rank,
            letters: Vec::new(),
        }
    }

    fn append(&mut self, l: FreeLetter) {
        push_reduced(&mut self.letters, l);
    }

    fn conjugate_by(&mut self, g: Generator) {
        if self.letters.is_empty() {
            return;
        }
        let word = FreeWord::from_reduced_unchecked(self.rank, std::mem::take(&mut self.letters));
        let aut = artin_action(&BraidWord::from_letters_unchecked(self.rank, vec![g]));
        self.letters = aut.apply(&word).letters().to_vec();
    }

    fn finish(self) -> FreeWord {
        FreeWord::from_reduced_unchecked(self.rank, self.letters)
    }
}

/// Rewrites a pure Artin word in band generators (as its combed product).
pub fn to_pure_generators(w: &BraidWord) -> Result<PureBraidWord> {
    Ok(recombine(&comb_sigma(w)?))
}

/// The product `k_1 k_2 ... k_depth` as a band word on `depth` strands.
pub fn recombine(c: &CombedForm) -> PureBraidWord {
    let mut letters = Vec::new();
    for (k, coord) in c.coords.iter().enumerate() {
        letters.extend(coord.letters().iter().map(|&l| kernel_letter(l, k + 1)));
    }
    PureBraidWord::from_letters_unchecked(c.depth(), letters)
}

/// Conjugates a `K_n` element: returns `p^-1 k p` written in `A[1,n], ..., A[n-1,n]`.
pub fn conj_into_kn(p: &PureBraidWord, k: &FreeWord, n: usize) -> Result<FreeWord> {
    if n == 0 {
        return Err(BraidError::InvalidArgument(
            "level must be at least 1".into(),
        ));
    }
    if k.letters().iter().any(|l| l.index() >= n) {
        return Err(BraidError::AlphabetViolation(format!(
            "`{k}` is not a word in A[1,{n}]..A[{},{n}]",
            n - 1
        )));
    }
    if p.strands() > n - 1 && p.letters().iter().any(|b| b.j() >= n) {
        return Err(BraidError::AlphabetViolation(format!(
            "conjugator must live on the first {} strands",
            n - 1
        )));
    }
    let k = k.with_rank(n - 1);
    if k.is_empty() || p.is_empty() {
        return Ok(k);
    }
    let sigma = BraidWord::from_letters_unchecked(n - 1, p.to_sigma().letters().to_vec());
    Ok(artin_action(&sigma).apply(&k))
}

/// Equality of pure braids, decided by the Artin action.
pub fn pure_equal(u: &PureBraidWord, v: &PureBraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(band_action(u) == band_action(v))
}

/// The Artin action of a band word, one substitution pass per band letter.
fn band_action(w: &PureBraidWord) -> FreeAutomorphism {
    let n = w.strands();
    let mut cache: HashMap<BandLetter, FreeAutomorphism> = HashMap::new();
    let mut aut = FreeAutomorphism::identity(n);
    for &b in w.letters() {
        let step = cache.entry(b).or_insert_with(|| {
            artin_action(&band_to_sigma(b, n).expect("band letter fits the word's strands"))
        });
        aut = aut.then(step);
    }
    aut
}

/// Whether a band word is the identity braid.
pub fn pure_is_identity(u: &PureBraidWord) -> bool {
    band_action(u).is_identity()
}
