//! Braid words in the Artin generators.
//!
//! Strands are numbered `1..=n` from left to right and `s_i` crosses position
//! `i` over position `i + 1`. Words are read left to right: the first letter
//! happens first.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{BraidError, Result};
use crate::permutation::FinPermutation;

/// An Artin generator `s_i` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(i32);

impl Generator {
    pub fn new(index: usize, sign: i8) -> Self {
        assert!(index >= 1, "Artin generators are numbered from 1");
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let i = index as i32;
        Generator(if sign > 0 { i } else { -i })
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, 1)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, -1)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn sign(self) -> i8 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Self {
        Generator(-self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index())?;
        if self.sign() < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A finite word in the Artin generators on a declared number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if let Some(g) = letters.iter().find(|g| g.index() >= strands.max(1)) {
            return Err(BraidError::GeneratorOutOfRange {
                index: g.index(),
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices: `2` is `s2`, `-2` is `s2^-1`.
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        Self::new(
            strands,
            letters
                .iter()
                .map(|&l| Generator::new(l.unsigned_abs() as usize, if l > 0 { 1 } else { -1 }))
                .collect(),
        )
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same word viewed on more strands (extra strands are straight).
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        if strands < self.strands && self.letters.iter().any(|g| g.index() >= strands) {
            return Err(BraidError::StrandMismatch(self.strands, strands));
        }
        Ok(BraidWord {
            strands,
            letters: self.letters.clone(),
        })
    }

    /// Product `self` then `other`, on the larger strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Cancels adjacent `s_i s_i^-1` and `s_i^-1 s_i` until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The permutation taking each bottom position to the top position its
    /// strand ends at. `perm_of(uv) = perm_of(v) ∘ perm_of(u)`.
    pub fn perm_of(&self) -> FinPermutation {
        // position -> strand label currently there
        let mut at: Vec<usize> = (0..=self.strands).collect();
        for g in &self.letters {
            at.swap(g.index(), g.index() + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &label) in at.iter().enumerate().skip(1) {
            images[label - 1] = pos;
        }
        FinPermutation::from_images(images).expect("transpositions compose to a permutation")
    }

    pub fn is_pure(&self) -> bool {
        self.perm_of().is_identity()
    }

    /// Deletes every strand whose bottom label is not in `keep`.
    ///
    /// Crossings between two kept strands survive, reindexed over the kept
    /// strands. An empty `keep` gives the empty word on 0 strands.
    pub fn forget_strands(&self, keep: &BTreeSet<usize>) -> Result<BraidWord> {
        if let Some(&bad) = keep.iter().find(|&&l| l == 0 || l > self.strands) {
            return Err(BraidError::InvalidArgument(format!(
                "strand label {bad} outside 1..={}",
                self.strands
            )));
        }
        let kept_count = keep.len();
        let mut is_kept = vec![false; self.strands + 2];
        for &l in keep {
            is_kept[l] = true;
        }
        // kept_at[p] tells whether the strand currently at position p is kept
        let mut kept_at = is_kept.clone();
        let mut out = Vec::new();
        for &g in &self.letters {
            let j = g.index();
            if kept_at[j] && kept_at[j + 1] {
                let rank = kept_at[1..=j].iter().filter(|&&k| k).count();
                out.push(Generator::new(rank, g.sign()));
            }
            kept_at.swap(j, j + 1);
        }
        Ok(BraidWord {
            strands: kept_count,
            letters: out,
        })
    }

    /// `forget_strands` keeping the first `m` strands.
    pub fn truncate_strands(&self, m: usize) -> Result<BraidWord> {
        self.forget_strands(&(1..=m.min(self.strands)).collect())
    }

    /// Two-line serialization: `strands=N` then the word.
    pub fn serialize(&self) -> String {
        format!("strands={}\n{}\n", self.strands, self)
    }

    pub fn deserialize(text: &str) -> Result<BraidWord> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| BraidError::Syntax("missing strands header".into()))?;
        let strands = parse_header(header, "strands")?;
        let body: Vec<&str> = lines.collect();
        parse_braid(&body.join(" "), strands)
    }
}

pub(crate) fn parse_header(line: &str, key: &str) -> Result<usize> {
    let value = line
        .trim()
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix('='))
        .ok_or_else(|| BraidError::Syntax(format!("expected `{key}=N`, found `{line}`")))?;
    value
        .trim()
        .parse()
        .map_err(|_| BraidError::Syntax(format!("bad {key} value `{value}`")))
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Result<Generator> {
    let bad = || BraidError::Syntax(format!("bad generator token `{tok}`"));
    let rest = tok.strip_prefix('s').ok_or_else(bad)?;
    let (digits, sign) = match rest.strip_suffix("^-1") {
        Some(d) => (d, -1),
        None => (rest, 1),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let index: usize = digits.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok(Generator::new(index, sign))
}

/// Parses whitespace-separated `sK` / `sK^-1` tokens. No reduction is applied.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(BraidError::InvalidArgument(
            "strand count must be at least 1".into(),
        ));
    }
    let letters = text
        .split_whitespace()
        .map(parse_token)
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}
