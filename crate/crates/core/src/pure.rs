//! Pure braids written in the band generators `A[i,j]`.
//!
//! `A[i,j] = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)`: strand
//! `j` travels left to position `i + 1`, loops once around strand `i`, and
//! returns.

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::error::{BraidError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandLetter {
    i: usize,
    j: usize,
    exponent: i8,
}

impl BandLetter {
    pub fn new(i: usize, j: usize, exponent: i8) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(BraidError::InvalidArgument(format!(
                "band generator A[{i},{j}] needs 1 <= i < j"
            )));
        }
        if exponent != 1 && exponent != -1 {
            return Err(BraidError::InvalidArgument(format!(
                "band exponent must be +1 or -1, got {exponent}"
            )));
        }
        Ok(BandLetter { i, j, exponent })
    }

    pub(crate) fn new_unchecked(i: usize, j: usize, exponent: i8) -> Self {
        debug_assert!(i >= 1 && i < j && (exponent == 1 || exponent == -1));
        BandLetter { i, j, exponent }
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    pub fn exponent(self) -> i8 {
        self.exponent
    }

    pub fn inverse(self) -> Self {
        BandLetter {
            exponent: -self.exponent,
            ..self
        }
    }

    /// Appends the Artin expansion of the letter to `out`.
    pub(crate) fn expand_into(self, out: &mut Vec<Generator>) {
        let core = |out: &mut Vec<Generator>| {
            for k in (self.i + 1..self.j).rev() {
                out.push(Generator::pos(k));
            }
        };
        let back = |out: &mut Vec<Generator>| {
            for k in self.i + 1..self.j {
                out.push(Generator::neg(k));
            }
        };
        core(out);
        let twist = Generator::new(self.i, self.exponent);
        out.push(twist);
        out.push(twist);
        back(out);
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.i, self.j)?;
        if self.exponent < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// The Artin expansion of a single band letter on `strands` strands.
pub fn band_to_sigma(b: BandLetter, strands: usize) -> Result<BraidWord> {
    if b.j > strands {
        return Err(BraidError::BandOutOfRange {
            i: b.i,
            j: b.j,
            strands,
        });
    }
    let mut letters = Vec::with_capacity(2 * (b.j - b.i));
    b.expand_into(&mut letters);
    Ok(BraidWord::from_letters_unchecked(strands, letters))
}

/// A word in the band generators on a declared strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureBraidWord {
    strands: usize,
    letters: Vec<BandLetter>,
}

impl PureBraidWord {
    pub fn identity(strands: usize) -> Self {
        PureBraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<BandLetter>) -> Result<Self> {
        if let Some(b) = letters.iter().find(|b| b.j > strands) {
            return Err(BraidError::BandOutOfRange {
                i: b.i,
                j: b.j,
                strands,
            });
        }
        Ok(PureBraidWord { strands, letters })
    }

    /// Builds a word from `(i, j, exponent)` triples.
    pub fn from_triples(strands: usize, triples: &[(usize, usize, i8)]) -> Result<Self> {
        let letters = triples
            .iter()
            .map(|&(i, j, e)| BandLetter::new(i, j, e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<BandLetter>) -> Self {
        debug_assert!(letters.iter().all(|b| b.j <= strands));
        PureBraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    pub fn concat(&self, other: &PureBraidWord) -> PureBraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        PureBraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn inverse(&self) -> PureBraidWord {
        PureBraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|b| b.inverse()).collect(),
        }
    }

    /// Cancels adjacent inverse band letters.
    pub fn free_reduce(&self) -> PureBraidWord {
        let mut out: Vec<BandLetter> = Vec::with_capacity(self.letters.len());
        for &b in &self.letters {
            if out.last() == Some(&b.inverse()) {
                out.pop();
            } else {
                out.push(b);
            }
        }
        PureBraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// The Artin expansion of the whole word.
    pub fn to_sigma(&self) -> BraidWord {
        let mut letters = Vec::new();
        for &b in &self.letters {
            b.expand_into(&mut letters);
        }
        BraidWord::from_letters_unchecked(self.strands, letters)
    }

    /// Keeps the first `m` strands: letters touching a later strand vanish.
    pub fn truncate_strands(&self, m: usize) -> PureBraidWord {
        let m = m.min(self.strands);
        PureBraidWord {
            strands: m,
            letters: self.letters.iter().copied().filter(|b| b.j <= m).collect(),
        }
    }

    /// Deletes the strands outside `keep`, renumbering the survivors.
    pub fn forget_strands(
        &self,
        keep: &std::collections::BTreeSet<usize>,
    ) -> Result<PureBraidWord> {
        if let Some(&bad) = keep.iter().find(|&&l| l == 0 || l > self.strands) {
            return Err(BraidError::InvalidArgument(format!(
                "strand label {bad} outside 1..={}",
                self.strands
            )));
        }
        let mut rank = vec![0usize; self.strands + 1];
        for (r, &l) in keep.iter().enumerate() {
            rank[l] = r + 1;
        }
        let letters = self
            .letters
            .iter()
            .filter(|b| rank[b.i] > 0 && rank[b.j] > 0)
            .map(|b| BandLetter::new_unchecked(rank[b.i], rank[b.j], b.exponent))
            .collect();
        Ok(PureBraidWord {
            strands: keep.len(),
            letters,
        })
    }
}

impl fmt::Display for PureBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn parse_band_token(tok: &str) -> Result<BandLetter> {
    let bad = || BraidError::Syntax(format!("bad band token `{tok}`"));
    let (body, exponent) = match tok.strip_suffix("^-1") {
        Some(b) => (b, -1),
        None => (tok, 1),
    };
    let inner = body
        .strip_prefix("A[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let num = |s: &str| -> Result<usize> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    let (i, j) = (num(a)?, num(b)?);
    if i == 0 || i >= j {
        return Err(bad());
    }
    Ok(BandLetter::new_unchecked(i, j, exponent))
}

/// Splits band-word text into tokens, tolerating spaces inside brackets.
pub(crate) fn band_tokens(text: &str) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for c in text.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                depth -= 1;
                cur.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
        if !(0..=1).contains(&depth) {
            return Err(BraidError::Syntax(format!(
                "unbalanced brackets in `{text}`"
            )));
        }
    }
    if depth != 0 {
        return Err(BraidError::Syntax(format!(
            "unbalanced brackets in `{text}`"
        )));
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    Ok(tokens)
}

/// Parses whitespace-separated `A[i,j]` / `A[i,j]^-1` tokens.
pub fn parse_band_word(text: &str, strands: usize) -> Result<PureBraidWord> {
    let letters = band_tokens(text)?
        .iter()
        .map(|t| parse_band_token(t))
        .collect::<Result<Vec<_>>>()?;
    PureBraidWord::new(strands, letters)
}

/// Parses a band word whose strand count is the largest index used (at least 1).
pub fn parse_band_word_auto(text: &str) -> Result<PureBraidWord> {
    let letters = band_tokens(text)?
        .iter()
        .map(|t| parse_band_token(t))
        .collect::<Result<Vec<_>>>()?;
    let strands = letters.iter().map(|b| b.j).max().unwrap_or(1);
    PureBraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::{braid_equal, is_identity};

    fn letter(i: usize, j: usize, e: i8) -> BandLetter {
        BandLetter::new(i, j, e).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            band_to_sigma(letter(1, 2, 1), 2).unwrap().to_string(),
            "s1 s1"
        );
        assert_eq!(
            band_to_sigma(letter(1, 3, 1), 3).unwrap().to_string(),
            "s2 s1 s1 s2^-1"
        );
        assert_eq!(
            band_to_sigma(letter(1, 2, -1), 2).unwrap().to_string(),
            "s1^-1 s1^-1"
        );
        assert_eq!(
            band_to_sigma(letter(1, 4, 1), 4).unwrap().to_string(),
            "s3 s2 s1 s1 s2^-1 s3^-1"
        );
        assert!(band_to_sigma(letter(1, 3, 1), 2).is_err());
    }

    #[test]
    fn band_letters_are_pure() {
        for j in 2..=5 {
            for i in 1..j {
                let w = band_to_sigma(letter(i, j, 1), 5).unwrap();
                assert!(w.is_pure(), "A[{i},{j}]");
                let inv = band_to_sigma(letter(i, j, -1), 5).unwrap();
                assert!(is_identity(&w.concat(&inv)));
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let w = parse_band_word("A[1,3] A[2,3]^-1  A[1, 2]", 3).unwrap();
        assert_eq!(w.to_string(), "A[1,3] A[2,3]^-1 A[1,2]");
        assert_eq!(parse_band_word(&w.to_string(), 3).unwrap(), w);
        assert!(matches!(
            parse_band_word("A[2,1]", 3),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(
            parse_band_word("A[1,2", 3),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(
            parse_band_word("A[1,x]", 3),
            Err(BraidError::Syntax(_))
        ));
        assert!(matches!(
            parse_band_word("A[1,4]", 3),
            Err(BraidError::BandOutOfRange { .. })
        ));
        assert_eq!(parse_band_word_auto("A[2,5]").unwrap().strands(), 5);
    }

    #[test]
    fn band_forgetting_matches_sigma_forgetting() {
        let w = PureBraidWord::from_triples(
            5,
            &[
                (1, 3, 1),
                (2, 5, -1),
                (3, 4, 1),
                (1, 5, 1),
                (2, 4, -1),
                (1, 2, 1),
            ],
        )
        .unwrap();
        let sigma = w.to_sigma();
        for keep in [
            vec![1, 2, 3],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![1, 4],
            vec![3],
        ] {
            let keep: std::collections::BTreeSet<usize> = keep.into_iter().collect();
            let by_band = w.forget_strands(&keep).unwrap().to_sigma();
            let by_sigma = sigma.forget_strands(&keep).unwrap();
            assert!(braid_equal(&by_band, &by_sigma), "keep {keep:?}");
        }
    }
}
