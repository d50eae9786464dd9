//! Bijections of the positive integers with a certified settle bound, their
//! block normal form, and the section words realizing them as braids.
//!
//! The block `σ_{n,m}` (for `n ≤ m`) sends `i -> i + 1` on `n ≤ i < m`,
//! `m -> n`, and fixes everything else. Every permutation `τ` has blocks
//! `m_1, m_2, ...` with `m_k ≥ k` such that, writing
//! `S_k = σ_{k,m_k} ∘ ... ∘ σ_{1,m_1}`, `S_k^-1` agrees with `τ^-1` on
//! `{1, ..., k}`.

use std::fmt;
use std::sync::Arc;

use crate::braid::{BraidWord, Generator};
use crate::dyadic::Dyadic;
use crate::error::{BraidError, Result};
use crate::permutation::FinPermutation;

type PointFn = dyn Fn(usize) -> usize + Send + Sync;

struct PermInner {
    forward: Box<PointFn>,
    inverse: Box<PointFn>,
    settle: Box<PointFn>,
    finite: Option<FinPermutation>,
}

/// A bijection `τ` of `{1, 2, ...}` with a nondecreasing settle function `s`
/// such that `τ({1..n}) ∪ τ^-1({1..n}) ⊆ {1..s(n)}`.
#[derive(Clone)]
pub struct InfPermutation {
    inner: Arc<PermInner>,
}

impl InfPermutation {
    pub fn identity() -> Self {
        Self::from_finite(&FinPermutation::identity(0))
    }

    /// Extends a finite permutation by fixed points; the settle bound is automatic.
    pub fn from_finite(p: &FinPermutation) -> Self {
        let bound = p.support_bound();
        let fwd = p.clone();
        let inv = p.inverse();
        InfPermutation {
            inner: Arc::new(PermInner {
                forward: Box::new(move |i| fwd.apply(i)),
                inverse: Box::new(move |i| inv.apply(i)),
                settle: Box::new(move |n| n.max(bound)),
                finite: Some(
                    FinPermutation::from_images(p.images()[..bound].to_vec())
                        .expect("support is closed under the permutation"),
                ),
            }),
        }
    }

    /// A permutation given by evaluators. The caller vouches for the settle
    /// bound; violations surface as [`BraidError::SettleViolation`] when queried.
    pub fn from_fns<F, G, S>(forward: F, inverse: G, settle: S) -> Self
    where
        F: Fn(usize) -> usize + Send + Sync + 'static,
        G: Fn(usize) -> usize + Send + Sync + 'static,
        S: Fn(usize) -> usize + Send + Sync + 'static,
    {
        InfPermutation {
            inner: Arc::new(PermInner {
                forward: Box::new(forward),
                inverse: Box::new(inverse),
                settle: Box::new(settle),
                finite: None,
            }),
        }
    }

    /// The finite permutation when the support is known to be finite.
    pub fn as_finite(&self) -> Option<&FinPermutation> {
        self.inner.finite.as_ref()
    }

    pub fn settle(&self, n: usize) -> usize {
        (self.inner.settle)(n)
    }

    /// `τ(i)`, checked against the settle bound and the inverse evaluator.
    pub fn image(&self, i: usize) -> Result<usize> {
        let j = (self.inner.forward)(i);
        let s = self.settle(i);
        if j == 0 || j > s {
            return Err(BraidError::SettleViolation(format!(
                "τ({i}) = {j} exceeds s({i}) = {s}"
            )));
        }
        if (self.inner.inverse)(j) != i {
            return Err(BraidError::InvalidPermutation(format!(
                "inverse evaluator disagrees at τ({i}) = {j}"
            )));
        }
        Ok(j)
    }

    /// `τ^-1(i)`, checked like [`image`](Self::image).
    pub fn preimage(&self, i: usize) -> Result<usize> {
        let j = (self.inner.inverse)(i);
        let s = self.settle(i);
        if j == 0 || j > s {
            return Err(BraidError::SettleViolation(format!(
                "τ^-1({i}) = {j} exceeds s({i}) = {s}"
            )));
        }
        if (self.inner.forward)(j) != i {
            return Err(BraidError::InvalidPermutation(format!(
                "forward evaluator disagrees at τ^-1({i}) = {j}"
            )));
        }
        Ok(j)
    }

    pub fn inverse(&self) -> Self {
        let a = self.clone();
        let b = self.clone();
        let c = self.clone();
        InfPermutation {
            inner: Arc::new(PermInner {
                forward: Box::new(move |i| (a.inner.inverse)(i)),
                inverse: Box::new(move |i| (b.inner.forward)(i)),
                settle: Box::new(move |n| c.settle(n)),
                finite: self.as_finite().map(FinPermutation::inverse),
            }),
        }
    }

    /// `self` first, then `next`: `i -> next(self(i))`.
    pub fn then(&self, next: &InfPermutation) -> Self {
        let finite = match (self.as_finite(), next.as_finite()) {
            (Some(a), Some(b)) => Some(a.then(b)),
            _ => None,
        };
        if let Some(p) = finite {
            return Self::from_finite(&p);
        }
        let (a1, b1) = (self.clone(), next.clone());
        let (a2, b2) = (self.clone(), next.clone());
        let (a3, b3) = (self.clone(), next.clone());
        InfPermutation {
            inner: Arc::new(PermInner {
                forward: Box::new(move |i| (b1.inner.forward)((a1.inner.forward)(i))),
                inverse: Box::new(move |i| (a2.inner.inverse)((b2.inner.inverse)(i))),
                settle: Box::new(move |n| b3.settle(a3.settle(n)).max(a3.settle(b3.settle(n)))),
                finite: None,
            }),
        }
    }

    /// Whether `τ` and `other` agree (forward and backward) on `{1..n}`.
    pub fn agrees_on(&self, other: &InfPermutation, n: usize) -> Result<bool> {
        for i in 1..=n {
            if self.image(i)? != other.image(i)? || self.preimage(i)? != other.preimage(i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `τ` fixes every point of `{1..m}`.
    pub fn fixes_prefix(&self, m: usize) -> Result<bool> {
        for i in 1..=m {
            if self.image(i)? != i {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `max τ({1..n})`, the number of blocks after which strands `1..n` are in place.
    pub fn image_horizon(&self, n: usize) -> Result<usize> {
        let mut h = n;
        for i in 1..=n {
            h = h.max(self.image(i)?);
        }
        Ok(h)
    }

    /// Parses `perm: 1->2 2->1` (prefix optional, unlisted points fixed) or `id`.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_finite(&parse_finite_perm(text)?))
    }
}

/// Parses the finitely supported permutation format into a finite permutation.
pub fn parse_finite_perm(text: &str) -> Result<FinPermutation> {
    let body = text.trim();
    let body = body.strip_prefix("perm:").unwrap_or(body).trim();
    if body == "id" || body.is_empty() {
        return Ok(FinPermutation::identity(0));
    }
    let mut pairs = Vec::new();
    for tok in body.split_whitespace() {
        let (a, b) = tok
            .split_once("->")
            .ok_or_else(|| BraidError::Syntax(format!("expected `i->j`, found `{tok}`")))?;
        let num = |s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(v) if v >= 1 && s.bytes().all(|c| c.is_ascii_digit()) => Ok(v),
                _ => Err(BraidError::Syntax(format!("bad point `{s}` in `{tok}`"))),
            }
        };
        pairs.push((num(a)?, num(b)?));
    }
    let size = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
    let mut images: Vec<usize> = (1..=size).collect();
    let mut assigned = vec![false; size + 1];
    for &(a, b) in &pairs {
        if assigned[a] {
            return Err(BraidError::InvalidPermutation(format!(
                "point {a} listed twice"
            )));
        }
        assigned[a] = true;
        images[a - 1] = b;
    }
    FinPermutation::from_images(images)
}

impl fmt::Debug for InfPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_finite() {
            Some(p) => write!(f, "InfPermutation({p})"),
            None => f.write_str("InfPermutation(<evaluator>)"),
        }
    }
}

/// The cycle `σ_{n,m}` on `m` points.
pub fn sigma_cycle(n: usize, m: usize) -> Result<FinPermutation> {
    if n == 0 || n > m {
        return Err(BraidError::InvalidBlock { n, m });
    }
    let images = (1..=m).map(|i| apply_block(n, m, i)).collect::<Vec<_>>();
    FinPermutation::from_images(images)
}

#[inline]
fn apply_block(n: usize, m: usize, i: usize) -> usize {
    if i >= n && i < m {
        i + 1
    } else if i == m {
        n
    } else {
        i
    }
}

/// `sum_{i ≤ precision} [a(i) ≠ b(i)] / 2^i`; the full series lies within
/// `2^-precision` above this partial sum.
pub fn perm_metric(a: &InfPermutation, b: &InfPermutation, precision: usize) -> Result<Dyadic> {
    if precision == 0 {
        return Err(BraidError::InvalidArgument(
            "precision must be at least 1".into(),
        ));
    }
    let mut num = num_bigint::BigUint::from(0u32);
    for i in 1..=precision {
        num <<= 1;
        if a.image(i)? != b.image(i)? {
            num += 1u32;
        }
    }
    Ok(Dyadic::new(num, precision as u32))
}

/// The first `k` blocks `m_1, ..., m_k` of a permutation's normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermNormalForm {
    blocks: Vec<usize>,
}

impl PermNormalForm {
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `S_k(i)`: apply `σ_{1,m_1}` first, then the rest in order.
    pub fn apply_composite(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .enumerate()
            .fold(i, |x, (k, &m)| apply_block(k + 1, m, x))
    }

    /// `S_k^-1(i)`.
    pub fn apply_composite_inverse(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .enumerate()
            .rev()
            .fold(i, |x, (k, &m)| unapply_block(k + 1, m, x))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .trim()
            .strip_prefix("blocks:")
            .ok_or_else(|| BraidError::Syntax("expected `blocks:`".into()))?;
        let mut blocks = Vec::new();
        for (k, tok) in body.split_whitespace().enumerate() {
            let want = format!("m{}=", k + 1);
            let v = tok
                .strip_prefix(&want)
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| BraidError::Syntax(format!("expected `{want}N`, found `{tok}`")))?;
            if v < k + 1 {
                return Err(BraidError::InvalidBlock { n: k + 1, m: v });
            }
            blocks.push(v);
        }
        Ok(PermNormalForm { blocks })
    }
}

#[inline]
fn unapply_block(n: usize, m: usize, i: usize) -> usize {
    if i > n && i <= m {
        i - 1
    } else if i == n {
        m
    } else {
        i
    }
}

impl fmt::Display for PermNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("blocks:")?;
        for (k, m) in self.blocks.iter().enumerate() {
            write!(f, " m{}={}", k + 1, m)?;
        }
        Ok(())
    }
}

/// `m_1 = τ^-1(1)` and `m_{j+1} = S_j(τ^-1(j + 1))`.
pub fn normal_form(t: &InfPermutation, k: usize) -> Result<PermNormalForm> {
    if k == 0 {
        return Err(BraidError::InvalidArgument(
            "need at least one block".into(),
        ));
    }
    let mut nf = PermNormalForm {
        blocks: Vec::with_capacity(k),
    };
    for j in 1..=k {
        let m = nf.apply_composite(t.preimage(j)?);
        if m < j {
            return Err(BraidError::InvalidPermutation(format!(
                "block m{j} = {m} < {j}; forward and inverse evaluators are inconsistent"
            )));
        }
        nf.blocks.push(m);
    }
    Ok(nf)
}

/// The positive lift `s_{m-1} s_{m-2} ... s_n` of `σ_{n,m}`, on `m` strands.
pub fn block_braid(n: usize, m: usize) -> Result<BraidWord> {
    if n == 0 || n > m {
        return Err(BraidError::InvalidBlock { n, m });
    }
    let letters = (n..m).rev().map(Generator::pos).collect();
    BraidWord::new(m, letters)
}

/// Concatenated block braids for the first `blocks` blocks of the normal form.
pub(crate) fn section_prefix(t: &InfPermutation, blocks: usize) -> Result<BraidWord> {
    if blocks == 0 {
        return Ok(BraidWord::identity(1));
    }
    let nf = normal_form(t, blocks)?;
    let strands = nf.blocks.iter().copied().max().unwrap_or(1).max(blocks);
    let mut letters = Vec::new();
    for (k, &m) in nf.blocks.iter().enumerate() {
        letters.extend((k + 1..m).rev().map(Generator::pos));
    }
    BraidWord::new(strands, letters)
}

/// A finite braid realizing `τ` on the strands `1..=depth`.
///
/// Concatenates `block_braid(j, m_j)` for `j = 1..h` with `h = max τ({1..depth})`,
/// the first stage after which those strands have reached `τ(i)`; later blocks
/// never touch positions `≤ h`.
pub fn section_braid(t: &InfPermutation, depth: usize) -> Result<BraidWord> {
    if depth == 0 {
        return Err(BraidError::InvalidArgument(
            "depth must be at least 1".into(),
        ));
    }
    section_prefix(t, t.image_horizon(depth)?)
}
