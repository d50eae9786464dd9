//! The completed braid group as pairs (infinite pure braid, infinite permutation).
//!
//! An element `(p, τ)` stands for `p · σ(τ)`, where `σ(τ)` is the infinite
//! section braid built from the blocks of `τ`. Products and inverses are
//! computed one truncation level at a time: strands `1..n` of any factor
//! involve only finitely many blocks, so each level reduces to a finite
//! braid, a strand deletion, and a combing.

use std::collections::BTreeSet;
use std::fmt;

use crate::braid::BraidWord;
use crate::combing::{comb_sigma, pure_equal};
use crate::dyadic::Dyadic;
use crate::error::{BraidError, Result};
use crate::free_group::FreeWord;
use crate::infperm::{perm_metric, section_braid, section_prefix, InfPermutation};
use crate::stream::{distance, DepthBudget, Distance, InfinitePureBraid};

#[derive(Clone, Debug)]
pub struct CompletedBraid {
    pure: InfinitePureBraid,
    perm: InfPermutation,
}

impl CompletedBraid {
    pub fn new(pure: InfinitePureBraid, perm: InfPermutation) -> Self {
        CompletedBraid { pure, perm }
    }

    pub fn identity() -> Self {
        Self::new(InfinitePureBraid::identity(), InfPermutation::identity())
    }

    pub fn pure(&self) -> &InfinitePureBraid {
        &self.pure
    }

    pub fn perm(&self) -> &InfPermutation {
        &self.perm
    }
}

pub fn project_perm(b: &CompletedBraid) -> InfPermutation {
    b.perm.clone()
}

/// `w ↦ (w · σ(perm w)^-1, perm w)`.
pub fn embed_finite_full(w: &BraidWord) -> Result<CompletedBraid> {
    let perm = InfPermutation::from_finite(&w.perm_of());
    let strands = w.strands().max(1);
    let section = section_braid(&perm, strands)?;
    let pure = InfinitePureBraid::embed_finite(&w.concat(&section.inverse()).free_reduce())?;
    Ok(CompletedBraid::new(pure, perm))
}

/// The finite braid `truncate(p, n) · σ(τ)` on `n` strands; needs `τ({1..n}) = {1..n}`.
pub fn recompose(b: &CompletedBraid, n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(BraidError::InvalidArgument(
            "need at least one strand".into(),
        ));
    }
    if b.perm.image_horizon(n)? != n {
        return Err(BraidError::InvalidArgument(format!(
            "permutation does not preserve {{1..{n}}}"
        )));
    }
    let section = section_braid(&b.perm, n)?;
    let pure = b.pure.truncate(n)?.to_sigma();
    pure.concat(&section).with_strands(n)
}

fn max_image(t: &InfPermutation, points: impl IntoIterator<Item = usize>) -> Result<usize> {
    let mut h = 0;
    for i in points {
        h = h.max(t.image(i)?);
    }
    Ok(h)
}

fn first_strands(n: usize) -> BTreeSet<usize> {
    (1..=n).collect()
}

/// Coordinate `n` of `head · forget(tail, 1..n)` where `head` is already an
/// `n`-strand pure word.
fn level_coord(head: BraidWord, tail: &BraidWord, n: usize) -> Result<FreeWord> {
    let kept = tail.forget_strands(&first_strands(n))?;
    let word = head.concat(&kept).with_strands(n)?.free_reduce();
    Ok(comb_sigma(&word)?.coord(n).clone())
}

fn pad(w: &BraidWord, strands: usize) -> Result<BraidWord> {
    w.with_strands(strands.max(w.strands()))
}

/// Product `a · b` with permutation "τ_a then τ_b".
///
/// The pure part is `p_a · σ(τ_a) p_b σ(τ_b) σ(τ_ab)^-1`; at level `n` the
/// strands starting in `1..n` pass through positions `τ_a({1..n})` and
/// `τ_ab({1..n})`, which bound how many blocks of each section are needed.
pub fn completed_mul(a: &CompletedBraid, b: &CompletedBraid) -> CompletedBraid {
    let perm = a.perm.then(&b.perm);
    let (a, b, tab) = (a.clone(), b.clone(), perm.clone());
    let pure = InfinitePureBraid::try_from_fn(move |n| {
        let h1 = max_image(&a.perm, 1..=n)?;
        let h2 = max_image(&tab, 1..=n)?;
        let w1 = section_prefix(&a.perm, h1)?;
        let w2 = section_prefix(&b.perm, h2)?;
        let w3 = section_prefix(&tab, h2)?;
        let d = [h1, h2, w1.strands(), w2.strands(), w3.strands()]
            .into_iter()
            .max()
            .unwrap_or(n);
        let pb = pad(&b.pure.truncate(d)?.to_sigma(), d)?;
        let u = pad(&w1, d)?
            .concat(&pb)
            .concat(&pad(&w2, d)?)
            .concat(&pad(&w3, d)?.inverse());
        let head = a.pure.truncate(n)?.to_sigma().with_strands(n)?;
        level_coord(head, &u, n)
    });
    CompletedBraid::new(pure, perm)
}

/// Inverse: permutation `τ^-1`, pure part `σ(τ)^-1 p^-1 σ(τ^-1)^-1`.
pub fn completed_inv(a: &CompletedBraid) -> CompletedBraid {
    let perm = a.perm.inverse();
    let (a, tinv) = (a.clone(), perm.clone());
    let pure = InfinitePureBraid::try_from_fn(move |n| {
        let h2 = max_image(&tinv, 1..=n)?;
        let w1 = section_prefix(&a.perm, n)?;
        let w2 = section_prefix(&tinv, h2)?;
        let d = [n, h2, w1.strands(), w2.strands()]
            .into_iter()
            .max()
            .unwrap_or(n);
        let p = pad(&a.pure.truncate(d)?.to_sigma(), d)?;
        let u = pad(&w1, d)?
            .inverse()
            .concat(&p.inverse())
            .concat(&pad(&w2, d)?.inverse());
        level_coord(BraidWord::identity(n), &u, n)
    });
    CompletedBraid::new(pure, perm)
}

/// Whether `a` and `b` have equal pure coordinates up to `depth` and
/// permutations agreeing on `{1..depth}`.
pub fn completed_agree(a: &CompletedBraid, b: &CompletedBraid, depth: usize) -> Result<bool> {
    if !a.perm.agrees_on(&b.perm, depth)? {
        return Ok(false);
    }
    for level in 1..=depth {
        if a.pure.coord(level)? != b.pure.coord(level)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Equality of the `n`-strand truncations, decided by the word-problem oracle.
pub fn truncations_equal(a: &CompletedBraid, b: &CompletedBraid, n: usize) -> Result<bool> {
    pure_equal(&a.pure.truncate(n)?, &b.pure.truncate(n)?)
}

/// Least 1-based `N` such that every `seq[n]` with `n ≥ N` fixes `{1..m}` and
/// has trivial `m`-strand pure truncation; `None` if the last element fails.
pub fn completed_converges(seq: &[CompletedBraid], m: usize) -> Result<Option<usize>> {
    let mut n = seq.len();
    while n > 0 {
        let b = &seq[n - 1];
        let trivial = b.perm.fixes_prefix(m)?
            && (1..=m).try_fold(true, |ok, l| {
                Ok::<_, BraidError>(ok && b.pure.coord(l)?.is_empty())
            })?;
        if !trivial {
            break;
        }
        n -= 1;
    }
    if n == seq.len() && !seq.is_empty() {
        Ok(None)
    } else {
        Ok(Some(n + 1))
    }
}

/// The product metric `max(perm_metric, pure distance)` evaluated under a budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedDistance {
    pub perm: Dyadic,
    pub pure: Distance,
}

impl CompletedDistance {
    /// Lower end of the certified interval.
    pub fn lower(&self) -> Dyadic {
        let pure = self.pure.value().unwrap_or_else(Dyadic::zero);
        self.perm.clone().max(pure)
    }

    /// Upper end of the certified interval.
    pub fn upper(&self, precision: usize) -> Dyadic {
        let perm = &self.perm + &Dyadic::pow2_neg(precision as u32);
        perm.max(self.pure.upper_bound())
    }
}

impl fmt::Display for CompletedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lower())
    }
}

pub fn completed_distance(
    a: &CompletedBraid,
    b: &CompletedBraid,
    budget: DepthBudget,
    precision: usize,
) -> Result<CompletedDistance> {
    Ok(CompletedDistance {
        perm: perm_metric(&a.perm, &b.perm, precision)?,
        pure: distance(&a.pure, &b.pure, budget)?,
    })
}
