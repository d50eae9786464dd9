//! Infinite pure braids as lazily evaluated coordinate streams.
//!
//! Every sequence `(k_1, k_2, ...)` with `k_n ∈ K_n` is an element of the
//! completed pure braid group, so a stream is just a deterministic function
//! from levels to reduced kernel words. Values are memoized per level; the
//! memo is shared between clones and safe under concurrent readers.
//!
//! Exact equality of streams is only semidecidable, so every comparison here
//! takes a [`DepthBudget`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::braid::BraidWord;
use crate::combing::{comb, comb_sigma, conj_into_kn, pure_is_identity, recombine, CombedForm};
use crate::dyadic::Dyadic;
use crate::error::{BraidError, Result};
use crate::free_group::{FreeLetter, FreeWord};
use crate::pure::PureBraidWord;

type CoordFn = dyn Fn(usize) -> Result<FreeWord> + Send + Sync;

struct StreamInner {
    source: Box<CoordFn>,
    memo: Mutex<HashMap<usize, FreeWord>>,
}

/// An element of the completed pure braid group, given by its combing coordinates.
#[derive(Clone)]
pub struct InfinitePureBraid {
    inner: Arc<StreamInner>,
}

/// A positive bound on how many levels a query may inspect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DepthBudget(usize);

impl DepthBudget {
    pub fn new(max_depth: usize) -> Result<Self> {
        if max_depth == 0 {
            return Err(BraidError::InvalidArgument(
                "depth budget must be positive".into(),
            ));
        }
        Ok(DepthBudget(max_depth))
    }

    pub fn max_depth(self) -> usize {
        self.0
    }
}

/// Outcome of a budgeted distance query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    /// The streams first differ at `level`; the distance is `2^-level`.
    Differ { level: usize },
    /// No difference up to the budget.
    Indistinguishable { budget: usize },
}

impl Distance {
    pub fn value(&self) -> Option<Dyadic> {
        match self {
            Distance::Differ { level } => Some(Dyadic::pow2_neg(*level as u32)),
            Distance::Indistinguishable { .. } => None,
        }
    }

    /// Upper bound on the true distance: `2^-level`, or `2^-(budget+1)` when
    /// nothing differed.
    pub fn upper_bound(&self) -> Dyadic {
        match self {
            Distance::Differ { level } => Dyadic::pow2_neg(*level as u32),
            Distance::Indistinguishable { budget } => Dyadic::pow2_neg(*budget as u32 + 1),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Differ { level } => write!(f, "{}", Dyadic::pow2_neg(*level as u32)),
            Distance::Indistinguishable { budget } => {
                write!(f, "indistinguishable at depth {budget}")
            }
        }
    }
}

impl InfinitePureBraid {
    /// Wraps a coordinate function. It must be pure: same level, same answer.
    pub fn try_from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> Result<FreeWord> + Send + Sync + 'static,
    {
        InfinitePureBraid {
            inner: Arc::new(StreamInner {
                source: Box::new(f),
                memo: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(usize) -> FreeWord + Send + Sync + 'static,
    {
        Self::try_from_fn(move |n| Ok(f(n)))
    }

    pub fn identity() -> Self {
        Self::from_fn(|n| FreeWord::identity(n - 1))
    }

    /// The stream whose first coordinates are `c` and whose later ones are empty.
    pub fn from_combed(c: CombedForm) -> Self {
        let coords = c.into_coords();
        Self::from_fn(move |n| {
            coords
                .get(n - 1)
                .cloned()
                .unwrap_or_else(|| FreeWord::identity(n - 1))
        })
    }

    /// Includes a finite pure band word via straight extra strands.
    pub fn embed_pure(w: &PureBraidWord) -> Self {
        Self::from_combed(comb(w, w.strands()).expect("depth equals strand count"))
    }

    /// Includes a finite pure Artin word via straight extra strands.
    pub fn embed_finite(w: &BraidWord) -> Result<Self> {
        Ok(Self::from_combed(comb_sigma(w)?))
    }

    /// Coordinate `k_level` (level ≥ 1).
    pub fn coord(&self, level: usize) -> Result<FreeWord> {
        if level == 0 {
            return Err(BraidError::InvalidArgument("levels start at 1".into()));
        }
        if let Some(w) = self.inner.memo.lock().expect("memo lock").get(&level) {
            return Ok(w.clone());
        }
        let w = (self.inner.source)(level)?;
        if w.letters().iter().any(|l| l.index() >= level) {
            return Err(BraidError::AlphabetViolation(format!(
                "coordinate k{level} = {w} leaves the strand-{level} alphabet"
            )));
        }
        let w = w.with_rank(level - 1);
        let mut memo = self.inner.memo.lock().expect("memo lock");
        Ok(memo.entry(level).or_insert(w).clone())
    }

    /// The first `depth` coordinates.
    pub fn prefix(&self, depth: usize) -> Result<CombedForm> {
        let coords = (1..=depth)
            .map(|n| self.coord(n))
            .collect::<Result<Vec<_>>>()?;
        CombedForm::from_coords(coords)
    }

    /// The `n`-strand approximation `k_1 k_2 ... k_n`.
    pub fn truncate(&self, n: usize) -> Result<PureBraidWord> {
        Ok(recombine(&self.prefix(n)?))
    }

    /// Header `depth=N` followed by the coordinate lines.
    pub fn serialize_prefix(&self, depth: usize) -> Result<String> {
        Ok(format!("depth={depth}\n{}", self.prefix(depth)?))
    }

    /// Reads a serialized prefix back as a finitely supported stream.
    pub fn parse_prefix(text: &str) -> Result<Self> {
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let depth = crate::braid::parse_header(header, "depth")?;
        let c = CombedForm::parse(body)?;
        if c.depth() != depth {
            return Err(BraidError::Syntax(format!(
                "header says depth {depth} but {} coordinates follow",
                c.depth()
            )));
        }
        Ok(Self::from_combed(c))
    }
}

impl fmt::Debug for InfinitePureBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let memo = self.inner.memo.lock().expect("memo lock");
        f.debug_struct("InfinitePureBraid")
            .field("memoized_levels", &memo.len())
            .finish()
    }
}

/// Streamwise twisted product; level `n` touches only levels `≤ n` of the inputs.
pub fn inf_mul(a: &InfinitePureBraid, b: &InfinitePureBraid) -> InfinitePureBraid {
    let (a, b) = (a.clone(), b.clone());
    InfinitePureBraid::try_from_fn(move |n| {
        let prefix = b.truncate(n - 1)?;
        let conj = conj_into_kn(&prefix, &a.coord(n)?, n)?;
        Ok(conj.mul(&b.coord(n)?))
    })
}

/// Streamwise inverse `x_n = (y_1 ... y_{n-1}) y_n^-1 (y_1 ... y_{n-1})^-1`.
pub fn inf_inv(y: &InfinitePureBraid) -> InfinitePureBraid {
    let y = y.clone();
    InfinitePureBraid::try_from_fn(move |n| {
        let prefix = y.truncate(n - 1)?.inverse();
        conj_into_kn(&prefix, &y.coord(n)?.inverse(), n)
    })
}

/// `2^-m` for the first level `m ≤ budget` where the coordinates differ.
pub fn distance(
    a: &InfinitePureBraid,
    b: &InfinitePureBraid,
    budget: DepthBudget,
) -> Result<Distance> {
    for level in 1..=budget.max_depth() {
        if a.coord(level)? != b.coord(level)? {
            return Ok(Distance::Differ { level });
        }
    }
    Ok(Distance::Indistinguishable {
        budget: budget.max_depth(),
    })
}

/// Least 1-based `N` such that every `seq[n]` with `n ≥ N` has trivial
/// `m`-strand truncation, or `None` if the last element is nontrivial.
pub fn converges_to_id(seq: &[InfinitePureBraid], m: usize) -> Result<Option<usize>> {
    let mut n = seq.len();
    while n > 0 {
        if !pure_is_identity(&seq[n - 1].truncate(m)?) {
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

/// The stream `(e, A[1,2], A[2,3], A[3,4], ...)`: strand `n` orbits strand `n+1`
/// once, clockwise, during the `n`-th time interval.
pub fn wild_braid() -> InfinitePureBraid {
    InfinitePureBraid::from_fn(|n| {
        if n == 1 {
            FreeWord::identity(0)
        } else {
            FreeWord::from_letters(n - 1, [FreeLetter::new(n - 1, 1)]).expect("index below rank")
        }
    })
}
