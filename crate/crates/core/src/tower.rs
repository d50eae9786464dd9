//! Twisted products over a tower of groups and their inverse limits.
//!
//! Given groups `{id} = G_0 ⊂ G_1 ⊂ G_2 ⊂ ...` with retractions
//! `project: G_n -> G_{n-1}` and kernels `K_n`, sequences `(x_1, x_2, ...)` with
//! `x_n ∈ K_n` form a group under
//!
//! ```text
//! [x * y]_n = (y_1 ... y_{n-1})^-1 x_n (y_1 ... y_{n-1}) y_n
//! ```
//!
//! and `psi(k) = (k_1, k_1 k_2, k_1 k_2 k_3, ...)` identifies that group with
//! the coherent sequences of the inverse limit. Everything here works at a
//! finite depth; streams live in [`crate::stream`].

use std::fmt::Debug;

use crate::combing::{band_to_kernel, comb, conj_into_kn, kernel_to_band};
use crate::error::{BraidError, Result};
use crate::pure::PureBraidWord;

/// A nested sequence of groups with inclusions, retractions and kernel conjugation.
pub trait GroupTower {
    type Elem: Clone + Debug;

    fn identity(&self, level: usize) -> Self::Elem;
    fn multiply(&self, level: usize, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, level: usize, a: &Self::Elem) -> Self::Elem;
    fn equal(&self, level: usize, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// `G_{level-1} -> G_level`.
    fn include(&self, level: usize, a: &Self::Elem) -> Self::Elem;
    /// `G_level -> G_{level-1}`; restricts to the identity on `G_{level-1}`.
    fn project(&self, level: usize, a: &Self::Elem) -> Self::Elem;
    /// `p^-1 k p` for `p ∈ G_{level-1}` and `k ∈ K_level`, written as a kernel element.
    fn kernel_conj(&self, level: usize, p: &Self::Elem, k: &Self::Elem) -> Result<Self::Elem>;
    /// Rewrites an element known to lie in `K_level` in the kernel's own
    /// presentation. Fails with [`BraidError::KernelViolation`] otherwise.
    fn to_kernel(&self, level: usize, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_kernel(level, a) {
            Ok(a.clone())
        } else {
            Err(BraidError::KernelViolation(level))
        }
    }

    fn is_kernel(&self, level: usize, a: &Self::Elem) -> bool {
        level == 0
            || self.equal(
                level - 1,
                &self.project(level, a),
                &self.identity(level - 1),
            )
    }

    /// Includes an element of `G_from` into `G_to`.
    fn lift(&self, from: usize, to: usize, a: &Self::Elem) -> Self::Elem {
        let mut a = a.clone();
        for level in from + 1..=to {
            a = self.include(level, &a);
        }
        a
    }
}

/// An element of the twisted product, truncated to its first `depth` coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedElement<E> {
    coords: Vec<E>,
}

impl<E: Clone + Debug> TwistedElement<E> {
    /// `coords[n - 1]` must lie in `K_n`.
    pub fn new<T: GroupTower<Elem = E>>(tower: &T, coords: Vec<E>) -> Result<Self> {
        for (k, c) in coords.iter().enumerate() {
            if !tower.is_kernel(k + 1, c) {
                return Err(BraidError::KernelViolation(k + 1));
            }
        }
        Ok(TwistedElement { coords })
    }

    pub fn identity<T: GroupTower<Elem = E>>(tower: &T, depth: usize) -> Self {
        TwistedElement {
            coords: (1..=depth).map(|n| tower.identity(n)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn coord(&self, level: usize) -> &E {
        &self.coords[level - 1]
    }

    pub fn truncated(&self, depth: usize) -> Self {
        TwistedElement {
            coords: self.coords[..depth.min(self.coords.len())].to_vec(),
        }
    }
}

/// A coherent sequence `(g_1, ..., g_depth)` with `project(g_n) = g_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitElement<E> {
    levels: Vec<E>,
}

impl<E: Clone + Debug> LimitElement<E> {
    /// Wraps levels without checking coherence; see [`coherence_check`].
    pub fn new(levels: Vec<E>) -> Self {
        LimitElement { levels }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[E] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &E {
        &self.levels[n - 1]
    }
}

/// Levelwise equality of twisted elements (over the common depth).
pub fn twisted_equal<T: GroupTower>(
    tower: &T,
    x: &TwistedElement<T::Elem>,
    y: &TwistedElement<T::Elem>,
) -> bool {
    x.depth() == y.depth()
        && x.coords
            .iter()
            .zip(&y.coords)
            .enumerate()
            .all(|(k, (a, b))| tower.equal(k + 1, a, b))
}

pub fn limit_equal<T: GroupTower>(
    tower: &T,
    g: &LimitElement<T::Elem>,
    h: &LimitElement<T::Elem>,
) -> bool {
    g.depth() == h.depth()
        && g.levels
            .iter()
            .zip(&h.levels)
            .enumerate()
            .all(|(k, (a, b))| tower.equal(k + 1, a, b))
}

fn checked_kernel<T: GroupTower>(tower: &T, level: usize, a: T::Elem) -> Result<T::Elem> {
    if tower.is_kernel(level, &a) {
        Ok(a)
    } else {
        Err(BraidError::KernelViolation(level))
    }
}

/// The twisted product `x * y`, truncated to the smaller depth.
pub fn twisted_mul<T: GroupTower>(
    tower: &T,
    x: &TwistedElement<T::Elem>,
    y: &TwistedElement<T::Elem>,
) -> Result<TwistedElement<T::Elem>> {
    let depth = x.depth().min(y.depth());
    let mut coords = Vec::with_capacity(depth);
    // prefix = y_1 ... y_{n-1} in G_{n-1}
    let mut prefix = tower.identity(0);
    for n in 1..=depth {
        let conj = tower.kernel_conj(n, &prefix, x.coord(n))?;
        let z = tower.multiply(n, &conj, y.coord(n));
        coords.push(checked_kernel(tower, n, z)?);
        prefix = tower.multiply(n, &tower.include(n, &prefix), y.coord(n));
    }
    Ok(TwistedElement { coords })
}

/// The inverse `x_n = (y_1 ... y_{n-1}) y_n^-1 (y_1 ... y_{n-1})^-1`.
pub fn twisted_inv<T: GroupTower>(
    tower: &T,
    y: &TwistedElement<T::Elem>,
) -> Result<TwistedElement<T::Elem>> {
    let mut coords = Vec::with_capacity(y.depth());
    let mut prefix = tower.identity(0);
    for n in 1..=y.depth() {
        let inv_prefix = tower.invert(n - 1, &prefix);
        let inv_y = tower.invert(n, y.coord(n));
        let x = tower.kernel_conj(n, &inv_prefix, &inv_y)?;
        coords.push(checked_kernel(tower, n, x)?);
        prefix = tower.multiply(n, &tower.include(n, &prefix), y.coord(n));
    }
    Ok(TwistedElement { coords })
}

/// `psi(k_1, k_2, ...) = (k_1, k_1 k_2, ...)`.
pub fn psi<T: GroupTower>(tower: &T, x: &TwistedElement<T::Elem>) -> LimitElement<T::Elem> {
    let mut levels = Vec::with_capacity(x.depth());
    let mut prev = tower.identity(0);
    for n in 1..=x.depth() {
        let g = tower.multiply(n, &tower.include(n, &prev), x.coord(n));
        levels.push(g.clone());
        prev = g;
    }
    LimitElement { levels }
}

/// `k_n = g_{n-1}^-1 g_n`, rewritten in the kernel's presentation.
pub fn psi_inv<T: GroupTower>(
    tower: &T,
    g: &LimitElement<T::Elem>,
) -> Result<TwistedElement<T::Elem>> {
    if let Some(level) = first_incoherence(tower, g) {
        return Err(BraidError::Incoherent(level));
    }
    let mut coords = Vec::with_capacity(g.depth());
    let mut prev = tower.identity(0);
    for n in 1..=g.depth() {
        let lifted = tower.include(n, &prev);
        let k = tower.multiply(n, &tower.invert(n, &lifted), g.level(n));
        coords.push(tower.to_kernel(n, &k)?);
        prev = g.level(n).clone();
    }
    Ok(TwistedElement { coords })
}

/// Whether `project(g_n) = g_{n-1}` for every adjacent pair.
pub fn coherence_check<T: GroupTower>(tower: &T, g: &LimitElement<T::Elem>) -> bool {
    first_incoherence(tower, g).is_none()
}

fn first_incoherence<T: GroupTower>(tower: &T, g: &LimitElement<T::Elem>) -> Option<usize> {
    (2..=g.depth()).find(|&n| !tower.equal(n - 1, &tower.project(n, g.level(n)), g.level(n - 1)))
}

/// `Z^n` with projection dropping the last coordinate; `K_n` is the last axis.
#[derive(Debug, Clone, Copy, Default)]
pub struct AbelianTower;

impl GroupTower for AbelianTower {
    type Elem = Vec<i64>;

    fn identity(&self, level: usize) -> Vec<i64> {
        vec![0; level]
    }

    fn multiply(&self, level: usize, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        debug_assert!(a.len() == level && b.len() == level);
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn invert(&self, _level: usize, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn equal(&self, _level: usize, a: &Vec<i64>, b: &Vec<i64>) -> bool {
        a == b
    }

    fn include(&self, _level: usize, a: &Vec<i64>) -> Vec<i64> {
        let mut v = a.clone();
        v.push(0);
        v
    }

    fn project(&self, _level: usize, a: &Vec<i64>) -> Vec<i64> {
        a[..a.len().saturating_sub(1)].to_vec()
    }

    fn kernel_conj(&self, level: usize, _p: &Vec<i64>, k: &Vec<i64>) -> Result<Vec<i64>> {
        if !self.is_kernel(level, k) {
            return Err(BraidError::KernelViolation(level));
        }
        Ok(k.clone())
    }
}

/// Pure braid groups `P_1 ⊂ P_2 ⊂ ...`, projection forgetting the last strand.
///
/// Elements are band words on `level` strands; kernel elements use only the
/// letters `A[i,level]`. Equality compares combed normal forms.
#[derive(Debug, Clone, Copy, Default)]
pub struct PureBraidTower;

impl GroupTower for PureBraidTower {
    type Elem = PureBraidWord;

    fn identity(&self, level: usize) -> PureBraidWord {
        PureBraidWord::identity(level)
    }

    fn multiply(&self, level: usize, a: &PureBraidWord, b: &PureBraidWord) -> PureBraidWord {
        debug_assert!(a.strands() <= level && b.strands() <= level);
        a.concat(b)
            .with_strands(level)
            .expect("factors live on at most `level` strands")
            .free_reduce()
    }

    fn invert(&self, _level: usize, a: &PureBraidWord) -> PureBraidWord {
        a.inverse()
    }

    fn equal(&self, _level: usize, a: &PureBraidWord, b: &PureBraidWord) -> bool {
        let n = a.strands().max(b.strands());
        let a = a.with_strands(n).expect("growing strands never fails");
        let b = b.with_strands(n).expect("growing strands never fails");
        comb(&a, n).expect("depth equals strand count")
            == comb(&b, n).expect("depth equals strand count")
    }

    fn include(&self, level: usize, a: &PureBraidWord) -> PureBraidWord {
        a.with_strands(level)
            .expect("inclusion adds a straight strand")
    }

    fn project(&self, level: usize, a: &PureBraidWord) -> PureBraidWord {
        a.truncate_strands(level.saturating_sub(1))
    }

    fn kernel_conj(
        &self,
        level: usize,
        p: &PureBraidWord,
        k: &PureBraidWord,
    ) -> Result<PureBraidWord> {
        let k = band_to_kernel(k, level)?;
        Ok(kernel_to_band(&conj_into_kn(p, &k, level)?, level))
    }

    fn to_kernel(&self, level: usize, a: &PureBraidWord) -> Result<PureBraidWord> {
        let combed = comb(a, level)?;
        if combed.coords()[..level.saturating_sub(1)]
            .iter()
            .any(|c| !c.is_empty())
        {
            return Err(BraidError::KernelViolation(level));
        }
        Ok(match level {
            0 => PureBraidWord::identity(0),
            _ => kernel_to_band(combed.coord(level), level),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::braid_equal;

    fn band(strands: usize, t: &[(usize, usize, i8)]) -> PureBraidWord {
        PureBraidWord::from_triples(strands, t).unwrap()
    }

    fn abelian(coords: &[&[i64]]) -> TwistedElement<Vec<i64>> {
        TwistedElement::new(&AbelianTower, coords.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn abelian_product_is_coordinatewise_sum() {
        let x = abelian(&[&[3], &[0, -2], &[0, 0, 5]]);
        let y = abelian(&[&[1], &[0, 4], &[0, 0, -5]]);
        let z = twisted_mul(&AbelianTower, &x, &y).unwrap();
        assert_eq!(z.coords(), &[vec![4], vec![0, 2], vec![0, 0, 0]]);
        let inv = twisted_inv(&AbelianTower, &x).unwrap();
        assert_eq!(inv.coords(), &[vec![-3], vec![0, 2], vec![0, 0, -5]]);
    }

    #[test]
    fn abelian_kernel_is_enforced() {
        assert!(matches!(
            TwistedElement::new(&AbelianTower, vec![vec![1], vec![1, 1]]),
            Err(BraidError::KernelViolation(2))
        ));
    }

    #[test]
    fn abelian_psi_is_partial_sums() {
        let x = abelian(&[&[1], &[0, 5], &[0, 0, 2]]);
        let g = psi(&AbelianTower, &x);
        assert_eq!(g.levels(), &[vec![1], vec![1, 5], vec![1, 5, 2]]);
        assert!(coherence_check(&AbelianTower, &g));
        assert_eq!(psi_inv(&AbelianTower, &g).unwrap(), x);
        let bad = LimitElement::new(vec![vec![1], vec![2, 5]]);
        assert!(!coherence_check(&AbelianTower, &bad));
        assert_eq!(psi_inv(&AbelianTower, &bad), Err(BraidError::Incoherent(2)));
    }

    #[test]
    fn identity_laws() {
        let t = PureBraidTower;
        let x = TwistedElement::new(
            &t,
            vec![
                band(1, &[]),
                band(2, &[(1, 2, -1)]),
                band(3, &[(2, 3, 1), (1, 3, 1)]),
            ],
        )
        .unwrap();
        let e = TwistedElement::identity(&t, 3);
        assert!(twisted_equal(&t, &twisted_mul(&t, &x, &e).unwrap(), &x));
        assert!(twisted_equal(&t, &twisted_mul(&t, &e, &x).unwrap(), &x));
        assert!(twisted_equal(&t, &twisted_inv(&t, &e).unwrap(), &e));
    }

    #[test]
    fn braid_twisted_product_conjugates() {
        let t = PureBraidTower;
        let x = TwistedElement::new(&t, vec![band(1, &[]), band(2, &[]), band(3, &[(1, 3, 1)])])
            .unwrap();
        let y = TwistedElement::new(&t, vec![band(1, &[]), band(2, &[(1, 2, 1)]), band(3, &[])])
            .unwrap();
        let z = twisted_mul(&t, &x, &y).unwrap();
        // A12^-1 A13 A12, checked by the Artin action
        let expected = band(3, &[(1, 2, -1), (1, 3, 1), (1, 2, 1)]);
        assert!(braid_equal(&z.coord(3).to_sigma(), &expected.to_sigma()));
        assert!(z.coord(3).letters().iter().all(|b| b.j() == 3));
        assert_eq!(z.coord(2), &band(2, &[(1, 2, 1)]));
    }

    #[test]
    fn braid_inverse_example() {
        let t = PureBraidTower;
        let y = TwistedElement::new(
            &t,
            vec![band(1, &[]), band(2, &[(1, 2, 1)]), band(3, &[(1, 3, 1)])],
        )
        .unwrap();
        let x = twisted_inv(&t, &y).unwrap();
        let e = TwistedElement::identity(&t, 3);
        assert!(twisted_equal(&t, &twisted_mul(&t, &x, &y).unwrap(), &e));
        assert!(twisted_equal(&t, &twisted_mul(&t, &y, &x).unwrap(), &e));
    }

    #[test]
    fn braid_psi_examples() {
        let t = PureBraidTower;
        let x = TwistedElement::new(
            &t,
            vec![band(1, &[]), band(2, &[(1, 2, 1)]), band(3, &[(2, 3, 1)])],
        )
        .unwrap();
        let g = psi(&t, &x);
        assert_eq!(g.level(3), &band(3, &[(1, 2, 1), (2, 3, 1)]));
        assert_eq!(g.level(2), &band(2, &[(1, 2, 1)]));
        let back = psi_inv(&t, &g).unwrap();
        assert!(twisted_equal(&t, &back, &x));
    }

    #[test]
    fn braid_coherence_examples() {
        let t = PureBraidTower;
        let e = LimitElement::new(vec![band(1, &[]), band(2, &[]), band(3, &[])]);
        assert!(coherence_check(&t, &e));
        let ok = LimitElement::new(vec![band(1, &[]), band(2, &[]), band(3, &[(1, 3, 1)])]);
        assert!(coherence_check(&t, &ok));
        let bad = LimitElement::new(vec![band(1, &[]), band(2, &[(1, 2, 1)]), band(3, &[])]);
        assert!(!coherence_check(&t, &bad));
    }

    #[test]
    fn kernel_rewriting_rejects_non_kernel() {
        let t = PureBraidTower;
        assert_eq!(
            t.to_kernel(3, &band(3, &[(1, 2, 1), (1, 3, 1)])),
            Err(BraidError::KernelViolation(3))
        );
        // A12 A13 A12^-1 is in K_3 but not written in its alphabet
        let k = t
            .to_kernel(3, &band(3, &[(1, 2, 1), (1, 3, 1), (1, 2, -1)]))
            .unwrap();
        assert!(k.letters().iter().all(|b| b.j() == 3));
        assert!(t.equal(3, &k, &band(3, &[(1, 2, 1), (1, 3, 1), (1, 2, -1)])));
    }
}
