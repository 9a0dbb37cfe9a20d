//! The symmetric group `S_n` as the type-A Weyl group.
//!
//! Permutations are stored in one-line notation with values in `1..=n` and
//! compose as functions: `a.compose(&b)` is `t ↦ a(b(t))`. Simple root `j`
//! is the adjacent transposition of positions `j` and `j + 1`, so the right
//! coset `u·W_P` permutes positions inside the blocks glued together by the
//! roots of `P`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{parse_list, Error, Result};
use crate::MAX_RANK;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking it is a
    /// bijection on `1..=n`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_RANK {
            return Err(Error::RankOutOfRange(n));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `w₀ = [n, n−1, …, 1]`.
    pub fn longest_element(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The generator `[n, 1, 2, …, n−1]` of the cyclic Seidel subgroup.
    pub fn seidel_generator(n: usize) -> Self {
        Self::seidel_power(n, 1 % n.max(1))
    }

    /// The `i`-th power of [`Permutation::seidel_generator`], in one-line
    /// form `[n−i+1, …, n, 1, …, n−i]`. For `1 ≤ i ≤ n−1` this is the
    /// minimal representative of `w₀` modulo the maximal parabolic `Δ∖{i}`.
    pub fn seidel_element(n: usize, i: usize) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::RankOutOfRange(n));
        }
        if i >= n {
            return Err(Error::RootOutOfRange {
                root: i,
                min: 0,
                max: n - 1,
            });
        }
        Ok(Self::seidel_power(n, i))
    }

    fn seidel_power(n: usize, i: usize) -> Self {
        Permutation {
            images: (1..=n).map(|t| (t - 1 + n - i) % n + 1).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(t)` for `t` in `1..=n`.
    pub fn apply(&self, t: usize) -> usize {
        self.images[t - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }

    /// `t ↦ self(other(t))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_rank(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&t| self.apply(t)).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.rank()];
        for (p, &v) in self.images.iter().enumerate() {
            images[v - 1] = p + 1;
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        (0..exp).fold(Permutation::identity(self.rank()), |acc, _| {
            acc.compose(self).expect("same rank")
        })
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// Bruhat order through the rank-matrix criterion: `u ≤ v` iff for all
    /// `i, j`, `#{t ≤ i : u(t) ≥ j} ≤ #{t ≤ i : v(t) ≥ j}`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        self.check_rank(other)?;
        let n = self.rank();
        // counts[j] = #{t ≤ i : w(t) ≥ j}, maintained as i advances
        let mut cu = vec![0usize; n + 2];
        let mut cv = vec![0usize; n + 2];
        for i in 0..n {
            for j in 1..=self.images[i] {
                cu[j] += 1;
            }
            for j in 1..=other.images[i] {
                cv[j] += 1;
            }
            if (1..=n).any(|j| cu[j] > cv[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when `self` is the minimal element of its coset `self·W_P`.
    pub fn is_min_rep(&self, p: &ParabolicSet) -> bool {
        p.assert_rank(self.rank());
        p.roots().all(|j| self.images[j - 1] < self.images[j])
    }

    /// `u^P`: sorts the one-line values ascending inside every block of
    /// positions joined by the roots of `p`.
    pub fn min_coset_rep(&self, p: &ParabolicSet) -> Permutation {
        p.assert_rank(self.rank());
        let mut images = self.images.clone();
        for block in p.blocks() {
            images[block].sort_unstable();
        }
        Permutation { images }
    }

    /// True when `self` lies in the parabolic subgroup `W_P`, i.e. it only
    /// permutes positions inside the blocks of `p`.
    pub fn in_parabolic_subgroup(&self, p: &ParabolicSet) -> bool {
        p.assert_rank(self.rank());
        p.blocks().into_iter().all(|block| {
            block
                .clone()
                .all(|pos| block.contains(&(self.images[pos] - 1)))
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = parse_list("permutation", s)?;
        if images.is_empty() {
            return Err(Error::parse("permutation", s));
        }
        Permutation::new(images)
    }
}

crate::string_serde!(Permutation);

/// A set of simple roots `D ⊆ {1, …, n−1}`, naming the parabolic subgroup
/// generated by the corresponding adjacent transpositions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSet {
    n: usize,
    mask: u32,
}

impl ParabolicSet {
    pub fn new(n: usize, roots: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::RankOutOfRange(n));
        }
        let mut mask = 0u32;
        for r in roots {
            if r == 0 || r >= n {
                return Err(Error::RootOutOfRange {
                    root: r,
                    min: 1,
                    max: n - 1,
                });
            }
            mask |= 1 << r;
        }
        Ok(ParabolicSet { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        ParabolicSet { n, mask: 0 }
    }

    /// All of `Δ`; the quotient is a single point.
    pub fn full(n: usize) -> Self {
        ParabolicSet {
            n,
            mask: Self::full_mask(n),
        }
    }

    /// `Δ∖{k}`, the maximal parabolic of `Gr(k, n)`.
    pub fn maximal(n: usize, k: usize) -> Result<Self> {
        Self::new(n, (1..n).filter(|&r| r != k))
    }

    fn full_mask(n: usize) -> u32 {
        ((1u32 << n) - 1) & !1
    }

    /// Every subset of `Δ` for rank `n`, ordered by bitmask.
    pub fn all(n: usize) -> impl Iterator<Item = ParabolicSet> {
        let limit = 1u32 << n.saturating_sub(1);
        (0..limit).map(move |m| ParabolicSet { n, mask: m << 1 })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn contains(&self, root: usize) -> bool {
        root < 32 && self.mask & (1 << root) != 0
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(|&r| self.contains(r))
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn intersection(&self, other: &ParabolicSet) -> Result<ParabolicSet> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(ParabolicSet {
            n: self.n,
            mask: self.mask & other.mask,
        })
    }

    /// Maximal runs of 0-based positions glued together by the roots.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for pos in 1..=self.n {
            // positions pos-1 and pos (0-based) are joined by root `pos`
            if pos == self.n || !self.contains(pos) {
                out.push(start..pos);
                start = pos;
            }
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().into_iter().map(|b| b.len()).collect()
    }

    fn assert_rank(&self, n: usize) {
        assert_eq!(self.n, n, "parabolic set rank does not match permutation");
    }

    /// Parses `"1,3"`; the empty string is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Self::new(n, parse_list("parabolic set", s)?)
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.roots().join(","))
    }
}

impl fmt::Debug for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}} (n={})", self.n)
    }
}

/// The minimal coset representatives `W^P`, in lexicographic one-line
/// order. Generated directly as shuffles of sorted blocks.
pub fn parabolic_quotient(n: usize, p: &ParabolicSet) -> Vec<Permutation> {
    p.assert_rank(n);
    fn fill(
        sizes: &[usize],
        remaining: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        let Some((&size, rest)) = sizes.split_first() else {
            out.push(Permutation::from_images_unchecked(current.clone()));
            return;
        };
        for chosen in remaining.iter().copied().combinations(size) {
            let left: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|v| !chosen.contains(v))
                .collect();
            let mark = current.len();
            current.extend_from_slice(&chosen);
            fill(rest, &left, current, out);
            current.truncate(mark);
        }
    }
    let values: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    fill(
        &p.block_sizes(),
        &values,
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out
}

/// Result of a join query in `(W^P, ≤)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JoinOutcome {
    Join(Permutation),
    /// No least upper bound; carries the minimal upper bounds found.
    NoJoin {
        minimal_upper_bounds: Vec<Permutation>,
    },
}

impl JoinOutcome {
    pub fn join(&self) -> Option<&Permutation> {
        match self {
            JoinOutcome::Join(w) => Some(w),
            JoinOutcome::NoJoin { .. } => None,
        }
    }
}

impl fmt::Display for JoinOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JoinOutcome::Join(w) => write!(f, "{w}"),
            JoinOutcome::NoJoin { .. } => write!(f, "NoJoin"),
        }
    }
}

/// Join of two minimal representatives in the Bruhat order on `W^P`,
/// found by filtering `W^P` for common upper bounds and keeping the minima.
pub fn join(u: &Permutation, v: &Permutation, p: &ParabolicSet) -> Result<JoinOutcome> {
    u.check_rank(v)?;
    for x in [u, v] {
        if !x.is_min_rep(p) {
            return Err(Error::NotMinimalRepresentative {
                perm: x.to_string(),
                roots: p.to_string(),
            });
        }
    }
    let mut upper = Vec::new();
    for x in parabolic_quotient(u.rank(), p) {
        if u.bruhat_leq(&x)? && v.bruhat_leq(&x)? {
            upper.push(x);
        }
    }
    let minimal: Vec<Permutation> = upper
        .iter()
        .filter(|x| {
            !upper
                .iter()
                .any(|y| y != *x && y.bruhat_leq(x).expect("same rank"))
        })
        .cloned()
        .collect();
    Ok(match <[Permutation; 1]>::try_from(minimal) {
        Ok([w]) => JoinOutcome::Join(w),
        Err(minimal_upper_bounds) => JoinOutcome::NoJoin {
            minimal_upper_bounds,
        },
    })
}
