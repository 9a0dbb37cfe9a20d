//! Schubert varieties of `Gr(k, n)` indexed by partitions in the
//! `k × (n−k)` box, by minimal coset representatives, and through their
//! torus-fixed points.
//!
//! A fixed point is a coordinate subspace `Span{e_s : s ∈ S}`; it is stored
//! as a [`SubsetPoint`] bitmask. `E_j = Span{e_1..e_j}` and
//! `E^opp_j = Span{e_n..e_{n−j+1}}` become index intervals, so membership
//! conditions `dim Σ ∩ F ≥ i` turn into popcounts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{parse_list, Error, Result};
use crate::weyl::{parabolic_quotient, ParabolicSet, Permutation};
use crate::MAX_RANK;

/// A partition with trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `cols^rows`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.num_rows() <= self.num_rows()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.num_rows() <= rows && self.part(1) <= cols
    }

    /// The complement of the 180°-rotated diagram inside the box.
    pub fn rotate_complement(&self, rows: usize, cols: usize) -> Partition {
        Partition::new((1..=rows).map(|i| cols - self.part(rows + 1 - i)).collect())
            .expect("complement of a partition is a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list("partition", s)?)
    }
}

crate::string_serde!(Partition);

/// A subset of `{1, …, MAX_RANK}` as a bitmask; bit `s − 1` stands for `s`.
/// Ordered lexicographically on the increasing element sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetPoint {
    mask: u32,
}

impl SubsetPoint {
    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u32;
        for s in elements {
            if s == 0 || s > MAX_RANK || mask & (1 << (s - 1)) != 0 {
                return Err(Error::InvalidSubset {
                    element: s,
                    n: MAX_RANK,
                });
            }
            mask |= 1 << (s - 1);
        }
        Ok(SubsetPoint { mask })
    }

    pub const fn from_mask(mask: u32) -> Self {
        SubsetPoint { mask }
    }

    /// `{a, …, b}`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        let a = a.max(1);
        if a > b {
            return SubsetPoint::default();
        }
        let upper = if b >= 32 { u32::MAX } else { (1u32 << b) - 1 };
        SubsetPoint {
            mask: upper & !((1u32 << (a - 1)) - 1),
        }
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, s: usize) -> bool {
        (1..=32).contains(&s) && self.mask & (1 << (s - 1)) != 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        let mut m = self.mask;
        std::iter::from_fn(move || {
            (m != 0).then(|| {
                let s = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                s
            })
        })
    }

    pub fn is_subset_of(&self, other: &SubsetPoint) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &SubsetPoint) -> SubsetPoint {
        SubsetPoint::from_mask(self.mask | other.mask)
    }

    pub fn intersection(&self, other: &SubsetPoint) -> SubsetPoint {
        SubsetPoint::from_mask(self.mask & other.mask)
    }

    pub fn difference(&self, other: &SubsetPoint) -> SubsetPoint {
        SubsetPoint::from_mask(self.mask & !other.mask)
    }

    /// `g(S) = {g(s) : s ∈ S}`.
    pub fn translate(&self, g: &Permutation) -> SubsetPoint {
        SubsetPoint::from_mask(self.elements().fold(0, |m, s| m | 1 << (g.apply(s) - 1)))
    }

    /// All `size`-subsets of `self`, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> impl Iterator<Item = SubsetPoint> {
        self.elements()
            .combinations(size)
            .map(|c| SubsetPoint::from_mask(c.into_iter().fold(0, |m, s| m | 1 << (s - 1))))
    }
}

impl Ord for SubsetPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for SubsetPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elements().join(","))
    }
}

impl fmt::Debug for SubsetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SubsetPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(trimmed);
        SubsetPoint::from_elements(parse_list("subset", inner)?)
    }
}

crate::string_serde!(SubsetPoint);

/// A set of fixed points in canonical (lexicographic) order.
pub type FixedPoints = BTreeSet<SubsetPoint>;

/// `g.pts`, the image of a fixed-point set under a permutation matrix.
pub fn translate_fp(g: &Permutation, pts: &FixedPoints) -> FixedPoints {
    pts.iter().map(|s| s.translate(g)).collect()
}

/// A complete coordinate flag: step `j` spans the first `j` basis vectors
/// `e_{order(1)}, …, e_{order(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagOrdering {
    order: Permutation,
}

impl FlagOrdering {
    pub fn new(order: Permutation) -> Self {
        FlagOrdering { order }
    }

    /// `E_•`.
    pub fn standard(n: usize) -> Self {
        FlagOrdering::new(Permutation::identity(n))
    }

    /// `E^opp_•`.
    pub fn opposite(n: usize) -> Self {
        FlagOrdering::new(Permutation::longest_element(n))
    }

    pub fn order(&self) -> &Permutation {
        &self.order
    }

    /// `g.F_•`.
    pub fn translate(&self, g: &Permutation) -> Result<FlagOrdering> {
        Ok(FlagOrdering::new(g.compose(&self.order)?))
    }

    pub fn step(&self, j: usize) -> SubsetPoint {
        SubsetPoint::from_mask(
            self.order.images()[..j]
                .iter()
                .fold(0, |m, &s| m | 1 << (s - 1)),
        )
    }

    pub fn is_step(&self, s: &SubsetPoint) -> bool {
        s.len() <= self.order.rank() && self.step(s.len()) == *s
    }
}

/// The Grassmannian `Gr(k, n)` of `k`-planes in `ℂ^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grassmannian {
    k: usize,
    n: usize,
}

impl Grassmannian {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if !(2..=MAX_RANK).contains(&n) {
            return Err(Error::RankOutOfRange(n));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidGrassmannian { k, n });
        }
        Ok(Grassmannian { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n − k`, the number of box columns.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    pub fn dimension(&self) -> usize {
        self.k * self.width()
    }

    /// `Gr(n−k, n)`.
    pub fn dual(&self) -> Grassmannian {
        Grassmannian {
            k: self.width(),
            n: self.n,
        }
    }

    /// `Δ∖{k}`.
    pub fn parabolic(&self) -> ParabolicSet {
        ParabolicSet::maximal(self.n, self.k).expect("k < n")
    }

    /// `W^X`, in lexicographic one-line order.
    pub fn quotient(&self) -> Vec<Permutation> {
        parabolic_quotient(self.n, &self.parabolic())
    }

    pub fn contains_partition(&self, lambda: &Partition) -> bool {
        lambda.fits_box(self.k, self.width())
    }

    pub fn check_partition(&self, lambda: &Partition) -> Result<()> {
        if self.contains_partition(lambda) {
            Ok(())
        } else {
            Err(Error::OutOfBox {
                partition: lambda.to_string(),
                rows: self.k,
                cols: self.width(),
            })
        }
    }

    /// The full box `(n−k)^k`.
    pub fn full_box(&self) -> Partition {
        Partition::rectangle(self.k, self.width())
    }

    /// All partitions in the box, in lexicographic order of parts.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .quotient()
            .iter()
            .map(|w| self.perm_to_partition(w).expect("quotient element"))
            .collect();
        out.sort();
        out
    }

    /// Every torus-fixed point, i.e. every `k`-subset of `{1..n}`.
    pub fn points(&self) -> impl Iterator<Item = SubsetPoint> {
        SubsetPoint::interval(1, self.n).subsets_of_size(self.k)
    }

    /// `λ = (w(k)−k, w(k−1)−(k−1), …, w(1)−1)` for `w ∈ W^X`.
    pub fn perm_to_partition(&self, w: &Permutation) -> Result<Partition> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.n,
            });
        }
        if !w.is_min_rep(&self.parabolic()) {
            return Err(Error::NotMinimalRepresentative {
                perm: w.to_string(),
                roots: self.parabolic().to_string(),
            });
        }
        let k = self.k;
        Partition::new((1..=k).map(|j| w.apply(k + 1 - j) - (k + 1 - j)).collect())
    }

    /// The minimal representative indexed by `λ`.
    pub fn partition_to_perm(&self, lambda: &Partition) -> Result<Permutation> {
        self.check_partition(lambda)?;
        let k = self.k;
        let mut images: Vec<usize> = (1..=k).map(|p| lambda.part(k + 1 - p) + p).collect();
        let used = SubsetPoint::from_elements(images.iter().copied())?;
        images.extend((1..=self.n).filter(|s| !used.contains(*s)));
        Permutation::new(images)
    }

    fn points_where(&self, conditions: &[(SubsetPoint, usize)]) -> FixedPoints {
        self.points()
            .filter(|s| {
                conditions
                    .iter()
                    .all(|(f, i)| s.intersection(f).len() >= *i)
            })
            .collect()
    }

    /// Fixed points of `X_λ`: `|S ∩ {1..i+λ_{k−i+1}}| ≥ i` for `i = 1..k`.
    pub fn fp_schubert_b(&self, lambda: &Partition) -> Result<FixedPoints> {
        self.check_partition(lambda)?;
        let k = self.k;
        let conditions: Vec<_> = (1..=k)
            .map(|i| (SubsetPoint::interval(1, i + lambda.part(k - i + 1)), i))
            .collect();
        Ok(self.points_where(&conditions))
    }

    /// Fixed points of `X^λ`: `|S ∩ E^opp_j| ≥ i` with `j = n−k+i−λ_i`.
    pub fn fp_schubert_bminus(&self, lambda: &Partition) -> Result<FixedPoints> {
        self.check_partition(lambda)?;
        let n = self.n;
        let conditions: Vec<_> = (1..=self.k)
            .map(|i| {
                let j = n - self.k + i - lambda.part(i);
                (SubsetPoint::interval(n - j + 1, n), i)
            })
            .collect();
        Ok(self.points_where(&conditions))
    }

    /// Transports `(λ, Gr(k,n))` to `(λᵀ, Gr(n−k,n))`. On fixed points the
    /// duality is [`Grassmannian::dual_point`].
    pub fn dual_case(&self, lambda: &Partition) -> Result<(Partition, Grassmannian)> {
        self.check_partition(lambda)?;
        Ok((lambda.conjugate(), self.dual()))
    }

    /// Complement inside `{1..n}`, then relabel `s ↦ n+1−s`.
    pub fn dual_point(&self, s: &SubsetPoint) -> SubsetPoint {
        let n = self.n;
        SubsetPoint::interval(1, n)
            .difference(s)
            .translate(&Permutation::longest_element(n))
    }

    pub fn dual_points(&self, pts: &FixedPoints) -> FixedPoints {
        pts.iter().map(|s| self.dual_point(s)).collect()
    }
}

impl fmt::Display for Grassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.k, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(k: usize, n: usize) -> Grassmannian {
        Grassmannian::new(k, n).unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pts(list: &[&str]) -> FixedPoints {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn partition_parsing_trims_zeros() {
        assert_eq!(part("(1,0)"), part("1"));
        assert_eq!(part(""), Partition::empty());
        assert_eq!(part("()"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(part("5,4,3,1").to_string(), "5,4,3,1");
    }

    #[test]
    fn perm_partition_examples() {
        let g = gr(4, 9);
        assert!(g
            .perm_to_partition(&Permutation::identity(9))
            .unwrap()
            .is_empty());
        let w: Permutation = "2,3,4,5,1,6,7,8,9".parse().unwrap();
        assert_eq!(g.perm_to_partition(&w).unwrap(), part("1,1,1,1"));
        assert_eq!(g.partition_to_perm(&part("1,1,1,1")).unwrap(), w);

        let g = gr(2, 4);
        let w: Permutation = "2,4,1,3".parse().unwrap();
        assert_eq!(g.perm_to_partition(&w).unwrap(), part("2,1"));
        assert_eq!(g.partition_to_perm(&part("2,1")).unwrap(), w);
        assert!(g
            .partition_to_perm(&Partition::empty())
            .unwrap()
            .is_identity());
        assert!(matches!(
            g.perm_to_partition(&"2,1,3,4".parse().unwrap()),
            Err(Error::NotMinimalRepresentative { .. })
        ));
        assert!(matches!(
            g.partition_to_perm(&part("3")),
            Err(Error::OutOfBox { .. })
        ));
    }

    #[test]
    fn fp_b_examples() {
        let g = gr(2, 4);
        assert_eq!(g.fp_schubert_b(&g.full_box()).unwrap().len(), 6);
        assert_eq!(g.fp_schubert_b(&Partition::empty()).unwrap(), pts(&["1,2"]));
        assert_eq!(g.fp_schubert_b(&part("1")).unwrap(), pts(&["1,2", "1,3"]));
    }

    #[test]
    fn fp_bminus_examples() {
        let g = gr(2, 4);
        assert_eq!(g.fp_schubert_bminus(&Partition::empty()).unwrap().len(), 6);
        assert_eq!(
            g.fp_schubert_bminus(&part("1")).unwrap(),
            pts(&["1,3", "1,4", "2,3", "2,4", "3,4"])
        );
        assert_eq!(
            gr(1, 2).fp_schubert_bminus(&part("1")).unwrap(),
            pts(&["2"])
        );
    }

    #[test]
    fn translate_examples() {
        let g: Permutation = "3,4,1,2".parse().unwrap();
        let p = pts(&["1,2"]);
        assert_eq!(translate_fp(&Permutation::identity(4), &p), p);
        assert_eq!(translate_fp(&g, &p), pts(&["3,4"]));
        let all: FixedPoints = gr(2, 4).points().collect();
        let some = pts(&["1,3", "2,4", "1,4"]);
        assert_eq!(translate_fp(&g.inverse(), &translate_fp(&g, &some)), some);
        assert_eq!(translate_fp(&g, &all), all);
    }

    #[test]
    fn dual_case_examples() {
        let (l, d) = gr(3, 7).dual_case(&Partition::empty()).unwrap();
        assert!(l.is_empty());
        assert_eq!(d.k(), 4);
        assert_eq!(
            gr(2, 4).dual_case(&part("2,1")).unwrap(),
            (part("2,1"), gr(2, 4))
        );
        assert_eq!(
            gr(4, 9).dual_case(&part("5,4,3,1")).unwrap(),
            (part("4,3,3,2,1"), gr(5, 9))
        );
    }

    #[test]
    fn points_are_lexicographic() {
        let p: Vec<String> = gr(2, 4).points().map(|s| s.to_string()).collect();
        assert_eq!(p, ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"]);
    }

    #[test]
    fn subset_point_basics() {
        assert_eq!(SubsetPoint::interval(3, 5).to_string(), "3,4,5");
        assert!(SubsetPoint::interval(5, 4).is_empty());
        assert!("1,1".parse::<SubsetPoint>().is_err());
        assert!("0".parse::<SubsetPoint>().is_err());
        assert_eq!("{1,3}".parse::<SubsetPoint>().unwrap().to_string(), "1,3");
    }

    #[test]
    fn flag_steps() {
        let f = FlagOrdering::opposite(4);
        assert_eq!(f.step(2).to_string(), "3,4");
        assert!(f.is_step(&"4".parse().unwrap()));
        assert!(!f.is_step(&"3".parse().unwrap()));
        assert_eq!(FlagOrdering::standard(4).step(3).to_string(), "1,2,3");
    }
}
