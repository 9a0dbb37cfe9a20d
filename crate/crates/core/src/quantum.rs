//! Small quantum cohomology of `Gr(k, n)`.
//!
//! Products are first expanded classically with Littlewood–Richardson
//! coefficients over partitions with at most `k` rows, then reduced into
//! the box by stripping `n`-rim hooks. Each stripped hook contributes one
//! power of `q` and the sign `(−1)^(k − height)`. `q` has complex degree
//! `n`, so every term `q^d [ν]` of `[λ] ⋆ [μ]` has `|ν| + d·n = |λ| + |μ|`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{Grassmannian, Partition};
use crate::weyl::Permutation;

/// Littlewood–Richardson coefficient `c^ν_{λμ}`: the number of semistandard
/// fillings of `ν/λ` with content `μ` whose reverse reading word is a
/// lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let mut filler = LrFiller::new(lambda, mu, nu);
    filler.count(0)
}

struct LrFiller<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    // skew cells in reading order: rows top to bottom, each right to left
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl<'a> LrFiller<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: &'a Partition) -> Self {
        let rows = nu.num_rows();
        let cells = (0..rows)
            .flat_map(|r| {
                (lambda.part(r + 1)..nu.part(r + 1))
                    .rev()
                    .map(move |c| (r, c))
            })
            .collect();
        LrFiller {
            lambda,
            mu,
            nu,
            cells,
            grid: (0..rows).map(|r| vec![0; nu.part(r + 1)]).collect(),
            counts: vec![0; mu.num_rows() + 1],
        }
    }

    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let hi = if c + 1 < self.nu.part(r + 1) {
            self.grid[r][c + 1]
        } else {
            self.mu.num_rows()
        };
        let lo = if r > 0 && c >= self.lambda.part(r) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let lattice_ok = v == 1 || self.counts[v] < self.counts[v - 1];
            if self.counts[v] < self.mu.part(v) && lattice_ok {
                self.counts[v] += 1;
                self.grid[r][c] = v;
                total += self.count(idx + 1);
                self.counts[v] -= 1;
            }
        }
        self.grid[r][c] = 0;
        total
    }
}

/// `s_λ · s_μ` in `max_rows` variables, with unbounded width.
fn schur_product(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    fn candidates(
        row: usize,
        max_rows: usize,
        prev: usize,
        remaining: usize,
        lambda: &Partition,
        mu: &Partition,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            if (row..=max_rows).all(|r| lambda.part(r) == 0 && mu.part(r) == 0) {
                out.push(Partition::new(parts.clone()).expect("decreasing"));
            }
            return;
        }
        if row > max_rows {
            return;
        }
        let lo = lambda.part(row).max(mu.part(row)).max(1);
        let hi = prev.min(remaining);
        for part in (lo..=hi).rev() {
            if remaining - part > part * (max_rows - row) {
                break;
            }
            parts.push(part);
            candidates(
                row + 1,
                max_rows,
                part,
                remaining - part,
                lambda,
                mu,
                parts,
                out,
            );
            parts.pop();
        }
    }

    if lambda.num_rows() > max_rows || mu.num_rows() > max_rows {
        return BTreeMap::new();
    }
    let mut shapes = Vec::new();
    candidates(
        1,
        max_rows,
        lambda.part(1) + mu.part(1),
        lambda.size() + mu.size(),
        lambda,
        mu,
        &mut Vec::new(),
        &mut shapes,
    );
    shapes
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coeff(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// One term `coeff · q^q · [partition]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTerm {
    pub partition: Partition,
    pub q: usize,
    pub coeff: i64,
}

/// An element of `QH(Gr(k, n))` in the Schubert basis.
#[derive(Clone, PartialEq, Eq)]
pub struct QClass {
    gr: Grassmannian,
    terms: BTreeMap<(Partition, usize), i64>,
}

impl QClass {
    pub fn zero(gr: Grassmannian) -> Self {
        QClass {
            gr,
            terms: BTreeMap::new(),
        }
    }

    pub fn schubert(gr: Grassmannian, lambda: Partition) -> Result<Self> {
        gr.check_partition(&lambda)?;
        let mut class = QClass::zero(gr);
        class.add_term(lambda, 0, 1);
        Ok(class)
    }

    pub fn from_terms(gr: Grassmannian, terms: impl IntoIterator<Item = QTerm>) -> Result<Self> {
        let mut class = QClass::zero(gr);
        for t in terms {
            class.insert(t.partition, t.q, t.coeff)?;
        }
        Ok(class)
    }

    /// Adds `coeff · q^q [λ]`.
    pub fn insert(&mut self, lambda: Partition, q: usize, coeff: i64) -> Result<()> {
        self.gr.check_partition(&lambda)?;
        self.add_term(lambda, q, coeff);
        Ok(())
    }

    pub fn grassmannian(&self) -> Grassmannian {
        self.gr
    }

    fn add_term(&mut self, lambda: Partition, q: usize, coeff: i64) {
        let key = (lambda, q);
        let total = self.terms.get(&key).copied().unwrap_or(0) + coeff;
        if total == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, total);
        }
    }

    /// Terms in canonical order: partition (lexicographic), then `q`.
    pub fn terms(&self) -> impl Iterator<Item = QTerm> + '_ {
        self.terms.iter().map(|((partition, q), &coeff)| QTerm {
            partition: partition.clone(),
            q: *q,
            coeff,
        })
    }

    pub fn coefficient(&self, lambda: &Partition, q: usize) -> i64 {
        self.terms.get(&(lambda.clone(), q)).copied().unwrap_or(0)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn min_q_degree(&self) -> Result<usize> {
        self.terms
            .keys()
            .map(|(_, q)| *q)
            .min()
            .ok_or(Error::ZeroClass)
    }

    /// True when every term has complex degree `|ν| + q·n == degree`.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms
            .keys()
            .all(|(nu, q)| nu.size() + q * self.gr.n() == degree)
    }

    /// Bilinear extension of [`quantum_product`].
    pub fn mul(&self, other: &QClass) -> Result<QClass> {
        if self.gr != other.gr {
            return Err(Error::RankMismatch {
                left: self.gr.n(),
                right: other.gr.n(),
            });
        }
        let mut out = QClass::zero(self.gr);
        for ((a, qa), ca) in &self.terms {
            for ((b, qb), cb) in &other.terms {
                for t in quantum_product(a, b, self.gr)?.terms() {
                    out.add_term(t.partition, t.q + qa + qb, t.coeff * ca * cb);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "q^{} * [({})] x{}", t.q, t.partition, t.coeff)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{ ", self.gr)?;
        for t in self.terms() {
            write!(f, "{}·q^{}[{:?}] ", t.coeff, t.q, t.partition)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for QClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms())
    }
}

/// The `q⁰` part: `Σ_ν c^ν_{λμ} [ν]` over `ν` inside the box.
pub fn classical_product(lambda: &Partition, mu: &Partition, gr: Grassmannian) -> Result<QClass> {
    gr.check_partition(lambda)?;
    gr.check_partition(mu)?;
    let mut out = QClass::zero(gr);
    for (nu, c) in schur_product(lambda, mu, gr.k()) {
        if gr.contains_partition(&nu) {
            out.add_term(nu, 0, c as i64);
        }
    }
    Ok(out)
}

/// Strips `n`-rim hooks from `ν` (at most `k` rows) using `k` beta-numbers
/// `ν_j + k − j`; a hook removal lowers one beta-number by `n`. Returns the
/// core, the number of hooks and the accumulated sign, or `None` when the
/// core leaves the box.
fn reduce_rim_hooks(nu: &Partition, gr: Grassmannian) -> Option<(Partition, usize, i64)> {
    let (k, n) = (gr.k(), gr.n());
    if nu.num_rows() > k {
        return None;
    }
    let mut beta: Vec<usize> = (1..=k).map(|j| nu.part(j) + k - j).collect();
    let mut hooks = 0;
    let mut sign = 1i64;
    while let Some(pos) = beta
        .iter()
        .position(|&b| b >= n && !beta.contains(&(b - n)))
    {
        let b = beta[pos];
        let height = 1 + beta.iter().filter(|&&x| x > b - n && x < b).count();
        if (k - height) % 2 == 1 {
            sign = -sign;
        }
        beta[pos] = b - n;
        beta.sort_unstable_by(|a, b| b.cmp(a));
        hooks += 1;
    }
    let core = Partition::new((1..=k).map(|j| beta[j - 1] - (k - j)).collect()).ok()?;
    gr.contains_partition(&core).then_some((core, hooks, sign))
}

/// `[X^λ] ⋆ [X^μ]` in `QH(Gr(k, n))`.
pub fn quantum_product(lambda: &Partition, mu: &Partition, gr: Grassmannian) -> Result<QClass> {
    gr.check_partition(lambda)?;
    gr.check_partition(mu)?;
    let mut out = QClass::zero(gr);
    for (nu, c) in schur_product(lambda, mu, gr.k()) {
        if let Some((core, d, sign)) = reduce_rim_hooks(&nu, gr) {
            out.add_term(core, d, sign * c as i64);
        }
    }
    Ok(out)
}

fn check_seidel_root(beta: usize, gr: Grassmannian) -> Result<()> {
    if beta < gr.k() || beta >= gr.n() {
        return Err(Error::RootOutOfRange {
            root: beta,
            min: gr.k(),
            max: gr.n() - 1,
        });
    }
    Ok(())
}

/// `d = max({0} ∪ {j : λ_j − (β − k) ≥ j})`, for `k ≤ β ≤ n−1`.
pub fn seidel_degree(lambda: &Partition, beta: usize, gr: Grassmannian) -> Result<usize> {
    check_seidel_root(beta, gr)?;
    gr.check_partition(lambda)?;
    let k = gr.k();
    Ok((1..=k)
        .filter(|&j| lambda.part(j) + k >= beta + j)
        .max()
        .unwrap_or(0))
}

/// `(n−β)^k`, the class of `X_{w₀w} = X_{(β−k)^k}` for `w = w^β`.
pub fn seidel_class(beta: usize, gr: Grassmannian) -> Result<Partition> {
    check_seidel_root(beta, gr)?;
    Ok(Partition::rectangle(gr.k(), gr.n() - beta))
}

/// The Grassmannian and root in which the Seidel element `w^i` acts with
/// `β ≥ k`. Roots `i < k` are moved to `Gr(n−k, n)` with `β = n − i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeidelFrame {
    pub original: Grassmannian,
    pub working: Grassmannian,
    pub beta: usize,
    pub dualized: bool,
}

impl SeidelFrame {
    /// `None` for `i = 0` (the identity element has no root).
    pub fn new(gr: Grassmannian, i: usize) -> Result<Option<Self>> {
        let n = gr.n();
        if i >= n {
            return Err(Error::RootOutOfRange {
                root: i,
                min: 0,
                max: n - 1,
            });
        }
        Ok((i > 0).then(|| {
            if i >= gr.k() {
                SeidelFrame {
                    original: gr,
                    working: gr,
                    beta: i,
                    dualized: false,
                }
            } else {
                SeidelFrame {
                    original: gr,
                    working: gr.dual(),
                    beta: n - i,
                    dualized: true,
                }
            }
        }))
    }

    /// Moves a partition of the original Grassmannian into the working one.
    pub fn to_working(&self, lambda: &Partition) -> Partition {
        if self.dualized {
            lambda.conjugate()
        } else {
            lambda.clone()
        }
    }
}

/// Outcome of checking `[X^w] ⋆ [X^u] = q^d [X^{wu}]` for `w = w^i`.
#[derive(Clone, Debug, Serialize)]
pub struct SeidelProductCheck {
    /// Degree from the closed formula (0 when `i = 0`).
    pub d: usize,
    /// `λ((wu)^X)` in the original Grassmannian.
    pub target: Partition,
    pub beta: Option<usize>,
    pub dualized: bool,
    /// The product, computed in the working Grassmannian.
    pub product: QClass,
    pub single_term: bool,
    pub degree_match: bool,
    pub partition_match: bool,
    pub pass: bool,
}

pub fn seidel_product_check(
    u: &Permutation,
    i: usize,
    gr: Grassmannian,
) -> Result<SeidelProductCheck> {
    let w = Permutation::seidel_element(gr.n(), i)?;
    let parabolic = gr.parabolic();
    let ux = u.min_coset_rep(&parabolic);
    let lambda = gr.perm_to_partition(&ux)?;
    let target = gr.perm_to_partition(&w.compose(&ux)?.min_coset_rep(&parabolic))?;

    let frame = SeidelFrame::new(gr, i)?;
    let (working, class, lambda_w, target_w, d) = match frame {
        None => (gr, Partition::empty(), lambda, target.clone(), 0),
        Some(f) => {
            let lambda_w = f.to_working(&lambda);
            let d = seidel_degree(&lambda_w, f.beta, f.working)?;
            (
                f.working,
                seidel_class(f.beta, f.working)?,
                lambda_w,
                f.to_working(&target),
                d,
            )
        }
    };
    let product = quantum_product(&class, &lambda_w, working)?;
    let single_term = product.len() == 1;
    let first = product.terms().next();
    let degree_match = first.as_ref().is_some_and(|t| t.q == d);
    let partition_match = first
        .as_ref()
        .is_some_and(|t| t.partition == target_w && t.coeff == 1);
    Ok(SeidelProductCheck {
        d,
        target,
        beta: frame.map(|f| f.beta),
        dualized: frame.is_some_and(|f| f.dualized),
        product,
        single_term,
        degree_match,
        partition_match,
        pass: single_term && degree_match && partition_match,
    })
}
