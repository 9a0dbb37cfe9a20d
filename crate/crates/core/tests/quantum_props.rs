use schubert_core::{
    classical_product, lr_coeff, quantum_product, seidel_degree, seidel_product_check,
    Grassmannian, Partition, QClass,
};

fn gr(k: usize, n: usize) -> Grassmannian {
    Grassmannian::new(k, n).unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn grassmannians(n_max: usize) -> impl Iterator<Item = Grassmannian> {
    (2..=n_max).flat_map(|n| (1..n).map(move |k| gr(k, n)))
}

/// Standard Young tableaux count through the hook length formula.
fn hook_count(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut hooks = 1u128;
    for (r, &row) in lambda.parts().iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = conj.part(c + 1) - r - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=lambda.size() as u128).product::<u128>() / hooks
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn small_partitions(max_size: usize, max_rows: usize) -> Vec<Partition> {
    fn go(
        rem: usize,
        max_part: usize,
        rows: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::new(cur.clone()).unwrap());
        if rows == 0 {
            return;
        }
        for p in 1..=max_part.min(rem) {
            cur.push(p);
            go(rem - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_size, max_size, max_rows, &mut Vec::new(), &mut out);
    out
}

#[test]
fn lr_coefficients_satisfy_the_dimension_identity() {
    // Σ_ν c^ν_{λμ} f^ν = C(|λ|+|μ|, |λ|) f^λ f^μ
    let shapes = small_partitions(5, 4);
    for lambda in &shapes {
        for mu in &shapes {
            let rows = lambda.num_rows() + mu.num_rows();
            let cols = lambda.part(1) + mu.part(1);
            if rows == 0 || cols == 0 || rows + cols > 16 {
                continue;
            }
            let big = gr(rows, rows + cols);
            let product = classical_product(lambda, mu, big).unwrap();
            let lhs: u128 = product
                .terms()
                .map(|t| t.coeff as u128 * hook_count(&t.partition))
                .sum();
            let rhs = binomial(lambda.size() + mu.size(), lambda.size())
                * hook_count(lambda)
                * hook_count(mu);
            assert_eq!(lhs, rhs, "{lambda:?} * {mu:?}");
        }
    }
}

#[test]
fn lr_coefficients_are_symmetric() {
    let shapes = small_partitions(4, 3);
    for lambda in &shapes {
        for mu in &shapes {
            for nu in small_partitions(lambda.size() + mu.size(), 6) {
                if nu.size() == lambda.size() + mu.size() {
                    assert_eq!(lr_coeff(lambda, mu, &nu), lr_coeff(mu, lambda, &nu));
                }
            }
        }
    }
}

/// Classical Pieri: ν/λ a horizontal strip of size p.
fn is_horizontal_strip(nu: &Partition, lambda: &Partition) -> bool {
    nu.contains(lambda) && (1..=nu.num_rows()).all(|i| nu.part(i + 1) <= lambda.part(i))
}

/// Quantum Pieri rule for `σ_p ⋆ σ_λ`, independent of the rim-hook code:
/// the classical horizontal strips plus `q·σ_μ` for every `μ` with
/// `λ_1−1 ≥ μ_1 ≥ λ_2−1 ≥ μ_2 ≥ … ≥ λ_k−1 ≥ μ_k ≥ 0`.
fn quantum_pieri(p: usize, lambda: &Partition, g: Grassmannian) -> QClass {
    let (k, n) = (g.k(), g.n());
    let mut out = QClass::zero(g);
    for nu in g.partitions() {
        if nu.size() == lambda.size() + p && is_horizontal_strip(&nu, lambda) {
            out.insert(nu.clone(), 0, 1).unwrap();
        }
        let interlaces = lambda.part(k) >= 1
            && (1..=k).all(|i| {
                nu.part(i) < lambda.part(i) && (i == k || nu.part(i) + 1 >= lambda.part(i + 1))
            });
        if lambda.size() + p >= n && nu.size() == lambda.size() + p - n && interlaces {
            out.insert(nu, 1, 1).unwrap();
        }
    }
    out
}

#[test]
fn quantum_pieri_agrees_with_rim_hooks() {
    for g in grassmannians(8) {
        for p in 1..=g.width() {
            let row = Partition::rectangle(1, p);
            for lambda in g.partitions() {
                assert_eq!(
                    quantum_product(&row, &lambda, g).unwrap(),
                    quantum_pieri(p, &lambda, g),
                    "{g}: ({p}) * {lambda:?}"
                );
            }
        }
    }
}

#[test]
fn quantum_product_is_commutative_and_graded() {
    for g in grassmannians(6) {
        let parts = g.partitions();
        for a in &parts {
            for b in &parts {
                let ab = quantum_product(a, b, g).unwrap();
                assert_eq!(ab, quantum_product(b, a, g).unwrap());
                assert!(ab.is_homogeneous_of(a.size() + b.size()), "{g} {a:?} {b:?}");
            }
        }
    }
}

#[test]
fn quantum_product_is_associative() {
    for g in grassmannians(6) {
        let parts = g.partitions();
        // every third triple keeps the run short while touching all shapes
        let mut idx = 0usize;
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    idx += 1;
                    if !idx.is_multiple_of(3) {
                        continue;
                    }
                    let (a, b, c) = (
                        QClass::schubert(g, a.clone()).unwrap(),
                        QClass::schubert(g, b.clone()).unwrap(),
                        QClass::schubert(g, c.clone()).unwrap(),
                    );
                    assert_eq!(
                        a.mul(&b).unwrap().mul(&c).unwrap(),
                        a.mul(&b.mul(&c).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn poincare_pairing() {
    for g in grassmannians(8) {
        let full = g.full_box();
        for lambda in g.partitions() {
            let dual = lambda.rotate_complement(g.k(), g.width());
            for mu in g.partitions() {
                if mu.size() + lambda.size() != g.dimension() {
                    continue;
                }
                let expected = i64::from(mu == dual);
                assert_eq!(
                    classical_product(&lambda, &mu, g)
                        .unwrap()
                        .coefficient(&full, 0),
                    expected
                );
            }
        }
    }
}

#[test]
fn seidel_products_are_single_terms() {
    for g in grassmannians(8) {
        for w in g.quotient() {
            for i in 0..g.n() {
                let check = seidel_product_check(&w, i, g).unwrap();
                assert!(check.pass, "{g} i={i} u={w:?}: {:?}", check.product);
                assert_eq!(check.product.min_q_degree().unwrap(), check.d);
            }
        }
    }
}

#[test]
fn seidel_degree_is_the_longest_diagonal() {
    // overlap λ′ = λ minus its first β−k columns; d = longest NW-SE diagonal
    for g in grassmannians(8) {
        for beta in g.k()..g.n() {
            for lambda in g.partitions() {
                let shift = beta - g.k();
                let overlap: Vec<usize> = lambda
                    .parts()
                    .iter()
                    .map(|p| p.saturating_sub(shift))
                    .collect();
                // a diagonal of length m fits iff the m-th row of λ′ has ≥ m boxes
                let diagonal = (1..=g.k())
                    .take_while(|&m| overlap.get(m - 1).copied().unwrap_or(0) >= m)
                    .count();
                assert_eq!(seidel_degree(&lambda, beta, g).unwrap(), diagonal);
            }
        }
    }
}

#[test]
fn gr49_seidel_degree() {
    let g = gr(4, 9);
    let lambda = part("5,4,3,1");
    assert_eq!(seidel_degree(&lambda, 5, g).unwrap(), 2);
    let product = quantum_product(&part("4,4,4,4"), &lambda, g).unwrap();
    assert_eq!(product.min_q_degree().unwrap(), 2);
    assert_eq!(product.len(), 1);
}
