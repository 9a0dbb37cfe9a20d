use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use schubert_core::{
    gamma_fp, join, quantum_product, sweep, verify_case, Grassmannian, ParabolicSet, Partition,
    Permutation, SweepConfig,
};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn products(c: &mut Criterion) {
    let gr = Grassmannian::new(4, 9).unwrap();
    let (a, b) = (part("4,4,4,4"), part("5,4,3,1"));
    c.bench_function("quantum_product Gr(4,9) seidel", |bch| {
        bch.iter(|| quantum_product(black_box(&a), black_box(&b), gr).unwrap())
    });
    let gr = Grassmannian::new(4, 8).unwrap();
    let (a, b) = (part("3,2,1"), part("4,2,2,1"));
    c.bench_function("quantum_product Gr(4,8) generic", |bch| {
        bch.iter(|| quantum_product(black_box(&a), black_box(&b), gr).unwrap())
    });
}

fn neighborhoods(c: &mut Criterion) {
    let gr = Grassmannian::new(4, 8).unwrap();
    let (lb, mu) = (Partition::rectangle(4, 2), part("3,2,1"));
    c.bench_function("gamma_fp Gr(4,8) d=2", |bch| {
        bch.iter(|| gamma_fp(black_box(&lb), black_box(&mu), 2, gr).unwrap())
    });
    let u: Permutation = "2,5,7,8,1,3,4,6".parse().unwrap();
    c.bench_function("verify_case Gr(4,8) i=6", |bch| {
        bch.iter(|| verify_case(gr, 6, black_box(&u)).unwrap())
    });
}

fn joins(c: &mut Criterion) {
    let w: Permutation = "4,6,1,5,3,2".parse().unwrap();
    let dy = ParabolicSet::parse(6, "1,2,4").unwrap();
    let dz = ParabolicSet::parse(6, "2,4,5").unwrap();
    let dx = dy.intersection(&dz).unwrap();
    let (wy, wz) = (w.min_coset_rep(&dy), w.min_coset_rep(&dz));
    c.bench_function("join n=6", |bch| {
        bch.iter(|| join(black_box(&wy), black_box(&wz), &dx).unwrap())
    });
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for n_max in [5, 6] {
        let config = SweepConfig::exhaustive(n_max);
        group.bench_function(format!("exhaustive n<={n_max}"), |bch| {
            bch.iter(|| sweep(black_box(&config)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, products, neighborhoods, joins, sweeps);
criterion_main!(benches);
