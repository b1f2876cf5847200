use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use schubert_bench::{basis_of_weight, staircase};
use schubert_core::{lr_oracle, multiply, PartitionBox, SchubertClass};

fn products(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiply");
    for (d, n) in [(1, 5), (2, 6), (2, 7), (3, 8)] {
        let frame = PartitionBox::grassmannian(d, n).unwrap();
        let a = SchubertClass::basis(staircase(frame));
        let b = SchubertClass::basis(staircase(frame));
        group.bench_with_input(BenchmarkId::new("giambelli", frame), &(a, b), |bch, (a, b)| {
            bch.iter(|| multiply(black_box(a), black_box(b)).unwrap())
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("lr_oracle");
    for (d, n) in [(1, 5), (2, 6), (2, 7)] {
        let frame = PartitionBox::grassmannian(d, n).unwrap();
        let s = staircase(frame);
        group.bench_with_input(BenchmarkId::new("tableaux", frame), &s, |bch, s| {
            bch.iter(|| lr_oracle(black_box(s), black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn pieri(c: &mut Criterion) {
    let mut group = c.benchmark_group("pieri");
    for (d, n) in [(2, 7), (3, 9), (4, 11)] {
        let frame = PartitionBox::grassmannian(d, n).unwrap();
        let classes = basis_of_weight(d, n, frame.cells() / 2);
        let sum = classes
            .iter()
            .fold(SchubertClass::zero(frame), |acc, c| acc.add(c).unwrap());
        let m = frame.width() / 2;
        group.bench_with_input(BenchmarkId::new("sigma_m", frame), &sum, |bch, s| {
            bch.iter(|| black_box(s).pieri(m).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, products, oracle, pieri);
criterion_main!(benches);
