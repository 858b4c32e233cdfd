use criterion::{criterion_group, criterion_main, Criterion};
use qfusion::fusion::restricted_hall_littlewood;
use qfusion::llt::llt_cospin;
use qfusion::partition;

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

fn enumeration(c: &mut Criterion) {
    let shape = partition![6, 6, 6, 3, 3, 3];
    let column = qfusion::Partition::column(14);
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    for (label, threads) in [("sequential", 1), ("parallel", 0)] {
        let pool = pool(threads);
        group.bench_function(format!("llt_666333/{label}"), |b| {
            b.iter(|| pool.install(|| llt_cospin(&shape, 3, 4).unwrap()))
        });
        group.bench_function(format!("restricted_hl_1^14/{label}"), |b| {
            b.iter(|| pool.install(|| restricted_hall_littlewood(&column, 2, 2).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
