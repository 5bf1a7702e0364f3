use criterion::{black_box, criterion_group, criterion_main, Criterion};

use btk_bench::{bundle, disguised_sum, presentation};
use btk_core::algebra::field::PrimeField;
use btk_core::cohomology::bundle::BundleOnP;
use btk_core::cohomology::ext::ext1_table;
use btk_core::cohomology::table::{coh_table, coh_table_slices};
use btk_core::criteria::horrocks_test;
use btk_core::syzygy::resolution::free_resolution;
use btk_core::tower::{babylonian_pipeline, AmbientSplit, PipelineOptions};

fn resolutions(c: &mut Criterion) {
    let mut g = c.benchmark_group("resolution");
    for (n, name) in [(2, "tangent+O:1"), (3, "nullcorr"), (3, "cotangent")] {
        let (r, phi) = presentation(n, name);
        g.bench_function(format!("{name} on P{n}"), |b| b.iter(|| free_resolution(&r, black_box(&phi)).unwrap()));
    }
    g.finish();
}

fn cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomology");
    let t3 = bundle(3, "tangent");
    g.bench_function("series route, tangent on P3", |b| b.iter(|| coh_table(black_box(&t3)).unwrap()));
    g.bench_function("slice route, tangent on P3", |b| b.iter(|| coh_table_slices(black_box(&t3), -6, 3).unwrap()));
    let nc = bundle(3, "nullcorr");
    g.bench_function("ext1, null correlation", |b| b.iter(|| ext1_table(black_box(&nc)).unwrap()));
    g.finish();
}

fn criteria(c: &mut Criterion) {
    let (r, phi) = disguised_sum(3, &[-1, 0, 2], 3, 11);
    c.bench_function("horrocks on a disguised sum", |b| {
        b.iter(|| horrocks_test(&BundleOnP::new(&r, black_box(&phi)).unwrap()).unwrap())
    });
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    let k = PrimeField::default();
    for (n, m, name) in [(2, 1, "tangent"), (2, 2, "sum:-1,1")] {
        let a = AmbientSplit::new(n, m).unwrap();
        let phi = btk_core::catalog::build(&a.big(&k), name).unwrap();
        let opts = PipelineOptions { seed: 1, i_max: None };
        g.bench_function(format!("{name} with n={n} m={m}"), |b| {
            b.iter(|| babylonian_pipeline(&a, black_box(&phi), &k, opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, resolutions, cohomology, criteria, pipeline);
criterion_main!(benches);
