use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;
use su12_core::git::{classify_bruteforce, classify_closed_form};
use su12_core::local_model::{hecke_round_trip, normal_form_check, smith_form};
use su12_core::stability::census;
use su12_core::{sampling, LinearizationSpec, ModuliParams, Scalar, TruncatedSeries};

fn series(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut g = c.benchmark_group("series");
    for t in [4, 8, 12] {
        let a = sampling::small_series(&mut rng, t);
        let b =
            &TruncatedSeries::one(t) + &(&TruncatedSeries::zeta(t) * &sampling::small_series(&mut rng, t));
        g.bench_with_input(BenchmarkId::new("mul", t), &t, |bch, _| {
            bch.iter(|| black_box(&a * &b))
        });
        g.bench_with_input(BenchmarkId::new("inverse", t), &t, |bch, _| {
            bch.iter(|| black_box(b.inverse()))
        });
    }
    g.finish();
}

fn smith(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut g = c.benchmark_group("smith_form");
    for t in [2, 8, 12] {
        let phi = sampling::det_zeta_matrix(&mut rng, t);
        g.bench_with_input(BenchmarkId::from_parameter(t), &phi, |bch, phi| {
            bch.iter(|| black_box(smith_form(phi)))
        });
    }
    g.finish();
}

fn local(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let xi = sampling::covector(&mut rng);
    c.bench_function("hecke_round_trip/8", |b| {
        b.iter(|| black_box(hecke_round_trip(&xi, 8)))
    });
    let b7 = Scalar::from(7);
    c.bench_function("normal_form/8", |b| {
        b.iter(|| black_box(normal_form_check(&b7, 8)))
    });
}

fn git(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut g = c.benchmark_group("git");
    for genus in [2, 3] {
        let p = ModuliParams::new(genus, 0).unwrap();
        let spec = LinearizationSpec::from_params(&p).unwrap();
        let cfg = sampling::configuration(&mut rng, "L", p.num_points());
        g.bench_with_input(BenchmarkId::new("closed_form", p.num_points()), &cfg, |b, cfg| {
            b.iter(|| black_box(classify_closed_form(cfg, &spec)))
        });
        g.bench_with_input(
            BenchmarkId::new("bruteforce_r2", p.num_points()),
            &cfg,
            |b, cfg| b.iter(|| black_box(classify_bruteforce(cfg, &spec, 2))),
        );
    }
    g.finish();
    let mut g = c.benchmark_group("census");
    for genus in [2, 5, 10] {
        let p = ModuliParams::new(genus, 0).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(genus), &p, |b, p| {
            b.iter(|| black_box(census(p)))
        });
    }
    g.finish();
}

criterion_group!(benches, series, smith, local, git);
criterion_main!(benches);
