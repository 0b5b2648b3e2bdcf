use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use lattice_ramsey::lattice::{enumerate_congruences, enumerate_surjective_homomorphisms};
use lattice_ramsey::lemmas::run_lemma_suite;
use lattice_ramsey::ordered::{enumerate_positive_surjections, OrderedLattice};
use lattice_ramsey::poset::enumerate_posets_up_to_iso;
use lattice_ramsey::ramsey::{arrow_holds_hom, find_ramsey_witness};
use lattice_ramsey::{DistLattice, Flavor, LinearOrderedPoset, Object, Poset, SearchConfig};
use lattice_ramsey_bench::posets_up_to;

fn posets(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_posets");
    for n in [4, 5, 6] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_posets_up_to_iso(n).unwrap())
        });
    }
    g.finish();
}

fn lattices(c: &mut Criterion) {
    let mut g = c.benchmark_group("congruences_boolean");
    for atoms in [3, 4, 5] {
        let l = DistLattice::boolean(atoms);
        g.bench_with_input(BenchmarkId::from_parameter(atoms), &l, |b, l| b.iter(|| enumerate_congruences(l).unwrap()));
    }
    g.finish();

    let l = DistLattice::boolean(4);
    let k = DistLattice::boolean(2);
    c.bench_function("surjections_b16_b4", |b| b.iter(|| enumerate_surjective_homomorphisms(black_box(&l), &k)));
    let (lo, ko) = (OrderedLattice::new(l.clone(), &[0, 1, 2, 3]).unwrap(), OrderedLattice::new(k, &[0, 1]).unwrap());
    c.bench_function("positive_surjections_b16_b4", |b| b.iter(|| enumerate_positive_surjections(black_box(&lo), &ko)));
}

fn lemma_suite(c: &mut Criterion) {
    let ps = posets_up_to(3);
    c.bench_function("lemma_suite_up_to_3", |b| b.iter(|| run_lemma_suite(black_box(&ps)).unwrap()));
}

fn ramsey(c: &mut Criterion) {
    let cfg = SearchConfig::default();
    let (point, chain2) = (LinearOrderedPoset::chain(1), LinearOrderedPoset::chain(2));
    c.bench_function("witness_chain2_point", |b| b.iter(|| find_ramsey_witness(&chain2, &point, 2, 4, &cfg).unwrap()));

    let a = Object::Poset(Poset::antichain(2));
    let mut g = c.benchmark_group("antichain_arrow");
    for n in [3, 4] {
        let co = Object::Poset(Poset::antichain(n));
        for workers in [1, 4] {
            let cfg = SearchConfig { workers, ..SearchConfig::default() };
            g.bench_with_input(BenchmarkId::new(format!("workers{workers}"), n), &co, |b, co| {
                b.iter(|| arrow_holds_hom(Flavor::PosetEmb, co, &a, &a, 2, &cfg).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, posets, lattices, lemma_suite, ramsey);
criterion_main!(benches);
