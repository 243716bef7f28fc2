//! Engine benchmarks: stabilizer-chain construction, set-wise stabilizer
//! backtracking, transporter walks, and a witness search.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use socle::action::k_subset_action;
use socle::backtrack::{setwise_stabilizer, transporter};
use socle::binary::{witness_search, SearchStrategy};
use socle::group::StabilizerChain;
use socle::PermutationGroup;

fn chain_build(c: &mut Criterion) {
    let sym20 = PermutationGroup::symmetric(20);
    let gens = sym20.generators().to_vec();
    c.bench_function("chain_build_sym20", |b| {
        b.iter(|| {
            let chain = StabilizerChain::build(20, black_box(&gens), &[], None);
            black_box(chain.order())
        })
    });
    let act = k_subset_action(&PermutationGroup::symmetric(10), 2).unwrap();
    let gens = act.group.generators().to_vec();
    c.bench_function("chain_build_pairs10", |b| {
        b.iter(|| {
            let chain = StabilizerChain::build(45, black_box(&gens), &[], None);
            black_box(chain.order())
        })
    });
}

fn setwise(c: &mut Criterion) {
    let act = k_subset_action(&PermutationGroup::symmetric(10), 2).unwrap();
    let lambda: Vec<u32> = (0..9).collect();
    c.bench_function("setwise_stabilizer_pairs10", |b| {
        b.iter(|| black_box(setwise_stabilizer(&act.group, black_box(&lambda)).order()))
    });
}

fn transport(c: &mut Criterion) {
    let alt = PermutationGroup::alternating(30);
    let i: Vec<u32> = (0..10).collect();
    let j: Vec<u32> = (5..15).collect();
    c.bench_function("transporter_alt30", |b| {
        b.iter(|| black_box(transporter(&alt, black_box(&i), black_box(&j)).unwrap()))
    });
}

fn witness(c: &mut Criterion) {
    let act = k_subset_action(&PermutationGroup::alternating(7), 2).unwrap();
    c.bench_function("witness_search_pairs_alt7", |b| {
        b.iter(|| black_box(witness_search(&act.group, SearchStrategy::TripleOrbit, u64::MAX)))
    });
}

criterion_group!(benches, chain_build, setwise, transport, witness);
criterion_main!(benches);
