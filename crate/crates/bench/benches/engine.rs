use criterion::{black_box, criterion_group, criterion_main, Criterion};
use psho_core::biortho::{gram, normalization};
use psho_core::fock::{wick_inner, CreationPolynomial};
use psho_core::jordan::{build_block_direct, build_state, JordanLabel};
use psho_core::operators::catalogue::{hamiltonian, named};

fn weyl_products(c: &mut Criterion) {
    let h = hamiltonian();
    let y = named("Y").unwrap();
    c.bench_function("commutator [H,[H,Y]]", |b| b.iter(|| black_box(&h).commutator(&h.commutator(black_box(&y)))));
    let r3 = named("R3").unwrap();
    let r2 = named("R2").unwrap();
    c.bench_function("commutator [R2,R3]", |b| b.iter(|| black_box(&r2).commutator(black_box(&r3))));
}

fn states(c: &mut Criterion) {
    c.bench_function("closed-form state (1,2,3)", |b| {
        b.iter(|| build_state(black_box(JordanLabel::new(1, 2, 3).unwrap())))
    });
    c.bench_function("direct block (1,2)", |b| b.iter(|| build_block_direct(black_box(1), black_box(2))));
}

fn pairings(c: &mut Criterion) {
    let s = build_state(JordanLabel::new(1, 2, 4).unwrap()).creation;
    let t: CreationPolynomial = build_state(JordanLabel::new(1, 2, 0).unwrap()).creation;
    c.bench_function("wick pairing (1,2,4)|(1,2,0)", |b| b.iter(|| wick_inner(black_box(&s), black_box(&t))));
    c.bench_function("gram block (0,3)", |b| b.iter(|| gram(black_box(0), black_box(3))));
    c.bench_function("normalization N(2,2)", |b| b.iter(|| normalization(black_box(2), black_box(2))));
}

criterion_group!(benches, weyl_products, states, pairings);
criterion_main!(benches);
