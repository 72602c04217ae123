use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use qgroth::{
    build_slice, fundamental_qt_character, CartanData, QuantumSeed, QuantumTorus, TorusElement,
};

fn characters(c: &mut Criterion) {
    let a2 = Arc::new(CartanData::from_label("A2").unwrap());
    let d4 = Arc::new(CartanData::from_label("D4").unwrap());
    c.bench_function("chi A2 (1,0)", |b| {
        b.iter(|| fundamental_qt_character(&a2, 1, black_box(0), None).unwrap())
    });
    c.bench_function("chi D4 (2,1)", |b| {
        b.iter(|| fundamental_qt_character(&d4, 2, black_box(1), None).unwrap())
    });
}

fn seeds(c: &mut Criterion) {
    let d4 = Arc::new(CartanData::from_label("D4").unwrap());
    let slice = build_slice(&d4, 2).unwrap();
    let seed = QuantumSeed::initial(Arc::clone(&d4), slice.clone()).unwrap();
    let path: Vec<_> = slice.exchangeable().into_iter().take(6).collect();
    c.bench_function("D4 N=2 six mutations", |b| {
        b.iter(|| seed.mutate_along(black_box(&path)).unwrap())
    });
    c.bench_function("D4 N=2 matrix mutation", |b| {
        b.iter(|| slice.b_matrix().mutate(black_box(3)).unwrap())
    });
}

fn torus(c: &mut Criterion) {
    let d4 = Arc::new(CartanData::from_label("D4").unwrap());
    let torus = QuantumTorus::new(Arc::clone(&d4));
    let x = fundamental_qt_character(&d4, 2, 1, None).unwrap().value;
    let y = fundamental_qt_character(&d4, 1, 0, None).unwrap().value;
    c.bench_function("D4 character product", |b| {
        b.iter(|| torus.multiply(black_box(&x), black_box(&y)))
    });
    let z: TorusElement = x.clone();
    c.bench_function("D4 bar involution", |b| b.iter(|| black_box(&z).bar()));
}

criterion_group!(benches, characters, seeds, torus);
criterion_main!(benches);
