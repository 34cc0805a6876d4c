use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use inull_core::catalog;
use inull_core::cecohom::{self, Coefficients};
use inull_core::koszul;
use inull_core::rootkit::{self, RootSystem, RootType};

fn invariant_forms_f4(c: &mut Criterion) {
    let f4 = catalog::get("f4plus").expect("f4plus");
    c.bench_function("invariant_forms f4plus", |b| b.iter(|| koszul::invariant_forms(black_box(&f4))));
    c.bench_function("koszul analyze f4plus", |b| b.iter(|| koszul::analyze(black_box(&f4))));
}

fn property_p_e8(c: &mut Criterion) {
    let e8 = RootSystem::new(RootType::E, 8).expect("E8");
    c.bench_function("property_p E8", |b| b.iter(|| rootkit::property_p(black_box(&e8))));
}

fn betti_g2(c: &mut Criterion) {
    let g2 = catalog::get("g2plus").expect("g2plus");
    c.bench_function("adjoint betti g2plus", |b| b.iter(|| cecohom::betti(black_box(&g2), Coefficients::Adjoint)));
}

criterion_group!(benches, invariant_forms_f4, property_p_e8, betti_g2);
criterion_main!(benches);
