use criterion::{black_box, criterion_group, criterion_main, Criterion};
use thickgen::complex::koszul_on;
use thickgen::complex::random::{random_complex, RandomParams};
use thickgen::ideal::groebner::groebner;
use thickgen::{homology, smith_normal_form, strong_generation_obstruction, Field, Ideal, Matrix, MonomialOrder, Ring};

fn snf(c: &mut Criterion) {
    let z = Ring::integers();
    let rows: Vec<Vec<i64>> = (0..8).map(|i| (0..8).map(|j| ((i * 37 + j * 11) % 101) - 50).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let a = Matrix::from_i64(&z, &refs);
    c.bench_function("snf 8x8 over Z", |b| b.iter(|| smith_normal_form(black_box(&a)).unwrap()));
}

fn buchberger(c: &mut Criterion) {
    let r = Ring::multipoly(Field::Rational, &["x", "y", "z"], MonomialOrder::Grevlex).unwrap();
    let ctx = r.poly_ctx().unwrap();
    let gens: Vec<_> = ["x^2 + y*z - 2", "y^2 - x*z + 1", "z^2 + x*y - 3"]
        .iter()
        .map(|s| r.parse_elem(s).unwrap().as_multipoly().unwrap().clone())
        .collect();
    c.bench_function("groebner 3 quadrics in Q[x,y,z]", |b| b.iter(|| groebner(black_box(&gens), &ctx).unwrap()));
}

fn homology_bench(c: &mut Criterion) {
    let z = Ring::integers();
    let params = RandomParams { len: 4, max_rank: 5, ..RandomParams::default() };
    let x = random_complex(&z, 42, &params).unwrap();
    c.bench_function("homology of a random complex over Z", |b| {
        b.iter(|| x.degrees().map(|n| homology(black_box(&x), n).unwrap()).collect::<Vec<_>>())
    });
    let gens: Vec<_> = [6, 10, 15, 9].iter().map(|&g| z.from_int(g)).collect();
    let k = koszul_on(&z, &gens).unwrap();
    c.bench_function("homology of koszul(6, 10, 15, 9)", |b| {
        b.iter(|| k.degrees().map(|n| homology(black_box(&k), n).unwrap()).collect::<Vec<_>>())
    });
}

fn obstruct(c: &mut Criterion) {
    let r = Ring::multipoly(Field::Rational, &["x", "y"], MonomialOrder::Grevlex).unwrap();
    let i = Ideal::new(&r, vec![r.var(0).unwrap(), r.var(1).unwrap()]).unwrap();
    c.bench_function("obstruct (x, y) max 6", |b| b.iter(|| strong_generation_obstruction(&r, black_box(&i), 6, 1).unwrap()));
    let z = Ring::integers();
    let two = Ideal::principal(&z.from_int(2)).unwrap();
    c.bench_function("obstruct (2) over Z max 8", |b| b.iter(|| strong_generation_obstruction(&z, black_box(&two), 8, 1).unwrap()));
}

criterion_group!(benches, snf, buchberger, homology_bench, obstruct);
criterion_main!(benches);
