//! Criterion benchmarks for the `thickgen` kernels live in `benches/`.
