//! Criterion benchmarks for nary-core live in `benches/`.
