//! Criterion benchmarks for galois-core live in `benches/engine.rs`.
