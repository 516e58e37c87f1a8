//! Criterion benchmarks for the exact engine; see `benches/engine.rs`.
