//! Criterion benchmarks for eulergram; see `benches/`.
