//! Criterion benchmarks for the edgereg engine; see `benches/`.
