//! Criterion benchmarks for `srmult-core`; see `benches/`.
