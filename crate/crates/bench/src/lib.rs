//! Criterion benchmarks for the kernels in `cycsyn`; see `benches/`.
