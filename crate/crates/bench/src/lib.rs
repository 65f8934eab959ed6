//! Benchmarks for the darja pipeline live in `benches/`.
