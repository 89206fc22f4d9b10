//! Benchmark-only crate; the timing targets live in `benches/`.
