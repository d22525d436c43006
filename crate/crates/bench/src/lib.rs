//! Benchmark-only crate; see `benches/methods.rs`.
