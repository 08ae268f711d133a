//! Benchmark-only crate; see `benches/pipeline.rs`. Not published.
