//! Bench-only package; see `benches/core.rs`.
