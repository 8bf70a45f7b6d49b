//! Benchmark harness for `hlink-core`; see `benches/`.
