//! Criterion benchmarks for the trace-codes enumeration paths; see `benches/`.
