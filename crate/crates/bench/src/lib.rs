//! Criterion benchmarks for the solver, domination tools and strategy verifier.
//! Run with `cargo bench -p posgames-bench`.
