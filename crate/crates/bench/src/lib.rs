//! Benchmarks for the exact engine and the quadrature; see `benches/engine.rs`.
//!
//! The helpers here build the inputs the benchmarks share.

use wilson_core::operators::Params;
use wilson_core::wilson::WilsonEngine;

/// A fresh engine at the default parameters, so memoization does not leak
/// between benchmark iterations.
pub fn fresh_engine(n: usize) -> WilsonEngine {
    WilsonEngine::new(n, Params::p_star())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_engine_builds_trivial_record() {
        let eng = fresh_engine(2);
        assert!(eng.record(&[0, 0]).unwrap().p.len() == 1);
    }
}
