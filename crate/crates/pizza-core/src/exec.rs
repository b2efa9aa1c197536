//! Data-parallel execution helpers with a sequential fallback.
//!
//! Hot loops (Monte Carlo shards, per-chamber exact terms, per-pairing
//! certificate checks) run through [`map_collect`]. The default mode is
//! parallel when the `parallel` feature is enabled; the sequential path is
//! always compiled in so the two can be benchmarked against each other.

/// Execution strategy for batch work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Exec::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Exec::Sequential
    }
}

/// Apply `f` to `0..n` and collect results in index order. Output order is
/// identical for both modes, so downstream reductions are deterministic.
pub fn map_collect<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
    }
}

/// Map over a slice, preserving order.
pub fn map_slice<'a, S, T, F>(exec: Exec, items: &'a [S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&'a S) -> T + Sync + Send,
{
    match exec {
        Exec::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequential_and_default_agree() {
        let a = map_collect(Exec::Sequential, 100, |i| i * i);
        let b = map_collect(Exec::default(), 100, |i| i * i);
        assert_eq!(a, b);
    }
}
