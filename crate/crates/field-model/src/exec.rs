//! Execution-mode plumbing for the compute kernels.
//!
//! All data-parallel loops in this workspace funnel through the helpers here.
//! With the `parallel` feature (on by default) they run on the rayon thread
//! pool; without it, or after [`set_sequential`]`(true)`, they run serially.
//! Every helper assigns work items to outputs deterministically and performs
//! no cross-item reductions, so parallel and sequential execution produce
//! bit-identical results.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces sequential execution at runtime (used by benchmarks and by
/// single-threaded command-line runs). No-op effect when the `parallel`
/// feature is disabled, which is always sequential.
pub fn set_sequential(force: bool) {
    FORCE_SEQUENTIAL.store(force, Ordering::Relaxed);
}

/// Whether the helpers currently run serially.
pub fn sequential() -> bool {
    cfg!(not(feature = "parallel")) || FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

/// Applies `f` to equal consecutive chunks of `data`, passing the chunk index.
/// Chunks are disjoint, so the result is independent of the execution mode.
pub fn for_each_chunk<F>(data: &mut [f64], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f64]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !sequential() {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

/// Maps `f` over `0..n` and collects the results in index order.
pub fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !sequential() {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}
