//! Data-parallel map helpers.  With the `parallel` feature the maps fan out
//! over rayon; without it (or after `set_parallel(false)`, e.g. `--jobs 1`)
//! they run sequentially with identical results.

use std::sync::atomic::{AtomicBool, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

pub fn set_parallel(enabled: bool) {
    PARALLEL_ENABLED.store(enabled, Ordering::Relaxed);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::Relaxed)
}

/// Cap the rayon pool; call once before heavy work.  No-op without the
/// `parallel` feature.
pub fn configure_threads(jobs: usize) {
    if jobs <= 1 {
        set_parallel(false);
        return;
    }
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
}

pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return items.par_iter().map(&f).collect();
    }
    items.iter().map(&f).collect()
}

pub fn par_map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return (0..n).into_par_iter().map(&f).collect();
    }
    (0..n).map(&f).collect()
}
