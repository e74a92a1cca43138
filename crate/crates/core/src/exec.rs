//! Data-parallel execution over index ranges.
//!
//! With the `parallel` feature (default) the heavy sweeps run on rayon;
//! without it every [`Exec`] runs sequentially. All helpers return results
//! in index order, so outputs never depend on scheduling or worker count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for index-range sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon work-stealing; identical to `Sequential` without the
    /// `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

fn to_usize(range: Range<u64>) -> Range<usize> {
    range.start as usize..range.end as usize
}

impl Exec {
    /// Lowest index in `range` satisfying `pred`.
    pub fn find_first<F>(self, range: Range<u64>, pred: F) -> Option<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        let range = to_usize(range);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().find_first(|&i| pred(i as u64)).map(|i| i as u64),
            _ => range.into_iter().find(|&i| pred(i as u64)).map(|i| i as u64),
        }
    }

    /// Every index in `range` satisfying `pred`, ascending.
    pub fn filter<F>(self, range: Range<u64>, pred: F) -> Vec<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        let range = to_usize(range);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range
                .into_par_iter()
                .filter(|&i| pred(i as u64))
                .map(|i| i as u64)
                .collect(),
            _ => range
                .into_iter()
                .filter(|&i| pred(i as u64))
                .map(|i| i as u64)
                .collect(),
        }
    }

    /// `f` applied to every index in `range`, in index order.
    pub fn map<T, F>(self, range: Range<u64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        let range = to_usize(range);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(|i| f(i as u64)).collect(),
            _ => range.into_iter().map(|i| f(i as u64)).collect(),
        }
    }

    /// Number of indices in `range` satisfying `pred`.
    pub fn count<F>(self, range: Range<u64>, pred: F) -> u64
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        let range = to_usize(range);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().filter(|&i| pred(i as u64)).count() as u64,
            _ => range.into_iter().filter(|&i| pred(i as u64)).count() as u64,
        }
    }
}

/// Runs `f` on a pool of `workers` threads, or the global pool when `None`.
pub fn with_workers<R, F>(workers: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    if let Some(w) = workers {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool");
        return pool.install(f);
    }
    let _ = workers;
    f()
}
