//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature the maps below go through rayon unless the
//! process-wide strategy has been switched to sequential (benches do this to
//! compare the two paths). Without the feature everything runs in order.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

static STRATEGY: AtomicU8 = AtomicU8::new(1);

pub fn set_strategy(s: Strategy) {
    STRATEGY.store(matches!(s, Strategy::Parallel) as u8, Ordering::Relaxed);
}

pub fn strategy() -> Strategy {
    if cfg!(feature = "parallel") && STRATEGY.load(Ordering::Relaxed) == 1 {
        Strategy::Parallel
    } else {
        Strategy::Sequential
    }
}

/// Run `f` with the given strategy, restoring the previous one afterwards.
pub fn with_strategy<R>(s: Strategy, f: impl FnOnce() -> R) -> R {
    let prev = strategy();
    set_strategy(s);
    let out = f();
    set_strategy(prev);
    out
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy() == Strategy::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy() == Strategy::Parallel {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = with_strategy(Strategy::Sequential, || map(&xs, |x| x * x));
        let b = with_strategy(Strategy::Parallel, || map(&xs, |x| x * x));
        assert_eq!(a, b);
        assert_eq!(map_range(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
    }
}
