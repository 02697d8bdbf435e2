//! Data-parallel helpers with a sequential fallback.
//!
//! Hot batch loops (links in a Serre check, subsets in Hochster's formula,
//! multidegrees in a Tor sweep, corpus members in a harness) go through
//! [`map`]. With the `parallel` feature they run on rayon's pool, otherwise
//! in order on the calling thread. Results are always returned in input
//! order, so output never depends on scheduling.

/// Execution strategy for batch loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
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

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// True iff `f` holds for every item. May stop early.
pub fn all<T, F>(exec: Exec, items: &[T], f: F) -> bool
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().all(f)
        }
        _ => items.iter().all(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Exec::Sequential, &xs, |x| x * x);
        let b = map(Exec::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        assert!(all(Exec::Parallel, &xs, |x| *x < 1000));
        assert!(!all(Exec::Sequential, &xs, |x| *x < 999));
    }
}
