//! Parallel or sequential evaluation of independent work items.
//!
//! With the `parallel` feature (default) work is spread over the rayon
//! global pool; without it every call runs on the current thread. Results
//! are combined in input order, so output is identical either way.

use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` when the crate was built with rayon, else `Sequential`.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }

    fn effective(self) -> Self {
        if cfg!(feature = "parallel") {
            self
        } else {
            Execution::Sequential
        }
    }

    /// Maps every item, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self.effective() {
            Execution::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => unreachable!(),
        }
    }

    /// Maps every index in `0..n`, preserving order.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self.effective() {
            Execution::Sequential => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => unreachable!(),
        }
    }

    /// Exact big-integer sum of `f` over the items.
    pub fn sum_map<T, F>(self, items: &[T], f: F) -> BigUint
    where
        T: Sync,
        F: Fn(&T) -> BigUint + Sync + Send,
    {
        self.map(items, f)
            .into_iter()
            .fold(BigUint::zero(), |acc, v| acc + v)
    }
}
