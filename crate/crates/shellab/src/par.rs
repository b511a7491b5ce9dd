//! Data-parallel plumbing with a sequential fallback.
//!
//! With the `parallel` feature these helpers fan work out over rayon; without
//! it they run plain iterators. Item order is preserved either way, so folds
//! over the results, and "first hit wins" selections, give the same answer in
//! both builds.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over the items, keeping result order.
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// First `Some` in item order; later items may be skipped once a hit is
/// known, earlier items are always fully evaluated before losing to it.
pub(crate) fn find_map_first<T, U, F>(items: Vec<T>, f: F) -> Option<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().find_map(f)
    }
}
