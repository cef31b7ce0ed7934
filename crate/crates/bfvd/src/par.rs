//! Iteration shims: rayon with the `parallel` feature, plain iterators
//! without. Every caller merges results in index order, so both paths
//! produce identical output.

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_indices(items.len(), |i| f(&items[i]))
}
