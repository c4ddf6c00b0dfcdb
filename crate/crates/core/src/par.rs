//! Data-parallel fan-out helper.
//!
//! With the `parallel` feature the map runs on the rayon pool current at
//! the call site; without it, inline on the calling thread. Output slots
//! are computed independently and collected in index order, so the result
//! does not depend on the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}
