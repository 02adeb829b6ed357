//! Thin dispatch layer between rayon and sequential execution.
//!
//! Heavy inner loops (power sums, U-matrix columns, per-coefficient family
//! work) go through these helpers so that building with
//! `--no-default-features` yields a fully sequential library with identical
//! results.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Sum of `f(i)` for `i` in `0..n` modulo `modulus`, chunked across threads.
#[cfg(feature = "parallel")]
pub(crate) fn sum_mod_u64<F>(n: u64, modulus: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync,
{
    use rayon::prelude::*;
    const CHUNK: u64 = 1 << 14;
    let chunks = n.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(n);
            let mut acc: u64 = 0;
            for i in lo..hi {
                acc = ((acc as u128 + f(i) as u128) % modulus as u128) as u64;
            }
            acc
        })
        .reduce(
            || 0,
            |a, b| ((a as u128 + b as u128) % modulus as u128) as u64,
        )
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn sum_mod_u64<F>(n: u64, modulus: u64, f: F) -> u64
where
    F: Fn(u64) -> u64 + Sync,
{
    let mut acc: u64 = 0;
    for i in 0..n {
        acc = ((acc as u128 + f(i) as u128) % modulus as u128) as u64;
    }
    acc
}
