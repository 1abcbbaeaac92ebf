//! Execution helpers for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) the dispatched entry points run on
//! rayon; without it they alias the sequential twins. The `_seq` variants are
//! always compiled so the bench suite can compare both on the same build.
//! All helpers produce output in index order, so results are independent of
//! thread count and scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n` and collects the results in index order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    map_collect_seq(n, f)
}

/// Sequential twin of [`map_collect`].
pub fn map_collect_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice and collects results in input order.
#[cfg(feature = "parallel")]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    map_slice_seq(items, f)
}

/// Sequential twin of [`map_slice`].
pub fn map_slice_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    items.iter().map(f).collect()
}

/// Sums `f(i)` over `0..n` with a deterministic reduction order.
///
/// Partial sums are taken over fixed chunks of 4096 indices and folded in
/// chunk order, so the result is bit-identical across thread counts.
pub fn sum_f64<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    const CHUNK: usize = 4096;
    let chunks = n.div_ceil(CHUNK);
    let partials = map_collect(chunks, |c| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(n);
        let mut acc = 0.0;
        for i in lo..hi {
            acc += f(i);
        }
        acc
    });
    partials.iter().sum()
}

/// Sequential twin of [`sum_f64`].
pub fn sum_f64_seq<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    const CHUNK: usize = 4096;
    let chunks = n.div_ceil(CHUNK);
    let partials = map_collect_seq(chunks, |c| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(n);
        let mut acc = 0.0;
        for i in lo..hi {
            acc += f(i);
        }
        acc
    });
    partials.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |i: usize| (i as f64).sqrt().sin();
        let a = map_collect(10_000, f);
        let b = map_collect_seq(10_000, f);
        assert_eq!(a, b);
        assert_eq!(sum_f64(10_000, f), sum_f64_seq(10_000, f));
    }

    #[test]
    fn sum_is_deterministic_across_calls() {
        let f = |i: usize| 1.0 / (1.0 + i as f64);
        assert_eq!(sum_f64(123_457, f).to_bits(), sum_f64(123_457, f).to_bits());
    }
}
