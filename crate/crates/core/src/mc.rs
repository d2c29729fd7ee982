//! Deterministic parallel Monte Carlo drivers.
//!
//! Work is split into units that each own one random stream; results are
//! collected in unit order, so outputs do not depend on the thread count or
//! on scheduling.

use rayon::prelude::*;

use crate::rng::{RngState, StreamRng};

/// Samples per stream used by [`par_chunked`].
pub const CHUNK: usize = 1 << 14;

/// Runs `f(i, rng)` for `i in 0..count`, path `i` drawing from
/// `base.substream(i)`. Results are returned in index order.
pub fn par_paths<T, F>(base: RngState, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut StreamRng) -> T + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = base.substream(i as u64).rng();
            f(i, &mut rng)
        })
        .collect()
}

/// Splits `total` independent draws into chunks of [`CHUNK`], each on its own
/// stream, runs `f(len, rng)` per chunk and returns the per-chunk results in
/// order.
pub fn par_chunked<T, F>(base: RngState, total: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut StreamRng) -> T + Sync,
{
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let len = CHUNK.min(total - c * CHUNK);
            let mut rng = base.substream(c as u64).rng();
            f(len, &mut rng)
        })
        .collect()
}
