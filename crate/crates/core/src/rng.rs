//! Reproducible random streams.
//!
//! Every random quantity in the crate is drawn from a [`StreamRng`] addressed
//! by a `(seed, stream)` pair. The generator is ChaCha8, whose 64-bit stream
//! selector gives 2^64 independent, non-overlapping sequences per seed, so a
//! Monte Carlo path always sees the same numbers no matter which worker
//! thread runs it.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Address of one random stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngState {
    pub seed: u64,
    pub stream: u64,
}

impl RngState {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    /// The stream `offset` places after this one, within the same seed.
    pub fn substream(self, offset: u64) -> Self {
        Self {
            seed: self.seed,
            stream: self.stream.wrapping_add(offset),
        }
    }

    pub fn rng(self) -> StreamRng {
        StreamRng::new(self)
    }
}

/// Named stream namespaces. Each experiment draws from its own block of
/// 2^40 stream ids so that two experiments sharing a seed never collide.
pub mod streams {
    pub const SAMPLE: u64 = 1 << 40;
    pub const NOISE: u64 = 2 << 40;
    pub const SIMULATE: u64 = 3 << 40;
    pub const WHITE_NOISE: u64 = 4 << 40;
    pub const SANDWICH: u64 = 5 << 40;
    pub const DIAGNOSE: u64 = 6 << 40;
}

/// A ChaCha8 generator positioned at the start of one stream.
#[derive(Debug, Clone)]
pub struct StreamRng(ChaCha8Rng);

impl StreamRng {
    pub fn new(state: RngState) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(state.seed);
        rng.set_stream(state.stream);
        Self(rng)
    }
}

impl RngCore for StreamRng {
    #[inline]
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }

    #[inline]
    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    #[inline]
    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.0.fill_bytes(dst)
    }
}
