//! Counter-based seed splitting.
//!
//! Every random draw descends from one master seed. A `(purpose, index)` pair
//! selects an independent ChaCha stream, so trials can run in any order (or in
//! parallel) and still reproduce bit-exactly.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream purposes. Kept as constants so certificates stay stable across releases.
pub mod purpose {
    pub const COORDINATES: u64 = 1;
    pub const LINEAR_FORM: u64 = 2;
    pub const COMBINATION: u64 = 3;
    pub const HEIGHTS: u64 = 4;
    pub const SUBDIVISION: u64 = 5;
    pub const CONTRACTION: u64 = 6;
    pub const PROJECTION: u64 = 7;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedStream {
    master: u64,
}

impl SeedStream {
    pub fn new(master: u64) -> Self {
        SeedStream { master }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    /// Independent generator for `(purpose, index)`.
    pub fn rng(&self, purpose: u64, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(purpose.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ index);
        rng
    }
}
