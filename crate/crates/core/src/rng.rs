//! Deterministic random streams.
//!
//! Every random draw in the crate comes from [`ChaCha8Rng`]. A `(seed, stream)`
//! pair selects an independent keystream, so a master seed can be split into
//! per-run or per-phase streams without the streams overlapping.

use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

/// Stream ids reserved by the generators. Runs derived from a master seed use
/// [`run_seed`] instead.
pub const GRAPH_STREAM: u64 = 0;
pub const POLARITY_STREAM: u64 = 1;
pub const SELECTION_STREAM: u64 = 2;
pub const INIT_STREAM: u64 = 3;

pub fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seed for run `index` of an experiment with master seed `master`.
///
/// SplitMix64 finaliser over the pair, so consecutive run indices give
/// unrelated seeds.
pub fn run_seed(master: u64, index: u64) -> u64 {
    let mut z = master
        .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
