//! Hierarchical seed derivation: one master seed fixes every random draw.
//!
//! Streams are derived as `master → purpose → index` with SplitMix64 mixing,
//! and every stream feeds a ChaCha8 generator, so identical configurations
//! replay bit-identically across platforms.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;

/// Purpose tags for the per-stream derivation. Values are stable: changing
/// them changes every published run.
#[derive(Debug, Clone, Copy)]
pub enum Purpose {
    TrainingSet,
    ValidationSet,
    Trial,
    TrialInit,
    TrialShots,
    FreshValidation,
}

impl Purpose {
    fn tag(self) -> u64 {
        match self {
            Purpose::TrainingSet => 0x7452_4149_4e53_4554,
            Purpose::ValidationSet => 0x5641_4c49_4453_4554,
            Purpose::Trial => 0x5452_4941_4c00_0000,
            Purpose::TrialInit => 0x5452_4941_4c49_4e49,
            Purpose::TrialShots => 0x5452_4941_4c53_484f,
            Purpose::FreshValidation => 0x4652_4553_4856_414c,
        }
    }
}

/// SplitMix64 finalizer; the standard 64-bit mixer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and a purpose tag.
pub fn derive(parent: u64, purpose: Purpose) -> u64 {
    splitmix64(parent ^ splitmix64(purpose.tag()))
}

/// Derive an indexed child seed (e.g. one per trial).
pub fn derive_indexed(parent: u64, purpose: Purpose, index: u64) -> u64 {
    splitmix64(derive(parent, purpose) ^ splitmix64(index.wrapping_add(1)))
}

/// The generator used for every stream in this crate.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_distinct_and_stable() {
        let m = 42;
        let a = derive(m, Purpose::TrainingSet);
        let b = derive(m, Purpose::ValidationSet);
        assert_ne!(a, b);
        assert_eq!(a, derive(m, Purpose::TrainingSet));
        assert_ne!(
            derive_indexed(m, Purpose::TrialInit, 0),
            derive_indexed(m, Purpose::TrialInit, 1)
        );
    }
}
