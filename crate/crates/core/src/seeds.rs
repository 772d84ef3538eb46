//! Deterministic seed derivation.
//!
//! Every stochastic operation takes a seed rather than an RNG handle, and
//! derives independent streams for its internal pieces (one per walk, one per
//! training run, ...). Derivation is a pure hash of the master seed and a
//! list of tags, so results never depend on scheduling order and a single
//! CLI-level seed reproduces an entire run.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer; good avalanche, stable across platforms.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from `master` and an ordered list of tags.
pub fn derive(master: u64, tags: &[u64]) -> u64 {
    let mut state = mix(master);
    for &t in tags {
        state = mix(state ^ t);
    }
    state
}

/// RNG for a derived stream.
pub fn rng(master: u64, tags: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(master, tags))
}

/// Stream tags for the fixed components of a run. Keeping them in one place
/// guarantees two components never collide on the same derived stream.
pub mod stream {
    pub const SPACE_WALK: u64 = 1;
    pub const TIME_WALK: u64 = 2;
    pub const SPACETIME_WALK: u64 = 3;
    pub const TRAIN_SPACE: u64 = 4;
    pub const TRAIN_TIME: u64 = 5;
    pub const TRAIN_JOINT: u64 = 6;
    pub const DEEPWALK_SNAPSHOT: u64 = 7;
    pub const CLASSIFIER: u64 = 8;
    pub const ARITH_SAMPLING: u64 = 9;
    pub const SYNTH: u64 = 10;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_tags_give_distinct_seeds() {
        let a = derive(42, &[stream::SPACE_WALK, 0, 0]);
        let b = derive(42, &[stream::TIME_WALK, 0, 0]);
        let c = derive(42, &[stream::SPACE_WALK, 0, 1]);
        assert_ne!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn derivation_is_stable() {
        assert_eq!(derive(7, &[1, 2, 3]), derive(7, &[1, 2, 3]));
        assert_ne!(derive(7, &[1, 2, 3]), derive(8, &[1, 2, 3]));
    }
}
