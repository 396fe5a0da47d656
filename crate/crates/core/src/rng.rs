//! Seed derivation and per-replica random streams.
//!
//! A master seed is split into independent sub-seeds with a splitmix64 hash
//! of `(seed, index)`, so adding replicas (or particles) never perturbs the
//! streams of existing ones. Each stream is a counter-based ChaCha8 generator.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One splitmix64 round.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sub-seed for stream `index` of master seed `seed`.
///
/// Defined as two splitmix64 rounds: the first mixes the master seed, the
/// second absorbs the index. Documented so external tooling can reproduce
/// replica seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut s = seed;
    let a = splitmix64(&mut s);
    let mut s2 = a ^ index.wrapping_mul(0xd6e8_feb8_6659_fd93);
    splitmix64(&mut s2)
}

/// The stream used for sub-stream `index` of `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn derivation_is_stable_and_injective_in_practice() {
        let a = derive_seed(42, 0);
        let b = derive_seed(42, 1);
        let c = derive_seed(43, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        // stability: derived seeds are part of the output contract
        assert_eq!(a, derive_seed(42, 0));
    }

    #[test]
    fn streams_are_reproducible() {
        let mut r1 = stream(7, 3);
        let mut r2 = stream(7, 3);
        for _ in 0..16 {
            assert_eq!(r1.next_u64(), r2.next_u64());
        }
    }
}
