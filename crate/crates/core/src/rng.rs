//! Seeded randomness shared by the simulator and the Monte Carlo estimator.
//!
//! The stream is xoshiro256++ seeded from a 64-bit value through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Bounded draws use Lemire's
//! multiply-and-reject method on `next_u64`, and shuffles are Fisher-Yates
//! from the back, so a log can be reproduced by any implementation of those
//! three pieces.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone)]
pub struct DeckRng(Xoshiro256PlusPlus);

impl DeckRng {
    pub fn new(seed: u64) -> DeckRng {
        DeckRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    /// Advances the stream by 2^128 steps, giving a non-overlapping substream.
    pub fn jump(&mut self) {
        self.0.jump();
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = self.next_u64() as u128 * bound as u128;
            if (wide as u64) >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = DeckRng::new(42);
        let mut b = DeckRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        assert_ne!(DeckRng::new(1).next_u64(), DeckRng::new(2).next_u64());
    }

    #[test]
    fn below_is_in_range_and_covers() {
        let mut rng = DeckRng::new(7);
        let mut seen = [0u32; 6];
        for _ in 0..6000 {
            seen[rng.below(6) as usize] += 1;
        }
        assert!(seen.iter().all(|&n| n > 800 && n < 1200), "{seen:?}");
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = DeckRng::new(3);
        let mut v: Vec<u32> = (0..81).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..81).collect::<Vec<_>>());
        assert_ne!(v, sorted);
    }

    #[test]
    fn jump_changes_stream() {
        let mut a = DeckRng::new(9);
        let mut b = a.clone();
        b.jump();
        assert_ne!(a.next_u64(), b.next_u64());
    }
}
