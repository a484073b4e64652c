use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

/// Seeded pseudo-random stream.
///
/// The algorithm is xoshiro256** (Blackman & Vigna, 2018) with its 256-bit
/// state filled from the 64-bit seed by SplitMix64 (increment
/// `0x9E3779B97F4A7C15`, finaliser multipliers `0xBF58476D1CE4E5B9` and
/// `0x94D049BB133111EB`). Any implementation of those two published
/// algorithms reproduces the same stream for the same seed.
///
/// Derived values:
/// - [`next_f64`](Prng::next_f64): `(next_u64 >> 11) · 2⁻⁵³`, in `[0, 1)`.
/// - [`below`](Prng::below): rejection sampling on the top bits, unbiased.
/// - [`shuffle`](Prng::shuffle): Fisher-Yates from the last index down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prng {
    seed: u64,
    inner: Xoshiro256StarStar,
}

impl Prng {
    pub fn new(seed: u64) -> Self {
        Prng {
            seed,
            inner: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Functional form: the next value together with the successor state.
    pub fn advance(mut self) -> (f64, Prng) {
        let v = self.next_f64();
        (v, self)
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        let n = n as u64;
        if n.is_power_of_two() {
            return (self.next_u64() & (n - 1)) as usize;
        }
        // Smallest all-ones mask covering n - 1.
        let mask = u64::MAX >> (n - 1).leading_zeros();
        loop {
            let v = self.next_u64() & mask;
            if v < n {
                return v as usize;
            }
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
