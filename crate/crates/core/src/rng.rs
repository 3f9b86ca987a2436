//! Portable seeded randomness (SplitMix64).

/// Source of the bounded integer draws the stress engine consumes.
pub trait StressRng {
    fn next_u64(&mut self) -> u64;

    /// Uniform-ish integer in `lo..=hi` by modulo reduction of one
    /// [`next_u64`](Self::next_u64) output.
    ///
    /// Panics if `lo > hi`.
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let raw = self.next_u64() as u128;
        (lo as i128 + (raw % span) as i128) as i64
    }
}

impl<R: StressRng + ?Sized> StressRng for &mut R {
    fn next_u64(&mut self) -> u64 {
        (**self).next_u64()
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        (**self).range(lo, hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }
}

impl StressRng for SplitMix64 {
    #[inline]
    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    // Reference values, computed with an independent arbitrary-precision
    // evaluation of the recurrence masked to 64 bits.
    const SEED0_FIRST: u64 = 0xE220_A839_7B1D_CDAF;
    const SEED0_SECOND: u64 = 0x6E78_9E6A_A1B9_65F4;

    #[test]
    fn seed_zero_reference() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), SEED0_FIRST);
        assert_eq!(rng.next_u64(), SEED0_SECOND);
    }

    #[test]
    fn first_bounded_draw_from_seed_zero() {
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.range(0, 10), (SEED0_FIRST % 11) as i64);
        assert_eq!(SEED0_FIRST % 11, 1);
    }

    #[test]
    fn single_value_range() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..100 {
            assert_eq!(rng.range(7, 7), 7);
        }
    }

    #[test]
    fn full_i64_range_does_not_overflow() {
        let mut rng = SplitMix64::new(3);
        let expect = SplitMix64::new(3).next_u64() as i64;
        assert_eq!(rng.range(i64::MIN, i64::MAX), expect.wrapping_add(i64::MIN));
    }

    #[test]
    #[should_panic]
    fn inverted_range_panics() {
        SplitMix64::new(0).range(1, 0);
    }

    proptest! {
        #[test]
        fn equal_seeds_agree(seed: u64) {
            let mut a = SplitMix64::new(seed);
            let mut b = SplitMix64::new(seed);
            for _ in 0..1000 {
                prop_assert_eq!(a.next_u64(), b.next_u64());
            }
        }

        #[test]
        fn range_stays_in_bounds(seed: u64, lo in -1000i64..1000, width in 0i64..50) {
            let mut rng = SplitMix64::new(seed);
            for _ in 0..200 {
                let v = rng.range(lo, lo + width);
                prop_assert!(lo <= v && v <= lo + width);
            }
        }
    }
}
