//! Deterministic counter-based random numbers for reproducible
//! simulations. Identical seeds give bit-identical streams on every
//! platform, and per-trial substreams are independently addressable so
//! trials can run in any order (or in parallel) without changing results.

/// splitmix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

const GOLDEN: u64 = 0x9E3779B97F4A7C15;

/// splitmix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Stream `index` of the family derived from `seed`. Distinct
    /// `(seed, index)` pairs map to well-separated states.
    pub fn substream(seed: u64, index: u64) -> SplitMix64 {
        SplitMix64 {
            state: mix(seed ^ mix(index.wrapping_add(GOLDEN))),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Uniform draw from `0..bound` (`bound` > 0) via multiply-shift.
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Uniform `k`-element subset of `0..n` by partial Fisher-Yates,
    /// returned in the order drawn.
    pub fn sample_subset(&mut self, n: usize, k: usize) -> Vec<u32> {
        debug_assert!(k <= n);
        let mut ids: Vec<u32> = (0..n as u32).collect();
        for i in 0..k {
            let j = i + self.below((n - i) as u64) as usize;
            ids.swap(i, j);
        }
        ids.truncate(k);
        ids
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn substreams_are_distinct() {
        let mut a = SplitMix64::substream(42, 0);
        let mut b = SplitMix64::substream(42, 1);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn uniform_mean_is_plausible() {
        let mut rng = SplitMix64::new(7);
        let mean = (0..10_000).map(|_| rng.next_f64()).sum::<f64>() / 10_000.0;
        assert!((mean - 0.5).abs() < 0.02, "mean {mean}");
    }

    #[test]
    fn subsets_are_distinct_in_range_and_unbiased() {
        let mut rng = SplitMix64::new(3);
        let mut hits = [0u32; 10];
        for _ in 0..20_000 {
            let s = rng.sample_subset(10, 3);
            assert_eq!(s.len(), 3);
            let mut sorted = s.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), 3);
            for id in s {
                assert!(id < 10);
                hits[id as usize] += 1;
            }
        }
        // Each id should land in roughly 3/10 of the draws.
        for (id, &h) in hits.iter().enumerate() {
            let rate = h as f64 / 20_000.0;
            assert!((rate - 0.3).abs() < 0.02, "id {id}: rate {rate}");
        }
    }
}
