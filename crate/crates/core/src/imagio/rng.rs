//! Seeded randomness.
//!
//! The generator is ChaCha8 keyed by `seed_from_u64`, which has a documented,
//! platform-independent output stream. Bounded draws use rejection sampling on
//! raw 64-bit outputs so the mapping from stream to values is fixed here and
//! does not depend on any distribution code outside this crate.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::GrayImage;

/// ChaCha stream reserved for pixel traversal, so that extraction can rebuild
/// the visiting order without replaying the embedder's coin flips.
const TRAVERSAL_STREAM: u64 = 1;

/// Deterministic random source.
#[derive(Clone, Debug)]
pub struct Rng {
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn with_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    /// Generator used for permuted traversal under `seed`.
    pub fn for_traversal(seed: u64) -> Self {
        Self::with_stream(seed, TRAVERSAL_STREAM)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Fair coin.
    #[inline]
    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform draw from `0..bound`. Panics when `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        // reject the top partial block so every residue is equally likely
        let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    /// Uniform draw from `[0, 1)` with 53 bits of precision.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal draw (Box-Muller).
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.unit_f64();
        let u2 = self.unit_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// In-place Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Derives an independent seed for item `index` of a run keyed by `seed`
    /// (SplitMix64 finalizer over the pair).
    pub fn derive_seed(seed: u64, index: u64) -> u64 {
        let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Pixel visiting order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Traversal {
    #[default]
    Raster,
    /// Seed-keyed uniform permutation.
    Permuted,
}

impl std::str::FromStr for Traversal {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "raster" => Ok(Traversal::Raster),
            "permuted" => Ok(Traversal::Permuted),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown traversal {other:?}"
            ))),
        }
    }
}

/// Row-major pixel indices in visiting order. Always a permutation of
/// `0..image.len()`.
pub fn traversal_order(image: &GrayImage, mode: Traversal, rng: &mut Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..image.len()).collect();
    if mode == Traversal::Permuted {
        rng.shuffle(&mut order);
    }
    order
}
