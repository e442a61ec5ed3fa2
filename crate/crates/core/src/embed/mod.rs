//! LSB matching, LSB matching revisited, and their neighborhood-aware
//! variants.
//!
//! Every embedder visits pixels in the order given by
//! [`traversal_order`](crate::traversal_order) keyed by `config.seed`, writes
//! the framed message (32-bit length prefix plus payload), and leaves all
//! unvisited pixels alone. The improved variants differ from their baselines
//! only in how the sign of a free ±1 change is picked.

mod direction;
mod lsbm;
mod lsbmr;

use std::fmt;
use std::str::FromStr;

pub use direction::{choose_direction, Direction, MaskDecision, Neighborhood};
pub use lsbm::{lsbm_embed, lsbm_extract, lsbm_improved_embed};
pub use lsbmr::{f_pair, lsbmr_embed, lsbmr_extract, lsbmr_improved_embed};

use crate::imagio::LENGTH_PREFIX_BITS;
use crate::{BitStream, Error, GrayImage, Result, Rng, Traversal};

/// Neighbor-difference bound used when none is given.
pub const DEFAULT_THRESHOLD: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Lsbm,
    Lsbmr,
    LsbmImproved,
    LsbmrImproved,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Lsbm,
        Method::Lsbmr,
        Method::LsbmImproved,
        Method::LsbmrImproved,
    ];

    /// Command-line spelling.
    pub fn name(self) -> &'static str {
        match self {
            Method::Lsbm => "lsbm",
            Method::Lsbmr => "lsbmr",
            Method::LsbmImproved => "lsbm-imp",
            Method::LsbmrImproved => "lsbmr-imp",
        }
    }

    /// Whether the method hides two bits per pixel pair.
    pub fn is_pairwise(self) -> bool {
        matches!(self, Method::Lsbmr | Method::LsbmrImproved)
    }

    pub fn is_improved(self) -> bool {
        matches!(self, Method::LsbmImproved | Method::LsbmrImproved)
    }

    /// The baseline this method refines (itself for baselines).
    pub fn baseline(self) -> Method {
        match self {
            Method::LsbmImproved => Method::Lsbm,
            Method::LsbmrImproved => Method::Lsbmr,
            m => m,
        }
    }

    /// Largest number of framed bits a `pixels`-pixel image can hold.
    pub fn max_bits(self, pixels: usize) -> usize {
        if self.is_pairwise() {
            pixels / 2 * 2
        } else {
            pixels
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lsbm" => Ok(Method::Lsbm),
            "lsbmr" => Ok(Method::Lsbmr),
            "lsbm-imp" | "lsbm_improved" => Ok(Method::LsbmImproved),
            "lsbmr-imp" | "lsbmr_improved" => Ok(Method::LsbmrImproved),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmbedConfig {
    pub method: Method,
    /// Payload budget in bits per pixel, in `(0, 1]`. Caps the framed length.
    pub rate: f64,
    /// Neighbor mask bound; only read by the improved methods.
    pub threshold: u32,
    pub seed: u64,
    pub traversal: Traversal,
}

impl EmbedConfig {
    pub fn new(method: Method, seed: u64) -> Self {
        Self {
            method,
            rate: 1.0,
            threshold: DEFAULT_THRESHOLD,
            seed,
            traversal: Traversal::Raster,
        }
    }

    pub fn with_rate(mut self, rate: f64) -> Self {
        self.rate = rate;
        self
    }

    pub fn with_threshold(mut self, threshold: u32) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn with_traversal(mut self, traversal: Traversal) -> Self {
        self.traversal = traversal;
        self
    }

    /// Framed bits available in an image of `pixels` pixels.
    pub fn capacity_bits(&self, pixels: usize) -> Result<usize> {
        if !(self.rate > 0.0 && self.rate <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "rate {} outside (0, 1]",
                self.rate
            )));
        }
        let budget = (self.rate * pixels as f64).floor() as usize;
        Ok(budget.min(self.method.max_bits(pixels)))
    }

    /// Payload bits that fill the budget exactly once framed (zero when the
    /// budget cannot even hold the prefix).
    pub fn payload_bits(&self, pixels: usize) -> Result<usize> {
        Ok(self.capacity_bits(pixels)?.saturating_sub(LENGTH_PREFIX_BITS))
    }
}

/// Embeds `message` with the method named in `config`, drawing coin flips
/// from a generator seeded with `config.seed`.
pub fn embed(cover: &GrayImage, message: &BitStream, config: &EmbedConfig) -> Result<GrayImage> {
    let mut rng = Rng::new(config.seed);
    match config.method {
        Method::Lsbm => lsbm_embed(cover, message, config, &mut rng),
        Method::Lsbmr => lsbmr_embed(cover, message, config, &mut rng),
        Method::LsbmImproved => lsbm_improved_embed(cover, message, config, &mut rng),
        Method::LsbmrImproved => lsbmr_improved_embed(cover, message, config, &mut rng),
    }
}

/// Recovers the payload written by [`embed`] with the same method family,
/// seed and traversal.
pub fn extract(stego: &GrayImage, config: &EmbedConfig) -> Result<BitStream> {
    if config.method.is_pairwise() {
        lsbmr_extract(stego, config)
    } else {
        lsbm_extract(stego, config)
    }
}

/// How the sign of a free ±1 change is decided.
#[derive(Clone, Copy, Debug)]
pub(crate) enum SignPolicy {
    Coin,
    Neighborhood { threshold: u32 },
}

impl SignPolicy {
    /// Applies ±1 to the pixel at `index` of the live image. Saturated values
    /// are forced inward.
    pub(crate) fn nudge(self, image: &mut GrayImage, index: usize, rng: &mut Rng) {
        let v = image.pixels()[index];
        let dir = match v {
            0 => Direction::Plus,
            255 => Direction::Minus,
            _ => match self {
                SignPolicy::Coin => Direction::from_coin(rng.coin()),
                SignPolicy::Neighborhood { threshold } => {
                    let (x, y) = image.coords(index);
                    choose_direction(&Neighborhood::around(image, x, y), threshold, rng).choice
                }
            },
        };
        image.pixels_mut()[index] = dir.apply(v);
    }
}

/// Frames `message`, checks it against the budget, and returns the framed
/// bits with the visiting order.
pub(crate) fn prepare(
    cover: &GrayImage,
    message: &BitStream,
    config: &EmbedConfig,
) -> Result<(BitStream, Vec<usize>)> {
    let framed = message.framed()?;
    let available = config.capacity_bits(cover.len())?;
    if framed.len() > available {
        return Err(Error::Capacity {
            needed: framed.len() as u64,
            available: available as u64,
        });
    }
    let order = crate::traversal_order(cover, config.traversal, &mut Rng::for_traversal(config.seed));
    Ok((framed, order))
}

/// Reads a framed message from a stream of carrier bits.
pub(crate) fn read_frame(
    mut bits: impl Iterator<Item = bool>,
    capacity: usize,
) -> Result<BitStream> {
    if capacity < LENGTH_PREFIX_BITS {
        return Err(Error::Framing(format!(
            "image holds {capacity} bits, fewer than the length prefix"
        )));
    }
    let prefix: Vec<bool> = bits.by_ref().take(LENGTH_PREFIX_BITS).collect();
    let n = crate::imagio::decode_length(&prefix) as usize;
    let available = capacity - LENGTH_PREFIX_BITS;
    if n > available {
        return Err(Error::Framing(format!(
            "declared {n} payload bits but the image carries at most {available}"
        )));
    }
    Ok(bits.take(n).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("lsb".parse::<Method>().is_err());
    }

    #[test]
    fn capacity_respects_rate_and_pairing() {
        let c = EmbedConfig::new(Method::Lsbm, 0).with_rate(0.5);
        assert_eq!(c.capacity_bits(101).unwrap(), 50);
        let c = EmbedConfig::new(Method::Lsbmr, 0);
        assert_eq!(c.capacity_bits(101).unwrap(), 100);
        assert!(EmbedConfig::new(Method::Lsbm, 0)
            .with_rate(0.0)
            .capacity_bits(10)
            .is_err());
        assert!(EmbedConfig::new(Method::Lsbm, 0)
            .with_rate(1.5)
            .capacity_bits(10)
            .is_err());
    }

    #[test]
    fn oversize_message_is_a_capacity_error() {
        let cover = GrayImage::filled(8, 4, 9).unwrap();
        let msg = BitStream::from_bits(vec![true; 1]);
        let cfg = EmbedConfig::new(Method::Lsbm, 1);
        assert!(matches!(
            embed(&cover, &msg, &cfg),
            Err(Error::Capacity { needed: 33, available: 32 })
        ));
    }
}
