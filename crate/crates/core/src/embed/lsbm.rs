//! LSB matching: one message bit per visited pixel.

use super::{prepare, read_frame, EmbedConfig, Method, SignPolicy};
use crate::{BitStream, GrayImage, Result, Rng};

fn embed_with(
    cover: &GrayImage,
    message: &BitStream,
    config: &EmbedConfig,
    policy: SignPolicy,
    rng: &mut Rng,
) -> Result<GrayImage> {
    let (framed, order) = prepare(cover, message, config)?;
    let mut stego = cover.clone();
    for (&idx, bit) in order.iter().zip(framed.iter()) {
        if (stego.pixels()[idx] & 1 == 1) != bit {
            policy.nudge(&mut stego, idx, rng);
        }
    }
    Ok(stego)
}

/// Baseline LSB matching: a mismatching pixel moves by ±1 with a fair coin
/// deciding the sign (0 always goes up, 255 always down).
pub fn lsbm_embed(
    cover: &GrayImage,
    message: &BitStream,
    config: &EmbedConfig,
    rng: &mut Rng,
) -> Result<GrayImage> {
    embed_with(cover, message, config, SignPolicy::Coin, rng)
}

/// LSB matching where the sign comes from
/// [`choose_direction`](super::choose_direction) on the live image.
pub fn lsbm_improved_embed(
    cover: &GrayImage,
    message: &BitStream,
    config: &EmbedConfig,
    rng: &mut Rng,
) -> Result<GrayImage> {
    let policy = SignPolicy::Neighborhood {
        threshold: config.threshold,
    };
    embed_with(cover, message, config, policy, rng)
}

/// Reads the LSBs of visited pixels and unframes them.
pub fn lsbm_extract(stego: &GrayImage, config: &EmbedConfig) -> Result<BitStream> {
    let order = crate::traversal_order(
        stego,
        config.traversal,
        &mut Rng::for_traversal(config.seed),
    );
    let px = stego.pixels();
    read_frame(
        order.iter().map(|&i| px[i] & 1 == 1),
        Method::Lsbm.max_bits(stego.len()),
    )
}
