//! # stegolab
//!
//! Spatial-domain steganography on 8-bit grayscale images: LSB matching,
//! LSB matching revisited, and neighborhood-aware variants of both that pick
//! the ±1 direction minimizing local intensity disturbance. The crate also
//! carries the second-order analysis used to compare them: gray-level
//! co-occurrence matrices, diagonal-band energies, a Fisher linear
//! discriminant, and corpus-scale experiments.
//!
//! Floating-point code is generic over [`Real`] (`f32` or `f64`); the aliases
//! at the crate root fix the scalar to `f64` for everyday use.

pub mod embed;
mod error;
pub mod glcm;
pub mod harness;
pub mod imagio;
mod num;

pub use embed::{
    choose_direction, embed, extract, f_pair, lsbm_embed, lsbm_extract, lsbm_improved_embed,
    lsbmr_embed, lsbmr_extract, lsbmr_improved_embed, Direction, EmbedConfig, MaskDecision, Method,
    Neighborhood, DEFAULT_THRESHOLD,
};
pub use error::Error;
pub use glcm::{band_features, cooccurrence, diagonal_energies, CooccurrenceMatrix, Offset, OffsetSet};
pub use imagio::{
    frame_message, read_pgm, traversal_order, unframe_message, write_pgm, BitStream, GrayImage, Rng,
    Traversal,
};
pub use num::Real;

/// The result type returned by functions in this library.
pub type Result<T> = std::result::Result<T, Error>;

pub type DiagonalEnergies = glcm::DiagonalEnergies<f64>;
pub type DiagonalEnergies32 = glcm::DiagonalEnergies<f32>;
pub type FeatureVector = harness::FeatureVector<f64>;
pub type FeatureVector32 = harness::FeatureVector<f32>;
pub type FisherDiscriminant = harness::FisherDiscriminant<f64>;
pub type FisherDiscriminant32 = harness::FisherDiscriminant<f32>;
pub type ExperimentReport = harness::ExperimentReport<f64>;
pub type ImageEnergies = harness::ImageEnergies<f64>;
