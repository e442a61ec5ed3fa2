//! Grayscale rasters, binary PGM I/O, message bit streams and the seeded
//! randomness shared by every embedder.

mod bits;
mod image;
mod pgm;
mod rng;

pub(crate) use bits::decode_length;
pub use bits::{frame_message, unframe_message, BitStream, LENGTH_PREFIX_BITS};
pub use image::GrayImage;
pub use pgm::{read_pgm, write_pgm};
pub use rng::{traversal_order, Rng, Traversal};
