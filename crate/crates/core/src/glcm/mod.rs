//! Gray-level co-occurrence matrices and diagonal-band energies.

mod energies;
mod matrix;
mod offset;

pub use energies::{band_features, diagonal_energies, energies_csv, DiagonalEnergies, BANDS};
pub use matrix::{cooccurrence, CooccurrenceMatrix, LEVELS};
pub use offset::{Offset, OffsetSet};
