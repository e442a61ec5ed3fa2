use std::fmt::Write as _;

use super::{cooccurrence, CooccurrenceMatrix, Offset, OffsetSet, LEVELS};
use crate::harness::FeatureVector;
use crate::{Error, GrayImage, Real, Result};

/// Number of diagonal bands tracked: `|i - j| = 0..=4`.
pub const BANDS: usize = 5;

/// Normalized co-occurrence mass on the bands `|i - j| = k`, `k = 0..5`.
///
/// Both sides of the main diagonal contribute to band `k`, and the mass is a
/// plain count fraction (not a sum of squares).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagonalEnergies<F> {
    pub e: [F; BANDS],
}

impl<F: Real> DiagonalEnergies<F> {
    pub fn zero() -> Self {
        Self { e: [F::zero(); BANDS] }
    }

    /// Element-wise mean of a non-empty set.
    pub fn mean<'a>(items: impl IntoIterator<Item = &'a Self>) -> Option<Self> {
        let mut acc = [F::zero(); BANDS];
        let mut n = 0u64;
        for item in items {
            for (a, v) in acc.iter_mut().zip(item.e) {
                *a += v;
            }
            n += 1;
        }
        if n == 0 {
            return None;
        }
        let n = F::from_count(n);
        Some(Self {
            e: acc.map(|a| a / n),
        })
    }
}

/// Fractions of the total count lying on each of the first five bands.
pub fn diagonal_energies<F: Real>(matrix: &CooccurrenceMatrix) -> Result<DiagonalEnergies<F>> {
    let mut bands = [0u64; BANDS];
    let mut total = 0u64;
    for (idx, &c) in matrix.counts().iter().enumerate() {
        if c == 0 {
            continue;
        }
        total += c;
        let (i, j) = (idx / LEVELS, idx % LEVELS);
        let k = i.abs_diff(j);
        if k < BANDS {
            bands[k] += c;
        }
    }
    if total == 0 {
        return Err(Error::UndefinedMetric(format!(
            "co-occurrence matrix for offset {} has no pairs",
            matrix.offset()
        )));
    }
    let t = F::from_count(total);
    Ok(DiagonalEnergies {
        e: bands.map(|b| F::from_count(b) / t),
    })
}

/// Concatenated band energies over `offsets`, 5 values per offset.
pub fn band_features<F: Real>(image: &GrayImage, offsets: &OffsetSet) -> Result<FeatureVector<F>> {
    let mut values = Vec::with_capacity(BANDS * offsets.len());
    for &o in offsets.offsets() {
        let e = diagonal_energies::<F>(&cooccurrence(image, o))?;
        values.extend_from_slice(&e.e);
    }
    Ok(FeatureVector::new(values))
}

/// CSV with header `offset,e0,e1,e2,e3,e4`; the offset column is quoted
/// `"dx,dy"`.
pub fn energies_csv<F: Real>(rows: &[(Offset, DiagonalEnergies<F>)]) -> String {
    let mut out = String::from("offset,e0,e1,e2,e3,e4\n");
    for (o, e) in rows {
        write!(out, "\"{o}\"").unwrap();
        for v in e.e {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rng;

    fn off(dx: i32, dy: i32) -> Offset {
        Offset::new(dx, dy).unwrap()
    }

    #[test]
    fn constant_image_is_all_main_diagonal() {
        let img = GrayImage::filled(4, 4, 77).unwrap();
        let e: DiagonalEnergies<f64> = diagonal_energies(&cooccurrence(&img, off(1, 0))).unwrap();
        assert_eq!(e.e, [1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn two_entry_matrix() {
        let m = CooccurrenceMatrix::from_entries(off(1, 0), [(0, 1, 1), (3, 3, 1)]);
        let e: DiagonalEnergies<f64> = diagonal_energies(&m).unwrap();
        assert_eq!(e.e, [0.5, 0.5, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn far_mass_is_excluded_from_bands() {
        let m = CooccurrenceMatrix::from_entries(off(1, 0), [(0, 200, 3), (9, 9, 1)]);
        let e: DiagonalEnergies<f32> = diagonal_energies(&m).unwrap();
        assert_eq!(e.e, [0.25, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn empty_matrix_is_undefined() {
        let m = CooccurrenceMatrix::from_entries(off(1, 0), []);
        assert!(matches!(
            diagonal_energies::<f64>(&m),
            Err(Error::UndefinedMetric(_))
        ));
        // 1-pixel-wide image has no horizontal pairs
        let img = GrayImage::filled(1, 5, 0).unwrap();
        assert!(band_features::<f64>(&img, &OffsetSet::default()).is_err());
    }

    #[test]
    fn random_image_matches_band_brute_force() {
        let mut rng = Rng::new(11);
        for _ in 0..20 {
            // narrow value range so the bands are populated
            let img = GrayImage::from_fn(8, 8, |_, _| 100 + rng.below(8) as u8).unwrap();
            let e: DiagonalEnergies<f64> = diagonal_energies(&cooccurrence(&img, off(1, 0))).unwrap();
            let mut band = [0u32; BANDS];
            let mut total = 0u32;
            for y in 0..8 {
                for x in 0..7 {
                    let k = img.get(x, y).abs_diff(img.get(x + 1, y)) as usize;
                    total += 1;
                    if k < BANDS {
                        band[k] += 1;
                    }
                }
            }
            for (got, count) in e.e.iter().zip(band) {
                assert_eq!(*got, count as f64 / total as f64);
            }
        }
    }

    #[test]
    fn features_concatenate_per_offset() {
        let img = GrayImage::from_fn(6, 5, |x, y| (x * 3 + y) as u8).unwrap();
        let single = OffsetSet::new(vec![off(0, 1)]).unwrap();
        let f: FeatureVector<f64> = band_features(&img, &single).unwrap();
        let e: DiagonalEnergies<f64> = diagonal_energies(&cooccurrence(&img, off(0, 1))).unwrap();
        assert_eq!(f.values, e.e.to_vec());

        let f: FeatureVector<f64> = band_features(&img, &OffsetSet::default()).unwrap();
        assert_eq!(f.values.len(), 20);

        let flat = GrayImage::filled(6, 5, 3).unwrap();
        let f: FeatureVector<f64> = band_features(&flat, &OffsetSet::all_neighbors()).unwrap();
        assert_eq!(f.values, [1.0, 0.0, 0.0, 0.0, 0.0].repeat(8));
    }

    #[test]
    fn csv_layout() {
        let e = DiagonalEnergies { e: [1.0f64, 0.0, 0.0, 0.0, 0.0] };
        let csv = energies_csv(&[(off(-1, 1), e)]);
        assert_eq!(csv, "offset,e0,e1,e2,e3,e4\n\"-1,1\",1,0,0,0,0\n");
    }
}
