//! Neighborhood-masked choice between the two ±1 candidates of a pixel.

use crate::{GrayImage, Rng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Minus,
    Plus,
}

impl Direction {
    pub(crate) fn from_coin(heads: bool) -> Self {
        if heads {
            Direction::Plus
        } else {
            Direction::Minus
        }
    }

    /// `value ± 1`. Callers guarantee the result stays in range.
    #[inline]
    pub fn apply(self, value: u8) -> u8 {
        match self {
            Direction::Minus => value - 1,
            Direction::Plus => value + 1,
        }
    }
}

/// A pixel and its 3×3 neighbors, row-major with the center removed.
/// Out-of-bounds neighbors are `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    pub center: u8,
    pub neighbors: [Option<u8>; 8],
}

impl Neighborhood {
    pub fn new(center: u8, neighbors: [Option<u8>; 8]) -> Self {
        Self { center, neighbors }
    }

    /// Neighborhood of `(x, y)` read from the image as it currently stands.
    pub fn around(image: &GrayImage, x: usize, y: usize) -> Self {
        let mut neighbors = [None; 8];
        let mut k = 0;
        for dy in -1isize..=1 {
            for dx in -1isize..=1 {
                if dx == 0 && dy == 0 {
                    continue;
                }
                neighbors[k] = image.get_signed(x as isize + dx, y as isize + dy);
                k += 1;
            }
        }
        Self {
            center: image.get(x, y),
            neighbors,
        }
    }

    pub fn available(&self) -> usize {
        self.neighbors.iter().flatten().count()
    }
}

/// Outcome of [`choose_direction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaskDecision {
    /// `|center - neighbor| < T`, false for missing neighbors.
    pub mask: [bool; 8],
    /// Sum of `|(center - 1) - neighbor|` over masked neighbors.
    pub sad_minus: u32,
    /// Sum of `|(center + 1) - neighbor|` over masked neighbors.
    pub sad_plus: u32,
    pub choice: Direction,
    /// The center was saturated, so only one direction was legal.
    pub forced: bool,
}

/// Picks the ±1 candidate whose summed absolute difference to the similar
/// neighbors (those closer than `threshold`) is smaller.
///
/// Ties and empty masks fall back to a fair coin from `rng`. A center of 0 is
/// always moved up and 255 always down, regardless of the sums; no coin is
/// drawn in that case.
pub fn choose_direction(hood: &Neighborhood, threshold: u32, rng: &mut Rng) -> MaskDecision {
    let c = hood.center as i32;
    let mut mask = [false; 8];
    let (mut sad_minus, mut sad_plus) = (0u32, 0u32);
    for (m, n) in mask.iter_mut().zip(hood.neighbors) {
        let Some(n) = n else { continue };
        let n = n as i32;
        if (c - n).unsigned_abs() < threshold {
            *m = true;
            sad_minus += (c - 1 - n).unsigned_abs();
            sad_plus += (c + 1 - n).unsigned_abs();
        }
    }
    let (choice, forced) = match hood.center {
        0 => (Direction::Plus, true),
        255 => (Direction::Minus, true),
        _ => {
            let choice = if !mask.contains(&true) || sad_minus == sad_plus {
                Direction::from_coin(rng.coin())
            } else if sad_minus > sad_plus {
                Direction::Plus
            } else {
                Direction::Minus
            };
            (choice, false)
        }
    };
    MaskDecision {
        mask,
        sad_minus,
        sad_plus,
        choice,
        forced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> Neighborhood {
        // [[100,101,102],[100,·,103],[99,100,101]]
        Neighborhood::new(
            100,
            [100, 101, 102, 100, 103, 99, 100, 101].map(Some),
        )
    }

    /// Independent SAD: enumerate both candidates over the raw block.
    fn brute_sad(block: [[i32; 3]; 3], candidate: i32, t: i32) -> i32 {
        let c = block[1][1];
        let mut s = 0;
        for (r, row) in block.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                if (r, q) != (1, 1) && (c - v).abs() < t {
                    s += (candidate - v).abs();
                }
            }
        }
        s
    }

    #[test]
    fn worked_example_prefers_plus() {
        let block = [[100, 101, 102], [100, 100, 103], [99, 100, 101]];
        assert_eq!(brute_sad(block, 99, 4), 14);
        assert_eq!(brute_sad(block, 101, 4), 8);

        let d = choose_direction(&worked_example(), 4, &mut Rng::new(0));
        assert_eq!(d.mask, [true; 8]);
        assert_eq!(d.sad_minus, 14);
        assert_eq!(d.sad_plus, 8);
        assert_eq!(d.choice, Direction::Plus);
        assert!(!d.forced);
    }

    #[test]
    fn strict_threshold_excludes_distant_neighbor() {
        let mut n = [None; 8];
        n[0] = Some(120);
        n[1] = Some(104);
        n[2] = Some(103);
        let d = choose_direction(&Neighborhood::new(100, n), 4, &mut Rng::new(0));
        assert_eq!(d.mask[..3], [false, false, true]);
        assert_eq!((d.sad_minus, d.sad_plus), (4, 2));
        assert_eq!(d.choice, Direction::Plus);
    }

    #[test]
    fn saturated_centers_are_forced() {
        let up = Neighborhood::new(0, [Some(0); 8]);
        let d = choose_direction(&up, 4, &mut Rng::new(0));
        assert_eq!((d.choice, d.forced), (Direction::Plus, true));
        let down = Neighborhood::new(255, [Some(250); 8]);
        let d = choose_direction(&down, 4, &mut Rng::new(0));
        assert_eq!((d.choice, d.forced), (Direction::Minus, true));
    }

    #[test]
    fn ties_and_empty_masks_use_the_coin() {
        let flat = Neighborhood::new(50, [Some(50); 8]);
        let lonely = Neighborhood::new(50, [Some(200); 8]);
        for hood in [flat, lonely] {
            let mut rng = Rng::new(3);
            let mut plus = 0;
            for _ in 0..2000 {
                if choose_direction(&hood, 4, &mut rng).choice == Direction::Plus {
                    plus += 1;
                }
            }
            assert!((900..1100).contains(&plus), "{plus}");
        }
    }

    #[test]
    fn around_reads_borders_as_missing() {
        let img = GrayImage::from_fn(3, 3, |x, y| (y * 3 + x) as u8).unwrap();
        let corner = Neighborhood::around(&img, 0, 0);
        assert_eq!(corner.center, 0);
        assert_eq!(corner.available(), 3);
        assert_eq!(corner.neighbors[4], Some(1));
        assert_eq!(corner.neighbors[6], Some(3));
        assert_eq!(corner.neighbors[7], Some(4));
        let mid = Neighborhood::around(&img, 1, 1);
        assert_eq!(mid.neighbors, [0, 1, 2, 3, 5, 6, 7, 8].map(Some));
        assert_eq!(Neighborhood::around(&img, 1, 0).available(), 5);
    }
}
