use std::fmt::Write as _;

use super::Offset;
use crate::GrayImage;

/// Number of gray levels of an 8-bit image.
pub const LEVELS: usize = 256;

/// 256×256 pair counts for one offset. `counts[i][j]` is the number of
/// in-bounds positions with `g(x,y) = i` and `g(x+dx, y+dy) = j`.
#[derive(Clone, PartialEq, Eq)]
pub struct CooccurrenceMatrix {
    offset: Offset,
    counts: Vec<u64>,
}

impl std::fmt::Debug for CooccurrenceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CooccurrenceMatrix")
            .field("offset", &self.offset)
            .field("total", &self.total())
            .finish()
    }
}

impl CooccurrenceMatrix {
    /// Builds a matrix from explicit `(i, j, count)` entries.
    pub fn from_entries(offset: Offset, entries: impl IntoIterator<Item = (u8, u8, u64)>) -> Self {
        let mut counts = vec![0u64; LEVELS * LEVELS];
        for (i, j, c) in entries {
            counts[i as usize * LEVELS + j as usize] += c;
        }
        Self { offset, counts }
    }

    pub fn offset(&self) -> Offset {
        self.offset
    }

    #[inline]
    pub fn get(&self, i: u8, j: u8) -> u64 {
        self.counts[i as usize * LEVELS + j as usize]
    }

    /// Row-major counts, `LEVELS * LEVELS` entries.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Matrix of the reversed offset.
    pub fn transpose(&self) -> Self {
        let mut counts = vec![0u64; LEVELS * LEVELS];
        for i in 0..LEVELS {
            for j in 0..LEVELS {
                counts[j * LEVELS + i] = self.counts[i * LEVELS + j];
            }
        }
        Self {
            offset: self.offset.reversed(),
            counts,
        }
    }

    /// 256 lines of 256 comma-separated counts.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(LEVELS * LEVELS * 2);
        for row in self.counts.chunks(LEVELS) {
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write!(out, "{c}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Counts gray-level pairs at `offset`. Pairs with either end outside the
/// image are skipped; there is no wraparound or padding.
pub fn cooccurrence(image: &GrayImage, offset: Offset) -> CooccurrenceMatrix {
    let (w, h) = (image.width() as i64, image.height() as i64);
    let (dx, dy) = (offset.dx() as i64, offset.dy() as i64);
    let mut counts = vec![0u64; LEVELS * LEVELS];

    // x and x+dx must both lie in 0..w
    let x0 = (-dx).max(0);
    let x1 = (w - dx).min(w);
    let y0 = (-dy).max(0);
    let y1 = (h - dy).min(h);
    if x0 < x1 && y0 < y1 {
        let px = image.pixels();
        let w = w as usize;
        for y in y0 as usize..y1 as usize {
            let row = &px[y * w..(y + 1) * w];
            let ny = (y as i64 + dy) as usize;
            let nrow = &px[ny * w..(ny + 1) * w];
            for x in x0 as usize..x1 as usize {
                let nx = (x as i64 + dx) as usize;
                counts[row[x] as usize * LEVELS + nrow[nx] as usize] += 1;
            }
        }
    }
    CooccurrenceMatrix { offset, counts }
}
