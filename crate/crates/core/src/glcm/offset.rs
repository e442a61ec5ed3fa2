use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Pixel displacement `(dx, dy)`; `dx` moves along a row, `dy` down columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Offset {
    dx: i32,
    dy: i32,
}

impl Offset {
    /// The eight unit neighbors, clockwise from east.
    pub const NEIGHBORS: [Offset; 8] = [
        Offset { dx: 1, dy: 0 },
        Offset { dx: 1, dy: 1 },
        Offset { dx: 0, dy: 1 },
        Offset { dx: -1, dy: 1 },
        Offset { dx: -1, dy: 0 },
        Offset { dx: -1, dy: -1 },
        Offset { dx: 0, dy: -1 },
        Offset { dx: 1, dy: -1 },
    ];

    pub fn new(dx: i32, dy: i32) -> Result<Self> {
        if dx == 0 && dy == 0 {
            return Err(Error::InvalidArgument("offset (0,0) pairs a pixel with itself".into()));
        }
        Ok(Self { dx, dy })
    }

    #[inline]
    pub fn dx(self) -> i32 {
        self.dx
    }

    #[inline]
    pub fn dy(self) -> i32 {
        self.dy
    }

    pub fn reversed(self) -> Self {
        Self {
            dx: -self.dx,
            dy: -self.dy,
        }
    }

    pub fn is_unit_neighbor(self) -> bool {
        self.dx.abs() <= 1 && self.dy.abs() <= 1
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.dx, self.dy)
    }
}

/// Parses `"dx,dy"`.
impl FromStr for Offset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("offset must look like dx,dy: {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let dx = a.trim().parse().map_err(|_| bad())?;
        let dy = b.trim().parse().map_err(|_| bad())?;
        Offset::new(dx, dy)
    }
}

/// Non-empty ordered list of distinct offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OffsetSet {
    offsets: Vec<Offset>,
}

impl OffsetSet {
    pub fn new(offsets: Vec<Offset>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::InvalidArgument("empty offset set".into()));
        }
        for (i, o) in offsets.iter().enumerate() {
            if offsets[..i].contains(o) {
                return Err(Error::InvalidArgument(format!("duplicate offset {o}")));
            }
        }
        Ok(Self { offsets })
    }

    /// Horizontal, vertical and both diagonals: `(1,0), (0,1), (1,1), (-1,1)`.
    pub fn feature_default() -> Self {
        Self {
            offsets: vec![
                Offset { dx: 1, dy: 0 },
                Offset { dx: 0, dy: 1 },
                Offset { dx: 1, dy: 1 },
                Offset { dx: -1, dy: 1 },
            ],
        }
    }

    /// `(1,0), (0,1)` only.
    pub fn horizontal_vertical() -> Self {
        Self {
            offsets: vec![Offset { dx: 1, dy: 0 }, Offset { dx: 0, dy: 1 }],
        }
    }

    /// All eight unit neighbors.
    pub fn all_neighbors() -> Self {
        Self {
            offsets: Offset::NEIGHBORS.to_vec(),
        }
    }

    pub fn offsets(&self) -> &[Offset] {
        &self.offsets
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    /// Always false for a constructed set.
    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }
}

impl Default for OffsetSet {
    fn default() -> Self {
        Self::feature_default()
    }
}
