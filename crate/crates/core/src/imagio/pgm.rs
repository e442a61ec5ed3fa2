//! Binary PGM (`P5`) with maxval 255.

use super::GrayImage;
use crate::{Error, Result};

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> &'a [u8] {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() || b == b'#' {
                break;
            }
            self.pos += 1;
        }
        &self.bytes[start..self.pos]
    }

    fn number(&mut self, field: &'static str) -> Result<usize> {
        let tok = self.token();
        if tok.is_empty() {
            return Err(Error::format(field, "missing"));
        }
        let text = std::str::from_utf8(tok).map_err(|_| Error::format(field, "not ASCII"))?;
        text.parse::<usize>()
            .map_err(|_| Error::format(field, format!("not a number: {text:?}")))
    }
}

/// Decodes a binary PGM. Comments are allowed anywhere in the header.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut cur = HeaderCursor { bytes, pos: 0 };
    let magic = cur.token();
    if magic != b"P5" {
        return Err(Error::format(
            "magic",
            format!("expected P5, found {:?}", String::from_utf8_lossy(magic)),
        ));
    }
    let width = cur.number("width")?;
    let height = cur.number("height")?;
    let maxval = cur.number("maxval")?;
    if width == 0 {
        return Err(Error::format("width", "zero"));
    }
    if height == 0 {
        return Err(Error::format("height", "zero"));
    }
    if maxval != 255 {
        return Err(Error::format("maxval", format!("{maxval} (only 255 is supported)")));
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(Error::format("raster", "missing header terminator")),
    }
    let len = width
        .checked_mul(height)
        .ok_or_else(|| Error::format("width", "dimensions overflow"))?;
    let raster = &bytes[cur.pos..];
    if raster.len() < len {
        return Err(Error::format(
            "raster",
            format!("truncated: {} of {len} bytes", raster.len()),
        ));
    }
    GrayImage::new(width, height, raster[..len].to_vec())
}

/// Canonical encoding: `P5\n<w> <h>\n255\n` followed by the raw raster.
pub fn write_pgm(image: &GrayImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", image.width(), image.height());
    let mut out = Vec::with_capacity(header.len() + image.len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(image.pixels());
    out
}
