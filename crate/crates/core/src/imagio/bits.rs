use crate::{Error, Result};

/// Width of the big-endian bit-count prefix of a framed message.
pub const LENGTH_PREFIX_BITS: usize = 32;

/// Ordered message bits. Byte conversions are MSB-first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BitStream {
    bits: Vec<bool>,
}

impl BitStream {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        let bits = bytes
            .iter()
            .flat_map(|&b| (0..8).rev().map(move |i| (b >> i) & 1 == 1))
            .collect();
        Self { bits }
    }

    /// Packs the bits MSB-first. A trailing partial byte is zero-padded.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.bits
            .chunks(8)
            .map(|chunk| {
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &bit)| acc | ((bit as u8) << (7 - i)))
            })
            .collect()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Prepends the 32-bit big-endian bit count.
    pub fn framed(&self) -> Result<BitStream> {
        let n = u32::try_from(self.bits.len()).map_err(|_| Error::Capacity {
            needed: self.bits.len() as u64,
            available: u32::MAX as u64,
        })?;
        let mut bits = Vec::with_capacity(LENGTH_PREFIX_BITS + self.bits.len());
        bits.extend((0..LENGTH_PREFIX_BITS).rev().map(|i| (n >> i) & 1 == 1));
        bits.extend_from_slice(&self.bits);
        Ok(BitStream { bits })
    }
}

impl FromIterator<bool> for BitStream {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

/// Decodes the payload length from the first 32 bits.
pub(crate) fn decode_length(prefix: &[bool]) -> u32 {
    debug_assert_eq!(prefix.len(), LENGTH_PREFIX_BITS);
    prefix.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32)
}

/// Frames a byte payload: 32-bit big-endian bit count, then the payload bits.
pub fn frame_message(payload: &[u8]) -> Result<BitStream> {
    let bits = payload.len() as u64 * 8;
    if bits > u32::MAX as u64 {
        return Err(Error::Capacity {
            needed: bits,
            available: u32::MAX as u64,
        });
    }
    BitStream::from_bytes(payload).framed()
}

/// Inverse of [`BitStream::framed`]. Bits after the declared payload are
/// ignored.
pub fn unframe_message(framed: &BitStream) -> Result<BitStream> {
    let bits = framed.bits();
    if bits.len() < LENGTH_PREFIX_BITS {
        return Err(Error::Framing(format!(
            "{} bits is shorter than the length prefix",
            bits.len()
        )));
    }
    let n = decode_length(&bits[..LENGTH_PREFIX_BITS]) as usize;
    let available = bits.len() - LENGTH_PREFIX_BITS;
    if n > available {
        return Err(Error::Framing(format!(
            "declared {n} payload bits but only {available} follow"
        )));
    }
    Ok(BitStream::from_bits(
        bits[LENGTH_PREFIX_BITS..LENGTH_PREFIX_BITS + n].to_vec(),
    ))
}
