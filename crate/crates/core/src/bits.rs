use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A fixed-width string of bits, most significant bit first.
///
/// Bit `i` of a vector feeds wire `i` of a bus, so the text form `"01"` puts
/// `0` on the first wire and `1` on the second. Read as a number, `"01"` is 1.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitVector {
    bits: Vec<bool>,
}

impl BitVector {
    pub fn new(bits: Vec<bool>) -> Self {
        BitVector { bits }
    }

    pub fn zeros(width: usize) -> Self {
        BitVector {
            bits: vec![false; width],
        }
    }

    /// The `width` low bits of `value`, most significant first.
    pub fn from_value(value: u64, width: usize) -> Self {
        debug_assert!(
            width >= 64 || value >> width == 0,
            "{value} does not fit in {width} bits"
        );
        let bits = (0..width)
            .rev()
            .map(|shift| shift < 64 && (value >> shift) & 1 == 1)
            .collect();
        BitVector { bits }
    }

    /// The vector read as an unsigned number, if it fits in 64 bits.
    pub fn value(&self) -> Option<u64> {
        let significant = self.bits.iter().skip_while(|b| !**b).count();
        if significant > 64 {
            return None;
        }
        Some(self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    /// True for the all-zero vector, the reserved "undefined" code.
    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut bits = Vec::with_capacity(self.width() + other.width());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(&other.bits);
        BitVector { bits }
    }

    pub fn split_at(&self, mid: usize) -> (BitVector, BitVector) {
        let (a, b) = self.bits.split_at(mid);
        (BitVector::new(a.to_vec()), BitVector::new(b.to_vec()))
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> BitVector {
        BitVector::new(self.bits[range].to_vec())
    }
}

impl From<Vec<bool>> for BitVector {
    fn from(bits: Vec<bool>) -> Self {
        BitVector { bits }
    }
}

impl FromIterator<bool> for BitVector {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        BitVector {
            bits: iter.into_iter().collect(),
        }
    }
}

impl<'a> FromIterator<&'a BitVector> for BitVector {
    fn from_iter<I: IntoIterator<Item = &'a BitVector>>(iter: I) -> Self {
        BitVector {
            bits: iter
                .into_iter()
                .flat_map(|v| v.bits.iter().copied())
                .collect(),
        }
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(
                    format!("bit {i}"),
                    format!("expected '0' or '1', found {other:?}"),
                )),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitVector::new)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Number of bits needed to write any of `count` distinct values, clamped to
/// at least one so every bus has a wire.
pub fn code_width(count: u64) -> usize {
    if count <= 2 {
        1
    } else {
        (64 - (count - 1).leading_zeros()) as usize
    }
}

/// Input lanes for the 64 consecutive input values starting at `base`.
///
/// Lane `j` of the returned words carries input value `base + j`; word `i`
/// holds wire `i`, which is bit `width - 1 - i` of the value. Lanes past
/// `2^width` repeat earlier values and should be masked off by the caller.
pub fn packed_inputs(width: usize, base: u64) -> Vec<u64> {
    (0..width)
        .map(|wire| {
            let shift = width - 1 - wire;
            let mut word = 0u64;
            for lane in 0..64u64 {
                let value = base.wrapping_add(lane);
                if shift < 64 && (value >> shift) & 1 == 1 {
                    word |= 1 << lane;
                }
            }
            word
        })
        .collect()
}

/// Mask selecting the lanes of a packed batch that hold real inputs.
pub fn lane_mask(width: usize, base: u64) -> u64 {
    if width >= 64 {
        return u64::MAX;
    }
    let total = 1u64 << width;
    let live = total.saturating_sub(base).min(64);
    if live == 64 {
        u64::MAX
    } else {
        (1u64 << live) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_round_trip() {
        let v = BitVector::from_value(5, 4);
        assert_eq!(v.to_string(), "0101");
        assert_eq!(v.value(), Some(5));
        assert_eq!(BitVector::zeros(3).value(), Some(0));
        assert!(BitVector::zeros(3).is_zero());
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert_eq!("".parse::<BitVector>().unwrap().width(), 0);
        assert!("01a".parse::<BitVector>().is_err());
        assert!(" 01".parse::<BitVector>().is_err());
    }

    #[test]
    fn code_widths() {
        assert_eq!(code_width(0), 1);
        assert_eq!(code_width(1), 1);
        assert_eq!(code_width(2), 1);
        assert_eq!(code_width(3), 2);
        assert_eq!(code_width(4), 2);
        assert_eq!(code_width(5), 3);
        // 6 vertices plus the reserved zero need three bits.
        assert_eq!(code_width(7), 3);
        assert_eq!(code_width(8), 3);
        assert_eq!(code_width(9), 4);
    }

    #[test]
    fn packing_matches_values() {
        let words = packed_inputs(3, 0);
        for lane in 0..8u64 {
            let bits: Vec<bool> = words.iter().map(|w| (w >> lane) & 1 == 1).collect();
            assert_eq!(BitVector::new(bits), BitVector::from_value(lane, 3));
        }
        assert_eq!(lane_mask(3, 0), 0xff);
        assert_eq!(lane_mask(7, 64), u64::MAX);
        assert_eq!(lane_mask(0, 0), 1);
    }
}
