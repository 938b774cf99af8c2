use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum supported word length.
pub const MAX_LEN: usize = 64;

/// A fixed-length vector over GF(2), stored as a bit mask.
///
/// Position 1 (variable `x1`) is bit 0 of the mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BinaryWord {
    bits: u64,
    len: usize,
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinaryWord {
    pub fn zero(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    /// Builds a word from a mask; bits at or above `len` must be clear.
    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::WordTooLong(len));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::Parse(format!(
                "mask {bits:#x} has bits beyond length {len}"
            )));
        }
        Ok(Self { bits, len })
    }

    /// Builds a word from 1-based positions of its nonzero entries.
    pub fn from_support(positions: &[usize], len: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in positions {
            if i == 0 || i > len {
                return Err(Error::Parse(format!("position {i} outside 1..={len}")));
            }
            bits |= 1 << (i - 1);
        }
        Self::from_bits(bits, len)
    }

    pub fn from_slice(values: &[u8]) -> Result<Self> {
        let mut bits = 0u64;
        if values.len() > MAX_LEN {
            return Err(Error::WordTooLong(values.len()));
        }
        for (i, &v) in values.iter().enumerate() {
            match v {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("entry {v} is not binary"))),
            }
        }
        Self::from_bits(bits, values.len())
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i >= 1 && i <= self.len,
            "position {i} outside 1..={}",
            self.len
        );
        self.bits >> (i - 1) & 1 == 1
    }

    /// 1-based positions of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        other.check_len(self.len)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            len: self.len,
        })
    }

    pub fn distance(&self, other: &Self) -> Result<u32> {
        Ok(self.xor(other)?.weight())
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.len != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: self.len,
            });
        }
        Ok(())
    }

    /// Integer whose most significant bit is position 1, so that integer
    /// order equals lexicographic order of the printed string.
    pub fn lex_key(&self) -> u64 {
        if self.len == 0 {
            return 0;
        }
        self.bits.reverse_bits() >> (64 - self.len)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    /// Parses a contiguous binary string; the leftmost character is position 1.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("`{other}` in binary word `{s}`"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_slice(&values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: BinaryWord = "1111100".parse().unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.weight(), 5);
        assert_eq!(w.support(), vec![1, 2, 3, 4, 5]);
        assert_eq!(w.to_string(), "1111100");
        assert!(w.get(1) && !w.get(7));
    }

    #[test]
    fn rejects_bad_input() {
        assert!("10201".parse::<BinaryWord>().is_err());
        assert!(BinaryWord::from_bits(0b1000, 3).is_err());
        assert!(BinaryWord::zero(65).is_err());
        assert!(BinaryWord::from_support(&[0], 3).is_err());
    }

    #[test]
    fn xor_requires_equal_lengths() {
        let a = BinaryWord::zero(3).unwrap();
        let b = BinaryWord::zero(4).unwrap();
        assert_eq!(
            a.xor(&b),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 4
            })
        );
    }

    #[test]
    fn lex_key_orders_like_strings() {
        let mut words: Vec<BinaryWord> = (0..32u64)
            .map(|b| BinaryWord::from_bits(b, 5).unwrap())
            .collect();
        words.sort_by_key(|w| w.lex_key());
        let strings: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
    }
}
