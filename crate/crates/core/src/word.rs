//! Binary words over GF(2), packed into a single `u64`.
//!
//! Coordinate `i` of a word lives in bit `i` of the mask, so the string
//! `"1100"` parses to a word with coordinates (1,1,0,0). Words longer than
//! 64 are rejected; everything in this crate has length at most 48.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitXor};

use crate::error::{Error, Result};

/// Longest supported word.
pub const MAX_WORD_LEN: u32 = 64;

/// A fixed-length binary word, coordinate `i` stored in bit `i`.
///
/// Bits above `len` are always zero. Ordering is lexicographic on the
/// coordinate string (shorter words first), which is the order used for
/// canonical basis listings and tie-breaks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    len: u32,
    bits: u64,
}

impl BinaryWord {
    /// The zero word of the given length.
    pub fn zero(len: u32) -> Self {
        assert!(len <= MAX_WORD_LEN, "word length {len} exceeds {MAX_WORD_LEN}");
        BinaryWord { len, bits: 0 }
    }

    /// The all-ones word of the given length.
    pub fn ones(len: u32) -> Self {
        assert!(len <= MAX_WORD_LEN);
        let bits = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        BinaryWord { len, bits }
    }

    /// The weight-1 word with a one at coordinate `i`.
    pub fn unit(len: u32, i: u32) -> Self {
        assert!(i < len && len <= MAX_WORD_LEN);
        BinaryWord { len, bits: 1u64 << i }
    }

    /// Build from a raw mask, keeping only the low `len` bits.
    pub fn from_bits(len: u32, bits: u64) -> Self {
        assert!(len <= MAX_WORD_LEN);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        BinaryWord { len, bits: bits & mask }
    }

    /// Build from coordinate indices that carry a one.
    pub fn from_support(len: u32, support: &[u32]) -> Self {
        let mut bits = 0u64;
        for &i in support {
            assert!(i < len);
            bits |= 1u64 << i;
        }
        BinaryWord { len, bits }
    }

    /// Parse a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let len = s.chars().filter(|c| !c.is_whitespace()).count();
        if len > MAX_WORD_LEN as usize {
            return Err(Error::Input(format!("word length {len} exceeds {MAX_WORD_LEN}")));
        }
        let mut bits = 0u64;
        let mut i = 0u32;
        for c in s.chars() {
            match c {
                '0' => i += 1,
                '1' => {
                    bits |= 1u64 << i;
                    i += 1;
                }
                c if c.is_whitespace() => {}
                c => return Err(Error::Input(format!("invalid character {c:?} in word"))),
            }
        }
        Ok(BinaryWord { len: i, bits })
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coordinate `i` as a boolean.
    pub fn bit(&self, i: u32) -> bool {
        assert!(i < self.len);
        (self.bits >> i) & 1 == 1
    }

    /// GF(2) inner product. Panics on length mismatch.
    pub fn dot(&self, other: &BinaryWord) -> u8 {
        assert_eq!(self.len, other.len, "dot product of words of different length");
        ((self.bits & other.bits).count_ones() & 1) as u8
    }

    /// Size of the common support `|self ∩ other|`.
    pub fn intersection_weight(&self, other: &BinaryWord) -> u32 {
        assert_eq!(self.len, other.len);
        (self.bits & other.bits).count_ones()
    }

    /// True when the support of `self` lies inside the support of `mask`.
    pub fn supported_on(&self, mask: &BinaryWord) -> bool {
        assert_eq!(self.len, mask.len);
        self.bits & !mask.bits == 0
    }

    /// Coordinates carrying a one, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.len).filter(|&i| (self.bits >> i) & 1 == 1)
    }

    /// Coordinatewise complement.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord::from_bits(self.len, !self.bits)
    }

    /// Restrict to the support of `mask`: the bits of `self` at the
    /// positions of `mask`, repacked in increasing coordinate order into a
    /// word of length `mask.weight()`.
    pub fn project(&self, mask: &BinaryWord) -> BinaryWord {
        assert_eq!(self.len, mask.len);
        let mut bits = 0u64;
        let mut j = 0u32;
        for i in mask.support() {
            if (self.bits >> i) & 1 == 1 {
                bits |= 1u64 << j;
            }
            j += 1;
        }
        BinaryWord { len: j, bits }
    }

    /// Inverse of [`project`](Self::project): scatter the coordinates of
    /// `self` onto the support of `mask` inside a word of `mask.len()`.
    pub fn embed(&self, mask: &BinaryWord) -> BinaryWord {
        assert_eq!(self.len, mask.weight(), "embed: word length must match support size");
        let mut bits = 0u64;
        for (j, i) in mask.support().enumerate() {
            if (self.bits >> j) & 1 == 1 {
                bits |= 1u64 << i;
            }
        }
        BinaryWord { len: mask.len, bits }
    }
}

impl BitXor for BinaryWord {
    type Output = BinaryWord;
    fn bitxor(self, rhs: BinaryWord) -> BinaryWord {
        assert_eq!(self.len, rhs.len, "xor of words of different length");
        BinaryWord { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

impl BitAnd for BinaryWord {
    type Output = BinaryWord;
    fn bitand(self, rhs: BinaryWord) -> BinaryWord {
        assert_eq!(self.len, rhs.len);
        BinaryWord { len: self.len, bits: self.bits & rhs.bits }
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic on the coordinate string: the first differing
        // coordinate decides, and coordinate 0 is the leftmost.
        self.len.cmp(&other.len).then_with(|| {
            let d = self.bits ^ other.bits;
            if d == 0 {
                Ordering::Equal
            } else {
                let i = d.trailing_zeros();
                if (self.bits >> i) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if (self.bits >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
