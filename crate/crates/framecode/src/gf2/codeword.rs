use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitXor};

use crate::error::{Error, Result};

/// Maximum supported ambient length.
pub const MAX_LEN: usize = 1024;

/// A fixed-length bit vector over GF(2).
///
/// Coordinates are 0-based internally.  Coordinate `i` is stored at bit
/// `63 - (i % 64)` of word `i / 64`, i.e. the first coordinate is the most
/// significant bit of the first word.  With this packing, numeric comparison
/// of the word vectors equals lexicographic comparison of the bit strings
/// with coordinate 0 most significant — the tie-breaking order used
/// throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: usize,
    words: Vec<u64>,
}

impl Codeword {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN, "length {len} exceeds maximum {MAX_LEN}");
        Codeword {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// All-one word of the given length.
    pub fn ones(len: usize) -> Self {
        let mut w = Codeword::zero(len);
        for i in 0..len {
            w.set(i, true);
        }
        w
    }

    /// Parses a string of '0'/'1' characters.
    pub fn from_bits(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > MAX_LEN {
            return Err(Error::Parse(format!(
                "bit string length {} out of range 1..={}",
                s.len(),
                MAX_LEN
            )));
        }
        let mut w = Codeword::zero(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(w)
    }

    /// Word with ones exactly at the given 0-based coordinates.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut w = Codeword::zero(len);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.words[i / 64] >> (63 - (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (63 - (i % 64));
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// 0-based support, increasing.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// In-place XOR; lengths must agree.
    pub fn xor_assign(&mut self, other: &Codeword) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Coordinatewise product (bitwise AND), the paper's alpha . beta.
    pub fn mask(&self, other: &Codeword) -> Codeword {
        assert_eq!(self.len, other.len, "length mismatch in mask");
        Codeword {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Standard bilinear form <a,b> = wt(a.b) mod 2.
    pub fn dot(&self, other: &Codeword) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    /// Complement within the ambient length.
    pub fn complement(&self) -> Codeword {
        let mut w = Codeword {
            len: self.len,
            words: self.words.iter().map(|x| !x).collect(),
        };
        // clear padding past the final coordinate
        let tail = self.len % 64;
        if tail != 0 {
            let last = w.words.len() - 1;
            w.words[last] &= !0u64 << (64 - tail);
        }
        w
    }

    /// Index of the first set coordinate, if any.
    pub fn leading_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.leading_zeros() as usize);
            }
        }
        None
    }

    /// True if supp(self) is contained in supp(other).
    pub fn supported_in(&self, other: &Codeword) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in supported_in");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn checked_same_len(&self, other: &Codeword) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Ok(())
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(64));
        Codeword { len, words }
    }

    /// Restriction to the support of `mask_word`, in increasing coordinate
    /// order; the result has length wt(mask_word).
    pub fn restrict(&self, mask_word: &Codeword) -> Codeword {
        assert_eq!(self.len, mask_word.len, "length mismatch in restrict");
        let mut out = Codeword::zero(mask_word.weight() as usize);
        let mut j = 0;
        for i in 0..self.len {
            if mask_word.get(i) {
                if self.get(i) {
                    out.set(j, true);
                }
                j += 1;
            }
        }
        out
    }

    /// Inverse of [`restrict`](Self::restrict) for words supported on the
    /// mask: places the bits of `self` back at the support of `mask_word`.
    pub fn embed(&self, mask_word: &Codeword) -> Codeword {
        assert_eq!(
            self.len,
            mask_word.weight() as usize,
            "embed: length must equal mask weight"
        );
        let mut out = Codeword::zero(mask_word.len());
        let mut j = 0;
        for i in 0..mask_word.len() {
            if mask_word.get(i) {
                if self.get(j) {
                    out.set(i, true);
                }
                j += 1;
            }
        }
        out
    }

    /// Hex serialization: coordinates chunked in nibbles from coordinate 0,
    /// the last nibble zero-padded on the right.
    pub fn to_hex(&self) -> String {
        let mut s = String::new();
        let nibbles = self.len.div_ceil(4);
        for k in 0..nibbles {
            let mut v = 0u8;
            for b in 0..4 {
                let i = 4 * k + b;
                if i < self.len && self.get(i) {
                    v |= 8 >> b;
                }
            }
            s.push(char::from_digit(v as u32, 16).unwrap());
        }
        s
    }

    /// Parses [`to_hex`](Self::to_hex) output for a known length.
    pub fn from_hex(len: usize, s: &str) -> Result<Self> {
        if s.len() != len.div_ceil(4) {
            return Err(Error::Parse(format!(
                "hex string has {} digits, expected {} for length {len}",
                s.len(),
                len.div_ceil(4)
            )));
        }
        let mut w = Codeword::zero(len);
        for (k, c) in s.chars().enumerate() {
            let v = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {c:?}")))? as u8;
            for b in 0..4 {
                let i = 4 * k + b;
                let bit = v & (8 >> b) != 0;
                if i < len {
                    if bit {
                        w.set(i, true);
                    }
                } else if bit {
                    return Err(Error::Parse("hex padding bits must be zero".into()));
                }
            }
        }
        Ok(w)
    }
}

impl BitXor<&Codeword> for &Codeword {
    type Output = Codeword;
    fn bitxor(self, rhs: &Codeword) -> Codeword {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl BitAnd<&Codeword> for &Codeword {
    type Output = Codeword;
    fn bitand(self, rhs: &Codeword) -> Codeword {
        self.mask(rhs)
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Codeword {
    /// Lexicographic as left-to-right bit strings (coordinate 0 most
    /// significant); words of different lengths compare by length first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.cmp(&other.words))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
