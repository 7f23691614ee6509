//! Words over the Klein four group, packed two bits per coordinate.
//!
//! Coordinate 0 sits in the most significant pair, so comparing packed
//! values is lexicographic comparison with `0 < 1 < ω < ω̄`.

use std::fmt;

use crate::error::{CodeError, Result};
use crate::symbol::{Flavor, Symbol};

/// Longest word that fits in one 64-bit lane.
pub const MAX_LENGTH: usize = 32;

/// Mask selecting the low bit of each of the first `n` coordinate pairs.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        0x5555_5555_5555_5555u64 >> (64 - 2 * n)
    }
}

#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - 2 * n)
    }
}

#[inline]
pub(crate) fn shift_of(n: usize, i: usize) -> usize {
    2 * (n - 1 - i)
}

#[inline]
pub(crate) fn symbol_at(bits: u64, n: usize, i: usize) -> u8 {
    ((bits >> shift_of(n, i)) & 3) as u8
}

#[inline]
pub(crate) fn ewt_bits(bits: u64) -> u32 {
    let lo = bits & 0x5555_5555_5555_5555;
    let hi = (bits >> 1) & 0x5555_5555_5555_5555;
    (lo & !hi).count_ones() + 2 * hi.count_ones()
}

#[inline]
pub(crate) fn hwt_bits(bits: u64) -> u32 {
    ((bits | (bits >> 1)) & 0x5555_5555_5555_5555).count_ones()
}

#[inline]
pub(crate) fn inner_bits(x: u64, y: u64) -> u8 {
    let m = 0x5555_5555_5555_5555u64;
    let t = (((x >> 1) & y) ^ ((y >> 1) & x)) & m;
    (t.count_ones() & 1) as u8
}

#[inline]
pub(crate) fn quad_bits(bits: u64, flavor: Flavor) -> u8 {
    match flavor {
        Flavor::L => {
            let lo = bits & 0x5555_5555_5555_5555;
            let hi = (bits >> 1) & 0x5555_5555_5555_5555;
            ((lo & !hi).count_ones() & 1) as u8
        }
        Flavor::K => (hwt_bits(bits) & 1) as u8,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn zero(len: usize) -> Result<Word> {
        if len > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(len));
        }
        Ok(Word {
            len: len as u8,
            bits: 0,
        })
    }

    /// Builds a word from packed bits, ignoring bits beyond the length.
    pub fn from_bits(len: usize, bits: u64) -> Result<Word> {
        if len > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(len));
        }
        Ok(Word {
            len: len as u8,
            bits: bits & full_mask(len),
        })
    }

    pub(crate) fn from_bits_unchecked(len: usize, bits: u64) -> Word {
        debug_assert!(len <= MAX_LENGTH && bits & !full_mask(len) == 0);
        Word {
            len: len as u8,
            bits,
        }
    }

    pub fn from_symbols(symbols: &[Symbol]) -> Result<Word> {
        let n = symbols.len();
        if n > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(n));
        }
        let bits = symbols
            .iter()
            .fold(0u64, |acc, s| (acc << 2) | s.value() as u64);
        Ok(Word {
            len: n as u8,
            bits,
        })
    }

    pub fn parse(text: &str, flavor: Flavor) -> Result<Word> {
        let symbols = text
            .chars()
            .map(|c| {
                Symbol::from_char(c, flavor).ok_or_else(|| CodeError::Parse {
                    line: 0,
                    message: format!("invalid {flavor} symbol `{c}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Word::from_symbols(&symbols)
    }

    pub fn format(&self, flavor: Flavor) -> String {
        self.symbols().map(|s| s.to_char(flavor)).collect()
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn get(&self, i: usize) -> Symbol {
        assert!(i < self.len(), "coordinate {i} out of range");
        Symbol::new(symbol_at(self.bits, self.len(), i))
    }

    pub fn with(&self, i: usize, s: Symbol) -> Word {
        assert!(i < self.len(), "coordinate {i} out of range");
        let sh = shift_of(self.len(), i);
        Word {
            len: self.len,
            bits: (self.bits & !(3 << sh)) | ((s.value() as u64) << sh),
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            return Err(CodeError::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        Ok(Word {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// Euclidean weight with norms `0, 1, 2, 2`.
    pub fn ewt(&self) -> u32 {
        ewt_bits(self.bits)
    }

    pub fn hwt(&self) -> u32 {
        hwt_bits(self.bits)
    }

    pub fn quad(&self, flavor: Flavor) -> u8 {
        quad_bits(self.bits, flavor)
    }

    pub fn inner(&self, other: &Word) -> Result<u8> {
        self.check_len(other)?;
        Ok(inner_bits(self.bits, other.bits))
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        let n = self.len() + other.len();
        if n > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(n));
        }
        let bits = if other.len == 0 {
            self.bits
        } else {
            (self.bits << (2 * other.len())) | other.bits
        };
        Ok(Word { len: n as u8, bits })
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.format(Flavor::L))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Flavor::L).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(w("1w").add(&w("w1")).unwrap(), w("WW"));
        assert_eq!(w("11w").add(&w("1w1")).unwrap(), w("0WW"));
        let x = w("1wW0");
        assert!(x.add(&x).unwrap().is_zero());
        assert_eq!(
            w("1").add(&w("11")),
            Err(CodeError::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn weights() {
        assert_eq!(w("000").ewt(), 0);
        assert_eq!(w("11w").ewt(), 4);
        assert_eq!(w("www").ewt(), 6);
        assert_eq!(w("WW0").hwt(), 2);
        assert_eq!(w("1w").hwt(), 2);
        assert_eq!(w("000").hwt(), 0);
    }

    #[test]
    fn forms() {
        assert_eq!(w("1w").quad(Flavor::L), 1);
        assert_eq!(w("1w").inner(&w("w1")).unwrap(), 0);
        assert_eq!(w("001").inner(&w("10w")).unwrap(), 1);
        assert_eq!(w("001").inner(&w("W0W")).unwrap(), 1);
        for s in ["1wW", "WWW", "0110"] {
            assert_eq!(w(s).inner(&w(s)).unwrap(), 0);
            assert_eq!(w(s).quad(Flavor::L) as u32, w(s).ewt() % 2);
        }
    }

    #[test]
    fn text_round_trip() {
        let x = Word::parse("0abc", Flavor::K).unwrap();
        assert_eq!(x.format(Flavor::K), "0abc");
        assert_eq!(x.format(Flavor::L), "01wW");
        assert!(Word::parse("0x", Flavor::L).is_err());
    }

    #[test]
    fn packing_is_lexicographic() {
        assert!(w("01") < w("10"));
        assert!(w("1W") < w("w0"));
        assert_eq!(w("1w").concat(&w("W")).unwrap(), w("1wW"));
    }
}
