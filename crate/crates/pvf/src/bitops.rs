//! Bit-exact manipulation of 32-bit IEEE-754 parameter words.
//!
//! Everything here operates on the raw integer pattern, never through float
//! arithmetic, so NaN payloads, signed zeros, and subnormals survive a flip
//! unchanged. Bit 31 is the sign, bits 30..23 the exponent field, bits 22..0
//! the mantissa.

use serde::{Deserialize, Serialize};

use crate::error::{PvfError, Result};

/// Bit position of the sign bit in an FP32 word.
pub const SIGN_BIT: u8 = 31;
/// Number of bits in an FP32 word.
pub const BITS_PER_WORD: u8 = 32;

/// One FP32 scalar, addressed by its raw bit pattern.
///
/// The pattern is the source of truth; the float view is derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloatWord {
    bits: u32,
}

impl FloatWord {
    pub fn from_bits(bits: u32) -> Self {
        FloatWord { bits }
    }

    pub fn from_value(value: f32) -> Self {
        FloatWord {
            bits: value.to_bits(),
        }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn value(self) -> f32 {
        f32::from_bits(self.bits)
    }

    /// Sign bit (0 or 1).
    pub fn sign(self) -> u32 {
        self.bits >> 31
    }

    /// Biased exponent field, 8 bits.
    pub fn exponent_field(self) -> u32 {
        (self.bits >> 23) & 0xFF
    }

    /// Mantissa field, 23 bits.
    pub fn mantissa_field(self) -> u32 {
        self.bits & 0x7F_FFFF
    }
}

/// IEEE-754 single-precision value classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialClass {
    Normal,
    Subnormal,
    Zero,
    Infinity,
    Nan,
}

/// Identifies one bit inside one scalar of one named tensor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitAddress {
    pub tensor: String,
    pub flat_index: usize,
    pub bit: u8,
}

impl BitAddress {
    pub fn new(tensor: impl Into<String>, flat_index: usize, bit: u8) -> Self {
        BitAddress {
            tensor: tensor.into(),
            flat_index,
            bit,
        }
    }
}

/// Flips one bit of the word; all other bits are untouched.
pub fn flip_bit(word: FloatWord, bit: u8) -> Result<FloatWord> {
    if bit >= BITS_PER_WORD {
        return Err(PvfError::InvalidArgument(format!(
            "bit position {bit} out of range [0, 31]"
        )));
    }
    Ok(FloatWord::from_bits(word.bits() ^ (1u32 << bit)))
}

/// Classifies the word per the IEEE-754 single-precision definition.
pub fn classify_special(word: FloatWord) -> SpecialClass {
    let exp = word.exponent_field();
    let mantissa = word.mantissa_field();
    match (exp, mantissa) {
        (0xFF, 0) => SpecialClass::Infinity,
        (0xFF, _) => SpecialClass::Nan,
        (0, 0) => SpecialClass::Zero,
        (0, _) => SpecialClass::Subnormal,
        _ => SpecialClass::Normal,
    }
}
