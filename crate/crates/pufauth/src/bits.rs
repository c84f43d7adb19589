//! Fixed-width bit strings used across the lab: 32-bit challenges, 128-bit
//! responses, 24-bit ICAO addresses and pseudo-addresses.
//!
//! Bit order is big-endian everywhere: bit 0 is the most significant bit of
//! the first byte, which is also the most significant bit of the first hex
//! digit in the text encodings.

use rand::RngCore;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BitsError {
    #[error("expected {expected} hex characters, got {got}")]
    BadHexLength { expected: usize, got: usize },
    #[error("invalid hex: {0}")]
    BadHex(String),
}

fn decode_hex_exact<const N: usize>(s: &str) -> Result<[u8; N], BitsError> {
    if s.len() != 2 * N {
        return Err(BitsError::BadHexLength {
            expected: 2 * N,
            got: s.len(),
        });
    }
    let mut out = [0u8; N];
    hex::decode_to_slice(s, &mut out).map_err(|e| BitsError::BadHex(e.to_string()))?;
    Ok(out)
}

macro_rules! bitstring {
    ($name:ident, $bytes:expr, $bits:expr, $doc:expr) => {
        #[doc = $doc]
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub struct $name([u8; $bytes]);

        impl $name {
            pub const BYTE_LEN: usize = $bytes;
            pub const BIT_LEN: usize = $bits;

            pub fn from_bytes(bytes: [u8; $bytes]) -> Self {
                Self(bytes)
            }

            pub fn zero() -> Self {
                Self([0u8; $bytes])
            }

            pub fn as_bytes(&self) -> &[u8; $bytes] {
                &self.0
            }

            /// Bit `i` with big-endian indexing (bit 0 = MSB of byte 0).
            pub fn bit(&self, i: usize) -> bool {
                assert!(i < Self::BIT_LEN);
                (self.0[i / 8] >> (7 - (i % 8))) & 1 == 1
            }

            pub fn set_bit(&mut self, i: usize, value: bool) {
                assert!(i < Self::BIT_LEN);
                let mask = 1u8 << (7 - (i % 8));
                if value {
                    self.0[i / 8] |= mask;
                } else {
                    self.0[i / 8] &= !mask;
                }
            }

            pub fn flip_bit(&mut self, i: usize) {
                assert!(i < Self::BIT_LEN);
                self.0[i / 8] ^= 1u8 << (7 - (i % 8));
            }

            pub fn hamming_distance(&self, other: &Self) -> u32 {
                self.0
                    .iter()
                    .zip(other.0.iter())
                    .map(|(a, b)| (a ^ b).count_ones())
                    .sum()
            }

            pub fn random(rng: &mut impl RngCore) -> Self {
                let mut bytes = [0u8; $bytes];
                rng.fill_bytes(&mut bytes);
                Self(bytes)
            }

            pub fn to_hex(&self) -> String {
                hex::encode(self.0)
            }

            pub fn from_hex(s: &str) -> Result<Self, BitsError> {
                Ok(Self(decode_hex_exact::<$bytes>(s)?))
            }
        }

        impl std::fmt::Debug for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, concat!(stringify!($name), "({})"), self.to_hex())
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.to_hex())
            }
        }
    };
}

bitstring!(Challenge, 4, 32, "A 32-bit PUF challenge.");
bitstring!(Response, 16, 128, "A 128-bit PUF response.");
bitstring!(IcaoAddress, 3, 24, "A 24-bit aircraft transponder address.");
bitstring!(Tau, 3, 24, "A 24-bit pseudo-address derived from an address/response hash.");

impl Challenge {
    pub fn from_u32(value: u32) -> Self {
        Self(value.to_be_bytes())
    }

    pub fn as_u32(&self) -> u32 {
        u32::from_be_bytes(self.0)
    }

    /// Challenge number `index` of the reduced space `{0,1}^k || 0^(32-k)`:
    /// the free bits occupy the most significant positions, so numeric order
    /// on the index matches numeric order on the challenge value.
    pub fn from_subspace_index(index: u32, space_bits: u8) -> Self {
        assert!(space_bits >= 1 && space_bits <= 32);
        if space_bits == 32 {
            return Self::from_u32(index);
        }
        assert!(index < (1u32 << space_bits));
        Self::from_u32(index << (32 - space_bits))
    }

    /// Uniform draw from the reduced space `{0,1}^k || 0^(32-k)`.
    pub fn random_in_subspace(rng: &mut impl rand::Rng, space_bits: u8) -> Self {
        assert!(space_bits >= 1 && space_bits <= 32);
        if space_bits == 32 {
            Self::from_u32(rng.random())
        } else {
            Self::from_subspace_index(rng.random_range(0..(1u32 << space_bits)), space_bits)
        }
    }
}

impl IcaoAddress {
    pub fn from_u24(value: u32) -> Self {
        assert!(value < (1 << 24));
        let b = value.to_be_bytes();
        Self([b[1], b[2], b[3]])
    }

    pub fn as_u24(&self) -> u32 {
        u32::from_be_bytes([0, self.0[0], self.0[1], self.0[2]])
    }
}

impl Tau {
    /// Keeps the first `width` bits of a digest and zeroes the rest. The
    /// reduced widths exist for collision experiments; the protocol default
    /// is the full 24 bits.
    pub fn from_digest(digest: &[u8], width: u8) -> Self {
        assert!(width >= 1 && width <= 24);
        assert!(digest.len() >= 3);
        let mut bytes = [digest[0], digest[1], digest[2]];
        let full = u32::from_be_bytes([0, bytes[0], bytes[1], bytes[2]]);
        let masked = full & (!0u32 << (24 - width)) & 0x00ff_ffff;
        let be = masked.to_be_bytes();
        bytes = [be[1], be[2], be[3]];
        Self(bytes)
    }
}

impl Response {
    /// Flips the listed bit positions, returning the corrected copy.
    pub fn with_flipped_bits(&self, positions: &[usize]) -> Self {
        let mut out = *self;
        for &p in positions {
            out.flip_bit(p);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_zero_is_msb_of_first_hex_digit() {
        let mut c = Challenge::zero();
        c.set_bit(0, true);
        assert_eq!(c.to_hex(), "80000000");
        let mut r = Response::zero();
        r.set_bit(0, true);
        assert_eq!(&r.to_hex()[..2], "80");
    }

    #[test]
    fn hex_round_trip() {
        let c = Challenge::from_hex("deadbeef").unwrap();
        assert_eq!(c.to_hex(), "deadbeef");
        assert_eq!(c.as_u32(), 0xdeadbeef);
    }

    #[test]
    fn hex_rejects_wrong_width() {
        assert_eq!(
            Challenge::from_hex("abc"),
            Err(BitsError::BadHexLength {
                expected: 8,
                got: 3
            })
        );
        assert!(matches!(
            Response::from_hex(&"zz".repeat(16)),
            Err(BitsError::BadHex(_))
        ));
    }

    #[test]
    fn subspace_challenges_zero_trailing_bits() {
        let c = Challenge::from_subspace_index(0xffff, 16);
        assert_eq!(c.as_u32(), 0xffff_0000);
        for i in 16..32 {
            assert!(!c.bit(i));
        }
        // Numeric order on indices matches numeric order on values.
        assert!(
            Challenge::from_subspace_index(3, 16).as_u32()
                < Challenge::from_subspace_index(4, 16).as_u32()
        );
    }

    #[test]
    fn tau_width_masking() {
        let digest = [0xffu8; 32];
        let full = Tau::from_digest(&digest, 24);
        assert_eq!(full.to_hex(), "ffffff");
        let debug = Tau::from_digest(&digest, 8);
        assert_eq!(debug.to_hex(), "ff0000");
    }

    #[test]
    fn hamming_and_flip() {
        let a = Response::zero();
        let b = a.with_flipped_bits(&[0, 64, 127]);
        assert_eq!(a.hamming_distance(&b), 3);
        assert!(b.bit(0) && b.bit(64) && b.bit(127));
    }
}
