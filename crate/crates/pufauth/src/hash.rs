//! The single 256-bit hash used everywhere, plus the derived primitives
//! built from it (pseudo-address derivation, truncations, KDF, keyed MAC).
//!
//! `h` is SHA-256. The pseudo-address and challenge-recovery rules hash raw
//! byte concatenations (3-byte address, 16-byte response, no separators);
//! the KDF and MAC are this lab's own constructions and length-frame their
//! inputs. All of it is simulation-grade: correct, deterministic, and not a
//! hardened implementation.

use crate::bits::{IcaoAddress, Response, Tau};
use sha2::{Digest, Sha256};

pub const DIGEST_LEN: usize = 32;

pub fn h(data: &[u8]) -> [u8; DIGEST_LEN] {
    Sha256::digest(data).into()
}

fn h_framed(domain: &str, parts: &[&[u8]]) -> [u8; DIGEST_LEN] {
    let mut hasher = Sha256::new();
    hasher.update(domain.as_bytes());
    hasher.update([0u8]);
    for part in parts {
        hasher.update((part.len() as u64).to_be_bytes());
        hasher.update(part);
    }
    hasher.finalize().into()
}

/// Pseudo-address: the first `tau_bits` bits of `h(bytes(ICAO) || bytes(R))`.
/// The protocol uses 24 bits; smaller widths exist for collision studies.
pub fn derive_tau(icao: &IcaoAddress, response: &Response, tau_bits: u8) -> Tau {
    let mut buf = [0u8; 3 + 16];
    buf[..3].copy_from_slice(icao.as_bytes());
    buf[3..].copy_from_slice(response.as_bytes());
    Tau::from_digest(&h(&buf), tau_bits)
}

/// Aircraft-stored response digest `theta = h(bytes(R))`.
pub fn derive_theta(response: &Response) -> [u8; DIGEST_LEN] {
    h(response.as_bytes())
}

/// First 32 bits of a digest, big-endian.
pub fn trunc32(digest: &[u8; DIGEST_LEN]) -> u32 {
    u32::from_be_bytes(digest[..4].try_into().unwrap())
}

/// Key derivation: domain-separated, length-framed hash of the secret and
/// context strings.
pub fn kdf(secret: &[u8], label: &str, context: &[&[u8]]) -> [u8; DIGEST_LEN] {
    let mut parts: Vec<&[u8]> = Vec::with_capacity(context.len() + 2);
    parts.push(secret);
    parts.push(label.as_bytes());
    parts.extend_from_slice(context);
    h_framed("pufauth.kdf", &parts)
}

/// Keyed MAC over the framed message parts. Verification is recompute-and-
/// compare; fine for a simulation, not a hardened construction.
pub fn mac(key: &[u8; DIGEST_LEN], parts: &[&[u8]]) -> [u8; DIGEST_LEN] {
    let mut all: Vec<&[u8]> = Vec::with_capacity(parts.len() + 1);
    all.push(key);
    all.extend_from_slice(parts);
    h_framed("pufauth.mac", &all)
}
