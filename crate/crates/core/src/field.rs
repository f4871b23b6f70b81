//! Arithmetic in the prime fields GF(2), GF(3), GF(5) and GF(7).
//!
//! Residues are stored as `u8` in canonical form `0..p`. The [`Prime`]
//! handle carries the raw residue operations that the matrix layer uses in
//! its inner loops; [`FpElement`] is the checked value type for callers that
//! want the modulus attached to each value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A supported prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u8);

impl Prime {
    pub const SUPPORTED: [u8; 4] = [2, 3, 5, 7];

    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);
    pub const SEVEN: Prime = Prime(7);

    pub fn new(p: u32) -> Result<Self> {
        match p {
            2 | 3 | 5 | 7 => Ok(Prime(p as u8)),
            _ => Err(Error::UnsupportedModulus(p)),
        }
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.0 as u16) as u8
    }

    /// Multiplicative inverse of a nonzero residue, by Fermat: a^(p-2).
    pub fn inv(self, a: u8) -> Option<u8> {
        if a % self.0 == 0 {
            return None;
        }
        Some(self.pow(a, (self.0 - 2) as u32))
    }

    pub fn pow(self, a: u8, mut e: u32) -> u8 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0 as u32
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of GF(p) that remembers its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    value: u8,
    p: Prime,
}

impl FpElement {
    /// Builds the canonical representative of `value` modulo `p`.
    pub fn new(value: i64, p: Prime) -> Self {
        FpElement {
            value: p.reduce(value),
            p,
        }
    }

    pub fn zero(p: Prime) -> Self {
        FpElement { value: 0, p }
    }

    pub fn one(p: Prime) -> Self {
        FpElement { value: 1, p }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: FpElement) -> Result<Prime> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(self.p)
    }

    pub fn add(self, other: FpElement) -> Result<FpElement> {
        let p = self.check(other)?;
        Ok(FpElement {
            value: p.add(self.value, other.value),
            p,
        })
    }

    pub fn sub(self, other: FpElement) -> Result<FpElement> {
        let p = self.check(other)?;
        Ok(FpElement {
            value: p.sub(self.value, other.value),
            p,
        })
    }

    pub fn mul(self, other: FpElement) -> Result<FpElement> {
        let p = self.check(other)?;
        Ok(FpElement {
            value: p.mul(self.value, other.value),
            p,
        })
    }

    pub fn neg(self) -> FpElement {
        FpElement {
            value: self.p.neg(self.value),
            p: self.p,
        }
    }

    pub fn inv(self) -> Result<FpElement> {
        let value = self.p.inv(self.value).ok_or(Error::NotInvertible)?;
        Ok(FpElement { value, p: self.p })
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
