//! Checked naturals and {0,1} bits.
//!
//! `Nat` deliberately implements no `std::ops` traits: every arithmetic step
//! goes through a checked method that reports overflow instead of wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Nonnegative 64-bit integer with overflow-checked arithmetic.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Nat(u64);

impl Nat {
    pub const ZERO: Nat = Nat(0);
    pub const ONE: Nat = Nat(1);

    pub const fn new(value: u64) -> Self {
        Nat(value)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    pub fn add(self, rhs: Nat, op: &'static str) -> Result<Nat> {
        self.0
            .checked_add(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow { op })
    }

    pub fn sub(self, rhs: Nat, op: &'static str) -> Result<Nat> {
        self.0
            .checked_sub(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow { op })
    }

    pub fn mul(self, rhs: Nat, op: &'static str) -> Result<Nat> {
        self.0
            .checked_mul(rhs.0)
            .map(Nat)
            .ok_or(Error::Overflow { op })
    }

    /// Floor of `self / rhs`. Division by zero is reported as a domain error.
    pub fn floor_div(self, rhs: Nat, op: &'static str) -> Result<Nat> {
        if rhs.0 == 0 {
            return Err(Error::domain(op, "division by zero"));
        }
        Ok(Nat(self.0 / rhs.0))
    }
}

impl From<u64> for Nat {
    fn from(value: u64) -> Self {
        Nat(value)
    }
}

impl From<Nat> for u64 {
    fn from(n: Nat) -> Self {
        n.0
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A value known to be 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub const fn as_u64(self) -> u64 {
        match self {
            Bit::Zero => 0,
            Bit::One => 1,
        }
    }

    pub const fn is_one(self) -> bool {
        matches!(self, Bit::One)
    }

    /// Narrows the result of a floor expression that is guaranteed to land in {0,1}.
    pub(crate) fn from_floor(value: Nat, op: &'static str) -> Result<Bit> {
        match value.get() {
            0 => Ok(Bit::Zero),
            1 => Ok(Bit::One),
            v => Err(Error::range(op, format!("expected a bit, got {v}"))),
        }
    }
}

impl From<bool> for Bit {
    fn from(b: bool) -> Self {
        if b {
            Bit::One
        } else {
            Bit::Zero
        }
    }
}

impl From<Bit> for u8 {
    fn from(b: Bit) -> Self {
        b.as_u64() as u8
    }
}

impl TryFrom<u8> for Bit {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, Self::Error> {
        match v {
            0 => Ok(Bit::Zero),
            1 => Ok(Bit::One),
            _ => Err(format!("bit out of range: {v}")),
        }
    }
}

impl From<Bit> for Nat {
    fn from(b: Bit) -> Self {
        Nat(b.as_u64())
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_u64().fmt(f)
    }
}
