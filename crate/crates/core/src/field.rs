//! Prime field arithmetic.
//!
//! Containers in this crate store raw residues (`u64` in `[0, p)`) next to a
//! single [`Modulus`]; [`FpScalar`] bundles one residue with its modulus for
//! the places where scalars travel alone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported characteristic. Products of two residues fit in `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(u64);

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let p = u64::deserialize(d)?;
        Modulus::new(p).map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Modulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat: `a^(p-2)`.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.0) {
            return Err(Error::DivisionByZero(self.0));
        }
        Ok(self.pow(a, self.0 - 2))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue in `F_p` together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: Modulus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

impl FpScalar {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        FpScalar {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn from_residue(value: u64, modulus: Modulus) -> Self {
        FpScalar {
            value: value % modulus.get(),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FpScalar) -> Result<Modulus> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        Ok(self.modulus)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FpScalar) -> Result<FpScalar> {
        field_ops(self, other, FieldOp::Add)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: FpScalar) -> Result<FpScalar> {
        field_ops(self, other, FieldOp::Sub)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: FpScalar) -> Result<FpScalar> {
        field_ops(self, other, FieldOp::Mul)
    }

    pub fn pow(self, exp: u64) -> FpScalar {
        FpScalar {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<FpScalar> {
        fp_inv(self)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

pub fn field_ops(a: FpScalar, b: FpScalar, kind: FieldOp) -> Result<FpScalar> {
    let m = a.same_field(b)?;
    let value = match kind {
        FieldOp::Add => m.add(a.value, b.value),
        FieldOp::Sub => m.sub(a.value, b.value),
        FieldOp::Mul => m.mul(a.value, b.value),
    };
    Ok(FpScalar { value, modulus: m })
}

pub fn fp_inv(a: FpScalar) -> Result<FpScalar> {
    Ok(FpScalar {
        value: a.modulus.inv(a.value)?,
        modulus: a.modulus,
    })
}
