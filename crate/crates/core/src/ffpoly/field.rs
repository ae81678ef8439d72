use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted; products of two residues then fit in a `u32`.
pub const MAX_MODULUS: u32 = 1 << 16;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_modulus(p: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidRing(format!("{p} is not prime")));
    }
    if p >= MAX_MODULUS {
        return Err(Error::InvalidRing(format!("modulus {p} exceeds 2^16")));
    }
    Ok(())
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    (a * b) % p
}

#[inline]
pub(crate) fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue. Panics on zero.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in F_{p}");
    pow_mod(a, (p - 2) as u64, p)
}

pub(crate) fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// An element of the prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    value: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self {
            value: reduce_i64(value, modulus),
            modulus,
        })
    }

    pub(crate) fn from_reduced(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::RingMismatch(format!(
                "F_{} vs F_{}",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::from_reduced(
            add_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::from_reduced(
            sub_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(Self::from_reduced(
            mul_mod(self.value, other.value, self.modulus),
            self.modulus,
        ))
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(neg_mod(self.value, self.modulus), self.modulus)
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::from_reduced(pow_mod(self.value, e, self.modulus), self.modulus)
    }

    /// `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| Self::from_reduced(inv_mod(self.value, self.modulus), self.modulus))
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
