use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector of a power product. Total degree is cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Self { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// Panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(exps))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(Self {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i % 64` set when variable `i` occurs.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Componentwise quotient and remainder by `q`: `self = q * quot + rem`.
    pub fn qsplit(&self, q: u32) -> (Monomial, Monomial) {
        assert!(q >= 1, "qsplit needs q >= 1");
        let quot = self.exps.iter().map(|&a| a / q).collect();
        let rem = self.exps.iter().map(|&a| a % q).collect();
        (Monomial::new(quot), Monomial::new(rem))
    }

    /// Drops or reorders variables: result variable `j` takes exponent of source `map[j]`.
    pub(crate) fn select(&self, map: &[Option<usize>]) -> Monomial {
        Monomial::new(map.iter().map(|src| src.map_or(0, |i| self.exps[i])).collect())
    }
}

pub(crate) fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

pub(crate) fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qsplit_examples() {
        let (q, r) = Monomial::new(vec![3, 1]).qsplit(2);
        assert_eq!(q.exponents(), &[1, 0]);
        assert_eq!(r.exponents(), &[1, 1]);

        let m = Monomial::new(vec![4, 0, 9]);
        let (q, r) = m.qsplit(1);
        assert_eq!(q, m);
        assert!(r.is_one());

        // componentwise integer division: 5 = 4*1+1, 7 = 4*1+3, 2 = 4*0+2
        let (q, r) = Monomial::new(vec![5, 7, 2]).qsplit(4);
        assert_eq!(q.exponents(), &[1, 1, 0]);
        assert_eq!(r.exponents(), &[1, 3, 2]);
    }

    #[test]
    fn overflow_is_an_error() {
        let a = Monomial::new(vec![u32::MAX, 0]);
        let b = Monomial::new(vec![1, 0]);
        assert_eq!(a.checked_mul(&b), Err(Error::ExponentOverflow));
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[1, 0, 1]);
        assert_eq!(a.lcm(&Monomial::new(vec![0, 3, 1])).exponents(), &[1, 3, 1]);
        assert!(Monomial::new(vec![1, 0]).is_coprime(&Monomial::new(vec![0, 5])));
    }
}
