use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{add_mod, inv_mod, mul_mod, neg_mod, pow_mod, sub_mod, PrimeFieldElement};
use super::monomial::Monomial;
use super::ring::{check_same, same_ring, Ring};
use crate::error::{Error, Result};

pub type Term = (Monomial, u32);

/// Sparse polynomial over F_p. Terms are sorted strictly descending in the
/// ring's term order and carry nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = super::field::reduce_i64(c, ring.modulus());
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), 1)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: u32) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let c = c % ring.modulus();
        Self {
            ring: ring.clone(),
            terms: if c == 0 { Vec::new() } else { vec![(m, c)] },
        }
    }

    /// Canonicalizes arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms<I: IntoIterator<Item = Term>>(ring: &Ring, terms: I) -> Self {
        let p = ring.modulus();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = add_mod(*e, c % p, p);
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Caller guarantees sortedness and nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.modulus()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<PrimeFieldElement> {
        self.terms
            .first()
            .map(|t| PrimeFieldElement::from_reduced(t.1, self.modulus()))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn coeff_of(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|t| &t.0 == m).map_or(0, |t| t.1)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponents()[i] > 0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exponents()[i]).max().unwrap_or(0)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let p = self.modulus();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: u32| if negate_other { neg_mod(c, p) } else { c };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        sub_mod(a[i].1, b[j].1, p)
                    } else {
                        add_mod(a[i].1, b[j].1, p)
                    };
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), conv(*c))));
        Self::from_sorted(&self.ring, out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.checked_mul_term(m, *c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.checked_mul_term(m, *c);
        }
        let p = self.modulus();
        let mut acc: HashMap<Monomial, u32> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let e = acc.entry(m).or_insert(0);
                *e = add_mod(*e, mul_mod(*ca, *cb, p), p);
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = self.ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(Self::from_sorted(&self.ring, terms))
    }

    /// Multiplication by `c * m`; order is preserved because term orders are multiplicative.
    pub fn checked_mul_term(&self, m: &Monomial, c: u32) -> Result<Self> {
        let p = self.modulus();
        let c = c % p;
        if c == 0 {
            return Ok(Self::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| Ok((mm.checked_mul(m)?, mul_mod(*cc, c, p))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_sorted(&self.ring, terms))
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Self {
        self.checked_mul_term(m, c).expect("exponent overflow")
    }

    pub fn scale(&self, c: u32) -> Self {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn checked_pow(&self, mut e: u32) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.checked_pow(e).expect("exponent overflow")
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if *c == 1 => self.clone(),
            Some((_, c)) => self.scale(inv_mod(*c, self.modulus())),
        }
    }

    /// Formal partial derivative; coefficients reduced mod p.
    pub fn derivative(&self, var: usize) -> Self {
        let p = self.modulus();
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            let nc = mul_mod(*c, e % p, p);
            if e == 0 || nc == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            Some((Monomial::new(exps), nc))
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Replaces variable `var` by `value` (a polynomial in the same ring).
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self> {
        check_same(&self.ring, &value.ring)?;
        if !self.contains_var(var) {
            return Ok(self.clone());
        }
        let maxdeg = self.degree_in(var) as usize;
        let mut powers = vec![Self::one(&self.ring)];
        for k in 1..=maxdeg {
            let next = powers[k - 1].checked_mul(value)?;
            powers.push(next);
        }
        let mut out = Self::zero(&self.ring);
        // group terms by exponent of `var`
        let mut groups: Vec<Vec<Term>> = vec![Vec::new(); maxdeg + 1];
        for (m, c) in &self.terms {
            let e = m.exponents()[var] as usize;
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            groups[e].push((Monomial::new(exps), *c));
        }
        for (e, g) in groups.into_iter().enumerate() {
            if g.is_empty() {
                continue;
            }
            let cof = Self::from_terms(&self.ring, g);
            out = out.checked_add(&cof.checked_mul(&powers[e])?)?;
        }
        Ok(out)
    }

    /// Evaluates variable `var` at the constant `c`.
    pub fn specialize(&self, var: usize, c: u32) -> Self {
        let p = self.modulus();
        let terms = self.terms.iter().map(|(m, cc)| {
            let e = m.exponents()[var];
            let mut exps = m.exponents().to_vec();
            exps[var] = 0;
            (Monomial::new(exps), mul_mod(*cc, pow_mod(c % p, e as u64, p), p))
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Moves the polynomial into `target`; target variable `j` takes the exponent of
    /// source variable `map[j]` (or 0). Source variables not mapped must not occur.
    pub fn remap(&self, target: &Ring, map: &[Option<usize>]) -> Result<Self> {
        if target.modulus() != self.modulus() {
            return Err(Error::RingMismatch("different characteristic".into()));
        }
        debug_assert_eq!(map.len(), target.nvars());
        let mapped: Vec<bool> = (0..self.ring.nvars()).map(|i| map.contains(&Some(i))).collect();
        for (m, _) in &self.terms {
            if m.support().any(|i| !mapped[i]) {
                return Err(Error::RingMismatch(format!(
                    "polynomial {} uses a variable absent from the target ring",
                    self
                )));
            }
        }
        Ok(Self::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.select(map), *c)),
        ))
    }

    /// Moves into a ring whose variables are looked up by name.
    pub fn remap_by_name(&self, target: &Ring) -> Result<Self> {
        let map: Vec<Option<usize>> = target.vars().iter().map(|v| self.ring.var_index(v)).collect();
        self.remap(target, &map)
    }

    /// Same polynomial re-sorted for another order on the same variables.
    pub fn reorder(&self, target: &Ring) -> Self {
        debug_assert_eq!(target.vars(), self.ring.vars());
        Self::from_terms(target, self.terms.iter().cloned())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[i].clone()),
                    _ => factors.push(format!("{}^{}", vars[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial arithmetic")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("polynomial arithmetic")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let p = self.modulus();
        Polynomial::from_sorted(
            &self.ring,
            self.terms.iter().map(|(m, c)| (m.clone(), neg_mod(*c, p))).collect(),
        )
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
