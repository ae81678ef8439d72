//! Frobenius pushforwards. Over `S = F_p[x_1..x_n]` and `q = p^e`, the module
//! `F^e_* S` is free on the monomials `x^b` with `b` in `Λ = {0..q-1}^n`, and
//! multiplication by `x^a` sends `x^b` to `x^{(a+b) div q} * x^{(a+b) mod q}`.
//! The matrices below record these actions in that basis.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::ffpoly::{Monomial, Polynomial, Ring, Term};
use crate::matrix::PolyMatrix;
use crate::modpres::{prune, PresentedModule, RMatrix};

/// Largest supported `q^n`.
pub const MAX_BASIS: usize = 1 << 12;

/// The basis `Λ` of `F^e_* S`, numbered in base `q` with the first variable
/// most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PushforwardBasis {
    q: u32,
    n: usize,
    size: usize,
}

impl PushforwardBasis {
    pub fn new(q: u32, n: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument(format!("q = {q} must be at least 2")));
        }
        let size = (0..n)
            .try_fold(1usize, |acc, _| acc.checked_mul(q as usize))
            .filter(|&s| s <= MAX_BASIS)
            .ok_or_else(|| Error::InvalidArgument(format!("{q}^{n} exceeds {MAX_BASIS} basis elements")))?;
        Ok(Self { q, n, size })
    }

    /// Basis for `F^e_*` over a ring with characteristic `p` and `n` variables.
    pub fn for_ring(ring: &Ring, e: u32) -> Result<Self> {
        let q = ring
            .modulus()
            .checked_pow(e)
            .ok_or_else(|| Error::InvalidArgument(format!("p^{e} overflows")))?;
        Self::new(q, ring.nvars())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// `q^n`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn to_number(&self, b: &[u32]) -> usize {
        debug_assert_eq!(b.len(), self.n);
        b.iter().fold(0usize, |acc, &d| {
            debug_assert!(d < self.q);
            acc * self.q as usize + d as usize
        })
    }

    pub fn to_multiindex(&self, mut k: usize) -> Vec<u32> {
        let q = self.q as usize;
        let mut out = vec![0u32; self.n];
        for slot in out.iter_mut().rev() {
            *slot = (k % q) as u32;
            k /= q;
        }
        out
    }

    /// Row of the single nonzero entry in column `j` of `U(a, e)`, and that entry's monomial.
    fn act(&self, a: &Monomial, j: usize) -> (usize, Monomial) {
        let b = self.to_multiindex(j);
        let mut rem = Vec::with_capacity(self.n);
        let mut quo = Vec::with_capacity(self.n);
        for (ai, bi) in a.exponents().iter().zip(&b) {
            let s = ai + bi;
            rem.push(s % self.q);
            quo.push(s / self.q);
        }
        (self.to_number(&rem), Monomial::new(quo))
    }
}

/// `U(a, e)`: the `q^n x q^n` matrix of multiplication by `x^a` on `F^e_* S`.
pub fn u_monomial(ring: &Ring, a: &Monomial, e: u32) -> Result<PolyMatrix> {
    u_poly(&Polynomial::monomial(ring, a.clone(), 1), e)
}

/// `U(f, e) = Σ c_a U(a, e)`.
pub fn u_poly(f: &Polynomial, e: u32) -> Result<PolyMatrix> {
    let ring = f.ring();
    let basis = PushforwardBasis::for_ring(ring, e)?;
    let n = basis.size();
    let mut m = PolyMatrix::zero(ring, n, n);
    fill_block(&mut m, 0, 0, f, &basis);
    Ok(m)
}

fn fill_block(m: &mut PolyMatrix, r0: usize, c0: usize, f: &Polynomial, basis: &PushforwardBasis) {
    if f.is_zero() {
        return;
    }
    let ring = f.ring();
    let n = basis.size();
    for j in 0..n {
        let mut rows: Vec<Vec<Term>> = vec![Vec::new(); n];
        for (a, c) in f.terms() {
            let (i, mono) = basis.act(a, j);
            rows[i].push((mono, *c));
        }
        for (i, terms) in rows.into_iter().enumerate() {
            if !terms.is_empty() {
                m.set(r0 + i, c0 + j, Polynomial::from_terms(ring, terms));
            }
        }
    }
}

/// `U(A, e)`: `A` with every entry replaced by its `U` block.
pub fn u_matrix(a: &PolyMatrix, e: u32) -> Result<PolyMatrix> {
    let ring = a.ring();
    let basis = PushforwardBasis::for_ring(ring, e)?;
    let n = basis.size();
    let mut m = PolyMatrix::zero(ring, n * a.rows(), n * a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            fill_block(&mut m, i * n, j * n, a.get(i, j), &basis);
        }
    }
    Ok(m)
}

/// Presentation of `M` over `S`: its own relations followed by `f * e_i` for
/// every relation `f` of `R = S/I` and every generator `e_i`.
pub fn lift_presentation(module: &PresentedModule) -> Result<PolyMatrix> {
    let ring = module.ring();
    let amb = ring.ambient();
    let t = module.rows();
    let m = module.matrix();
    let mut cols: Vec<Vec<Polynomial>> = (0..m.cols()).map(|j| m.col(j)).collect();
    for f in ring.relations().gens() {
        for i in 0..t {
            let mut c = vec![Polynomial::zero(amb); t];
            c[i] = f.clone();
            cols.push(c);
        }
    }
    PolyMatrix::from_cols(amb, t, cols)
}

/// `F^e_* M` as a pruned presentation over the same ring.
pub fn pushforward(module: &PresentedModule, e: u32, cfg: &Config) -> Result<PresentedModule> {
    if e == 0 {
        return Err(Error::InvalidArgument(
            "the Frobenius power e must be at least 1".into(),
        ));
    }
    let lifted = lift_presentation(module)?;
    let u = u_matrix(&lifted, e)?;
    cfg.budget.check_time()?;
    let over_r = RMatrix::new(module.ring(), u)?;
    prune(&PresentedModule::new(over_r), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse, PolyRing, TermOrder};

    fn ring(p: u32, vars: &[&str]) -> Ring {
        PolyRing::new(p, vars, TermOrder::GrevLex).unwrap()
    }

    #[test]
    fn numbering_roundtrip() {
        for (q, n) in [(2, 1), (2, 3), (3, 2), (4, 3)] {
            let b = PushforwardBasis::new(q, n).unwrap();
            for k in 0..b.size() {
                assert_eq!(b.to_number(&b.to_multiindex(k)), k);
            }
        }
        let b = PushforwardBasis::new(2, 3).unwrap();
        assert_eq!(b.to_multiindex(4), vec![1, 0, 0]);
    }

    #[test]
    fn one_acts_as_identity() {
        let r = ring(3, &["x", "y"]);
        let u = u_monomial(&r, &Monomial::one(2), 1).unwrap();
        assert_eq!(u, PolyMatrix::identity(&r, 9));
    }

    #[test]
    fn x_on_the_line() {
        let r = ring(2, &["x"]);
        let u = u_poly(&parse("x", &r).unwrap(), 1).unwrap();
        let want = PolyMatrix::from_rows(
            &r,
            vec![
                vec![Polynomial::zero(&r), parse("x", &r).unwrap()],
                vec![Polynomial::one(&r), Polynomial::zero(&r)],
            ],
        )
        .unwrap();
        assert_eq!(u, want);
    }

    #[test]
    fn one_monomial_entry_per_column() {
        let r = ring(2, &["x", "y", "z"]);
        let a = Monomial::new(vec![3, 1, 4]);
        let u = u_monomial(&r, &a, 2).unwrap();
        for j in 0..u.cols() {
            let col = u.col(j);
            let nz: Vec<&Polynomial> = col.iter().filter(|p| !p.is_zero()).collect();
            assert_eq!(nz.len(), 1);
            assert_eq!(nz[0].len(), 1);
        }
    }

    #[test]
    fn zero_matrix_stays_zero() {
        let r = ring(2, &["x", "y"]);
        let u = u_matrix(&PolyMatrix::zero(&r, 1, 1), 1).unwrap();
        assert_eq!(u, PolyMatrix::zero(&r, 4, 4));
    }

    #[test]
    fn free_module_over_polynomial_ring() {
        let r = ring(2, &["x", "y"]);
        let qr = crate::modpres::QuotientRing::polynomial(&r);
        let m = PresentedModule::free(&qr, 1);
        let f = pushforward(&m, 1, &Config::default()).unwrap();
        assert_eq!(f.rows(), 4);
        assert!(f.matrix().is_zero());
    }

    #[test]
    fn oversized_basis_rejected() {
        assert!(PushforwardBasis::new(2, 13).is_err());
    }
}
