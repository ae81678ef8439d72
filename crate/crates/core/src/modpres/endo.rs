//! Splitting a presented module along an idempotent endomorphism. Endomorphisms
//! are found as solutions of a linear system over F_p (entries of bounded
//! degree), an idempotent is extracted from the spectrum of a random element at
//! the origin, and refined until it is exact on the module.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::grading::{self, Grading};
use super::module_gb::SubmoduleGB;
use super::rmatrix::RMatrix;
use crate::config::Config;
use crate::error::Result;
use crate::ffpoly::{add_mod, inv_mod, mul_mod, neg_mod, sub_mod, Monomial, Polynomial};

/// Largest total degree of endomorphism entries searched.
pub const MAX_ENDO_DEGREE: u64 = 2;
/// Random elements tried per degree bound.
const TRIALS: usize = 32;
/// Random degree-preserving endomorphisms tried for graded presentations.
const GRADED_TRIALS: usize = 16;
/// Cubic refinement steps in the graded case; each squares the nilpotent error.
const GRADED_STEPS: usize = 16;
/// Newton refinement steps before giving up.
const REFINE_STEPS: usize = 8;
/// Lifts of a constant idempotent are enumerated up to this many.
const MAX_LIFTS: u64 = 1 << 8;
/// Eigenvalues are searched by exhaustion only for small fields.
const MAX_EIGEN_SEARCH: u32 = 1 << 10;

type Dense = Vec<Vec<u32>>;

/// An exact idempotent endomorphism `ψ` of `Coker(m)` with `ψ` and `1 - ψ`
/// both nonzero at the origin, or `None` when none is found.
pub(crate) fn find_idempotent(m: &RMatrix, cfg: &Config) -> Result<Option<Vec<Vec<Polynomial>>>> {
    let t = m.rows();
    if t < 2 {
        return Ok(None);
    }
    let ring = m.ring();
    let cols: Vec<Vec<Polynomial>> = (0..m.cols()).map(|j| m.col(j)).collect();
    let gb = SubmoduleGB::new(ring, t, &cols, &cfg.budget)?;
    let ctx = Ctx { m, gb: &gb, cfg };
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ (t as u64) << 32 ^ m.cols() as u64);
    if let Some(g) = grading::detect(m) {
        let endos = ctx.endomorphisms(&ctx.graded_unknowns(&g))?;
        if endos.len() > 1 {
            for _ in 0..GRADED_TRIALS {
                cfg.budget.check_time()?;
                let phi = ctx.random_combination(&endos, &mut rng);
                if let Some(psi) = ctx.graded_idempotent(&phi)? {
                    return Ok(Some(psi));
                }
            }
        }
        return Ok(None);
    }
    for d in 0..=MAX_ENDO_DEGREE {
        let endos = ctx.endomorphisms(&ctx.bounded_unknowns(d))?;
        if endos.len() <= 1 {
            continue;
        }
        for _ in 0..TRIALS {
            cfg.budget.check_time()?;
            let phi = ctx.random_combination(&endos, &mut rng);
            if let Some(psi) = ctx.idempotent_from(&phi, &endos, &mut rng)? {
                return Ok(Some(psi));
            }
        }
    }
    Ok(None)
}

/// Spans of constant parts up to this dimension are searched exhaustively.
const MAX_EXHAUSTIVE: u32 = 16;
/// Random combinations tried when the span is larger.
const ISO_SAMPLES: usize = 256;

/// Whether `Coker(m)` and `Coker(n)` are isomorphic, decided through graded
/// maps when both presentations are connected, pruned and homogeneous for a
/// common weight vector. `Some(true)` comes with an explicit isomorphism.
/// `Some(false)` is exact when one of the modules is indecomposable (graded
/// indecomposables that are isomorphic are isomorphic up to a shift of
/// degrees). `None` means the test does not apply or was inconclusive.
pub(crate) fn graded_isomorphic(m: &RMatrix, n: &RMatrix, cfg: &Config) -> Result<Option<bool>> {
    let t = m.rows();
    if n.rows() != t {
        return Ok(Some(false));
    }
    if t == 0 {
        return Ok(Some(true));
    }
    let connected = |a: &RMatrix| super::module::components(a).len() == 1;
    if !connected(m) || !connected(n) {
        return Ok(None);
    }
    let Some(gm) = grading::detect(m) else {
        return Ok(None);
    };
    let Some(gn) = grading::with_weights(n, gm.weights.clone()) else {
        return Ok(None);
    };
    let normalized = |d: &[i64]| {
        let lo = *d.iter().min().unwrap();
        let mut v: Vec<i64> = d.iter().map(|x| x - lo).collect();
        v.sort_unstable();
        v
    };
    if normalized(&gm.row_degrees) != normalized(&gn.row_degrees) {
        return Ok(Some(false));
    }
    let shift = gm.row_degrees.iter().min().unwrap() - gn.row_degrees.iter().min().unwrap();
    let sum = m.direct_sum(n)?;
    let mut rows = gm.row_degrees.clone();
    rows.extend(gn.row_degrees.iter().map(|d| d + shift));
    let g = Grading {
        weights: gm.weights,
        row_degrees: rows,
    };
    let cols: Vec<Vec<Polynomial>> = (0..sum.cols()).map(|j| sum.col(j)).collect();
    let gb = SubmoduleGB::new(sum.ring(), 2 * t, &cols, &cfg.budget)?;
    let ctx = Ctx { m: &sum, gb: &gb, cfg };
    // maps sending the generators of the first summand into the second
    let unknowns: Vec<_> = ctx
        .graded_unknowns(&g)
        .into_iter()
        .filter(|(i, k, _)| *i >= t && *k < t)
        .collect();
    let p = ctx.p();
    let cross = |e: &Endo| -> Dense {
        let c = constant_part(e);
        (t..2 * t).map(|i| c[i][..t].to_vec()).collect()
    };
    let mut parts: Vec<Dense> = Vec::new();
    for e in ctx.endomorphisms(&unknowns)? {
        let c = cross(&e);
        if c.iter().flatten().any(|&x| x != 0) {
            parts.push(c);
        }
    }
    let invertible = |coeffs: &[u32]| {
        let mut a = vec![vec![0u32; t]; t];
        for (c, part) in coeffs.iter().zip(&parts) {
            for (row, prow) in a.iter_mut().zip(part) {
                for (x, y) in row.iter_mut().zip(prow) {
                    *x = add_mod(*x, mul_mod(*c, *y, p), p);
                }
            }
        }
        charpoly(&a, p)[0] != 0
    };
    let total = (p as u64)
        .checked_pow(parts.len() as u32)
        .filter(|_| parts.len() as u32 <= MAX_EXHAUSTIVE);
    if let Some(total) = total {
        for idx in 0..total {
            cfg.budget.check_time()?;
            let mut k = idx;
            let coeffs: Vec<u32> = (0..parts.len())
                .map(|_| {
                    let c = (k % p as u64) as u32;
                    k /= p as u64;
                    c
                })
                .collect();
            if invertible(&coeffs) {
                return Ok(Some(true));
            }
        }
        return Ok(Some(false));
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for _ in 0..ISO_SAMPLES {
        let coeffs: Vec<u32> = (0..parts.len()).map(|_| rng.gen_range(0..p)).collect();
        if invertible(&coeffs) {
            return Ok(Some(true));
        }
    }
    Ok(None)
}

struct Ctx<'a> {
    m: &'a RMatrix,
    gb: &'a SubmoduleGB,
    cfg: &'a Config,
}

/// `t x t` matrix of polynomials acting on generators: column `k` is the image of `e_k`.
type Endo = Vec<Vec<Polynomial>>;

impl Ctx<'_> {
    fn p(&self) -> u32 {
        self.m.ring().modulus()
    }

    fn t(&self) -> usize {
        self.m.rows()
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.m.ring().ambient())
    }

    /// Unknown entries `mu * E_ik` of total degree `<= d`.
    fn bounded_unknowns(&self, d: u64) -> Vec<(usize, usize, Monomial)> {
        let t = self.t();
        let monos = monomials_up_to(self.m.ring().nvars(), d);
        let mut out = Vec::new();
        for i in 0..t {
            for k in 0..t {
                for mu in &monos {
                    out.push((i, k, mu.clone()));
                }
            }
        }
        out
    }

    /// Unknown entries of degree-preserving maps: `deg(mu) = deg(e_k) - deg(e_i)`.
    fn graded_unknowns(&self, g: &Grading) -> Vec<(usize, usize, Monomial)> {
        let t = self.t();
        let mut out = Vec::new();
        for i in 0..t {
            for k in 0..t {
                let diff = g.row_degrees[k] - g.row_degrees[i];
                if diff < 0 {
                    continue;
                }
                for mu in g.monomials_of_weight(diff as u64) {
                    out.push((i, k, mu));
                }
            }
        }
        out
    }

    /// Basis of `{P : P * A ⊆ im A}` among matrices spanned by `unknowns`.
    fn endomorphisms(&self, unknowns: &[(usize, usize, Monomial)]) -> Result<Vec<Endo>> {
        let amb = self.m.ring().ambient();
        let t = self.t();
        let mut coords: HashMap<(usize, usize, Monomial), usize> = HashMap::new();
        let mut rows: Vec<Vec<(usize, u32)>> = Vec::with_capacity(unknowns.len());
        for (i, k, mu) in unknowns {
            self.cfg.budget.check_time()?;
            let mut row = Vec::new();
            for j in 0..self.m.cols() {
                let a = self.m.get(*k, j);
                if a.is_zero() {
                    continue;
                }
                let mut v = vec![self.zero(); t];
                v[*i] = a.mul_term(mu, 1);
                for (r, entry) in self.gb.normal_form(&v, &self.cfg.budget)?.into_iter().enumerate() {
                    for (mono, c) in entry.into_terms() {
                        let n = coords.len();
                        let idx = *coords.entry((j, r, mono)).or_insert(n);
                        row.push((idx, c));
                    }
                }
            }
            rows.push(row);
        }
        let kernel = left_kernel(&rows, coords.len(), self.p());
        Ok(kernel
            .into_iter()
            .map(|combo| {
                let mut e = vec![vec![self.zero(); t]; t];
                for (u, c) in combo.into_iter().enumerate() {
                    if c != 0 {
                        let (i, k, mu) = &unknowns[u];
                        let term = Polynomial::monomial(amb, mu.clone(), c);
                        e[*i][*k] = &e[*i][*k] + &term;
                    }
                }
                e
            })
            .collect())
    }

    fn random_combination(&self, basis: &[Endo], rng: &mut StdRng) -> Endo {
        let t = self.t();
        let p = self.p();
        let mut out = vec![vec![self.zero(); t]; t];
        for b in basis {
            let c = rng.gen_range(0..p);
            if c == 0 {
                continue;
            }
            for i in 0..t {
                for k in 0..t {
                    out[i][k] = &out[i][k] + &b[i][k].scale(c);
                }
            }
        }
        out
    }

    /// Reduces each column modulo the relations, giving a canonical representative.
    fn normalize(&self, e: Endo) -> Result<Endo> {
        let t = self.t();
        let mut out = vec![vec![self.zero(); t]; t];
        for k in 0..t {
            let col: Vec<Polynomial> = (0..t).map(|i| e[i][k].clone()).collect();
            let nf = self.gb.normal_form(&col, &self.cfg.budget)?;
            for (i, v) in nf.into_iter().enumerate() {
                out[i][k] = v;
            }
        }
        Ok(out)
    }

    fn compose(&self, a: &Endo, b: &Endo) -> Result<Endo> {
        let t = self.t();
        let ring = self.m.ring();
        let mut out = vec![vec![self.zero(); t]; t];
        for i in 0..t {
            for k in 0..t {
                let mut acc = self.zero();
                for l in 0..t {
                    if !a[i][l].is_zero() && !b[l][k].is_zero() {
                        acc = &acc + &(&a[i][l] * &b[l][k]);
                    }
                }
                out[i][k] = ring.reduce(&acc);
            }
        }
        self.normalize(out)
    }

    fn combine(&self, parts: &[(u32, &Endo)]) -> Endo {
        let t = self.t();
        let mut out = vec![vec![self.zero(); t]; t];
        for (c, e) in parts {
            for i in 0..t {
                for k in 0..t {
                    out[i][k] = &out[i][k] + &e[i][k].scale(*c);
                }
            }
        }
        out
    }

    fn identity(&self) -> Endo {
        let t = self.t();
        let one = Polynomial::one(self.m.ring().ambient());
        (0..t)
            .map(|i| (0..t).map(|k| if i == k { one.clone() } else { self.zero() }).collect())
            .collect()
    }

    fn eval_poly(&self, h: &[u32], phi: &Endo) -> Result<Endo> {
        let mut acc = self.combine(&[]);
        let id = self.identity();
        for &c in h.iter().rev() {
            acc = self.compose(&acc, phi)?;
            acc = self.combine(&[(1, &acc), (c, &id)]);
        }
        self.normalize(acc)
    }

    /// `δ` in the span of `basis` with `ψδ + δψ - δ = ψ - ψ²`, so that
    /// `(ψ + δ)² - (ψ + δ) = δ²`.
    fn newton_step(&self, psi: &Endo, sq: &Endo, basis: &[Endo]) -> Result<Option<Endo>> {
        let p = self.p();
        let mut coords: HashMap<(usize, usize, Monomial), usize> = HashMap::new();
        let mut rows = Vec::with_capacity(basis.len() + 1);
        for d in basis {
            self.cfg.budget.check_time()?;
            let lhs = self.combine(&[
                (1, &self.compose(psi, d)?),
                (1, &self.compose(d, psi)?),
                (neg_mod(1, p), d),
            ]);
            rows.push(flatten(&self.normalize(lhs)?, &mut coords));
        }
        let target = self.combine(&[(neg_mod(1, p), psi), (1, sq)]);
        rows.push(flatten(&target, &mut coords));
        let last = basis.len();
        let Some(sol) = left_kernel(&rows, coords.len(), p).into_iter().find(|v| v[last] != 0) else {
            return Ok(None);
        };
        let scale = inv_mod(sol[last], p);
        let parts: Vec<(u32, &Endo)> = sol[..last]
            .iter()
            .zip(basis)
            .filter(|(c, _)| **c != 0)
            .map(|(c, d)| (mul_mod(*c, scale, p), d))
            .collect();
        Ok(Some(self.combine(&parts)))
    }

    /// An element of the span of `basis` whose value at the origin is
    /// `target`, with a basis of the elements of the span vanishing there.
    fn lift_constant(&self, target: &Dense, basis: &[Endo]) -> Option<(Endo, Vec<Endo>)> {
        let p = self.p();
        let t = self.t();
        let mut rows: Vec<Vec<(usize, u32)>> = basis
            .iter()
            .map(|b| {
                (0..t * t)
                    .filter_map(|x| {
                        let c = constant_term(&b[x / t][x % t]);
                        (c != 0).then_some((x, c))
                    })
                    .collect()
            })
            .collect();
        rows.push(
            (0..t * t)
                .filter_map(|x| {
                    let c = target[x / t][x % t];
                    (c != 0).then_some((x, neg_mod(c, p)))
                })
                .collect(),
        );
        let last = basis.len();
        let kernel = left_kernel(&rows, t * t, p);
        let sol = kernel.iter().find(|v| v[last] != 0)?;
        let scale = inv_mod(sol[last], p);
        let span = |v: &[u32], s: u32| {
            let parts: Vec<(u32, &Endo)> = v[..last]
                .iter()
                .zip(basis)
                .filter(|(c, _)| **c != 0)
                .map(|(c, d)| (mul_mod(*c, s, p), d))
                .collect();
            self.combine(&parts)
        };
        let nil = kernel.iter().filter(|v| v[last] == 0).map(|v| span(v, 1)).collect();
        Some((span(sol, scale), nil))
    }

    /// An exact idempotent among `lift + span(nil)`, searched exhaustively
    /// when that affine space has at most `MAX_LIFTS` points.
    fn search_lifts(&self, lift: &Endo, nil: &[Endo]) -> Result<Option<Endo>> {
        let p = self.p() as u64;
        let Some(total) = p.checked_pow(nil.len() as u32).filter(|&n| n <= MAX_LIFTS) else {
            return Ok(None);
        };
        for idx in 0..total {
            self.cfg.budget.check_time()?;
            let mut k = idx;
            let mut parts: Vec<(u32, &Endo)> = vec![(1, lift)];
            for n in nil {
                let c = (k % p) as u32;
                k /= p;
                if c != 0 {
                    parts.push((c, n));
                }
            }
            let psi = self.normalize(self.combine(&parts))?;
            if self.compose(&psi, &psi)? == psi {
                return Ok(Some(psi));
            }
        }
        Ok(None)
    }

    /// In the graded case degree-preserving endomorphisms form a finite
    /// dimensional algebra whose maps vanishing at the origin are nilpotent, so
    /// `ψ -> 3ψ² - 2ψ³` reaches an exact idempotent.
    fn graded_idempotent(&self, phi: &Endo) -> Result<Option<Endo>> {
        let p = self.p();
        let a = constant_part(phi);
        let chi = charpoly(&a, p);
        if p > MAX_EIGEN_SEARCH {
            return Ok(None);
        }
        for lambda in 0..p {
            let mult = root_multiplicity(&chi, lambda, p);
            if mult == 0 || mult == self.t() {
                continue;
            }
            let factor = upow(&[neg_mod(lambda, p), 1], mult, p);
            let (rest, _) = udivrem(&chi, &factor, p);
            let (s, _) = bezout(&factor, &rest, p);
            let mut psi = self.eval_poly(&umul(&s, &factor, p), phi)?;
            for _ in 0..GRADED_STEPS {
                self.cfg.budget.check_time()?;
                let sq = self.compose(&psi, &psi)?;
                if sq == psi {
                    return Ok(Some(psi));
                }
                let cube = self.compose(&sq, &psi)?;
                psi = self.combine(&[(3 % p, &sq), (neg_mod(2 % p, p), &cube)]);
            }
        }
        Ok(None)
    }

    fn idempotent_from(&self, phi: &Endo, basis: &[Endo], rng: &mut StdRng) -> Result<Option<Endo>> {
        let p = self.p();
        let a = constant_part(phi);
        let chi = charpoly(&a, p);
        if p > MAX_EIGEN_SEARCH {
            return Ok(None);
        }
        for lambda in 0..p {
            let mult = root_multiplicity(&chi, lambda, p);
            if mult == 0 || mult == self.t() {
                continue;
            }
            let factor = upow(&[neg_mod(lambda, p), 1], mult, p);
            let (rest, _) = udivrem(&chi, &factor, p);
            let (s, _) = bezout(&factor, &rest, p);
            let h = umul(&s, &factor, p);
            let e0 = dense_eval(&h, &a, p);
            let Some((lift, nil)) = self.lift_constant(&e0, basis) else {
                continue;
            };
            if let Some(psi) = self.search_lifts(&lift, &nil)? {
                return Ok(Some(psi));
            }
            let mut start = vec![(1, &lift)];
            start.extend(nil.iter().map(|n| (rng.gen_range(0..p), n)));
            let mut psi = self.normalize(self.combine(&start))?;
            for _ in 0..REFINE_STEPS {
                self.cfg.budget.check_time()?;
                let sq = self.compose(&psi, &psi)?;
                if sq == psi {
                    return Ok(Some(psi));
                }
                let Some(delta) = self.newton_step(&psi, &sq, basis)? else {
                    break;
                };
                psi = self.normalize(self.combine(&[(1, &psi), (1, &delta)]))?;
            }
        }
        Ok(None)
    }
}

fn flatten(e: &Endo, coords: &mut HashMap<(usize, usize, Monomial), usize>) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for (i, row) in e.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            for (m, c) in entry.terms() {
                let n = coords.len();
                let idx = *coords.entry((i, k, m.clone())).or_insert(n);
                out.push((idx, *c));
            }
        }
    }
    out
}

fn dense_eval(h: &[u32], a: &Dense, p: u32) -> Dense {
    let n = a.len();
    let mut acc: Dense = vec![vec![0; n]; n];
    for &c in h.iter().rev() {
        let mut next: Dense = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let mut v = 0;
                for l in 0..n {
                    v = add_mod(v, mul_mod(acc[i][l], a[l][k], p), p);
                }
                next[i][k] = v;
            }
            next[i][i] = add_mod(next[i][i], c, p);
        }
        acc = next;
    }
    acc
}

fn constant_part(e: &Endo) -> Dense {
    e.iter().map(|row| row.iter().map(constant_term).collect()).collect()
}

fn constant_term(e: &Polynomial) -> u32 {
    e.terms().iter().find(|(m, _)| m.is_one()).map_or(0, |(_, c)| *c)
}

fn monomials_up_to(n: usize, d: u64) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut frontier = out.clone();
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            for v in 0..n {
                let nm = m.mul(&Monomial::var(n, v));
                if !next.contains(&nm) {
                    next.push(nm);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Basis of `{c : Σ c_u rows[u] = 0}` for sparse rows over F_p.
fn left_kernel(rows: &[Vec<(usize, u32)>], width: usize, p: u32) -> Vec<Vec<u32>> {
    let n = rows.len();
    // augmented rows [row | e_u]
    let mut work: Vec<Vec<u32>> = rows
        .iter()
        .enumerate()
        .map(|(u, r)| {
            let mut dense = vec![0u32; width + n];
            for &(i, c) in r {
                dense[i] = add_mod(dense[i], c, p);
            }
            dense[width + u] = 1;
            dense
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(sel) = (pivot_row..n).find(|&r| work[r][col] != 0) else {
            continue;
        };
        work.swap(pivot_row, sel);
        let inv = inv_mod(work[pivot_row][col], p);
        for x in work[pivot_row].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot = work[pivot_row].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if *y != 0 {
                        *x = sub_mod(*x, mul_mod(f, *y, p), p);
                    }
                }
            }
        }
        pivot_row += 1;
    }
    work[pivot_row..].iter().map(|r| r[width..].to_vec()).collect()
}

fn utrim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn umul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    utrim(out)
}

fn usub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        *o = sub_mod(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p);
    }
    utrim(out)
}

fn upow(a: &[u32], e: usize, p: u32) -> Vec<u32> {
    (0..e).fold(vec![1], |acc, _| umul(&acc, a, p))
}

fn udivrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = utrim(b.to_vec());
    let mut r = utrim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().expect("nonzero divisor"), p);
    let mut q = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = mul_mod(*r.last().unwrap(), inv, p);
        q[shift] = c;
        for (i, &y) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(c, y, p), p);
        }
        r = utrim(r);
    }
    (utrim(q), r)
}

/// `(s, g)` with `s * a ≡ g (mod b)` where `g = gcd(a, b)` is monic; for
/// coprime inputs `s * a ≡ 1 (mod b)`.
fn bezout(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let (mut r0, mut r1) = (utrim(a.to_vec()), utrim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u32], Vec::new());
    while !r1.is_empty() {
        let (q, r) = udivrem(&r0, &r1, p);
        let s = usub(&s0, &umul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    let inv = inv_mod(*r0.last().expect("nonzero gcd"), p);
    let scale = |v: Vec<u32>| utrim(v.into_iter().map(|x| mul_mod(x, inv, p)).collect());
    (scale(s0), scale(r0))
}

fn root_multiplicity(chi: &[u32], lambda: u32, p: u32) -> usize {
    let lin = [neg_mod(lambda, p), 1];
    let mut cur = chi.to_vec();
    let mut m = 0;
    loop {
        let (q, r) = udivrem(&cur, &lin, p);
        if !r.is_empty() || cur.is_empty() {
            return m;
        }
        m += 1;
        cur = q;
    }
}

/// Characteristic polynomial `det(T - a)`, coefficients low to high, via
/// reduction to Hessenberg form.
fn charpoly(a: &Dense, p: u32) -> Vec<u32> {
    let n = a.len();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = inv_mod(h[k + 1][k], p);
        for i in k + 2..n {
            let f = mul_mod(h[i][k], inv, p);
            if f == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = sub_mod(h[i][j], mul_mod(f, h[k + 1][j], p), p);
            }
            for row in h.iter_mut() {
                row[k + 1] = add_mod(row[k + 1], mul_mod(f, row[i], p), p);
            }
        }
    }
    let mut polys: Vec<Vec<u32>> = vec![vec![1]];
    for m in 0..n {
        let mut next = umul(&[neg_mod(h[m][m], p), 1], &polys[m], p);
        let mut prod = 1u32;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            let coef = mul_mod(prod, h[i][m], p);
            next = usub(&next, &umul(&[coef], &polys[i], p), p);
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_at(a: &Dense, lambda: u32, p: u32) -> u32 {
        let n = a.len();
        let mut m: Dense = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            sub_mod(lambda, a[i][j], p)
                        } else {
                            neg_mod(a[i][j], p)
                        }
                    })
                    .collect()
            })
            .collect();
        let mut det = 1u32;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if r != c {
                m.swap(r, c);
                det = neg_mod(det, p);
            }
            det = mul_mod(det, m[c][c], p);
            let inv = inv_mod(m[c][c], p);
            for r in c + 1..n {
                let f = mul_mod(m[r][c], inv, p);
                for k in c..n {
                    m[r][k] = sub_mod(m[r][k], mul_mod(f, m[c][k], p), p);
                }
            }
        }
        det
    }

    #[test]
    fn charpoly_matches_determinants() {
        let p = 7;
        let mut rng = StdRng::seed_from_u64(3);
        for n in 1..6 {
            let a: Dense = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
            let chi = charpoly(&a, p);
            assert_eq!(chi.len(), n + 1);
            for lambda in 0..p {
                let v = chi
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| add_mod(mul_mod(acc, lambda, p), c, p));
                assert_eq!(v, det_at(&a, lambda, p));
            }
        }
    }

    #[test]
    fn bezout_inverts_modulo() {
        let p = 5;
        let a = vec![1, 2, 1]; // (T+1)^2
        let b = vec![3, 0, 1]; // T^2 + 3
        let (s, g) = bezout(&a, &b, p);
        assert_eq!(g, vec![1]);
        let (_, r) = udivrem(&umul(&s, &a, p), &b, p);
        assert_eq!(r, vec![1]);
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let rows = vec![vec![(0, 1), (1, 1)], vec![(0, 2), (1, 2)], vec![(1, 1)]];
        let k = left_kernel(&rows, 2, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![1, 1, 0]);
    }

    fn e6() -> crate::modpres::QRing {
        crate::modpres::QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^3+y^2*z"]).unwrap()
    }

    fn e6_a2(r: &crate::modpres::QRing) -> RMatrix {
        RMatrix::parse(
            r,
            &[
                &["x", "y^2+z", "y", "0"],
                &["z", "x^2", "0", "x*y"],
                &["0", "0", "x", "y^2+z"],
                &["0", "0", "z", "x^2"],
            ],
        )
        .unwrap()
    }

    #[test]
    fn module_and_its_dual_told_apart() {
        let r = e6();
        let a2 = e6_a2(&r);
        let cfg = Config::default();
        assert_eq!(graded_isomorphic(&a2, &a2, &cfg).unwrap(), Some(true));
        assert_eq!(graded_isomorphic(&a2, &a2.transpose(), &cfg).unwrap(), Some(false));
    }

    #[test]
    fn row_operations_give_isomorphic_module() {
        let r = e6();
        let a2 = e6_a2(&r);
        let mut b = a2.clone();
        b.swap_rows(0, 3);
        b.swap_cols(1, 2);
        let cfg = Config::default();
        assert_eq!(graded_isomorphic(&a2, &b, &cfg).unwrap(), Some(true));
    }
}
