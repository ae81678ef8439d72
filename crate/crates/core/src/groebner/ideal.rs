use crate::config::Budget;
use crate::error::{Error, Result};
use crate::ffpoly::{check_same, Monomial, PolyRing, Polynomial, Ring, TermOrder};
use crate::matrix::PolyMatrix;

use super::buchberger::{groebner_basis, GbOptions, Reducer};

/// Generators of an ideal; zero generators are dropped, an empty list is the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGens {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            check_same(ring, g.ring())?;
        }
        Ok(Self {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn parse(ring: &Ring, texts: &[&str]) -> Result<Self> {
        let gens = texts
            .iter()
            .map(|t| crate::ffpoly::parse(t, ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub fn sum(&self, other: &IdealGens) -> Result<IdealGens> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.ring, gens)
    }

    pub fn push(&mut self, g: Polynomial) -> Result<()> {
        check_same(&self.ring, g.ring())?;
        if !g.is_zero() {
            self.gens.push(g);
        }
        Ok(())
    }
}

/// Reduced Gröbner basis: monic elements, each in normal form w.r.t. the others,
/// sorted by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedGB {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl ReducedGB {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn to_ideal(&self) -> IdealGens {
        IdealGens {
            ring: self.ring.clone(),
            gens: self.basis.clone(),
        }
    }

    pub(crate) fn reducer(&self) -> Reducer {
        Reducer::from_basis(&self.basis)
    }

    /// Normal form with an unbounded budget.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.reducer()
            .reduce(f, &Budget::default())
            .expect("normal form without deadline")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Reduced Gröbner basis of `gens` in the order of their ring.
pub fn buchberger(gens: &IdealGens, budget: &Budget) -> Result<ReducedGB> {
    let basis = groebner_basis(&gens.ring, &gens.gens, budget, GbOptions::default())?;
    Ok(ReducedGB {
        ring: gens.ring.clone(),
        basis,
    })
}

pub fn normal_form(f: &Polynomial, gb: &ReducedGB) -> Result<Polynomial> {
    check_same(f.ring(), &gb.ring)?;
    gb.reducer().reduce(f, &Budget::default())
}

pub fn membership(f: &Polynomial, gb: &ReducedGB) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// `f ∈ √I` iff `1 ∈ I + (1 - y f)` with `y` a fresh variable.
pub fn radical_membership(f: &Polynomial, gens: &IdealGens, budget: &Budget) -> Result<bool> {
    check_same(f.ring(), &gens.ring)?;
    let ring = &gens.ring;
    let mut vars: Vec<String> = ring.vars().to_vec();
    vars.push(ring.fresh_name("rad_y"));
    let ext = PolyRing::new(ring.modulus(), &vars, TermOrder::GrevLex)?;
    let mut ext_gens = gens
        .gens
        .iter()
        .map(|g| g.remap_by_name(&ext))
        .collect::<Result<Vec<_>>>()?;
    let y = Polynomial::var(&ext, vars.len() - 1);
    let fy = &y * &f.remap_by_name(&ext)?;
    ext_gens.push(&Polynomial::one(&ext) - &fy);
    let gb = groebner_basis(&ext, &ext_gens, budget, GbOptions::default())?;
    Ok(gb.len() == 1 && gb[0].is_one())
}

/// Generators of `I ∩ F_p[remaining variables]`, returned in a grevlex ring on the
/// remaining variables (original relative order).
pub fn eliminate(gens: &IdealGens, drop: &[usize], budget: &Budget) -> Result<IdealGens> {
    let ring = &gens.ring;
    let n = ring.nvars();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let kept_vars: Vec<String> = keep.iter().map(|&i| ring.vars()[i].clone()).collect();
    let target = PolyRing::new(ring.modulus(), &kept_vars, TermOrder::GrevLex)?;
    if drop.is_empty() {
        let g = gens
            .gens
            .iter()
            .map(|g| Ok(g.reorder(&target)))
            .collect::<Result<Vec<_>>>()?;
        return IdealGens::new(&target, g);
    }
    let mut order_vars: Vec<usize> = drop.to_vec();
    order_vars.sort_unstable();
    order_vars.dedup();
    let k = order_vars.len();
    order_vars.extend(&keep);
    let names: Vec<String> = order_vars.iter().map(|&i| ring.vars()[i].clone()).collect();
    let elim_ring = PolyRing::new(ring.modulus(), &names, TermOrder::BlockElim(k))?;
    let lifted = gens
        .gens
        .iter()
        .map(|g| g.remap_by_name(&elim_ring))
        .collect::<Result<Vec<_>>>()?;
    let gb = groebner_basis(&elim_ring, &lifted, budget, GbOptions::default())?;
    let survivors = gb
        .into_iter()
        .filter(|g| (0..k).all(|v| !g.contains_var(v)))
        .map(|g| g.remap_by_name(&target))
        .collect::<Result<Vec<_>>>()?;
    IdealGens::new(&target, survivors)
}

/// Krull dimension of `F_p[x]/I`: the largest set of variables independent modulo
/// the leading-term ideal. The unit ideal is an error.
pub fn dimension(gens: &IdealGens, budget: &Budget) -> Result<usize> {
    let ring = gens.ring.with_order(TermOrder::GrevLex);
    let lifted: Vec<Polynomial> = gens.gens.iter().map(|g| g.reorder(&ring)).collect();
    let gb = groebner_basis(&ring, &lifted, budget, GbOptions::default())?;
    dimension_of_leading(&ring, &gb)
}

pub(crate) fn dimension_of_leading(ring: &Ring, gb: &[Polynomial]) -> Result<usize> {
    if gb.len() == 1 && gb[0].is_unit() {
        return Err(Error::EmptyScheme);
    }
    let n = ring.nvars();
    // minimal supports of leading monomials
    let mut supports: Vec<Vec<usize>> = gb
        .iter()
        .map(|g| g.leading_monomial().unwrap().support().collect())
        .collect();
    supports.sort_by_key(|s| s.len());
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|m| m.iter().all(|v| s.contains(v))) {
            minimal.push(s);
        }
    }
    // dimension = n - (minimum hitting set of the supports)
    Ok(n - min_hitting_set(&minimal, n))
}

fn min_hitting_set(sets: &[Vec<usize>], n: usize) -> usize {
    fn go(sets: &[Vec<usize>], chosen: &mut Vec<bool>, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let unhit = sets.iter().find(|s| !s.iter().any(|&v| chosen[v]));
        match unhit {
            None => *best = size,
            Some(s) => {
                for &v in s {
                    chosen[v] = true;
                    go(sets, chosen, size + 1, best);
                    chosen[v] = false;
                }
            }
        }
    }
    let mut best = n + 1;
    let mut chosen = vec![false; n];
    go(sets, &mut chosen, 0, &mut best);
    best.min(n)
}

/// Rows are generators, columns are variables.
pub fn jacobian(gens: &IdealGens) -> PolyMatrix {
    let ring = &gens.ring;
    let rows = gens
        .gens
        .iter()
        .map(|g| (0..ring.nvars()).map(|v| g.derivative(v)).collect())
        .collect();
    if gens.gens.is_empty() {
        return PolyMatrix::zero(ring, 0, ring.nvars());
    }
    PolyMatrix::from_rows(ring, rows).expect("jacobian rows share the ring")
}

/// A generating subset of the same ideal: generators are taken smallest first
/// and dropped when already in the ideal of those kept.
pub fn irredundant(gens: &IdealGens, budget: &Budget) -> Result<IdealGens> {
    let mut order: Vec<&Polynomial> = gens.gens.iter().collect();
    order.sort_by_key(|g| (g.total_degree(), g.len()));
    let mut kept = IdealGens::zero(&gens.ring);
    let mut gb = buchberger(&kept, budget)?;
    for g in order {
        budget.check_time()?;
        if gb.contains(g) {
            continue;
        }
        kept.push(g.clone())?;
        gb = buchberger(&kept, budget)?;
    }
    Ok(kept)
}

/// All nonzero k x k minors.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<Polynomial>> {
    Ok(m.minors(k, &|p| p)?.into_iter().filter(|p| !p.is_zero()).collect())
}
