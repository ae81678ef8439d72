//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of both Buchberger criteria.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::ffpoly::{add_mod, mul_mod, neg_mod, Monomial, Polynomial, Ring, Term, TermOrder};

struct HeapTerm {
    m: Monomial,
    c: u32,
    order: TermOrder,
}

impl PartialEq for HeapTerm {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}
impl Eq for HeapTerm {}
impl PartialOrd for HeapTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

/// Monic polynomials indexed by leading monomial for divisor lookup.
pub(crate) struct Reducer {
    polys: Vec<Polynomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
}

impl Reducer {
    pub(crate) fn new() -> Self {
        Self {
            polys: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
        }
    }

    pub(crate) fn from_basis(basis: &[Polynomial]) -> Self {
        let mut r = Self::new();
        for g in basis {
            r.push(g.monic());
        }
        r
    }

    pub(crate) fn push(&mut self, g: Polynomial) -> usize {
        debug_assert!(!g.is_zero());
        self.masks.push(g.leading_monomial().unwrap().support_mask());
        self.polys.push(g);
        self.active.push(true);
        self.polys.len() - 1
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.polys.len()).find(|&i| {
            self.active[i] && self.masks[i] & !mask == 0 && self.polys[i].leading_monomial().unwrap().divides(m)
        })
    }

    /// Full reduction of `Σ (c_k * m_k * f_k)` given as seed terms.
    fn reduce_terms(&self, ring: &Ring, seed: Vec<Term>, budget: &Budget) -> Result<Polynomial> {
        let p = ring.modulus();
        let order = ring.order();
        let mut heap: BinaryHeap<HeapTerm> = seed.into_iter().map(|(m, c)| HeapTerm { m, c, order }).collect();
        let mut out: Vec<Term> = Vec::new();
        let mut steps = 0usize;
        while let Some(top) = heap.pop() {
            let m = top.m;
            let mut c = top.c;
            while heap.peek().is_some_and(|t| t.m == m) {
                c = add_mod(c, heap.pop().unwrap().c, p);
            }
            if c == 0 {
                continue;
            }
            match self.find_divisor(&m) {
                Some(i) => {
                    let g = &self.polys[i];
                    let q = g.leading_monomial().unwrap().quotient_of(&m).unwrap();
                    let f = neg_mod(c, p);
                    for (gm, gc) in &g.terms()[1..] {
                        heap.push(HeapTerm {
                            m: gm.mul(&q),
                            c: mul_mod(*gc, f, p),
                            order,
                        });
                    }
                    steps += 1;
                    if steps.is_multiple_of(4096) {
                        budget.check_time()?;
                        if heap.len() + out.len() > budget.max_terms {
                            return Err(Error::BudgetExceeded(format!(
                                "reduction exceeded {} terms",
                                budget.max_terms
                            )));
                        }
                    }
                }
                None => out.push((m, c)),
            }
        }
        Ok(Polynomial::from_sorted(ring, out))
    }

    pub(crate) fn reduce(&self, f: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        self.reduce_terms(f.ring(), f.terms().to_vec(), budget)
    }

    fn spoly_reduced(&self, i: usize, j: usize, lcm: &Monomial, budget: &Budget) -> Result<Polynomial> {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let ring = f.ring();
        let p = ring.modulus();
        let u = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
        let v = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
        let mut seed: Vec<Term> = Vec::with_capacity(f.len() + g.len());
        seed.extend(f.terms()[1..].iter().map(|(m, c)| (m.mul(&u), *c)));
        seed.extend(g.terms()[1..].iter().map(|(m, c)| (m.mul(&v), neg_mod(*c, p))));
        self.reduce_terms(ring, seed, budget)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn pair_key(order: TermOrder, a: &Pair, b: &Pair) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| a.j.cmp(&b.j))
        .then_with(|| a.i.cmp(&b.i))
}

/// Variables from `position_start` on encode free-module basis vectors; pairs
/// whose leading terms sit in different positions are never formed.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct GbOptions {
    pub position_start: Option<usize>,
}

fn same_position(a: &Monomial, b: &Monomial, opts: GbOptions) -> bool {
    match opts.position_start {
        None => true,
        Some(k) => a.exponents()[k..] == b.exponents()[k..],
    }
}

struct Engine<'a> {
    ring: Ring,
    reducer: Reducer,
    pairs: Vec<Pair>,
    budget: &'a Budget,
    opts: GbOptions,
    /// Terms stored in the basis so far.
    terms: usize,
}

impl<'a> Engine<'a> {
    fn lm(&self, i: usize) -> &Monomial {
        self.reducer.polys[i].leading_monomial().unwrap()
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn update(&mut self, h: usize) {
        let order = self.ring.order();
        let lm_h = self.lm(h).clone();
        let candidates: Vec<Pair> = (0..h)
            .filter(|&g| self.reducer.active[g] && same_position(&lm_h, self.lm(g), self.opts))
            .map(|g| Pair {
                i: g,
                j: h,
                lcm: lm_h.lcm(self.lm(g)),
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (a, pa) in candidates.iter().enumerate() {
            let coprime = lm_h.is_coprime(self.lm(pa.i));
            let dominated = candidates
                .iter()
                .enumerate()
                .any(|(b, pb)| b != a && pb.lcm.divides(&pa.lcm) && (pb.lcm != pa.lcm || b < a));
            if coprime || !dominated {
                kept.push(pa.clone());
            }
        }
        // an lcm class containing a coprime pair is dropped entirely (product criterion)
        let coprime_lcms: Vec<Monomial> = kept
            .iter()
            .filter(|p| lm_h.is_coprime(self.lm(p.i)))
            .map(|p| p.lcm.clone())
            .collect();
        kept.retain(|p| !coprime_lcms.contains(&p.lcm));

        // old pairs made redundant by h
        let reducer = &self.reducer;
        let lm_of = |i: usize| reducer.polys[i].leading_monomial().unwrap();
        self.pairs
            .retain(|p| !(lm_h.divides(&p.lcm) && lm_h.lcm(lm_of(p.i)) != p.lcm && lm_h.lcm(lm_of(p.j)) != p.lcm));
        self.pairs.extend(kept);

        for g in 0..h {
            if self.reducer.active[g] && lm_h.divides(self.lm(g)) {
                self.reducer.active[g] = false;
            }
        }
        let _ = order;
    }

    fn add(&mut self, f: Polynomial) -> Result<()> {
        self.terms += f.len();
        let h = self.reducer.push(f.monic());
        if self.terms > self.budget.max_terms {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis exceeded {} terms",
                self.budget.max_terms
            )));
        }
        if self.reducer.polys.len() > self.budget.max_basis {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis exceeded {} elements",
                self.budget.max_basis
            )));
        }
        self.update(h);
        Ok(())
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| pair_key(order, &self.pairs[a], &self.pairs[b]))
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.next_pair() {
            self.budget.check_time()?;
            if pair.lcm.degree() > self.budget.max_degree {
                return Err(Error::BudgetExceeded(format!(
                    "S-pair degree {} exceeds {}",
                    pair.lcm.degree(),
                    self.budget.max_degree
                )));
            }
            let h = self.reducer.spoly_reduced(pair.i, pair.j, &pair.lcm, self.budget)?;
            if !h.is_zero() {
                if h.is_unit() {
                    // unit ideal: nothing else matters
                    self.reducer = Reducer::new();
                    self.reducer.push(Polynomial::one(&self.ring));
                    self.pairs.clear();
                    return Ok(());
                }
                self.add(h)?;
            }
        }
        Ok(())
    }

    /// Minimal basis, then tail-reduce every element by the others.
    fn finish(self) -> Result<Vec<Polynomial>> {
        let order = self.ring.order();
        let mut lead: Vec<Polynomial> = Vec::new();
        let candidates: Vec<&Polynomial> = self
            .reducer
            .polys
            .iter()
            .zip(&self.reducer.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect();
        for (a, f) in candidates.iter().enumerate() {
            let lf = f.leading_monomial().unwrap();
            let redundant = candidates.iter().enumerate().any(|(b, g)| {
                let lg = g.leading_monomial().unwrap();
                b != a && lg.divides(lf) && (lg != lf || b < a)
            });
            if !redundant {
                lead.push((*f).clone());
            }
        }
        let mut out = Vec::with_capacity(lead.len());
        for (a, f) in lead.iter().enumerate() {
            let others: Vec<Polynomial> = lead
                .iter()
                .enumerate()
                .filter(|&(b, _)| b != a)
                .map(|(_, g)| g.clone())
                .collect();
            let red = Reducer::from_basis(&others);
            let (lm, lc) = f.leading_term().unwrap().clone();
            let tail = Polynomial::from_sorted(&self.ring, f.terms()[1..].to_vec());
            let tail = red.reduce(&tail, self.budget)?;
            let mut terms = vec![(lm, lc)];
            terms.extend(tail.into_terms());
            out.push(Polynomial::from_sorted(&self.ring, terms).monic());
        }
        out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        Ok(out)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
pub(crate) fn groebner_basis(
    ring: &Ring,
    gens: &[Polynomial],
    budget: &Budget,
    opts: GbOptions,
) -> Result<Vec<Polynomial>> {
    let mut engine = Engine {
        ring: ring.clone(),
        reducer: Reducer::new(),
        pairs: Vec::new(),
        budget,
        opts,
        terms: 0,
    };
    // inter-reduce the input as it is installed
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| ring.order().cmp(la, lb))
    });
    for g in input {
        let r = engine.reducer.reduce(&g, budget)?;
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        engine.add(r)?;
    }
    engine.run()?;
    engine.finish()
}
