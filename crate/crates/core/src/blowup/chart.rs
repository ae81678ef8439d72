use crate::config::Config;
use crate::error::Result;
use crate::ffpoly::{inv_mod, neg_mod, PolyRing, Polynomial, TermOrder};
use crate::groebner::IdealGens;
use crate::modpres::{QRing, QuotientRing};

use super::rees::ReesPresentation;

/// The affine chart `t_i = 1` of a blowup, after eliminating variables that
/// occur linearly with a constant coefficient.
#[derive(Clone, Debug)]
pub struct Chart {
    pub index: usize,
    pub ring: QRing,
    /// The images of the blown-up generators, in the chart ring's ambient ring.
    pub exceptional: Vec<Polynomial>,
    /// Eliminated variables with their values in the surviving variables.
    pub substitutions: Vec<(String, Polynomial)>,
}

impl Chart {
    /// A ring viewed as a single chart, with no exceptional ideal.
    pub fn from_ring(ring: &QRing) -> Self {
        Self {
            index: 0,
            ring: ring.clone(),
            exceptional: Vec::new(),
            substitutions: Vec::new(),
        }
    }
}

/// A generator `c v + h` with `c` constant and `v` absent from `h`: the
/// shortest such generator, then the lowest variable index.
fn solvable(gens: &[Polynomial], alive: &[bool]) -> Option<(usize, usize, u32)> {
    let mut best: Option<(usize, usize, usize, u32)> = None;
    for (gi, g) in gens.iter().enumerate() {
        for (m, c) in g.terms() {
            if m.degree() != 1 {
                continue;
            }
            let v = m.support().next().expect("degree one");
            if !alive[v] || g.terms().iter().filter(|(mm, _)| mm.exponents()[v] > 0).count() != 1 {
                continue;
            }
            let key = (g.len(), v, gi, *c);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, v, gi, c)| (gi, v, c))
}

pub fn chart(p: &ReesPresentation, i: usize, cfg: &Config) -> Result<Chart> {
    let ring = p.ring();
    let modulus = ring.modulus();
    let ti = p.t_var(i);
    let mut gens: Vec<Polynomial> = p.ideal().basis().iter().map(|g| g.specialize(ti, 1)).collect();
    gens.retain(|g| !g.is_zero());
    let mut exceptional: Vec<Polynomial> = p
        .generators()
        .iter()
        .map(|f| f.remap_by_name(ring))
        .collect::<Result<_>>()?;
    let mut alive = vec![true; ring.nvars()];
    alive[ti] = false;
    let mut subs: Vec<(usize, Polynomial)> = vec![(ti, Polynomial::one(ring))];
    while let Some((gi, v, c)) = solvable(&gens, &alive) {
        cfg.budget.check_time()?;
        let g = gens.swap_remove(gi);
        // v = -(g - c v) / c
        let rest = &g - &Polynomial::var(ring, v).scale(c);
        let value = rest.scale(neg_mod(inv_mod(c, modulus), modulus));
        for h in gens.iter_mut().chain(exceptional.iter_mut()) {
            *h = h.substitute(v, &value)?;
        }
        for (_, s) in subs.iter_mut() {
            *s = s.substitute(v, &value)?;
        }
        gens.retain(|g| !g.is_zero());
        alive[v] = false;
        subs.push((v, value));
    }
    let names: Vec<String> = (0..ring.nvars())
        .filter(|&v| alive[v])
        .map(|v| ring.vars()[v].clone())
        .collect();
    let target = PolyRing::new(modulus, &names, TermOrder::GrevLex)?;
    let rels = gens
        .iter()
        .map(|g| g.remap_by_name(&target))
        .collect::<Result<Vec<_>>>()?;
    let chart_ring = QuotientRing::new(IdealGens::new(&target, rels)?, &cfg.budget)?;
    let exceptional = exceptional
        .iter()
        .map(|f| Ok(chart_ring.reduce(&f.remap_by_name(&target)?)))
        .collect::<Result<Vec<_>>>()?;
    let substitutions = subs
        .into_iter()
        .map(|(v, s)| Ok((ring.vars()[v].clone(), s.remap_by_name(&target)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Chart {
        index: i,
        ring: chart_ring,
        exceptional,
        substitutions,
    })
}

pub fn charts(p: &ReesPresentation, cfg: &Config) -> Result<Vec<Chart>> {
    (0..p.generators().len()).map(|i| chart(p, i, cfg)).collect()
}
