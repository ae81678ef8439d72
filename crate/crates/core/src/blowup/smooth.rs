use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::config::Config;
use crate::error::Result;
use crate::ffpoly::Polynomial;
use crate::groebner::{buchberger, dimension, irredundant, jacobian, radical_membership, IdealGens};
use crate::modpres::QRing;

use super::chart::Chart;
use super::villamayor::FractionalIdealRep;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothReport {
    /// Krull dimension of the chart ring.
    pub dim: usize,
    pub smooth: bool,
    /// `J + (c x c minors of the Jacobian)`, `c` the codimension.
    pub singular_ideal: IdealGens,
    /// Dimension of the singular locus; `None` when it is empty.
    pub singular_dim: Option<usize>,
}

impl SmoothReport {
    /// Regular in codimension one: the singular locus has codimension at least two.
    pub fn r1(&self) -> bool {
        self.singular_dim.is_none_or(|d| d + 2 <= self.dim)
    }
}

/// Dimension of `S/J` and the Jacobian ideal cutting out its singular locus.
pub fn singular_locus(rels: &IdealGens, cfg: &Config) -> Result<(usize, IdealGens)> {
    let n = rels.ring().nvars();
    let dim = dimension(rels, &cfg.budget)?;
    let c = n - dim;
    let ring = rels.ring();
    if c == 0 {
        return Ok((dim, IdealGens::new(ring, vec![Polynomial::one(ring)])?));
    }
    let thin = irredundant(rels, &cfg.budget)?;
    let gb = buchberger(rels, &cfg.budget)?;
    let mut sing = rels.clone();
    let mut seen = HashSet::new();
    let mut count = 0usize;
    let mut stop = Ok(());
    jacobian(&thin).for_each_minor(c, &|p| p, &mut |_, _, m| {
        count += 1;
        if count.is_multiple_of(256) {
            if let Err(e) = cfg.budget.check_time() {
                stop = Err(e);
                return ControlFlow::Break(());
            }
        }
        let r = gb.reduce(m);
        if !r.is_zero() && seen.insert(r.monic()) {
            stop = sing.push(r);
        }
        if stop.is_err() {
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    })?;
    stop?;
    Ok((dim, sing))
}

pub fn smooth_check(chart: &Chart, cfg: &Config) -> Result<SmoothReport> {
    let (dim, singular_ideal) = singular_locus(chart.ring.relations(), cfg)?;
    let gb = buchberger(&singular_ideal, &cfg.budget)?;
    let singular_dim = if gb.is_unit() {
        None
    } else {
        Some(dimension(&singular_ideal, &cfg.budget)?)
    };
    Ok(SmoothReport {
        dim,
        smooth: singular_dim.is_none(),
        singular_ideal,
        singular_dim,
    })
}

/// Necessary condition for normality: regular in codimension one.
pub fn r1_check(chart: &Chart, cfg: &Config) -> Result<bool> {
    Ok(smooth_check(chart, cfg)?.r1())
}

/// `√(J + I_R) = √(Jac + I_R)`: for `J` cutting out the non-flat locus of a
/// module, that locus is the singular locus of the ring.
pub fn kunz_check(ring: &QRing, ideal: &FractionalIdealRep, cfg: &Config) -> Result<bool> {
    let (_, sing) = singular_locus(ring.relations(), cfg)?;
    let module_side = IdealGens::new(ring.ambient(), ideal.generators().to_vec())?.sum(ring.relations())?;
    for (gens, other) in [(&module_side, &sing), (&sing, &module_side)] {
        for g in gens.gens() {
            cfg.budget.check_time()?;
            if !radical_membership(g, other, &cfg.budget)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
