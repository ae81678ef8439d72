use crate::config::{Budget, Config};
use crate::error::{Error, Result};
use crate::ffpoly::Polynomial;
use crate::groebner::{buchberger, IdealGens};
use crate::modpres::{matrix_rank, module_rank, PresentedModule, QRing};

/// Nonzero generators, in normal form, of an ideal of `R` standing for the
/// fractional ideal `I_M` (determined up to a nonzero principal factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalIdealRep {
    ring: QRing,
    generators: Vec<Polynomial>,
}

impl FractionalIdealRep {
    pub fn new(ring: &QRing, generators: Vec<Polynomial>) -> Result<Self> {
        let generators: Vec<Polynomial> = generators
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        if generators.is_empty() {
            return Err(Error::InvalidArgument("the zero ideal has no blowup".into()));
        }
        Ok(Self {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn ring(&self) -> &QRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Some generator is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit())
    }
}

/// Columns chosen greedily in index order, keeping the chosen ones independent
/// over the fraction field, until `t - r` are chosen.
pub fn select_columns(module: &PresentedModule, r: usize, cfg: &Config) -> Result<Vec<usize>> {
    let need = module
        .rows()
        .checked_sub(r)
        .ok_or_else(|| Error::SelectionFailure(format!("rank {r} exceeds {} generators", module.rows())))?;
    let mut chosen: Vec<usize> = Vec::with_capacity(need);
    for j in 0..module.cols() {
        if chosen.len() == need {
            break;
        }
        chosen.push(j);
        if matrix_rank(&module.matrix().select_cols(&chosen), cfg)? < chosen.len() {
            chosen.pop();
        }
    }
    if chosen.len() < need {
        return Err(Error::SelectionFailure(format!(
            "found {} independent columns, need {need}",
            chosen.len()
        )));
    }
    Ok(chosen)
}

/// `I_M`: the `(t-r)`-minors of the greedily selected columns, reduced mod `I`.
pub fn villamayor_ideal(module: &PresentedModule, cfg: &Config) -> Result<FractionalIdealRep> {
    let ring = module.ring();
    let r = module_rank(module, cfg)?;
    if r == 0 {
        return Err(Error::InvalidArgument("the module has rank 0".into()));
    }
    let chosen = select_columns(module, r, cfg)?;
    let size = chosen.len();
    let sub = module.matrix().select_cols(&chosen);
    let reducer = ring.clone();
    let minors = sub.inner().minors(size, &move |p| reducer.reduce(&p))?;
    FractionalIdealRep::new(ring, minors)
}

/// The generators of the product of the given ideals, minimalized.
pub fn product_ideal(parts: &[FractionalIdealRep], budget: &Budget) -> Result<FractionalIdealRep> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
    let ring = first.ring().clone();
    let mut gens = vec![Polynomial::one(ring.ambient())];
    for part in parts {
        let mut next = Vec::with_capacity(gens.len() * part.generators().len());
        for g in &gens {
            for h in part.generators() {
                next.push(ring.mul(g, h));
            }
        }
        gens = minimalize(&ring, next, budget)?;
    }
    FractionalIdealRep::new(&ring, gens)
}

/// A generating set of `(gens) + I` modulo `I` with no generator in the ideal
/// of the earlier ones. Candidates are visited by degree, then length, then
/// text, so the result does not depend on the input order.
pub fn minimalize(ring: &QRing, gens: Vec<Polynomial>, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut cands: Vec<Polynomial> = gens
        .into_iter()
        .map(|g| ring.reduce(&g))
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    cands.sort_by_cached_key(|g| (g.total_degree(), g.len(), g.to_string()));
    cands.dedup();
    if let Some(unit) = cands.iter().find(|g| g.is_unit()) {
        return Ok(vec![unit.clone()]);
    }
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in cands {
        budget.check_time()?;
        let ideal = IdealGens::new(ring.ambient(), kept.clone())?.sum(ring.relations())?;
        if !buchberger(&ideal, budget)?.contains(&g) {
            kept.push(g);
        }
    }
    Ok(kept)
}
