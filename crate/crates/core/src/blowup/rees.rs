use crate::config::Config;
use crate::error::{Error, Result};
use crate::ffpoly::{PolyRing, Polynomial, Ring, TermOrder};
use crate::groebner::{buchberger, eliminate, IdealGens, ReducedGB};
use crate::modpres::QRing;

use super::villamayor::FractionalIdealRep;

/// `R[It] = S[t_0..t_{m-1}] / J` for `I = (f_0..f_{m-1})`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    base: QRing,
    ring: Ring,
    generators: Vec<Polynomial>,
    j: ReducedGB,
}

impl ReesPresentation {
    pub fn base(&self) -> &QRing {
        &self.base
    }

    /// `S[t_0..t_{m-1}]`: the base variables followed by the blowup variables.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Index in [`ring`](Self::ring) of `t_i`.
    pub fn t_var(&self, i: usize) -> usize {
        self.base.nvars() + i
    }

    /// `f_i`, corresponding to `t_i`, in the base ambient ring.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ideal(&self) -> &ReducedGB {
        &self.j
    }

    /// Substituting `t_i -> f_i T` sends every element of `J` into `I_R`.
    pub fn substitution_holds(&self, cfg: &Config) -> Result<bool> {
        let (ext, big_t) = with_fresh(&self.ring, "T")?;
        let rels = lift_all(self.base.relations().gens(), &ext)?;
        let rel_gb = buchberger(&IdealGens::new(&ext, rels)?, &cfg.budget)?;
        let t = Polynomial::var(&ext, big_t);
        for g in self.j.basis() {
            let mut h = g.remap_by_name(&ext)?;
            for (i, f) in self.generators.iter().enumerate() {
                let value = &f.remap_by_name(&ext)? * &t;
                h = h.substitute(self.t_var(i), &value)?;
            }
            if !rel_gb.contains(&h) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn lift_all(polys: &[Polynomial], target: &Ring) -> Result<Vec<Polynomial>> {
    polys.iter().map(|p| p.remap_by_name(target)).collect()
}

/// `ring` with one more variable named after `stem`, and that variable's index.
fn with_fresh(ring: &Ring, stem: &str) -> Result<(Ring, usize)> {
    let mut vars = ring.vars().to_vec();
    vars.push(ring.fresh_name(stem));
    let n = vars.len() - 1;
    Ok((PolyRing::new(ring.modulus(), &vars, TermOrder::GrevLex)?, n))
}

/// Names `t0, t1, ..` avoiding the base variables.
fn blowup_names(base: &[String], m: usize) -> Vec<String> {
    let stem = (0..)
        .map(|k| "t".repeat(k + 1))
        .find(|s| !base.iter().any(|v| v.starts_with(s.as_str())))
        .expect("some stem is free");
    (0..m).map(|i| format!("{stem}{i}")).collect()
}

/// `J = (I_R + (t_i - f_i T)) ∩ S[t]`, eliminating `T` with a block order.
pub fn rees(ideal: &FractionalIdealRep, cfg: &Config) -> Result<ReesPresentation> {
    let base = ideal.ring().clone();
    let amb = base.ambient();
    let m = ideal.generators().len();
    if m == 0 {
        return Err(Error::InvalidArgument("the zero ideal has no blowup".into()));
    }
    let mut vars = amb.vars().to_vec();
    vars.extend(blowup_names(amb.vars(), m));
    let ring = PolyRing::new(amb.modulus(), &vars, TermOrder::GrevLex)?;
    let (ext, big_t) = with_fresh(&ring, "T")?;
    let t = Polynomial::var(&ext, big_t);
    let mut gens = lift_all(base.relations().gens(), &ext)?;
    for (i, f) in ideal.generators().iter().enumerate() {
        let ti = Polynomial::var(&ext, amb.nvars() + i);
        gens.push(&ti - &(&f.remap_by_name(&ext)? * &t));
    }
    let eliminated = eliminate(&IdealGens::new(&ext, gens)?, &[big_t], &cfg.budget)?;
    let lifted = lift_all(eliminated.gens(), &ring)?;
    let j = buchberger(&IdealGens::new(&ring, lifted)?, &cfg.budget)?;
    Ok(ReesPresentation {
        base,
        ring,
        generators: ideal.generators().to_vec(),
        j,
    })
}
