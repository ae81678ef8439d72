use super::decompose::block_decompose;
use super::fitting::fitting_chain;
use super::module::{components, PresentedModule};
use super::prune::prune;
use super::rank::module_rank;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::groebner::ReducedGB;

/// Components larger than this (in both dimensions) are pruned and decomposed
/// before minors are taken.
pub const DIRECT_LIMIT: usize = 10;

/// Isomorphism invariants of a finitely presented module: its rank, the
/// reduced Gröbner bases of `Fitt_k + I` for `k = 0, 1, ...` up to the first
/// unit ideal (all later ones are the unit ideal too). A matrix and its
/// transpose have the same minors, so a module and its dual are never told
/// apart here; see [`graded_isomorphic`](super::graded_isomorphic).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantSignature {
    pub rank: usize,
    pub fitting: Vec<ReducedGB>,
}

fn too_large(m: &PresentedModule) -> bool {
    components(m.matrix())
        .iter()
        .any(|(r, c)| r.len().min(c.len()) > DIRECT_LIMIT)
}

pub fn signature(module: &PresentedModule, cfg: &Config) -> Result<InvariantSignature> {
    let work = if too_large(module) {
        let pruned = prune(module, cfg)?;
        let blocks = block_decompose(&pruned, cfg)?;
        let sum = PresentedModule::direct_sum_all(module.ring(), &blocks);
        if too_large(&sum) {
            return Err(Error::BudgetExceeded(format!(
                "presentation has an indecomposable block larger than {DIRECT_LIMIT}x{DIRECT_LIMIT}"
            )));
        }
        sum
    } else {
        module.clone()
    };
    let rank = module_rank(&work, cfg)?;
    let fitting = trimmed_chain(&work, cfg)?;
    Ok(InvariantSignature { rank, fitting })
}

fn trimmed_chain(m: &PresentedModule, cfg: &Config) -> Result<Vec<ReducedGB>> {
    let mut chain = fitting_chain(m.matrix(), &cfg.budget)?;
    if let Some(first_unit) = chain.iter().position(|g| g.is_unit()) {
        chain.truncate(first_unit + 1);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::{QuotientRing, RMatrix};

    fn d4() -> crate::modpres::QRing {
        QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^2*y+x*y^2+x*y*z"]).unwrap()
    }

    #[test]
    fn zero_column_padding() {
        let r = d4();
        let free = PresentedModule::free(&r, 1);
        let padded = PresentedModule::new(RMatrix::zero(&r, 1, 1));
        let cfg = Config::default();
        assert_eq!(signature(&free, &cfg).unwrap(), signature(&padded, &cfg).unwrap());
    }

    #[test]
    fn d4_blocks_distinct() {
        let r = d4();
        let cfg = Config::default();
        let blocks = [
            [["z", "x*y"], ["x+y+z", "z"]],
            [["z", "x^2+x*y+x*z"], ["y", "z"]],
            [["z", "x"], ["x*y+y^2+y*z", "z"]],
        ];
        let sigs: Vec<InvariantSignature> = blocks
            .iter()
            .map(|b| {
                let rows: Vec<&[&str]> = b.iter().map(|r| &r[..]).collect();
                signature(&PresentedModule::new(RMatrix::parse(&r, &rows).unwrap()), &cfg).unwrap()
            })
            .collect();
        for s in &sigs {
            assert_eq!(s.rank, 1);
        }
        assert_ne!(sigs[0], sigs[1]);
        assert_ne!(sigs[1], sigs[2]);
        assert_ne!(sigs[0], sigs[2]);
    }

    #[test]
    fn chain_ends_at_unit_ideal() {
        let r = d4();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["x"], &["y"]]).unwrap());
        let s = signature(&m, &Config::default()).unwrap();
        assert!(s.fitting.last().unwrap().is_unit());
        assert!(s.fitting[..s.fitting.len() - 1].iter().all(|g| !g.is_unit()));
    }
}
