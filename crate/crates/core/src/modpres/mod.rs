//! Finitely presented modules over `R = F_p[x]/I`: matrices with normalized
//! entries, rank, Fitting ideals, submodule membership, pruning, block
//! decomposition and isomorphism signatures.

mod decompose;
mod endo;
mod fitting;
mod grading;
mod module;
mod module_gb;
mod prune;
mod quotient;
mod rank;
mod rmatrix;
mod signature;

pub use decompose::block_decompose;
pub use fitting::fitting_ideal;
pub use module::{components, PresentedModule};
pub use module_gb::{module_normal_form, SubmoduleGB};
pub use prune::prune;
pub use quotient::{QRing, QuotientRing};
pub use rank::{matrix_rank, module_rank, MINOR_SAMPLES};
pub use rmatrix::RMatrix;
pub use signature::{signature, InvariantSignature, DIRECT_LIMIT};

use crate::config::Config;
use crate::error::Result;

/// Whether two modules are isomorphic, decided by a search for a graded
/// isomorphism between their pruned presentations. `Some(false)` is exact
/// when one of the modules is indecomposable; `None` means the presentations
/// are not connected and homogeneous for a common grading, or the search was
/// inconclusive.
pub fn graded_isomorphic(m: &PresentedModule, n: &PresentedModule, cfg: &Config) -> Result<Option<bool>> {
    let (m, n) = (prune(m, cfg)?, prune(n, cfg)?);
    endo::graded_isomorphic(m.matrix(), n.matrix(), cfg)
}

#[cfg(test)]
mod tests;
