use std::ops::ControlFlow;

use rand::rngs::StdRng;
use rand::seq::index::sample;
use rand::SeedableRng;

use super::module::{components, PresentedModule};
use super::rmatrix::RMatrix;
use crate::config::Config;
use crate::error::{Error, Result};

/// Random minors tried per size before concluding that all of them vanish.
pub const MINOR_SAMPLES: usize = 50;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Rank over the fraction field of the (domain) ring: the largest k with a
/// k x k minor outside the relation ideal. Additive over connected components.
pub fn matrix_rank(m: &RMatrix, cfg: &Config) -> Result<usize> {
    let mut total = 0;
    for (idx, (rows, cols)) in components(m).into_iter().enumerate() {
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let block = m.submatrix(&rows, &cols);
        total += component_rank(&block, cfg, idx as u64)?;
    }
    Ok(total)
}

/// Rank of the cokernel: generators minus the rank of the presentation matrix.
pub fn module_rank(module: &PresentedModule, cfg: &Config) -> Result<usize> {
    Ok(module.rows() - matrix_rank(module.matrix(), cfg)?)
}

fn some_minor_nonzero(m: &RMatrix, k: usize, cfg: &Config) -> Result<bool> {
    let ring = m.ring().clone();
    let reduce = move |p| ring.reduce(&p);
    let mut found = false;
    let mut seen = 0usize;
    let mut timed_out = None;
    m.inner().for_each_minor(k, &reduce, &mut |_, _, v| {
        seen += 1;
        if seen.is_multiple_of(256) {
            if let Err(e) = cfg.budget.check_time() {
                timed_out = Some(e);
                return ControlFlow::Break(());
            }
        }
        if v.is_zero() {
            ControlFlow::Continue(())
        } else {
            found = true;
            ControlFlow::Break(())
        }
    })?;
    if let Some(e) = timed_out {
        return Err(e);
    }
    Ok(found)
}

fn sampled_minor_nonzero(m: &RMatrix, k: usize, rng: &mut StdRng) -> bool {
    let ring = m.ring().clone();
    let reduce = move |p| ring.reduce(&p);
    (0..MINOR_SAMPLES).any(|_| {
        let mut rows = sample(rng, m.rows(), k).into_vec();
        let mut cols = sample(rng, m.cols(), k).into_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        !m.inner().minor(&rows, &cols, &reduce).is_zero()
    })
}

fn component_rank(m: &RMatrix, cfg: &Config, salt: u64) -> Result<usize> {
    let n = m.rows().min(m.cols());
    if m.cols() > 64 {
        return Err(Error::InvalidArgument(format!(
            "rank of a connected block with {} columns is out of reach",
            m.cols()
        )));
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    // levels whose minors were all inspected
    let mut exhaustive = vec![false; n + 2];
    let mut found = 0;
    for k in (1..=n).rev() {
        cfg.budget.check_time()?;
        let count = binomial(m.rows(), k).saturating_mul(binomial(m.cols(), k));
        let nonzero = if count <= MINOR_SAMPLES as u128 {
            exhaustive[k] = true;
            some_minor_nonzero(m, k, cfg)?
        } else {
            sampled_minor_nonzero(m, k, &mut rng)
        };
        if nonzero {
            found = k;
            break;
        }
    }
    // sampling may have missed a nonzero minor one size up
    while found < n && !exhaustive[found + 1] {
        if some_minor_nonzero(m, found + 1, cfg)? {
            found += 1;
        } else {
            break;
        }
    }
    Ok(found)
}
