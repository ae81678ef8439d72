use super::module::{components, PresentedModule};
use super::module_gb::SubmoduleGB;
use super::rmatrix::RMatrix;
use crate::config::Config;
use crate::error::Result;
use crate::ffpoly::{inv_mod, neg_mod, Polynomial};

/// Shrinks a presentation without changing the module: pivots on constant
/// entries, then drops relations lying in the span of the remaining ones.
/// Zero rows stay (they are free summands). An all-zero matrix is returned as is.
pub fn prune(module: &PresentedModule, cfg: &Config) -> Result<PresentedModule> {
    if module.matrix().is_zero() {
        return Ok(module.clone());
    }
    let mut m = module.matrix().clone();
    while let Some((i, j)) = constant_pivot(&m) {
        cfg.budget.check_time()?;
        m = eliminate_pivot(&m, i, j);
    }
    let nonzero: Vec<usize> = (0..m.cols())
        .filter(|&j| m.col(j).iter().any(|e| !e.is_zero()))
        .collect();
    m = m.select_cols(&nonzero);
    m = drop_redundant_columns(&m, cfg)?;
    Ok(PresentedModule::new(m))
}

/// Constant entry with the smallest Markowitz cost `(r-1)(c-1)`; ties go to the
/// first position in row-major order.
pub(crate) fn constant_pivot(m: &RMatrix) -> Option<(usize, usize)> {
    let row_counts: Vec<usize> = (0..m.rows())
        .map(|i| (0..m.cols()).filter(|&j| !m.get(i, j).is_zero()).count())
        .collect();
    let col_counts: Vec<usize> = (0..m.cols())
        .map(|j| (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).count())
        .collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m.get(i, j).is_unit() {
                let cost = (row_counts[i] - 1) * (col_counts[j] - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Clears row `i` with column operations against the unit at `(i, j)`, then
/// deletes generator `i` and relation `j`.
pub(crate) fn eliminate_pivot(m: &RMatrix, i: usize, j: usize) -> RMatrix {
    let p = m.ring().modulus();
    let c = m.get(i, j).constant_value().expect("pivot is a constant");
    let inv = inv_mod(c, p);
    let mut work = m.clone();
    for k in 0..m.cols() {
        if k == j || m.get(i, k).is_zero() {
            continue;
        }
        let factor = m.get(i, k).scale(neg_mod(inv, p));
        work.add_col_multiple(k, j, &factor);
    }
    let rows: Vec<usize> = (0..m.rows()).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&k| k != j).collect();
    work.submatrix(&rows, &cols)
}

fn drop_redundant_columns(m: &RMatrix, cfg: &Config) -> Result<RMatrix> {
    let mut keep = vec![true; m.cols()];
    for (rows, cols) in components(m) {
        if cols.len() < 2 {
            continue;
        }
        let restrict = |j: usize| -> Vec<Polynomial> { rows.iter().map(|&i| m.get(i, j).clone()).collect() };
        // later columns are tested first so earlier ones are preferred
        for &j in cols.iter().rev() {
            let others: Vec<Vec<Polynomial>> = cols
                .iter()
                .filter(|&&k| k != j && keep[k])
                .map(|&k| restrict(k))
                .collect();
            if others.is_empty() {
                continue;
            }
            let target = restrict(j);
            let redundant = if others.iter().any(|o| scalar_multiple(&target, o)) {
                true
            } else {
                SubmoduleGB::new(m.ring(), rows.len(), &others, &cfg.budget)?.contains(&target, &cfg.budget)?
            };
            if redundant {
                keep[j] = false;
            }
        }
    }
    let kept: Vec<usize> = (0..m.cols()).filter(|&j| keep[j]).collect();
    Ok(m.select_cols(&kept))
}

/// `a = c * b` for a constant `c`.
fn scalar_multiple(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let p = match a.first() {
        Some(x) => x.modulus(),
        None => return true,
    };
    (1..p).any(|c| a.iter().zip(b).all(|(x, y)| *x == y.scale(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::{signature, QuotientRing};

    #[test]
    fn unit_matrix_prunes_to_zero_module() {
        let r = QuotientRing::parse(2, &["x"], &[]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["1"]]).unwrap());
        let p = prune(&m, &Config::default()).unwrap();
        assert_eq!((p.rows(), p.cols()), (0, 0));
    }

    #[test]
    fn zero_matrix_is_kept() {
        let r = QuotientRing::parse(2, &["x"], &[]).unwrap();
        let m = PresentedModule::new(RMatrix::zero(&r, 1, 1));
        assert_eq!(prune(&m, &Config::default()).unwrap(), m);
    }

    #[test]
    fn duplicate_column_removed() {
        let r = QuotientRing::parse(2, &["x", "y"], &[]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["x", "x"], &["y", "y"]]).unwrap());
        let p = prune(&m, &Config::default()).unwrap();
        assert_eq!(p.matrix().to_strings(), vec![vec!["x"], vec!["y"]]);
    }

    #[test]
    fn span_redundancy_over_quotient() {
        // over F_3[x,y]/(x*y): y*(x, y) = (0, y^2), so the second column is redundant
        let r = QuotientRing::parse(3, &["x", "y"], &["x*y"]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["x", "0"], &["y", "y^2"]]).unwrap());
        let p = prune(&m, &Config::default()).unwrap();
        assert_eq!(p.cols(), 1);
    }

    #[test]
    fn pivot_then_signature_preserved() {
        let r = QuotientRing::parse(3, &["x", "y", "z"], &["x*z - y^2"]).unwrap();
        let m =
            PresentedModule::new(RMatrix::parse(&r, &[&["1", "x", "y"], &["z", "y", "0"], &["x", "0", "z"]]).unwrap());
        let cfg = Config::default();
        let p = prune(&m, &cfg).unwrap();
        assert_eq!(p.rows(), 2);
        assert!((0..p.rows()).all(|i| (0..p.cols()).all(|j| !p.matrix().get(i, j).is_unit())));
        assert_eq!(signature(&m, &cfg).unwrap(), signature(&p, &cfg).unwrap());
    }
}
