use super::endo::find_idempotent;
use super::module::{components, PresentedModule};
use super::prune::prune;
use super::rmatrix::RMatrix;
use crate::config::Config;
use crate::error::Result;
use crate::ffpoly::{inv_mod, neg_mod, Polynomial};

/// Splits a module into a direct sum of cokernels. Row and column operations
/// that clear entries are applied greedily and the connected components of the
/// resulting matrix are taken as summands; a component is split further when
/// an idempotent endomorphism is found. Each zero row contributes a free `1x0`
/// block and zero columns are discarded.
pub fn block_decompose(module: &PresentedModule, cfg: &Config) -> Result<Vec<PresentedModule>> {
    let mut out = Vec::new();
    split_into(module.matrix().clone(), cfg, &mut out)?;
    Ok(out)
}

fn split_into(mut m: RMatrix, cfg: &Config, out: &mut Vec<PresentedModule>) -> Result<()> {
    sparsify(&mut m, cfg)?;
    for (rows, cols) in components(&m) {
        if rows.is_empty() {
            continue;
        }
        if cols.is_empty() {
            for _ in &rows {
                out.push(PresentedModule::free(m.ring(), 1));
            }
            continue;
        }
        let block = m.submatrix(&rows, &cols);
        match find_idempotent(&block, cfg)? {
            Some(psi) => {
                for part in split_along(&block, &psi, cfg)? {
                    split_into(part, cfg, out)?;
                }
            }
            None => out.push(PresentedModule::new(block)),
        }
    }
    Ok(())
}

/// `Coker(A) = ψ M ⊕ (1-ψ) M`, presented as `Coker[A | 1-ψ]` and `Coker[A | ψ]`.
fn split_along(a: &RMatrix, psi: &[Vec<Polynomial>], cfg: &Config) -> Result<Vec<RMatrix>> {
    let ring = a.ring();
    let amb = ring.ambient();
    let t = a.rows();
    let base: Vec<Vec<Polynomial>> = (0..a.cols()).map(|j| a.col(j)).collect();
    let mut parts = Vec::with_capacity(2);
    for keep_image in [true, false] {
        let mut cols = base.clone();
        for k in 0..t {
            let col: Vec<Polynomial> = (0..t)
                .map(|i| {
                    let unit = if i == k {
                        Polynomial::one(amb)
                    } else {
                        Polynomial::zero(amb)
                    };
                    if keep_image {
                        &unit - &psi[i][k]
                    } else {
                        psi[i][k].clone()
                    }
                })
                .collect();
            cols.push(col);
        }
        let m = RMatrix::from_cols(ring, t, cols)?;
        parts.push(prune(&PresentedModule::new(m), cfg)?.into_matrix());
    }
    Ok(parts)
}

/// `(nonzero entries, total terms)`, the quantity sparsification decreases.
fn weight(entries: &[Polynomial]) -> (usize, usize) {
    entries
        .iter()
        .filter(|e| !e.is_zero())
        .fold((0, 0), |(n, t), e| (n + 1, t + e.len()))
}

/// Multipliers `c` such that `target + c * pivot` vanishes: exact quotients of
/// `-target / pivot` when the divisor is a single term or a scalar multiple.
fn killing_multiplier(target: &Polynomial, pivot: &Polynomial) -> Option<Polynomial> {
    let p = target.modulus();
    let ring = target.ring();
    if let [(pm, pc)] = pivot.terms() {
        let inv = inv_mod(*pc, p);
        let mut terms = Vec::with_capacity(target.len());
        for (m, c) in target.terms() {
            let q = pm.quotient_of(m)?;
            terms.push((q, crate::ffpoly::mul_mod(neg_mod(*c, p), inv, p)));
        }
        return Some(Polynomial::from_terms(ring, terms));
    }
    let (_, tc) = target.leading_term()?;
    let (_, pc) = pivot.leading_term()?;
    let lambda = crate::ffpoly::mul_mod(*tc, inv_mod(*pc, p), p);
    if *target == pivot.scale(lambda) {
        return Some(Polynomial::constant(ring, neg_mod(lambda, p) as i64));
    }
    None
}

/// `target += c * source` on rows or columns.
#[derive(Clone, Debug)]
struct LineOp {
    rows: bool,
    target: usize,
    source: usize,
    c: Polynomial,
}

type Weight = (isize, isize);

fn line(m: &RMatrix, rows: bool, a: usize) -> Vec<Polynomial> {
    if rows {
        m.row(a)
    } else {
        m.col(a)
    }
}

fn apply(m: &mut RMatrix, op: &LineOp) {
    if op.rows {
        m.add_row_multiple(op.target, op.source, &op.c);
    } else {
        m.add_col_multiple(op.target, op.source, &op.c);
    }
}

fn signed(w: (usize, usize)) -> Weight {
    (w.0 as isize, w.1 as isize)
}

/// Every operation that clears at least one entry of `target`, with the change
/// in weight it causes.
fn ops_for(m: &RMatrix, rows: bool, target: usize, sources: &mut dyn Iterator<Item = usize>) -> Vec<(Weight, LineOp)> {
    let current = line(m, rows, target);
    let w0 = signed(weight(&current));
    let mut out = Vec::new();
    if w0.0 == 0 {
        return out;
    }
    for k in sources {
        if k == target {
            continue;
        }
        let other = line(m, rows, k);
        for i in 0..current.len() {
            if current[i].is_zero() || other[i].is_zero() {
                continue;
            }
            let Some(c) = killing_multiplier(&current[i], &other[i]) else {
                continue;
            };
            let cand: Vec<Polynomial> = current
                .iter()
                .zip(&other)
                .map(|(a, b)| {
                    if b.is_zero() {
                        a.clone()
                    } else {
                        m.ring().reduce(&(a + &(b * &c)))
                    }
                })
                .collect();
            let w = signed(weight(&cand));
            out.push((
                (w.0 - w0.0, w.1 - w0.1),
                LineOp {
                    rows,
                    target,
                    source: k,
                    c,
                },
            ));
        }
    }
    out
}

fn all_ops(m: &RMatrix) -> Vec<(Weight, LineOp)> {
    let mut out = Vec::new();
    for rows in [false, true] {
        let n = if rows { m.rows() } else { m.cols() };
        for t in 0..n {
            out.extend(ops_for(m, rows, t, &mut (0..n)));
        }
    }
    out
}

/// Operations touching the lines that `op` changed: the line itself, and the
/// crossing lines whose entries it altered.
fn follow_ups(before: &RMatrix, after: &RMatrix, op: &LineOp) -> Vec<(Weight, LineOp)> {
    let (n_same, n_cross) = if op.rows {
        (after.rows(), after.cols())
    } else {
        (after.cols(), after.rows())
    };
    let old = line(before, op.rows, op.target);
    let new = line(after, op.rows, op.target);
    let changed: Vec<usize> = (0..n_cross).filter(|&i| old[i] != new[i]).collect();
    let mut out = Vec::new();
    for t in 0..n_same {
        if t == op.target {
            out.extend(ops_for(after, op.rows, t, &mut (0..n_same)));
        } else {
            out.extend(ops_for(after, op.rows, t, &mut std::iter::once(op.target)));
        }
    }
    for &t in &changed {
        out.extend(ops_for(after, !op.rows, t, &mut (0..n_cross)));
        for s in 0..n_cross {
            if s != t {
                out.extend(ops_for(after, !op.rows, s, &mut std::iter::once(t)));
            }
        }
    }
    out
}

fn add(a: Weight, b: Weight) -> Weight {
    (a.0 + b.0, a.1 + b.1)
}

/// Applies one improving operation, or a pair whose first step does not add
/// nonzero entries. Returns whether the matrix changed.
fn improve(m: &mut RMatrix, cfg: &Config) -> Result<bool> {
    let ops = all_ops(m);
    if let Some((_, op)) = ops.iter().filter(|(d, _)| *d < (0, 0)).min_by_key(|(d, _)| *d) {
        apply(m, op);
        return Ok(true);
    }
    let mut best: Option<(Weight, LineOp, LineOp)> = None;
    for (d1, op1) in ops.iter().filter(|(d, _)| d.0 <= 0) {
        cfg.budget.check_time()?;
        let mut trial = m.clone();
        apply(&mut trial, op1);
        for (d2, op2) in follow_ups(m, &trial, op1) {
            let total = add(*d1, d2);
            if total < (0, 0) && best.as_ref().is_none_or(|b| total < b.0) {
                best = Some((total, op1.clone(), op2));
            }
        }
    }
    match best {
        Some((_, op1, op2)) => {
            apply(m, &op1);
            apply(m, &op2);
            Ok(true)
        }
        None => Ok(false),
    }
}

fn sparsify(m: &mut RMatrix, cfg: &Config) -> Result<()> {
    while improve(m, cfg)? {
        cfg.budget.check_time()?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::{signature, QuotientRing};

    #[test]
    fn hidden_block_structure_recovered() {
        let r = QuotientRing::parse(3, &["x", "y"], &[]).unwrap();
        let a = RMatrix::parse(&r, &[&["x", "0"], &["0", "y"]]).unwrap();
        let mut scrambled = a.clone();
        scrambled.add_col_multiple(1, 0, &Polynomial::one(r.ambient()));
        scrambled.add_row_multiple(0, 1, &r.parse_elem("x").unwrap());
        let module = PresentedModule::new(scrambled);
        let blocks = block_decompose(&module, &Config::default()).unwrap();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.rows() == 1 && b.cols() == 1));
        let cfg = Config::default();
        let sum = PresentedModule::direct_sum_all(&r, &blocks);
        assert_eq!(signature(&sum, &cfg).unwrap(), signature(&module, &cfg).unwrap());
    }

    #[test]
    fn zero_rows_become_free_blocks() {
        let r = QuotientRing::parse(2, &["x"], &[]).unwrap();
        let m = PresentedModule::new(RMatrix::parse(&r, &[&["x"], &["0"], &["0"]]).unwrap());
        let blocks = block_decompose(&m, &Config::default()).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks.iter().filter(|b| b.cols() == 0).count(), 2);
    }
}
