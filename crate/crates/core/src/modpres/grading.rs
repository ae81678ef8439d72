//! Positive weight gradings under which a presentation is homogeneous.

use super::rmatrix::RMatrix;
use crate::ffpoly::{Monomial, Polynomial};

/// Largest variable weight tried.
const MAX_WEIGHT: u64 = 12;
/// Weight vectors are searched exhaustively only up to this many variables.
const MAX_VARS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Grading {
    pub weights: Vec<u64>,
    /// Degree of each generator, up to a common shift.
    pub row_degrees: Vec<i64>,
}

impl Grading {
    pub fn weight(&self, m: &Monomial) -> u64 {
        m.exponents()
            .iter()
            .zip(&self.weights)
            .map(|(e, w)| *e as u64 * w)
            .sum()
    }

    fn homogeneous_degree(&self, p: &Polynomial) -> Option<u64> {
        let mut it = p.terms().iter().map(|(m, _)| self.weight(m));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// All monomials in `n` variables of weight exactly `w`.
    pub fn monomials_of_weight(&self, w: u64) -> Vec<Monomial> {
        let n = self.weights.len();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(g: &Grading, v: usize, left: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if v == g.weights.len() {
                if left == 0 {
                    out.push(Monomial::new(exps.clone()));
                }
                return;
            }
            let wv = g.weights[v];
            let mut e = 0u32;
            while e as u64 * wv <= left {
                exps[v] = e;
                rec(g, v + 1, left - e as u64 * wv, exps, out);
                e += 1;
            }
            exps[v] = 0;
        }
        rec(self, 0, w, &mut exps, &mut out);
        out
    }
}

/// A grading making the relations and every entry homogeneous, with generator
/// degrees consistent across the (connected) matrix. Standard weights are
/// preferred, then smaller weight sums.
pub(crate) fn detect(m: &RMatrix) -> Option<Grading> {
    let n = m.ring().nvars();
    if n == 0 {
        return None;
    }
    let rels: Vec<Polynomial> = m.ring().relations().gens().to_vec();
    let ones = vec![1u64; n];
    if let Some(g) = try_weights(m, &rels, ones) {
        return Some(g);
    }
    if n > MAX_VARS {
        return None;
    }
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    let mut cur = vec![1u64; n];
    loop {
        candidates.push(cur.clone());
        let mut i = 0;
        while i < n && cur[i] == MAX_WEIGHT {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    candidates.sort_by_key(|w| (w.iter().sum::<u64>(), w.clone()));
    candidates.into_iter().find_map(|w| try_weights(m, &rels, w))
}

/// The grading of `m` for fixed variable weights, if `m` is homogeneous for them.
pub(crate) fn with_weights(m: &RMatrix, weights: Vec<u64>) -> Option<Grading> {
    let rels: Vec<Polynomial> = m.ring().relations().gens().to_vec();
    try_weights(m, &rels, weights)
}

fn try_weights(m: &RMatrix, rels: &[Polynomial], weights: Vec<u64>) -> Option<Grading> {
    let probe = Grading {
        weights,
        row_degrees: Vec::new(),
    };
    if rels.iter().any(|r| probe.homogeneous_degree(r).is_none()) {
        return None;
    }
    let (t, s) = (m.rows(), m.cols());
    let mut row: Vec<Option<i64>> = vec![None; t];
    let mut col: Vec<Option<i64>> = vec![None; s];
    let mut entry = vec![vec![None; s]; t];
    for i in 0..t {
        for j in 0..s {
            let e = m.get(i, j);
            if !e.is_zero() {
                entry[i][j] = Some(probe.homogeneous_degree(e)? as i64);
            }
        }
    }
    // deg(A_ij) = col_j - row_i, propagated through each connected component
    for start in 0..t {
        if row[start].is_some() {
            continue;
        }
        row[start] = Some(0);
        let mut stack = vec![(true, start)];
        while let Some((is_row, idx)) = stack.pop() {
            if is_row {
                let r = row[idx].unwrap();
                for j in 0..s {
                    if let Some(d) = entry[idx][j] {
                        match col[j] {
                            None => {
                                col[j] = Some(r + d);
                                stack.push((false, j));
                            }
                            Some(c) if c != r + d => return None,
                            _ => {}
                        }
                    }
                }
            } else {
                let c = col[idx].unwrap();
                for i in 0..t {
                    if let Some(d) = entry[i][idx] {
                        match row[i] {
                            None => {
                                row[i] = Some(c - d);
                                stack.push((true, i));
                            }
                            Some(r) if r != c - d => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Some(Grading {
        weights: probe.weights,
        row_degrees: row.into_iter().map(|d| d.unwrap_or(0)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modpres::QuotientRing;

    #[test]
    fn e6_weights() {
        let r = QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^3+y^2*z"]).unwrap();
        let a = RMatrix::parse(
            &r,
            &[
                &["z", "y", "x", "0"],
                &["y*z", "z", "0", "x"],
                &["x^2", "0", "z", "y"],
                &["0", "x^2", "y*z", "z"],
            ],
        )
        .unwrap();
        let g = detect(&a).unwrap();
        assert_eq!(g.weights, vec![4, 3, 6]);
        assert_eq!(g.row_degrees, vec![0, -3, -2, -5]);
    }

    #[test]
    fn non_homogeneous_relation() {
        let r = QuotientRing::parse(2, &["x", "y", "z"], &["z^2+x^3+y^5+y^3*z"]).unwrap();
        let a = RMatrix::parse(&r, &[&["z"]]).unwrap();
        assert!(detect(&a).is_none());
    }

    #[test]
    fn monomials_by_weight() {
        let g = Grading {
            weights: vec![4, 3, 6],
            row_degrees: vec![],
        };
        let ms = g.monomials_of_weight(12);
        let mut got: Vec<Vec<u32>> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0, 2], vec![0, 2, 1], vec![0, 4, 0], vec![3, 0, 0]]);
    }
}
