//! Dense matrices of polynomials and determinantal minors.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::ffpoly::{check_same, neg_mod, Polynomial, Ring};

/// Receives `(rows, column mask, determinant)` for each minor.
pub type MinorSink<'a> = dyn FnMut(&[usize], u64, &Polynomial) -> ControlFlow<()> + 'a;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            for e in row {
                check_same(ring, e.ring())?;
                entries.push(e);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a matrix from its columns; `nrows` fixes the shape when there are none.
    pub fn from_cols(ring: &Ring, nrows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        let mut m = Self::zero(ring, nrows, cols.len());
        for (j, col) in cols.into_iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::InvalidArgument("column length mismatch".into()));
            }
            for (i, e) in col.into_iter().enumerate() {
                check_same(ring, e.ring())?;
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zero(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, cols)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, target: &Ring, f: impl Fn(&Polynomial) -> Result<Polynomial>) -> Result<Self> {
        Ok(Self {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(Error::InvalidArgument("matrix shapes do not compose".into()));
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidArgument("matrix shapes differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(Self {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        check_same(&self.ring, &other.ring)?;
        let mut m = Self::zero(&self.ring, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Determinant of the square submatrix on `rows` x `cols`, each product
    /// passed through `reduce`.
    pub fn minor(&self, rows: &[usize], cols: &[usize], reduce: &dyn Fn(Polynomial) -> Polynomial) -> Polynomial {
        assert_eq!(rows.len(), cols.len());
        let mut out = Polynomial::zero(&self.ring);
        let mut sink = |_: &[usize], _: u64, v: &Polynomial| {
            out = v.clone();
            ControlFlow::Break(())
        };
        let sub = self.submatrix(rows, cols);
        let all_rows: Vec<usize> = (0..rows.len()).collect();
        sub.minor_tree(&all_rows, rows.len(), reduce, &mut sink, true);
        out
    }

    /// Calls `sink(rows, colmask, det)` for every k x k minor: row subsets in
    /// lexicographic order, column subsets in increasing bitmask order.
    /// Stops early if `sink` breaks. Requires at most 64 columns.
    pub fn for_each_minor(
        &self,
        k: usize,
        reduce: &dyn Fn(Polynomial) -> Polynomial,
        sink: &mut MinorSink,
    ) -> Result<()> {
        if k > self.rows.min(self.cols) {
            return Err(Error::InvalidArgument(format!(
                "minor size {k} exceeds {}x{}",
                self.rows, self.cols
            )));
        }
        if self.cols > 64 {
            return Err(Error::InvalidArgument("minors need at most 64 columns".into()));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        self.minor_tree(&rows, k, reduce, sink, false);
        Ok(())
    }

    /// All k x k minors in the order of `for_each_minor`; minors that vanish
    /// structurally are skipped. k = 0 gives `[1]`.
    pub fn minors(&self, k: usize, reduce: &dyn Fn(Polynomial) -> Polynomial) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        self.for_each_minor(k, reduce, &mut |_, _, v| {
            out.push(v.clone());
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    fn minor_tree(
        &self,
        rows: &[usize],
        k: usize,
        reduce: &dyn Fn(Polynomial) -> Polynomial,
        sink: &mut MinorSink,
        single: bool,
    ) {
        let mut start: HashMap<u64, Polynomial> = HashMap::new();
        start.insert(0, Polynomial::one(&self.ring));
        if k == 0 {
            let _ = sink(&[], 0, &start[&0]);
            return;
        }
        let mut chosen = Vec::with_capacity(k);
        let _ = self.extend_rows(rows, 0, k, &start, &mut chosen, reduce, sink, single);
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_rows(
        &self,
        rows: &[usize],
        from: usize,
        k: usize,
        dets: &HashMap<u64, Polynomial>,
        chosen: &mut Vec<usize>,
        reduce: &dyn Fn(Polynomial) -> Polynomial,
        sink: &mut MinorSink,
        single: bool,
    ) -> ControlFlow<()> {
        let d = chosen.len();
        let p = self.ring.modulus();
        let last = if single { from + 1 } else { rows.len() + d + 1 - k };
        for idx in from..last.min(rows.len()) {
            let r = rows[idx];
            // expand along the new (last) row
            let mut next: HashMap<u64, Polynomial> = HashMap::new();
            for (&mask, det) in dets {
                if det.is_zero() {
                    continue;
                }
                for c in 0..self.cols {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let a = self.get(r, c);
                    if a.is_zero() {
                        continue;
                    }
                    let nmask = mask | (1 << c);
                    // position of c inside nmask decides the cofactor sign
                    let pos = (nmask & ((1u64 << c) - 1)).count_ones() as usize;
                    let mut term = reduce(a * det);
                    if (d + pos) % 2 == 1 {
                        term = term.scale(neg_mod(1, p));
                    }
                    let e = next.entry(nmask).or_insert_with(|| Polynomial::zero(&self.ring));
                    *e = &*e + &term;
                }
            }
            chosen.push(r);
            let flow = if d + 1 == k {
                let mut masks: Vec<u64> = next.keys().copied().collect();
                masks.sort_unstable();
                let mut flow = ControlFlow::Continue(());
                if single && masks.is_empty() {
                    flow = sink(chosen, 0, &Polynomial::zero(&self.ring));
                }
                for m in masks {
                    if flow.is_break() {
                        break;
                    }
                    flow = sink(chosen, m, &reduce(next[&m].clone()));
                }
                flow
            } else {
                self.extend_rows(rows, idx + 1, k, &next, chosen, reduce, sink, single)
            };
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}
