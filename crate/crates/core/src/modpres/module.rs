use super::quotient::QRing;
use super::rmatrix::RMatrix;

/// `Coker(R^s -> R^t)`: rows index generators, columns index relations.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedModule {
    matrix: RMatrix,
}

impl PresentedModule {
    pub fn new(matrix: RMatrix) -> Self {
        Self { matrix }
    }

    /// The free module `R^t`, presented with no relations.
    pub fn free(ring: &QRing, t: usize) -> Self {
        Self::new(RMatrix::zero(ring, t, 0))
    }

    pub fn ring(&self) -> &QRing {
        self.matrix.ring()
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RMatrix {
        self.matrix
    }

    /// Number of generators.
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of relations.
    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.matrix.direct_sum(&other.matrix).expect("same ring"))
    }

    pub fn direct_sum_all(ring: &QRing, parts: &[PresentedModule]) -> Self {
        parts.iter().fold(Self::free(ring, 0), |acc, m| acc.direct_sum(m))
    }
}

/// Connected components of the bipartite row/column graph with an edge at every
/// nonzero entry. Each component lists sorted row and column indices; isolated
/// rows and isolated columns form their own components. Ordered by smallest row,
/// then smallest column.
pub fn components(m: &RMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (t, s) = (m.rows(), m.cols());
    let mut parent: Vec<usize> = (0..t + s).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..t {
        for j in 0..s {
            if !m.get(i, j).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, t + j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
    for v in 0..t + s {
        let root = find(&mut parent, v);
        let g = groups.entry(root).or_default();
        if v < t {
            g.0.push(v);
        } else {
            g.1.push(v - t);
        }
    }
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();
    out.sort_by_key(|(r, c)| {
        (
            r.first().copied().unwrap_or(usize::MAX),
            c.first().copied().unwrap_or(usize::MAX),
        )
    });
    out
}
