//! Equitable partitions and quotient matrices of `A_α(G)`, and the
//! characteristic cubic of the three-cell quotient of
//! `K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, JoinUnionSpec};
use crate::spectral::{full_spectrum, perron_pair, Alpha, DenseSymMatrix};

/// Ordered cells covering `0..n`, pairwise disjoint and nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    cells: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {i} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} outside 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { cells })
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    fn order(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (i, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = i;
            }
        }
        idx
    }
}

/// Join block first, then one cell per part, matching `build_join_union`.
/// An empty join block contributes no cell.
pub fn natural_partition(spec: &JoinUnionSpec) -> VertexPartition {
    let mut cells = Vec::with_capacity(spec.parts().len() + 1);
    if spec.join_size() > 0 {
        cells.push((0..spec.join_size()).collect());
    }
    let mut start = spec.join_size();
    for &p in spec.parts() {
        cells.push((start..start + p).collect());
        start += p;
    }
    VertexPartition { cells }
}

/// `b_ij` is the mean over `v` in cell `i` of the `A_α` row sum of `v`
/// restricted to cell `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    sizes: Vec<usize>,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.order.max(1)).map(<[f64]>::to_vec).collect()
    }

    /// Whether every block of the partitioned matrix has constant row sums.
    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Eigenvalues in nonincreasing order.
    ///
    /// `|X_i|·b_ij` is the total weight between cells `i` and `j`, which is
    /// symmetric, so `D^{1/2} B D^{−1/2}` (with `D` the cell sizes) is a
    /// symmetric matrix similar to `B`.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        let k = self.order;
        let mut sym = DenseSymMatrix::zeros(k);
        for i in 0..k {
            for j in i..k {
                let w = self.get(i, j) * (self.sizes[i] as f64 / self.sizes[j] as f64).sqrt();
                sym.set(i, j, w);
            }
        }
        full_spectrum(&sym, tol)
    }

    pub fn largest_eigenvalue(&self) -> Result<f64> {
        Ok(self.eigenvalues(1e-11)?.first().copied().unwrap_or(0.0))
    }
}

/// Quotient of `A_α(G)` with respect to `part`.
///
/// Equitability is decided from integer neighbour counts: for `α < 1` a
/// partition is equitable for `A_α` exactly when every vertex of cell `i` has
/// the same number of neighbours in cell `j`, for all `i, j`. At `α = 1` the
/// matrix is `D` and only per-cell constant degree is needed.
pub fn quotient_matrix(g: &Graph, a: Alpha, part: &VertexPartition) -> Result<QuotientMatrix> {
    if part.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            part.order(),
            g.order()
        )));
    }
    let k = part.len();
    let idx = part.cell_index();
    let mut counts = vec![0usize; g.order() * k];
    for v in 0..g.order() {
        for u in g.neighbors(v) {
            counts[v * k + idx[u]] += 1;
        }
    }

    let mut equitable = true;
    let mut entries = vec![0.0; k * k];
    for (i, cell) in part.cells().iter().enumerate() {
        let first = cell[0];
        for &v in cell {
            let same = if a.value() < 1.0 {
                counts[v * k..(v + 1) * k] == counts[first * k..(first + 1) * k]
            } else {
                g.degree(v) == g.degree(first)
            };
            equitable &= same;
        }
        for j in 0..k {
            let total: f64 = cell
                .iter()
                .map(|&v| {
                    let mut w = a.complement() * counts[v * k + j] as f64;
                    if i == j {
                        w += a.value() * g.degree(v) as f64;
                    }
                    w
                })
                .sum();
            entries[i * k + j] = total / cell.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries,
        sizes: part.cell_sizes(),
        equitable,
    })
}

/// Monic cubic `x³ + c2·x² + c1·x + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicPoly {
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl CubicPoly {
    pub fn new(c2: f64, c1: f64, c0: f64) -> Self {
        CubicPoly { c2, c1, c0 }
    }

    /// `(x − r₁)(x − r₂)(x − r₃)`.
    pub fn from_roots(r1: f64, r2: f64, r3: f64) -> Self {
        CubicPoly {
            c2: -(r1 + r2 + r3),
            c1: r1 * r2 + r1 * r3 + r2 * r3,
            c0: -(r1 * r2 * r3),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn derivative(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.c2) * x + self.c1
    }

    /// Real roots of the derivative, ascending.
    pub fn critical_points(&self) -> Vec<f64> {
        // 3x² + 2c2·x + c1
        let disc = 4.0 * self.c2 * self.c2 - 12.0 * self.c1;
        if disc < 0.0 {
            return Vec::new();
        }
        let r = disc.sqrt();
        vec![(-2.0 * self.c2 - r) / 6.0, (-2.0 * self.c2 + r) / 6.0]
    }
}

/// Characteristic polynomial of the quotient of `A_α` for
/// `K_s ∨ (K_{n−2s+1} ∪ (s−1)K_1)` under the partition
/// (join block, big clique, isolated vertices):
///
/// ```text
/// c2 = −((1+α)n − (1−α)s − 1)
/// c1 = αn² + α²ns − n − s² + 2(1−α)s
/// c0 = −α²n²s + (2α²−2α+1)ns² − (α²−3α+1)ns − (3α²−5α+2)s³ + (3α²−6α+2)s²
/// ```
///
/// `c2` is minus the trace of the quotient, whose diagonal is
/// `(αn − αs + s − 1, n − (2−α)s, αs)`.
pub fn charpoly_join(n: usize, s: usize, a: Alpha) -> Result<CubicPoly> {
    if s < 2 || n < 2 * s {
        return Err(Error::Precondition(format!(
            "need n ≥ 2s ≥ 4, got n = {n}, s = {s}"
        )));
    }
    let (n, s, al) = (n as f64, s as f64, a.value());
    let a2 = al * al;
    let c2 = -((1.0 + al) * n - (1.0 - al) * s - 1.0);
    let c1 = al * n * n + a2 * n * s - n - s * s + 2.0 * (1.0 - al) * s;
    let c0 = -a2 * n * n * s + (2.0 * a2 - 2.0 * al + 1.0) * n * s * s
        - (a2 - 3.0 * al + 1.0) * n * s
        - (3.0 * a2 - 5.0 * al + 2.0) * s * s * s
        + (3.0 * a2 - 6.0 * al + 2.0) * s * s;
    Ok(CubicPoly { c2, c1, c0 })
}

/// Largest real root of `p` below `bracket_hi`.
///
/// Scans downward from `bracket_hi` in unit steps (with the critical points of
/// `p` added to the grid, so each grid interval is monotone) to the first
/// sign change, bisects to absolute width `1e−13`, then polishes with
/// Newton steps that stay inside the bracket.
pub fn largest_real_root(p: &CubicPoly, bracket_hi: f64) -> Result<f64> {
    if !(p.eval(bracket_hi) > 0.0) || bracket_hi < 0.0 {
        return Err(Error::Bracketing(bracket_hi));
    }
    let mut grid: Vec<f64> = Vec::new();
    let mut x = bracket_hi;
    while x > 0.0 {
        grid.push(x);
        x -= 1.0;
    }
    grid.push(0.0);
    grid.extend(p.critical_points().into_iter().filter(|c| (0.0..bracket_hi).contains(c)));
    grid.sort_by(|a, b| b.total_cmp(a));
    grid.dedup();

    let (mut lo, mut hi) = grid
        .windows(2)
        .find(|w| p.eval(w[1]) <= 0.0)
        .map(|w| (w[1], w[0]))
        .ok_or(Error::Bracketing(bracket_hi))?;
    if p.eval(lo) == 0.0 {
        return Ok(lo);
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if p.eval(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut root = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = p.derivative(root);
        if d == 0.0 {
            break;
        }
        let next = root - p.eval(root) / d;
        if !(lo..=hi).contains(&next) || next == root {
            break;
        }
        root = next;
    }
    Ok(root)
}

/// Per-cell values of the Perron vector of `A_α(G)`.
#[derive(Debug, Clone)]
pub struct CellValues {
    /// Mean Perron entry over each cell.
    pub values: Vec<f64>,
    /// Largest distance of any entry from its cell mean.
    pub max_deviation: f64,
}

/// Largest admissible in-cell spread of the Perron vector.
pub const CELL_DEVIATION_BOUND: f64 = 1e-8;

/// Perron vector of a connected graph averaged over the cells of an
/// equitable partition. Fails if the entries are not constant on each cell
/// to within [`CELL_DEVIATION_BOUND`].
pub fn perron_cell_values(g: &Graph, a: Alpha, part: &VertexPartition) -> Result<CellValues> {
    let q = quotient_matrix(g, a, part)?;
    if !q.is_equitable() {
        return Err(Error::NotEquitable);
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let perron = perron_pair(g, a, 1e-12)?.perron;
    let mut values = Vec::with_capacity(part.len());
    let mut max_deviation: f64 = 0.0;
    for cell in part.cells() {
        let mean = cell.iter().map(|&v| perron[v]).sum::<f64>() / cell.len() as f64;
        for &v in cell {
            max_deviation = max_deviation.max((perron[v] - mean).abs());
        }
        values.push(mean);
    }
    if max_deviation > CELL_DEVIATION_BOUND {
        return Err(Error::PropertyViolation(format!(
            "Perron vector varies by {max_deviation:e} within a cell"
        )));
    }
    Ok(CellValues {
        values,
        max_deviation,
    })
}
