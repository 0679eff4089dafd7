//! Graph encodings for the two query models, promise validation and the
//! exact classical baselines used as ground truth.
//!
//! The matrix model exposes an `n x n` adjacency oracle `M[i][j]`; the list
//! model exposes a neighbor function `nbr(u, i)` for `i < k`. Both encodings
//! forbid self-loops, and the list model additionally carries the
//! simple-graph promise: the `k` slots of a vertex name pairwise distinct
//! neighbors.

mod classical;
mod dfs;
mod format;

pub use classical::{
    classical_connected, classical_strongly_connected, reachable_from, strongly_connected_adj,
    ProbeGraph,
};
pub use dfs::{classical_dfs, DfsResult};
pub use format::{parse_graph, read_graph, write_graph, Graph};

use thiserror::Error;

/// First violated invariant found by validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("cell table has {len} entries, expected {expected}")]
    Shape { len: usize, expected: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("asymmetric cell pair ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("vertex {u}: slots {i} and {j} name the same neighbor")]
    DuplicateNeighbor { u: usize, i: usize, j: usize },
    #[error("vertex {u}: slot {i} holds {value}, out of range for n={n}")]
    OutOfRange {
        u: usize,
        i: usize,
        value: usize,
        n: usize,
    },
    #[error("out-degree k must be at least 1")]
    ZeroDegree,
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(#[from] Violation),
    #[error("vertex {0} is not marked by the search")]
    Unmarked(usize),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph text format, line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Read-only structural access used by simulator-side code.
///
/// Nothing reached through this trait is charged to a ledger; algorithms that
/// pay for their probes go through the counted entry points instead.
pub trait GraphView {
    fn vertex_count(&self) -> usize;

    /// Out-neighbors of `u` in increasing vertex order.
    fn out_neighbors(&self, u: usize) -> Vec<usize>;

    fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|u| self.out_neighbors(u))
            .collect()
    }
}

/// Adjacency-matrix encoding, `cells[i * n + j] == M_ij`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixGraph {
    n: usize,
    cells: Vec<bool>,
    directed: bool,
}

impl MatrixGraph {
    /// Build and validate. Undirected graphs must be symmetric.
    pub fn new(n: usize, cells: Vec<bool>, directed: bool) -> Result<Self, GraphError> {
        let g = Self::from_cells_unchecked(n, cells, directed);
        validate_matrix(&g, !directed)?;
        Ok(g)
    }

    /// Raw construction; callers must run [`validate_matrix`] themselves.
    pub fn from_cells_unchecked(n: usize, cells: Vec<bool>, directed: bool) -> Self {
        Self { n, cells, directed }
    }

    pub fn empty(n: usize, directed: bool) -> Self {
        Self {
            n,
            cells: vec![false; n * n],
            directed,
        }
    }

    /// Build from an edge list. Undirected edges are stored in both cells.
    pub fn from_edges(
        n: usize,
        directed: bool,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n, directed);
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            g.cells[a * n + b] = true;
            if !directed {
                g.cells[b * n + a] = true;
            }
        }
        validate_matrix(&g, !directed)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Uncounted cell read.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// Number of set cells. An undirected edge occupies two cells.
    pub fn cell_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Undirected edges `(i, j)` with `i < j`, or all directed cells.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.cell(i, j) && (self.directed || i < j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.cell(u, v)).count()
    }

    /// Copy with `cells[i][j]` and (when undirected) `cells[j][i]` set to `value`.
    pub(crate) fn with_cell(mut self, i: usize, j: usize, value: bool) -> Self {
        let n = self.n;
        self.cells[i * n + j] = value;
        if !self.directed {
            self.cells[j * n + i] = value;
        }
        self
    }
}

impl GraphView for MatrixGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn out_neighbors(&self, u: usize) -> Vec<usize> {
        let row = &self.cells[u * self.n..(u + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(v, &c)| c.then_some(v))
            .collect()
    }
}

/// Out-degree-`k` neighbor-function encoding, `nbr[u * k + i] == f(u, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ListGraph {
    n: usize,
    k: usize,
    nbr: Vec<usize>,
}

impl ListGraph {
    /// Build from per-vertex rows and validate.
    pub fn new(n: usize, k: usize, rows: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let g = Self::from_rows_unchecked(n, k, rows);
        validate_list(&g)?;
        Ok(g)
    }

    /// Raw construction; callers must run [`validate_list`] themselves.
    ///
    /// Rows shorter or longer than `k` surface as a shape violation.
    pub fn from_rows_unchecked(n: usize, k: usize, rows: Vec<Vec<usize>>) -> Self {
        let shape_ok = rows.len() == n && rows.iter().all(|r| r.len() == k);
        let nbr = if shape_ok {
            rows.into_iter().flatten().collect()
        } else {
            // mis-sized on purpose so validation reports Shape
            vec![usize::MAX; n * k + 1]
        };
        Self { n, k, nbr }
    }

    pub(crate) fn from_flat(n: usize, k: usize, nbr: Vec<usize>) -> Result<Self, GraphError> {
        let g = Self { n, k, nbr };
        validate_list(&g)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Uncounted slot read.
    #[inline]
    pub fn neighbor(&self, u: usize, slot: usize) -> usize {
        self.nbr[u * self.k + slot]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.nbr[u * self.k..(u + 1) * self.k]
    }

    /// The whole table, row-major. This is the input string the adversary
    /// module indexes by `(vertex, slot)`.
    pub fn table(&self) -> &[usize] {
        &self.nbr
    }
}

impl GraphView for ListGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn out_neighbors(&self, u: usize) -> Vec<usize> {
        let mut out = self.row(u).to_vec();
        out.sort_unstable();
        out
    }
}

/// Check the matrix invariants: square shape, zero diagonal and, when
/// `undirected`, symmetry. Reports the first violated cell pair.
pub fn validate_matrix(g: &MatrixGraph, undirected: bool) -> Result<(), Violation> {
    let n = g.n;
    if g.cells.len() != n * n {
        return Err(Violation::Shape {
            len: g.cells.len(),
            expected: n * n,
        });
    }
    for i in 0..n {
        if g.cell(i, i) {
            return Err(Violation::SelfLoop(i));
        }
        if undirected {
            for j in (i + 1)..n {
                if g.cell(i, j) != g.cell(j, i) {
                    return Err(Violation::Asymmetric(i, j));
                }
            }
        }
    }
    Ok(())
}

/// Check the simple-graph promise `f(u,i) != f(u,j)` for `i != j`, range and
/// the no-self-loop rule. Reports the offending `(u, i, j)`.
pub fn validate_list(g: &ListGraph) -> Result<(), Violation> {
    let (n, k) = (g.n, g.k);
    if k == 0 {
        return Err(Violation::ZeroDegree);
    }
    if g.nbr.len() != n * k {
        return Err(Violation::Shape {
            len: g.nbr.len(),
            expected: n * k,
        });
    }
    for u in 0..n {
        let row = g.row(u);
        for (i, &value) in row.iter().enumerate() {
            if value >= n {
                return Err(Violation::OutOfRange { u, i, value, n });
            }
            if value == u {
                return Err(Violation::SelfLoop(u));
            }
            if let Some(j) = row[i + 1..].iter().position(|&w| w == value) {
                return Err(Violation::DuplicateNeighbor { u, i, j: i + 1 + j });
            }
        }
    }
    Ok(())
}

/// `result[i][j] = g[j][i]`.
pub fn transpose(g: &MatrixGraph) -> MatrixGraph {
    let n = g.n;
    let mut cells = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            cells[j * n + i] = g.cell(i, j);
        }
    }
    MatrixGraph {
        n,
        cells,
        directed: g.directed,
    }
}
