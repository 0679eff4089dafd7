//! Plain-text graph files.
//!
//! ```text
//! #model=matrix
//! #directed=0
//! 3
//! 011
//! 100
//! 100
//! ```
//!
//! List files use `#model=list`, a size line `n k` and `n` lines of `k`
//! space-separated neighbor indices. List graphs are always directed.

use std::fmt::Write as _;
use std::path::Path;

use super::{GraphError, GraphView, ListGraph, MatrixGraph, ProbeGraph};
use crate::ledger::QueryLedger;

/// A graph in either oracle encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph {
    Matrix(MatrixGraph),
    List(ListGraph),
}

impl Graph {
    pub fn model(&self) -> &'static str {
        match self {
            Graph::Matrix(_) => "matrix",
            Graph::List(_) => "list",
        }
    }

    pub fn is_directed(&self) -> bool {
        match self {
            Graph::Matrix(g) => g.is_directed(),
            Graph::List(_) => true,
        }
    }

    /// Out-degree for list graphs, 0 for matrix graphs.
    pub fn k(&self) -> usize {
        match self {
            Graph::Matrix(_) => 0,
            Graph::List(g) => g.k(),
        }
    }
}

impl From<MatrixGraph> for Graph {
    fn from(g: MatrixGraph) -> Self {
        Graph::Matrix(g)
    }
}

impl From<ListGraph> for Graph {
    fn from(g: ListGraph) -> Self {
        Graph::List(g)
    }
}

impl GraphView for Graph {
    fn vertex_count(&self) -> usize {
        match self {
            Graph::Matrix(g) => g.vertex_count(),
            Graph::List(g) => g.vertex_count(),
        }
    }

    fn out_neighbors(&self, u: usize) -> Vec<usize> {
        match self {
            Graph::Matrix(g) => g.out_neighbors(u),
            Graph::List(g) => g.out_neighbors(u),
        }
    }
}

impl ProbeGraph for Graph {
    fn probe_out(&self, u: usize, ledger: &mut QueryLedger) -> Vec<usize> {
        match self {
            Graph::Matrix(g) => g.probe_out(u, ledger),
            Graph::List(g) => g.probe_out(u, ledger),
        }
    }
}

/// Serialize to the text format. Every line ends in `\n`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    match g {
        Graph::Matrix(m) => {
            let n = m.n();
            let _ = writeln!(out, "#model=matrix");
            let _ = writeln!(out, "#directed={}", u8::from(m.is_directed()));
            let _ = writeln!(out, "{n}");
            for i in 0..n {
                for j in 0..n {
                    out.push(if m.cell(i, j) { '1' } else { '0' });
                }
                out.push('\n');
            }
        }
        Graph::List(l) => {
            let _ = writeln!(out, "#model=list");
            let _ = writeln!(out, "{} {}", l.n(), l.k());
            for u in 0..l.n() {
                let row: Vec<String> = l.row(u).iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
        }
    }
    out
}

fn fmt_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Format {
        line,
        msg: msg.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, GraphError> {
    tok.parse()
        .map_err(|_| fmt_err(line, format!("expected a decimal integer, got {tok:?}")))
}

/// Parse the text format and validate the result.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut model = None;
    let mut directed = None;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));

    let (size_line_no, size_line) = loop {
        let (no, line) = lines.next().ok_or_else(|| fmt_err(0, "missing size line"))?;
        if let Some(header) = line.strip_prefix('#') {
            let (key, value) = header
                .split_once('=')
                .ok_or_else(|| fmt_err(no, "header must be #key=value"))?;
            match (key, value) {
                ("model", "matrix") => model = Some(false),
                ("model", "list") => model = Some(true),
                ("directed", "0") => directed = Some(false),
                ("directed", "1") => directed = Some(true),
                _ => return Err(fmt_err(no, format!("unknown header {line:?}"))),
            }
        } else if !line.trim().is_empty() {
            break (no, line);
        }
    };

    let size: Vec<&str> = size_line.split_whitespace().collect();
    let is_list = model.unwrap_or(size.len() == 2);
    let mut body = lines.filter(|(_, l)| !l.trim().is_empty());

    if is_list {
        if directed == Some(false) {
            return Err(fmt_err(size_line_no, "list graphs are directed"));
        }
        let [n, k] = size[..] else {
            return Err(fmt_err(size_line_no, "list size line must be `n k`"));
        };
        let (n, k) = (parse_usize(n, size_line_no)?, parse_usize(k, size_line_no)?);
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (no, line) = body.next().ok_or_else(|| fmt_err(0, "missing adjacency row"))?;
            let row = line
                .split_whitespace()
                .map(|t| parse_usize(t, no))
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != k {
                return Err(fmt_err(no, format!("expected {k} neighbors, got {}", row.len())));
            }
            rows.push(row);
        }
        if let Some((no, _)) = body.next() {
            return Err(fmt_err(no, "trailing content"));
        }
        Ok(Graph::List(ListGraph::new(n, k, rows)?))
    } else {
        let [n] = size[..] else {
            return Err(fmt_err(size_line_no, "matrix size line must be `n`"));
        };
        let n = parse_usize(n, size_line_no)?;
        let mut cells = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (no, line) = body.next().ok_or_else(|| fmt_err(0, "missing matrix row"))?;
            let line = line.trim();
            if line.len() != n {
                return Err(fmt_err(no, format!("expected {n} cells, got {}", line.len())));
            }
            for c in line.chars() {
                match c {
                    '0' => cells.push(false),
                    '1' => cells.push(true),
                    _ => return Err(fmt_err(no, format!("invalid cell {c:?}"))),
                }
            }
        }
        if let Some((no, _)) = body.next() {
            return Err(fmt_err(no, "trailing content"));
        }
        Ok(Graph::Matrix(MatrixGraph::new(
            n,
            cells,
            directed.unwrap_or(false),
        )?))
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Violation;

    #[test]
    fn matrix_text_is_bit_exact() {
        let g = MatrixGraph::from_edges(3, false, [(0, 1), (0, 2)]).unwrap();
        let text = write_graph(&g.clone().into());
        assert_eq!(text, "#model=matrix\n#directed=0\n3\n011\n100\n100\n");
        assert_eq!(parse_graph(&text).unwrap(), Graph::Matrix(g));
    }

    #[test]
    fn list_text_is_bit_exact() {
        let g = ListGraph::new(3, 2, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        let text = write_graph(&g.clone().into());
        assert_eq!(text, "#model=list\n3 2\n1 2\n2 0\n0 1\n");
        assert_eq!(parse_graph(&text).unwrap(), Graph::List(g));
    }

    #[test]
    fn model_inferred_from_size_line() {
        let g = parse_graph("2\n01\n10\n").unwrap();
        assert!(matches!(g, Graph::Matrix(_)));
        let g = parse_graph("2 1\n1\n0\n").unwrap();
        assert!(matches!(g, Graph::List(_)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_graph("#model=matrix\n2\n01\n00\n"),
            Err(GraphError::Invalid(Violation::Asymmetric(0, 1)))
        ));
        assert!(parse_graph("#model=matrix\n#directed=1\n2\n01\n00\n").is_ok());
        assert!(matches!(parse_graph("#model=tree\n1\n0\n"), Err(GraphError::Format { line: 1, .. })));
        assert!(matches!(parse_graph("2\n0x\n00\n"), Err(GraphError::Format { line: 2, .. })));
        assert!(matches!(parse_graph("2\n01\n"), Err(GraphError::Format { .. })));
        assert!(matches!(parse_graph("#model=list\n2 1\n1\n0\n1\n"), Err(GraphError::Format { line: 5, .. })));
    }
}
