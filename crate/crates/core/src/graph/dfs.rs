use super::{GraphError, GraphView};

/// A depth-first spanning tree of the vertices reachable from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsResult {
    pub root: usize,
    /// Tree edges `(parent, child)` in discovery order.
    pub tree: Vec<(usize, usize)>,
    /// Vertices by marking time; `order[0] == root`.
    pub order: Vec<usize>,
    pub marked: Vec<bool>,
    parent: Vec<Option<usize>>,
    rank: Vec<Option<usize>>,
}

impl DfsResult {
    pub(crate) fn start(n: usize, root: usize) -> Self {
        let mut marked = vec![false; n];
        let mut rank = vec![None; n];
        marked[root] = true;
        rank[root] = Some(0);
        Self {
            root,
            tree: Vec::new(),
            order: vec![root],
            marked,
            parent: vec![None; n],
            rank,
        }
    }

    pub(crate) fn mark(&mut self, parent: usize, child: usize) {
        debug_assert!(!self.marked[child]);
        self.marked[child] = true;
        self.parent[child] = Some(parent);
        self.rank[child] = Some(self.order.len());
        self.order.push(child);
        self.tree.push((parent, child));
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Position of `v` in the marking order, if marked.
    pub fn rank(&self, v: usize) -> Option<usize> {
        self.rank[v]
    }

    pub fn marked_count(&self) -> usize {
        self.order.len()
    }

    pub fn spans_all(&self) -> bool {
        self.order.len() == self.marked.len()
    }

    /// Whether `descendant` lies in the tree subtree rooted at `ancestor`.
    pub fn subtree_contains(&self, ancestor: usize, descendant: usize) -> Result<bool, GraphError> {
        for v in [ancestor, descendant] {
            if v >= self.marked.len() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.marked.len(),
                });
            }
            if !self.marked[v] {
                return Err(GraphError::Unmarked(v));
            }
        }
        let mut cur = Some(descendant);
        while let Some(v) = cur {
            if v == ancestor {
                return Ok(true);
            }
            cur = self.parent[v];
        }
        Ok(false)
    }
}

/// Deterministic DFS that always descends into the lowest-index unmarked
/// out-neighbor of the stack top.
pub fn classical_dfs<G: GraphView + ?Sized>(g: &G, root: usize) -> DfsResult {
    let adj = g.adjacency();
    let mut result = DfsResult::start(g.vertex_count(), root);
    // per-vertex cursor into its sorted neighbor list
    let mut cursor = vec![0usize; adj.len()];
    let mut stack = vec![root];
    while let Some(&u) = stack.last() {
        let next = loop {
            match adj[u].get(cursor[u]) {
                Some(&v) if result.marked[v] => cursor[u] += 1,
                other => break other.copied(),
            }
        };
        match next {
            Some(v) => {
                result.mark(u, v);
                stack.push(v);
            }
            None => {
                stack.pop();
            }
        }
    }
    result
}
