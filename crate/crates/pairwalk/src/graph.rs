//! Graph catalog and the arc (directed-edge) structure underlying the walk.
//!
//! Vertices are labeled `0..n`. Adjacency lists are kept sorted ascending;
//! the position of a neighbor in that list is the vertex's *port*, and the
//! pair (vertex, port) names one outgoing arc. Arcs enumerated in
//! lexicographic `(tail, head)` order form the single-particle basis used by
//! the walk modules. A self-loop contributes a single arc that is its own
//! reversal.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an undirected edge list.
    ///
    /// Rejects out-of-range endpoints, duplicate edges (in either order),
    /// and isolated vertices. `u == v` declares a self-loop, which appears
    /// once in the vertex's own neighbor list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            if u == v {
                neighbors[u].push(u);
            } else {
                neighbors[u].push(v);
                neighbors[v].push(u);
            }
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        for (v, list) in neighbors.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(Self {
            n,
            neighbors,
            name: None,
        })
    }

    fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Sorted neighbor list of `v`; a self-loop shows up as `v` itself.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Degree of `v`, counting a self-loop once.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Undirected edges in canonical `(min, max)` order, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn self_loop_count(&self) -> usize {
        (0..self.n).filter(|&v| self.has_edge(v, v)).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Serializes in the plain-text graph format:
    /// `n <vertex-count>` then one `e <u> <v>` line per edge, sorted.
    /// Output bytes are stable for a given graph.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# {name}");
        }
        let _ = writeln!(out, "n {}", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    /// Parses the plain-text graph format. `#` starts a comment line; the
    /// first data line must be `n <vertex-count>`, followed by `e <u> <v>`
    /// lines (undirected, `u == v` allowed for a self-loop).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let tag = fields.next().unwrap();
            let parse = |s: Option<&str>, what: &str| -> Result<usize> {
                s.and_then(|t| t.parse().ok()).ok_or(Error::GraphParse {
                    line: lineno + 1,
                    message: format!("expected {what}"),
                })
            };
            match tag {
                "n" => {
                    if n.is_some() {
                        return Err(Error::GraphParse {
                            line: lineno + 1,
                            message: "repeated n line".into(),
                        });
                    }
                    n = Some(parse(fields.next(), "vertex count after n")?);
                }
                "e" => {
                    if n.is_none() {
                        return Err(Error::GraphParse {
                            line: lineno + 1,
                            message: "edge before n line".into(),
                        });
                    }
                    let u = parse(fields.next(), "edge endpoint")?;
                    let v = parse(fields.next(), "edge endpoint")?;
                    edges.push((u, v));
                }
                other => {
                    return Err(Error::GraphParse {
                        line: lineno + 1,
                        message: format!("unknown record {other:?}"),
                    });
                }
            }
            if fields.next().is_some() {
                return Err(Error::GraphParse {
                    line: lineno + 1,
                    message: "trailing fields".into(),
                });
            }
        }
        let n = n.ok_or(Error::GraphParse {
            line: 0,
            message: "missing n line".into(),
        })?;
        Graph::from_edges(n, &edges)
    }
}

/// Complete graph on `n >= 2` vertices, optionally with a self-loop at every
/// vertex. Degrees are `n - 1`, or `n` with self-loops.
pub fn complete_graph(n: usize, self_loops: bool) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidGraphParameter(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        if self_loops {
            edges.push((u, u));
        }
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Hypercube graph on `2^dim` vertices labeled by binary value; vertices are
/// adjacent iff their labels differ in exactly one bit.
pub fn hypercube(dim: usize) -> Result<Graph> {
    if dim < 1 {
        return Err(Error::InvalidGraphParameter(
            "hypercube needs dim >= 1".into(),
        ));
    }
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..dim {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cayley tree: the root (vertex 0) has `branching` children and every
/// non-leaf descendant has `branching - 1` children, out to `generations`
/// levels. Vertices are labeled in breadth-first order. With `joined`, the
/// leaves are additionally connected in a single cycle in ascending label
/// order, adding exactly two edges per leaf.
pub fn cayley_tree(branching: usize, generations: usize, joined: bool) -> Result<Graph> {
    if branching < 2 || generations < 1 {
        return Err(Error::InvalidGraphParameter(format!(
            "cayley tree needs branching >= 2 and generations >= 1, got ({branching}, {generations})"
        )));
    }
    let mut edges = Vec::new();
    let mut level = vec![0usize];
    let mut next = 1usize;
    for gen in 1..=generations {
        let mut new_level = Vec::new();
        for &parent in &level {
            let children = if gen == 1 { branching } else { branching - 1 };
            for _ in 0..children {
                edges.push((parent, next));
                new_level.push(next);
                next += 1;
            }
        }
        level = new_level;
    }
    if joined {
        let leaves = level;
        match leaves.len() {
            0 | 1 => {}
            2 => edges.push((leaves[0], leaves[1])),
            _ => {
                for i in 0..leaves.len() {
                    edges.push((leaves[i], leaves[(i + 1) % leaves.len()]));
                }
            }
        }
    }
    Graph::from_edges(next, &edges)
}

/// Returns `g` with the listed undirected edges deleted.
///
/// Every listed pair must be a present edge and may appear only once (in
/// either orientation). The result must leave no vertex isolated; with
/// `require_connected` it must also stay connected.
pub fn remove_edges(g: &Graph, edges: &[(usize, usize)], require_connected: bool) -> Result<Graph> {
    let mut removing = HashSet::new();
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotFound(u, v));
        }
        if !removing.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
    }
    let kept: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| !removing.contains(e))
        .collect();
    let out = Graph::from_edges(g.vertex_count(), &kept)?;
    if require_connected && !out.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(out)
}

/// Canonical edge-removal list for the irregular complete-graph variant
/// (10 of the 28 edges of `k8`). Overridable by loading a graph file.
pub const K8_MODIFIED_REMOVED: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
    (4, 5),
    (4, 6),
    (5, 6),
    (6, 7),
];

/// Canonical edge-removal list for the irregular hypercube variant
/// (4 of the 12 edges of `q3`).
pub const Q3_MODIFIED_REMOVED: [(usize, usize); 4] = [(0, 1), (0, 2), (3, 7), (5, 7)];

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: [&str; 6] = [
    "k8",
    "q3",
    "3ct2-joined",
    "k8-modified",
    "q3-modified",
    "3ct2-unjoined",
];

/// Builds one of the six cataloged graphs by name.
pub fn catalog(name: &str) -> Result<Graph> {
    let g = match name {
        "k8" => complete_graph(8, false)?,
        "q3" => hypercube(3)?,
        "3ct2-joined" => cayley_tree(3, 2, true)?,
        "k8-modified" => remove_edges(&complete_graph(8, false)?, &K8_MODIFIED_REMOVED, true)?,
        "q3-modified" => remove_edges(&hypercube(3)?, &Q3_MODIFIED_REMOVED, true)?,
        "3ct2-unjoined" => cayley_tree(3, 2, false)?,
        other => return Err(Error::UnknownCatalog(other.to_string())),
    };
    Ok(g.with_name(name))
}

/// Arc (directed-edge) table: the realization of the position-coin basis.
///
/// Arc index `offset(v) + p` is the basis state "at vertex `v`, coin pointing
/// along port `p`", i.e. the arc `(v, neighbors(v)[p])`. Arcs are sorted
/// lexicographically by `(tail, head)`.
#[derive(Debug, Clone)]
pub struct ArcTable {
    arcs: Vec<(usize, usize)>,
    reverse: Vec<usize>,
    offsets: Vec<usize>,
}

impl ArcTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut arcs = Vec::new();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for v in 0..n {
            for &w in g.neighbors(v) {
                arcs.push((v, w));
            }
            offsets.push(arcs.len());
        }
        let reverse = arcs
            .iter()
            .map(|&(t, h)| {
                let port = g.neighbors(h).binary_search(&t).expect("symmetric adjacency");
                offsets[h] + port
            })
            .collect();
        Self {
            arcs,
            reverse,
            offsets,
        }
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The `(tail, head)` pair of arc `a`.
    pub fn arc(&self, a: usize) -> (usize, usize) {
        self.arcs[a]
    }

    pub fn tail(&self, a: usize) -> usize {
        self.arcs[a].0
    }

    pub fn head(&self, a: usize) -> usize {
        self.arcs[a].1
    }

    /// Index of the reversed arc `(head, tail)`; an involution, and the
    /// identity on self-loop arcs.
    pub fn reverse(&self, a: usize) -> usize {
        self.reverse[a]
    }

    pub(crate) fn reverse_table(&self) -> &[usize] {
        &self.reverse
    }

    /// First arc index of vertex `v`; its arcs are `offset(v) .. offset(v+1)`.
    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }

    /// Range of arc indices whose tail is `v`, one per port.
    pub fn arcs_of(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn arc_index(&self, tail: usize, head: usize) -> Option<usize> {
        let range = self.offsets[tail]..self.offsets[tail + 1];
        self.arcs[range.clone()]
            .binary_search(&(tail, head))
            .ok()
            .map(|i| range.start + i)
    }
}

/// Builds the arc table of a graph. Equivalent to [`ArcTable::new`].
pub fn build_arc_table(g: &Graph) -> ArcTable {
    ArcTable::new(g)
}
