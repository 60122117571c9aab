//! Simple undirected graphs with BFS metric primitives.
//!
//! Vertices are dense 0-based indices; adjacency lists are kept sorted,
//! symmetric, loop-free and duplicate-free. DIMACS `.col` is the on-disk
//! format, with its 1-based vertex numbers shifted on parse.

use std::collections::VecDeque;
use std::fmt;

use bitvec::prelude::*;
use thiserror::Error;

pub(crate) const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing 'p edge <n> <m>' header")]
    MissingHeader,
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Subset of the vertices of a fixed host graph, bit-indexed.
///
/// All members are below the host's vertex count; binary operations expect
/// both operands to come from the same host.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: BitVec,
}

impl VertexSet {
    pub fn empty(domain: usize) -> Self {
        VertexSet {
            bits: BitVec::repeat(false, domain),
        }
    }

    pub fn full(domain: usize) -> Self {
        VertexSet {
            bits: BitVec::repeat(true, domain),
        }
    }

    pub fn from_indices(domain: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::empty(domain);
        for v in indices {
            set.insert(v);
        }
        set
    }

    /// Vertex count of the host graph, not the number of members.
    pub fn domain_size(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.set(v, true);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits[v]
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.first_one()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter_ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.domain_size(), other.domain_size());
        for v in other.iter() {
            self.insert(v);
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.domain_size(), other.domain_size());
        for v in other.iter() {
            self.remove(v);
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.domain_size(), other.domain_size());
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.domain_size(), other.domain_size());
        self.iter().all(|v| !other.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds from an edge list. Duplicate edges (in either orientation) are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set_all(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Parses DIMACS `.col` text: a `p edge <n> <m>` header, `e u v` edge
    /// lines with 1-based endpoints, `c` comment lines. Duplicate edges are
    /// tolerated and collapsed; self-loops are an error.
    pub fn parse_dimacs(text: &str) -> Result<Self, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[0] {
                "p" => {
                    if n.is_some() {
                        return Err(parse_err(line_no, "duplicate problem line"));
                    }
                    if fields.len() != 4 || fields[1] != "edge" {
                        return Err(parse_err(line_no, "expected 'p edge <n> <m>'"));
                    }
                    let nv: usize = fields[2]
                        .parse()
                        .map_err(|_| parse_err(line_no, "vertex count is not a number"))?;
                    let _m: usize = fields[3]
                        .parse()
                        .map_err(|_| parse_err(line_no, "edge count is not a number"))?;
                    n = Some(nv);
                }
                "e" => {
                    let n = n.ok_or_else(|| parse_err(line_no, "edge before problem line"))?;
                    if fields.len() != 3 {
                        return Err(parse_err(line_no, "expected 'e <u> <v>'"));
                    }
                    let u: usize = fields[1]
                        .parse()
                        .map_err(|_| parse_err(line_no, "endpoint is not a number"))?;
                    let v: usize = fields[2]
                        .parse()
                        .map_err(|_| parse_err(line_no, "endpoint is not a number"))?;
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex index out of range 1..={n}"),
                        ));
                    }
                    if u == v {
                        return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(parse_err(line_no, "unrecognized line")),
            }
        }
        let n = n.ok_or(GraphError::MissingHeader)?;
        Graph::from_edges(n, &edges)
    }

    /// Serializes to DIMACS `.col`, bit-exact: `p edge n m` header, then one
    /// `e u v` line per edge with `u < v`, 1-based, ascending lexicographic.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// BFS distances from `src`, optionally restricted to the subgraph
    /// induced by `allowed` and cut off beyond `cap`. Unreached entries hold
    /// [`UNREACHED`].
    pub(crate) fn bfs_distances(
        &self,
        src: usize,
        allowed: Option<&VertexSet>,
        cap: Option<usize>,
    ) -> Vec<u32> {
        debug_assert!(allowed.is_none_or(|a| a.contains(src)));
        let mut dist = vec![UNREACHED; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            if cap.is_some_and(|c| du as usize >= c) {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w] != UNREACHED {
                    continue;
                }
                if allowed.is_some_and(|a| !a.contains(w)) {
                    continue;
                }
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
        dist
    }

    /// Vertices at distance at most `rad` from `v`.
    pub fn ball(&self, v: usize, rad: usize) -> VertexSet {
        let dist = self.bfs_distances(v, None, Some(rad));
        let mut set = VertexSet::empty(self.n());
        for (u, &d) in dist.iter().enumerate() {
            if d != UNREACHED && d as usize <= rad {
                set.insert(u);
            }
        }
        set
    }

    /// Vertices at distance exactly `rad` from `v`.
    pub fn sphere(&self, v: usize, rad: usize) -> VertexSet {
        let dist = self.bfs_distances(v, None, Some(rad));
        let mut set = VertexSet::empty(self.n());
        for (u, &d) in dist.iter().enumerate() {
            if d != UNREACHED && d as usize == rad {
                set.insert(u);
            }
        }
        set
    }

    /// Vertices outside `s` with at least one neighbor inside `s`.
    pub fn outer_boundary(&self, s: &VertexSet) -> VertexSet {
        let mut boundary = VertexSet::empty(self.n());
        for v in s.iter() {
            for &u in &self.adj[v] {
                if !s.contains(u) {
                    boundary.insert(u);
                }
            }
        }
        boundary
    }

    /// Induced subgraph on `s`, with index maps back to this graph.
    pub fn induced(&self, s: &VertexSet) -> SubgraphView {
        let to_parent: Vec<usize> = s.iter().collect();
        let mut from_parent = vec![None; self.n()];
        for (i, &p) in to_parent.iter().enumerate() {
            from_parent[p] = Some(i);
        }
        let mut adj = vec![Vec::new(); to_parent.len()];
        for (i, &p) in to_parent.iter().enumerate() {
            for &q in &self.adj[p] {
                if let Some(j) = from_parent[q] {
                    adj[i].push(j);
                }
            }
            // parent lists are sorted and the map is monotone
            debug_assert!(adj[i].windows(2).all(|w| w[0] < w[1]));
        }
        SubgraphView {
            graph: Graph { adj },
            to_parent,
            from_parent,
        }
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n());
        let mut comps = Vec::new();
        for v in 0..self.n() {
            if seen.contains(v) {
                continue;
            }
            let dist = self.bfs_distances(v, None, None);
            let mut comp = VertexSet::empty(self.n());
            for (u, &d) in dist.iter().enumerate() {
                if d != UNREACHED {
                    comp.insert(u);
                    seen.insert(u);
                }
            }
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Materialized induced subgraph together with the index maps between
/// subgraph indices and parent indices. The maps are mutually inverse;
/// `to_parent` is ascending in the parent order.
#[derive(Clone, Debug)]
pub struct SubgraphView {
    graph: Graph,
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl SubgraphView {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn to_parent(&self, sub: usize) -> usize {
        self.to_parent[sub]
    }

    pub fn from_parent(&self, parent: usize) -> Option<usize> {
        self.from_parent[parent]
    }

    /// Parent indices of the subgraph vertices, ascending.
    pub fn parent_indices(&self) -> &[usize] {
        &self.to_parent
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}
