//! Canonical simple graphs on the vertex set `1..=n`.
//!
//! Every vector in this crate is indexed by edges in the order used here:
//! pairs `(u, v)` with `u < v`, sorted lexicographically. Graph values are
//! immutable; every operation returns a new canonical graph.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported vertex count; vertex sets are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have between 1 and {MAX_VERTICES} vertices, got {0}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge index {index} out of range (graph has {m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("clique sum: {0}")]
    CliqueSum(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {msg}")]
    BadParams { name: String, msg: String },
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// A set of vertices from `1..=64`, bit `v - 1` marking vertex `v`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `1..=n`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    /// Smallest vertex, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Undirected simple graph with canonical lexicographic edge indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a canonical graph. Edge endpoints may be given in either
    /// order; duplicates are merged. Loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_canonical_parts(n, list))
    }

    /// Sorts, dedupes and builds adjacency. Inputs must already satisfy
    /// `1 <= u < v <= n`.
    fn from_canonical_parts(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![VertexSet::EMPTY; n + 1];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph { n, edges, adj }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edges
            .get(index)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange { index, m: self.m() })
    }

    /// Index of the edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u <= self.n && self.adj[u].contains(v)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            set.difference(VertexSet::singleton(v))
                .difference(self.adj[v])
                .is_empty()
        })
    }

    fn check_edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edge(index)
    }

    /// Removes edge `index`; returns the new graph and the old-to-new edge
    /// index map (`None` for the removed edge).
    pub fn delete_edge(&self, index: usize) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_edge(index)?;
        let edges: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e)
            .collect();
        let map = (0..self.m())
            .map(|i| match i.cmp(&index) {
                std::cmp::Ordering::Less => Some(i),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(i - 1),
            })
            .collect();
        Ok((Self::from_canonical_parts(self.n, edges), map))
    }

    /// Adds the edge `{u, v}` (no-op if present).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, edges)
    }

    /// Contracts edge `index`. The smaller endpoint survives, vertices above
    /// the removed one shift down by one; parallels merge, loops vanish.
    pub fn contract_edge(&self, index: usize) -> Result<Graph> {
        self.contract_edge_with_map(index).map(|(g, _)| g)
    }

    /// Like [`Graph::contract_edge`], also returning the vertex map
    /// (`map[v]` is the image of old vertex `v`; `map[0]` unused).
    pub fn contract_edge_with_map(&self, index: usize) -> Result<(Graph, Vec<usize>)> {
        let (keep, gone) = self.check_edge(index)?;
        let map: Vec<usize> = (0..=self.n)
            .map(|v| match v {
                0 => 0,
                v if v == gone => keep,
                v if v > gone => v - 1,
                v => v,
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (map[a], map[b]))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let n = (self.n - 1).max(1);
        Ok((Self::from_canonical_parts(n, edges), map))
    }

    /// Adds vertex `n + 1` adjacent to every existing vertex.
    pub fn suspension(&self) -> Graph {
        let apex = self.n + 1;
        let mut edges = self.edges.clone();
        edges.extend((1..=self.n).map(|v| (v, apex)));
        Self::from_canonical_parts(apex, edges)
    }

    /// Subgraph induced on `keep`, relabelled densely in increasing order.
    /// Returns the graph and `labels[i]` = old label of new vertex `i + 1`.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = keep.intersection(self.vertices());
        let labels = keep.to_vec();
        let mut new_label = vec![0; self.n + 1];
        for (i, &v) in labels.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep.contains(a) && keep.contains(b))
            .map(|&(a, b)| (new_label[a], new_label[b]))
            .collect::<Vec<_>>();
        let g = Graph::new(labels.len(), edges)?;
        Ok((g, labels))
    }

    /// Graph minus one vertex, relabelled densely.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(keep).map(|(g, _)| g)
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let comp = self.reach(start, within);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Edge indices of a closed vertex walk `v0 v1 ... vk-1 v0`.
    fn cycle_from_vertices(&self, vertices: Vec<usize>) -> Cycle {
        let k = vertices.len();
        let edges = (0..k)
            .map(|i| {
                self.edge_index(vertices[i], vertices[(i + 1) % k])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect();
        Cycle { vertices, edges }
    }

    /// All chordless cycles, each once, in canonical form: smallest vertex
    /// first, then its smaller cycle neighbour. Sorted by length, then
    /// vertex sequence.
    pub fn induced_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(self.n);
        for s in 1..=self.n {
            for p1 in self.adj[s].iter().filter(|&p| p > s) {
                path.clear();
                path.push(s);
                path.push(p1);
                self.extend_chordless(
                    &mut path,
                    VertexSet::singleton(s).with(p1),
                    VertexSet::EMPTY,
                    &mut out,
                );
            }
        }
        out.sort_by(|a, b| {
            a.vertices
                .len()
                .cmp(&b.vertices.len())
                .then_with(|| a.vertices.cmp(&b.vertices))
        });
        out
    }

    // `interior` holds path vertices other than the start and the tip.
    fn extend_chordless(
        &self,
        path: &mut Vec<usize>,
        on_path: VertexSet,
        interior: VertexSet,
        out: &mut Vec<Cycle>,
    ) {
        let s = path[0];
        let tip = *path.last().unwrap();
        let above_s = VertexSet(!VertexSet::full(s).0);
        let candidates = self.adj[tip].intersection(above_s).difference(on_path);
        for v in candidates.iter() {
            if !self.adj[v].intersection(interior).is_empty() {
                continue;
            }
            if self.adj[v].contains(s) {
                if path[1] < v {
                    let mut verts = path.clone();
                    verts.push(v);
                    out.push(self.cycle_from_vertices(verts));
                }
                continue;
            }
            path.push(v);
            self.extend_chordless(path, on_path.with(v), interior.with(tip), out);
            path.pop();
        }
    }

    /// Induced cycles containing edge `index`.
    pub fn cycles_through_edge(&self, index: usize) -> Result<Vec<Cycle>> {
        self.check_edge(index)?;
        Ok(self
            .induced_cycles()
            .into_iter()
            .filter(|c| c.edges.contains(&index))
            .collect())
    }

    /// Fundamental cycles of a breadth-first spanning forest, one per
    /// non-tree edge in index order.
    pub fn cycle_basis(&self) -> Vec<Cycle> {
        let mut parent = vec![0usize; self.n + 1];
        let mut depth = vec![0usize; self.n + 1];
        let mut seen = VertexSet::EMPTY;
        let mut tree = vec![false; self.m()];
        for root in 1..=self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        tree[self.edge_index(u, v).unwrap()] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut out = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if tree[i] {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let mut left = vec![a];
            let mut right = vec![b];
            while depth[a] > depth[b] {
                a = parent[a];
                left.push(a);
            }
            while depth[b] > depth[a] {
                b = parent[b];
                right.push(b);
            }
            while a != b {
                a = parent[a];
                b = parent[b];
                left.push(a);
                right.push(b);
            }
            right.pop();
            right.reverse();
            left.extend(right);
            // left now runs u .. lca .. v; closing edge is {v, u}
            out.push(self.cycle_from_vertices(left));
        }
        out
    }

    /// Canonical text form: `n m` then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let err = |msg: String| GraphError::Parse { line, msg };
            let nums = content
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| err(format!("not a nonnegative integer: `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if nums.len() != 2 {
                return Err(err(format!("expected two integers, found {}", nums.len())));
            }
            match header {
                None => {
                    if nums[0] == 0 || nums[0] > MAX_VERTICES {
                        return Err(err(format!(
                            "vertex count {} out of range 1..={MAX_VERTICES}",
                            nums[0]
                        )));
                    }
                    header = Some((nums[0], nums[1]));
                }
                Some((n, m)) => {
                    if edges.len() == m {
                        return Err(err(format!("more than the declared {m} edges")));
                    }
                    let (u, v) = (nums[0], nums[1]);
                    if u == 0 || v == 0 || u > n || v > n {
                        return Err(err(format!("vertex out of range 1..={n}")));
                    }
                    if u == v {
                        return Err(err(format!("loop at vertex {u}")));
                    }
                    edges.push((u, v));
                }
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: text.lines().count().max(1),
            msg: "missing `n m` header".into(),
        })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: text.lines().count().max(1),
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

/// A cycle as a cyclic vertex sequence; `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_edge(&self, index: usize) -> bool {
        self.edges.contains(&index)
    }

    /// Sum of `x` over the cycle's edges.
    pub fn weight(&self, x: &[i64]) -> i64 {
        self.edges.iter().map(|&e| x[e]).sum()
    }
}

/// Gluing data for a clique sum. `shared[i] = (v, w)` identifies vertex `v`
/// of `g1` with vertex `w` of `g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSumSpec {
    pub g1: Graph,
    pub g2: Graph,
    pub shared: Vec<(usize, usize)>,
}

/// A glued graph with the embeddings of both parts. `left[v]` / `right[w]`
/// is the label in the glued graph of vertex `v` of `g1` / `w` of `g2`
/// (index 0 unused).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSum {
    pub graph: Graph,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl CliqueSumSpec {
    pub fn new(g1: Graph, g2: Graph, shared: Vec<(usize, usize)>) -> Result<Self> {
        let spec = CliqueSumSpec { g1, g2, shared };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of shared vertices (the gluing is an `(s-1)`-sum).
    pub fn s(&self) -> usize {
        self.shared.len()
    }

    pub fn shared_left(&self) -> VertexSet {
        self.shared.iter().map(|&(v, _)| v).collect()
    }

    pub fn shared_right(&self) -> VertexSet {
        self.shared.iter().map(|&(_, w)| w).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.shared.len();
        if s == 0 || s > 3 {
            return Err(GraphError::CliqueSum(format!(
                "need 1 to 3 shared vertices, got {s}"
            )));
        }
        for &(v, w) in &self.shared {
            if v == 0 || v > self.g1.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.g1.n(),
                });
            }
            if w == 0 || w > self.g2.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.g2.n(),
                });
            }
        }
        let (l, r) = (self.shared_left(), self.shared_right());
        if l.len() != s || r.len() != s {
            return Err(GraphError::CliqueSum("shared vertices repeat".into()));
        }
        if !self.g1.is_clique(l) {
            return Err(GraphError::CliqueSum(
                "shared vertices are not a clique in the first graph".into(),
            ));
        }
        if !self.g2.is_clique(r) {
            return Err(GraphError::CliqueSum(
                "shared vertices are not a clique in the second graph".into(),
            ));
        }
        Ok(())
    }

    /// Glues the two parts. Vertices of `g1` keep their labels; the
    /// unshared vertices of `g2` follow as `n1 + 1, n1 + 2, ...` in order.
    pub fn glue(&self) -> Result<CliqueSum> {
        self.validate()?;
        let n1 = self.g1.n();
        let left: Vec<usize> = (0..=n1).collect();
        let mut right = vec![0; self.g2.n() + 1];
        for &(v, w) in &self.shared {
            right[w] = v;
        }
        let mut next = n1;
        for w in 1..=self.g2.n() {
            if right[w] == 0 {
                next += 1;
                right[w] = next;
            }
        }
        let edges = self
            .g1
            .edges()
            .iter()
            .copied()
            .chain(self.g2.edges().iter().map(|&(a, b)| (right[a], right[b])));
        let graph = Graph::new(next, edges)?;
        Ok(CliqueSum { graph, left, right })
    }
}

/// Convenience wrapper for [`CliqueSumSpec::glue`].
pub fn clique_sum(spec: &CliqueSumSpec) -> Result<CliqueSum> {
    spec.glue()
}
