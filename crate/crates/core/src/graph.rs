//! Immutable simple undirected graphs on up to 64 vertices, backed by
//! one-word adjacency bitsets.
//!
//! Vertices are the integers `0..n`. Every graph value is validated at
//! construction (no self-loops, symmetric adjacency, no bits at or above
//! index `n`) and never mutated afterwards, so graphs and vertex sets can
//! be shared freely across threads.

use std::error::Error;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Hard capacity: adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertex indices stored as a 64-bit mask.
///
/// A `VertexSet` is only meaningful relative to a graph whose vertex count
/// is at least `highest set bit + 1`. Ordering is by the raw mask value,
/// which is the canonical order used for enumeration output.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{v}`.
    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} out of bitset range");
        VertexSet(1 << v)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} out of bitset range");
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    /// This set with `v` added.
    pub fn with(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} out of bitset range");
        VertexSet(self.0 | 1 << v)
    }

    /// This set with `v` removed.
    pub fn without(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} out of bitset range");
        VertexSet(self.0 & !(1 << v))
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn remove(&mut self, v: usize) {
        *self = self.without(v);
    }

    /// Number of members (popcount).
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending index order.
    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = SetIter;
    fn into_iter(self) -> SetIter {
        self.iter()
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over set members, lowest index first.
pub struct SetIter(u64);

impl Iterator for SetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SetIter {}

/// Maps a set expressed in a subgraph's indices back to the parent graph's
/// indices, through the injection returned by
/// [`Graph::delete_closed_neighborhood`] (`index_map[new] = old`).
pub fn lift_through(set: VertexSet, index_map: &[usize]) -> VertexSet {
    set.iter().map(|j| index_map[j]).collect()
}

/// Vertex pairs `(u, v)` with `u < v` in column-major upper-triangle order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
///
/// This is the bit order shared by the graph6 body encoding and the
/// edge-code integers used by the exhaustive verification sweep.
pub fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

// ============================================================================
// Graph
// ============================================================================

/// An immutable simple undirected graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Errors from graph constructors and input validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested more vertices than the bitset width supports.
    TooManyVertices { requested: usize },
    /// `complete(0)` is rejected: the empty complete graph is ambiguous.
    EmptyCompleteGraph,
    /// A family constructor was asked for an order it does not define.
    UnsupportedOrder {
        family: &'static str,
        n: usize,
        min: usize,
    },
    /// An edge endpoint is not a vertex of the graph.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { requested } => {
                write!(
                    f,
                    "{requested} vertices exceed the {MAX_VERTICES}-vertex capacity"
                )
            }
            GraphError::EmptyCompleteGraph => write!(f, "complete graph on 0 vertices is rejected"),
            GraphError::UnsupportedOrder { family, n, min } => {
                write!(
                    f,
                    "{family} graph is undefined for n = {n} (needs n >= {min})"
                )
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for an {n}-vertex graph")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
        }
    }
}

impl Error for GraphError {}

impl Graph {
    fn with_vertices(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { requested: n });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[cfg(debug_assertions)]
    fn check_invariants(&self) {
        let full = VertexSet::full(self.n);
        for u in 0..self.n {
            debug_assert!(!self.adj[u].contains(u), "self-loop at {u}");
            debug_assert!(
                self.adj[u].is_subset_of(full),
                "stray high bits in adj[{u}]"
            );
            for v in self.adj[u] {
                debug_assert!(self.adj[v].contains(u), "asymmetric edge ({u},{v})");
            }
        }
    }

    #[cfg(not(debug_assertions))]
    fn check_invariants(&self) {}

    /// The graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Graph::with_vertices(n)
    }

    /// The complete graph `K_k`, `k >= 1`.
    pub fn complete(k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::EmptyCompleteGraph);
        }
        let mut g = Graph::with_vertices(k)?;
        let full = VertexSet::full(k);
        for u in 0..k {
            g.adj[u] = full.without(u);
        }
        g.check_invariants();
        Ok(g)
    }

    /// The path `P_n`: edges i -- i+1.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::with_vertices(n)?;
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g.check_invariants();
        Ok(g)
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::UnsupportedOrder {
                family: "cycle",
                n,
                min: 3,
            });
        }
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0);
        g.check_invariants();
        Ok(g)
    }

    /// The Moon-Moser graph `M_n`, `n >= 2`: the disjoint union of
    /// triangles together with one `K_4` (when n = 3k+1) or one `K_2`
    /// (when n = 3k+2). `M_n` attains the extremal maximal-independent-set
    /// count [`crate::bound::mis_bound`]`(n)`.
    ///
    /// The non-triangle component, when present, comes first: `M_7` is
    /// `K_4` on {0..3} followed by `K_3` on {4..6}.
    pub fn moon_moser(n: usize) -> Result<Graph, GraphError> {
        if n < 2 {
            return Err(GraphError::UnsupportedOrder {
                family: "moon-moser",
                n,
                min: 2,
            });
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { requested: n });
        }
        let mut g = match n % 3 {
            0 => Graph::edgeless(0)?,
            1 => Graph::complete(4)?,
            _ => Graph::complete(2)?,
        };
        while g.n < n {
            g = g.disjoint_union(&Graph::complete(3)?)?;
        }
        debug_assert_eq!(g.n, n);
        Ok(g)
    }

    /// The disjoint union of `self` and `other`; vertices of `other` are
    /// relabeled by an offset of `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::with_vertices(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for v in 0..other.n {
            g.adj[self.n + v] = VertexSet(other.adj[v].0 << self.n);
        }
        g.check_invariants();
        Ok(g)
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are
    /// tolerated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::with_vertices(n)?;
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            g.add_edge(u, v);
        }
        g.check_invariants();
        Ok(g)
    }

    /// Decodes an integer edge code: bit `k` of `code` is the presence of
    /// the `k`-th pair of [`upper_triangle_pairs`]. Needs `n <= 11` so the
    /// code fits one `u64`.
    pub fn from_edge_code(n: usize, code: u64) -> Graph {
        let bits = n * n.saturating_sub(1) / 2;
        assert!(bits <= 64, "edge code for n = {n} does not fit in 64 bits");
        assert!(
            bits == 64 || code >> bits == 0,
            "edge code has bits beyond the {bits}-bit edge space"
        );
        let mut g = Graph::with_vertices(n).expect("n <= 11 is within capacity");
        for (k, (u, v)) in upper_triangle_pairs(n).enumerate() {
            if code >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g.check_invariants();
        g
    }

    /// Inverse of [`Graph::from_edge_code`].
    pub fn edge_code(&self) -> u64 {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        assert!(
            bits <= 64,
            "edge code for n = {} does not fit in 64 bits",
            self.n
        );
        let mut code = 0u64;
        for (k, (u, v)) in upper_triangle_pairs(self.n).enumerate() {
            if self.has_edge(u, v) {
                code |= 1 << k;
            }
        }
        code
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        debug_assert_eq!(perm.iter().copied().collect::<VertexSet>().len(), self.n);
        let mut g = Graph::with_vertices(self.n).expect("same order as self");
        for u in 0..self.n {
            for v in self.adj[u] {
                if u < v {
                    g.add_edge(perm[u], perm[v]);
                }
            }
        }
        g.check_invariants();
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// The set `{0, ..., n-1}`.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "edge query out of range");
        self.adj[u].contains(v)
    }

    /// Open neighborhood of `v` (excludes `v`).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = neighbors(v) + {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// A vertex of minimum degree and that degree, ties broken by lowest
    /// index so results are deterministic. `None` for the 0-vertex graph.
    pub fn min_degree_vertex(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .map(|v| (v, self.degree(v)))
            .min_by_key(|&(v, d)| (d, v))
    }

    /// The induced subgraph on `V - N[w]`, together with the sorted
    /// injection `index_map` from new vertex indices to old ones
    /// (`index_map[new] = old`). Use [`lift_through`] to map enumerated
    /// sets back to this graph's indexing.
    pub fn delete_closed_neighborhood(&self, w: usize) -> (Graph, Vec<usize>) {
        let keep = self.vertex_set() - self.closed_neighborhood(w);
        let index_map: Vec<usize> = keep.iter().collect();
        let mut g = Graph::with_vertices(index_map.len()).expect("subgraph is no larger");
        for (new_u, &old_u) in index_map.iter().enumerate() {
            for (new_v, &old_v) in index_map.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        g.check_invariants();
        (g, index_map)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list()
            .entries(upper_triangle_pairs(self.n).filter(|&(u, v)| self.has_edge(u, v)))
            .finish()?;
        write!(f, ")")
    }
}

// ============================================================================
// Tests
// ============================================================================
