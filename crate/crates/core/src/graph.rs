//! Value-semantic colored graphs: validation, blow-up, greedy proper
//! extension and neighborhood queries.
//!
//! Vertices are indices `0..n`. Edges are unordered pairs stored normalized
//! (`u < v`) and kept in lexicographic order, which fixes the processing
//! order of every deterministic operation in this crate. Colors are
//! non-negative integer ids attached to edges; a graph may be uncolored,
//! partially colored or totally colored.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Color ids are plain non-negative integers; the palette is unbounded.
pub type ColorId = u32;

/// Soft cap on vertex counts. The constructions here are sparse gadgets;
/// anything larger than this is almost certainly a caller bug.
pub const MAX_VERTICES: usize = 100_000;

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the pair; rejects self-loops.
    pub fn new(a: usize, b: usize) -> Result<Edge, GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop { v: a });
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`. Panics if `w` is not an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex count {n} exceeds the supported limit {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("no edge {{{u},{v}}} in the graph")]
    MissingEdge { u: usize, v: usize },
    #[error("blow-up multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("vertices {u} and {v} must be distinct")]
    IdenticalVertices { u: usize, v: usize },
    #[error("partial coloring is not proper: {0}")]
    ImproperPartialColoring(String),
}

/// A violation reported by [`ColoredGraph::validate_proper`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperViolation {
    /// An edge without a color (only reported when a total map is expected).
    MissingColor { edge: Edge },
    /// Two edges sharing `vertex` carry the same color.
    SameColorAtVertex {
        vertex: usize,
        color: ColorId,
        first: Edge,
        second: Edge,
    },
}

impl fmt::Display for ProperViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProperViolation::MissingColor { edge } => {
                write!(f, "edge {edge:?} has no color")
            }
            ProperViolation::SameColorAtVertex {
                vertex,
                color,
                first,
                second,
            } => write!(
                f,
                "edges {first:?} and {second:?} share color {color} at vertex {vertex}"
            ),
        }
    }
}

/// Thin/fat classification of a vertex pair by common-neighbor count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    Thin,
    Fat,
}

/// An undirected simple graph with an optional color on every edge.
///
/// Immutable after construction; all operations return new values.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    colors: Vec<Option<ColorId>>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(n={}, m={})", self.n, self.edges.len())
    }
}

impl ColoredGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<ColoredGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(ColoredGraph {
            n,
            edges: Vec::new(),
            colors: Vec::new(),
            adj: vec![Vec::new(); n],
        })
    }

    /// Builds an uncolored graph from an edge list.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<ColoredGraph, GraphError> {
        let trips: Vec<(usize, usize, Option<ColorId>)> =
            pairs.iter().map(|&(a, b)| (a, b, None)).collect();
        ColoredGraph::from_colored_edges(n, &trips)
    }

    /// Builds a graph from `(u, v, color)` triples; `None` marks an
    /// uncolored edge. Rejects self-loops, out-of-range vertices and
    /// duplicate edges.
    pub fn from_colored_edges(
        n: usize,
        trips: &[(usize, usize, Option<ColorId>)],
    ) -> Result<ColoredGraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut list: Vec<(Edge, Option<ColorId>)> = Vec::with_capacity(trips.len());
        for &(a, b, c) in trips {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            list.push((Edge::new(a, b)?, c));
        }
        list.sort_by_key(|(e, _)| *e);
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                let (u, v) = w[0].0.endpoints();
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (e, _) in &list {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let (edges, colors) = list.into_iter().unzip();
        Ok(ColoredGraph {
            n,
            edges,
            colors,
            adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || a >= self.n || b >= self.n {
            return false;
        }
        let (u, v) = (a.min(b), a.max(b));
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{a,b}` in [`Self::edges`], if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = Edge::new(a, b).ok()?;
        self.edges.binary_search(&e).ok()
    }

    /// Color of the edge with index `idx` (panics if out of range).
    pub fn color_by_index(&self, idx: usize) -> Option<ColorId> {
        self.colors[idx]
    }

    /// Color of edge `{a,b}`; `None` if the edge is absent or uncolored.
    pub fn color_of(&self, a: usize, b: usize) -> Option<ColorId> {
        self.edge_index(a, b).and_then(|i| self.colors[i])
    }

    /// Parallel slice of colors, indexed like [`Self::edges`].
    pub fn colors(&self) -> &[Option<ColorId>] {
        &self.colors
    }

    pub fn is_totally_colored(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }

    /// The set of distinct color ids in use.
    pub fn palette(&self) -> BTreeSet<ColorId> {
        self.colors.iter().flatten().copied().collect()
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// True when the used color ids are exactly `0..palette_size()`.
    pub fn palette_is_dense(&self) -> bool {
        let palette = self.palette();
        palette
            .iter()
            .enumerate()
            .all(|(i, &c)| c as usize == i)
    }

    /// Returns a copy with the color of edge `{a,b}` replaced.
    pub fn recolored(&self, a: usize, b: usize, c: Option<ColorId>) -> Result<ColoredGraph, GraphError> {
        let idx = self
            .edge_index(a, b)
            .ok_or(GraphError::MissingEdge { u: a.min(b), v: a.max(b) })?;
        let mut out = self.clone();
        out.colors[idx] = c;
        Ok(out)
    }

    /// Returns a copy with all colors removed.
    pub fn uncolored(&self) -> ColoredGraph {
        let mut out = self.clone();
        for c in &mut out.colors {
            *c = None;
        }
        out
    }

    /// Lists every properness violation of the current coloring: uncolored
    /// edges, and each pair of same-colored edges sharing a vertex. An empty
    /// list on a totally colored graph means the coloring is proper.
    pub fn validate_proper(&self) -> Vec<ProperViolation> {
        let mut out = Vec::new();
        for (i, c) in self.colors.iter().enumerate() {
            if c.is_none() {
                out.push(ProperViolation::MissingColor {
                    edge: self.edges[i],
                });
            }
        }
        // Two distinct edges share at most one vertex, so scanning incident
        // edges per vertex reports each clashing pair exactly once.
        let mut incident: Vec<(ColorId, Edge)> = Vec::new();
        for v in 0..self.n {
            incident.clear();
            for &w in &self.adj[v] {
                let idx = self.edge_index(v, w).expect("adjacency implies edge");
                if let Some(c) = self.colors[idx] {
                    incident.push((c, self.edges[idx]));
                }
            }
            incident.sort_unstable_by_key(|&(c, e)| (c, e));
            for i in 0..incident.len() {
                for j in (i + 1)..incident.len() {
                    if incident[j].0 != incident[i].0 {
                        break;
                    }
                    out.push(ProperViolation::SameColorAtVertex {
                        vertex: v,
                        color: incident[i].0,
                        first: incident[i].1,
                        second: incident[j].1,
                    });
                }
            }
        }
        out
    }

    /// True when totally colored and proper.
    pub fn is_properly_colored(&self) -> bool {
        self.is_totally_colored() && self.validate_proper().is_empty()
    }

    /// Replaces `v` by `b` clones, each adjacent to exactly the former
    /// neighbors of `v`. Vertices above `v` shift down by one and the clones
    /// take the top `b` indices, so the result has `n - 1 + b` vertices.
    /// Colors on edges incident to `v` are discarded; all other colors are
    /// kept. Callers re-color as needed.
    pub fn blow_up(&self, v: usize, b: usize) -> Result<ColoredGraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if b == 0 {
            return Err(GraphError::ZeroMultiplicity);
        }
        let new_n = self.n - 1 + b;
        let remap = |w: usize| if w < v { w } else { w - 1 };
        let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.touches(v) {
                let w = remap(e.other(v));
                for j in 0..b {
                    trips.push((w, self.n - 1 + j, None));
                }
            } else {
                trips.push((remap(e.u), remap(e.v), self.colors[i]));
            }
        }
        ColoredGraph::from_colored_edges(new_n, &trips)
    }

    /// Extends the partial coloring to a total proper coloring: uncolored
    /// edges are processed in lexicographic order and each receives the
    /// smallest color id absent from both endpoints. Pre-assigned colors are
    /// never changed. Errors if the pre-assigned colors already clash.
    pub fn extend_coloring_greedy(&self) -> Result<ColoredGraph, GraphError> {
        self.extend_coloring_greedy_from(0)
    }

    /// Like [`Self::extend_coloring_greedy`] but only assigns ids
    /// `>= first_color`, leaving the range below it to pre-assigned colors.
    pub fn extend_coloring_greedy_from(
        &self,
        first_color: ColorId,
    ) -> Result<ColoredGraph, GraphError> {
        let clashes: Vec<_> = self
            .validate_proper()
            .into_iter()
            .filter(|v| matches!(v, ProperViolation::SameColorAtVertex { .. }))
            .collect();
        if let Some(first) = clashes.first() {
            return Err(GraphError::ImproperPartialColoring(first.to_string()));
        }
        let mut at_vertex: Vec<BTreeSet<ColorId>> = vec![BTreeSet::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(c) = self.colors[i] {
                at_vertex[e.u].insert(c);
                at_vertex[e.v].insert(c);
            }
        }
        let mut out = self.clone();
        for i in 0..out.edges.len() {
            if out.colors[i].is_some() {
                continue;
            }
            let e = out.edges[i];
            let mut c = first_color;
            while at_vertex[e.u].contains(&c) || at_vertex[e.v].contains(&c) {
                c += 1;
            }
            out.colors[i] = Some(c);
            at_vertex[e.u].insert(c);
            at_vertex[e.v].insert(c);
        }
        Ok(out)
    }

    /// Exact intersection of the two neighborhoods, ascending.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        if u == v {
            return Err(GraphError::IdenticalVertices { u, v });
        }
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// Thin iff the pair has at most `threshold` common neighbors. The
    /// threshold is caller-supplied; different bounds are used in different
    /// arguments (5k−4, 5k−8, 6k, 11).
    pub fn classify_pair(
        &self,
        u: usize,
        v: usize,
        threshold: usize,
    ) -> Result<PairClass, GraphError> {
        let common = self.common_neighbors(u, v)?;
        Ok(if common.len() <= threshold {
            PairClass::Thin
        } else {
            PairClass::Fat
        })
    }

    /// True when the graph is 2-colorable (vertex sense). Used by tests of
    /// the odd-cycle construction, which must become bipartite after a
    /// matching is deleted.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = vec![start];
            while let Some(x) = queue.pop() {
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push(y);
                    } else if side[y] == side[x] {
                        return false;
                    }
                }
            }
        }
        true
    }
}
