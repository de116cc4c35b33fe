//! Small uncolored patterns (the graphs being counted and forbidden), the
//! named families P_k, C_l, S_p, S_{p,r}, M_k, K_r, and automorphism-group
//! orders.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::Edge;

/// Largest pattern order supported by the permutation-scan automorphism
/// counter.
pub const MAX_PATTERN_VERTICES: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("a pattern needs at least one vertex")]
    Empty,
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for a pattern on {t} vertices")]
    VertexOutOfRange { v: usize, t: usize },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("pattern on {t} vertices exceeds the automorphism-scan limit {limit}")]
    TooLarge { t: usize, limit: usize },
    #[error("family parameter out of range: {0}")]
    BadFamilyParameter(String),
    #[error("cannot parse pattern {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A small pattern graph given by an edge list, with its automorphism-group
/// order computed on demand and cached.
#[derive(Clone)]
pub struct Pattern {
    t: usize,
    edges: Vec<Edge>,
    name: String,
    aut: OnceLock<u64>,
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.edges == other.edges
    }
}

impl Eq for Pattern {}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({}, t={}, m={})", self.name, self.t, self.edges.len())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Pattern {
    /// Builds a pattern on `t` vertices from an edge list.
    pub fn new(t: usize, pairs: &[(usize, usize)]) -> Result<Pattern, PatternError> {
        Pattern::with_name(t, pairs, None)
    }

    fn with_name(
        t: usize,
        pairs: &[(usize, usize)],
        name: Option<String>,
    ) -> Result<Pattern, PatternError> {
        if t == 0 {
            return Err(PatternError::Empty);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= t {
                return Err(PatternError::VertexOutOfRange { v: a, t });
            }
            if b >= t {
                return Err(PatternError::VertexOutOfRange { v: b, t });
            }
            if a == b {
                return Err(PatternError::SelfLoop { v: a });
            }
            edges.push(Edge::new(a, b).expect("checked distinct"));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                let (u, v) = w[0].endpoints();
                return Err(PatternError::DuplicateEdge { u, v });
            }
        }
        let name = name.unwrap_or_else(|| {
            let list: Vec<String> = edges.iter().map(|e| format!("{}-{}", e.u(), e.v())).collect();
            format!("{}@{}", t, list.join(","))
        });
        Ok(Pattern {
            t,
            edges,
            name,
            aut: OnceLock::new(),
        })
    }

    /// Path on `k` vertices.
    pub fn path(k: usize) -> Result<Pattern, PatternError> {
        if k < 1 {
            return Err(PatternError::BadFamilyParameter("path needs k >= 1".into()));
        }
        let pairs: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Pattern::with_name(k, &pairs, Some(format!("P{k}")))
    }

    /// Cycle on `l` vertices.
    pub fn cycle(l: usize) -> Result<Pattern, PatternError> {
        if l < 3 {
            return Err(PatternError::BadFamilyParameter("cycle needs l >= 3".into()));
        }
        let pairs: Vec<_> = (0..l).map(|i| (i, (i + 1) % l)).collect();
        Pattern::with_name(l, &pairs, Some(format!("C{l}")))
    }

    /// Star with `p` leaves: vertex 0 adjacent to `1..=p`.
    pub fn star(p: usize) -> Result<Pattern, PatternError> {
        if p < 1 {
            return Err(PatternError::BadFamilyParameter("star needs p >= 1".into()));
        }
        let pairs: Vec<_> = (1..=p).map(|i| (0, i)).collect();
        Pattern::with_name(p + 1, &pairs, Some(format!("S{p}")))
    }

    /// Double star S_{p,r}: centers 0 and 1 are adjacent, 0 carries `p`
    /// leaves and 1 carries `r`.
    pub fn double_star(p: usize, r: usize) -> Result<Pattern, PatternError> {
        if p < 1 || r < 1 {
            return Err(PatternError::BadFamilyParameter(
                "double star needs p, r >= 1".into(),
            ));
        }
        let mut pairs = vec![(0, 1)];
        for i in 0..p {
            pairs.push((0, 2 + i));
        }
        for j in 0..r {
            pairs.push((1, 2 + p + j));
        }
        Pattern::with_name(2 + p + r, &pairs, Some(format!("S{p}.{r}")))
    }

    /// Matching with `k` pairwise disjoint edges.
    pub fn matching(k: usize) -> Result<Pattern, PatternError> {
        if k < 1 {
            return Err(PatternError::BadFamilyParameter("matching needs k >= 1".into()));
        }
        let pairs: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        Pattern::with_name(2 * k, &pairs, Some(format!("M{k}")))
    }

    /// Complete graph on `r` vertices.
    pub fn clique(r: usize) -> Result<Pattern, PatternError> {
        if r < 1 {
            return Err(PatternError::BadFamilyParameter("clique needs r >= 1".into()));
        }
        let mut pairs = Vec::new();
        for i in 0..r {
            for j in (i + 1)..r {
                pairs.push((i, j));
            }
        }
        Pattern::with_name(r, &pairs, Some(format!("K{r}")))
    }

    /// Parses a family shorthand (`P4`, `C6`, `S3`, `S2.3`, `M2`, `K4`) or a
    /// free-form edge-list literal (`0-1,1-2` or `5@0-1,2-3` to pin the
    /// vertex count).
    pub fn parse(input: &str) -> Result<Pattern, PatternError> {
        let s = input.trim();
        let fail = |reason: &str| PatternError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(fail("empty"));
        }
        let head = s.chars().next().unwrap();
        let rest = &s[head.len_utf8()..];
        if matches!(head, 'P' | 'C' | 'S' | 'M' | 'K') && !rest.is_empty() {
            if let Some((p, r)) = rest.split_once('.') {
                if head == 'S' {
                    let p: usize = p.parse().map_err(|_| fail("bad double-star parameter"))?;
                    let r: usize = r.parse().map_err(|_| fail("bad double-star parameter"))?;
                    return Pattern::double_star(p, r);
                }
            } else if let Ok(k) = rest.parse::<usize>() {
                return match head {
                    'P' => Pattern::path(k),
                    'C' => Pattern::cycle(k),
                    'S' => Pattern::star(k),
                    'M' => Pattern::matching(k),
                    'K' => Pattern::clique(k),
                    _ => unreachable!(),
                };
            }
        }
        // Edge-list literal.
        let (t_spec, list) = match s.split_once('@') {
            Some((t, list)) => {
                let t: usize = t.parse().map_err(|_| fail("bad vertex count before '@'"))?;
                (Some(t), list)
            }
            None => (None, s),
        };
        let mut pairs = Vec::new();
        let mut max_v = 0usize;
        for part in list.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| fail("edges must look like u-v"))?;
            let a: usize = a.trim().parse().map_err(|_| fail("bad vertex id"))?;
            let b: usize = b.trim().parse().map_err(|_| fail("bad vertex id"))?;
            max_v = max_v.max(a).max(b);
            pairs.push((a, b));
        }
        if pairs.is_empty() && t_spec.is_none() {
            return Err(fail("no edges and no vertex count"));
        }
        let t = t_spec.unwrap_or(max_v + 1);
        Pattern::with_name(t, &pairs, Some(s.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.t
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The shorthand this pattern was built from (or a canonical edge-list
    /// literal when built directly).
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        Edge::new(a, b)
            .map(|e| self.edges.binary_search(&e).is_ok())
            .unwrap_or(false)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.other(v))
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimum
    /// vertex. Isolated vertices form their own components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.t];
        let mut out = Vec::new();
        for start in 0..self.t {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.t
    }

    /// A star: one center adjacent to all other vertices, no other edges.
    /// Single vertices and single edges count as (degenerate) stars.
    pub fn is_star(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        if self.t <= 2 {
            return true;
        }
        (0..self.t).any(|c| self.degree(c) == self.t - 1)
    }

    /// A double star: a tree whose longest path has exactly four vertices.
    pub fn is_double_star(&self) -> bool {
        if !self.is_tree() || self.t < 4 {
            return false;
        }
        // Equivalent form: an edge {u,v} such that every other vertex is
        // adjacent to u or v, and both u and v carry at least one leaf.
        self.edges.iter().any(|e| {
            let (u, v) = e.endpoints();
            let covered = (0..self.t)
                .filter(|&w| w != u && w != v)
                .all(|w| self.has_edge(w, u) || self.has_edge(w, v));
            covered && self.degree(u) >= 2 && self.degree(v) >= 2
        })
    }

    pub fn is_triangle(&self) -> bool {
        self.t == 3 && self.edges.len() == 3
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.t).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Order of the automorphism group, by backtracking over vertex
    /// permutations (pruned on degree and partial adjacency). Cached.
    pub fn automorphism_count(&self) -> Result<u64, PatternError> {
        if self.t > MAX_PATTERN_VERTICES {
            return Err(PatternError::TooLarge {
                t: self.t,
                limit: MAX_PATTERN_VERTICES,
            });
        }
        Ok(*self.aut.get_or_init(|| count_automorphisms(self)))
    }

    /// True if the identity map on vertex indices is a graph isomorphism,
    /// i.e. the two patterns have identical edge sets and orders.
    pub fn same_labeled_graph(&self, other: &Pattern) -> bool {
        self.t == other.t && self.edges == other.edges
    }
}

fn count_automorphisms(p: &Pattern) -> u64 {
    let t = p.t;
    let mut adj = vec![vec![false; t]; t];
    for e in &p.edges {
        adj[e.u()][e.v()] = true;
        adj[e.v()][e.u()] = true;
    }
    let degs: Vec<usize> = (0..t).map(|v| p.degree(v)).collect();
    let mut image = vec![usize::MAX; t];
    let mut used = vec![false; t];
    let mut count = 0u64;
    fn rec(
        v: usize,
        t: usize,
        adj: &[Vec<bool>],
        degs: &[usize],
        image: &mut [usize],
        used: &mut [bool],
        count: &mut u64,
    ) {
        if v == t {
            *count += 1;
            return;
        }
        for w in 0..t {
            if used[w] || degs[w] != degs[v] {
                continue;
            }
            let consistent = (0..v).all(|u| adj[u][v] == adj[image[u]][w]);
            if !consistent {
                continue;
            }
            image[v] = w;
            used[w] = true;
            rec(v + 1, t, adj, degs, image, used, count);
            used[w] = false;
        }
    }
    rec(0, t, &adj, &degs, &mut image, &mut used, &mut count);
    count
}
