//! Counting copies of a pattern in a host graph and finding rainbow copies,
//! by pruned backtracking over labeled embeddings.
//!
//! A *copy* is a subgraph (vertex set plus edge set) isomorphic to the
//! pattern, not an induced subgraph and not a homomorphism image. Copies are
//! counted as labeled embeddings divided by the pattern's automorphism
//! count; the division is checked to be exact. Pattern vertices are embedded
//! in a connectivity-respecting order (after the first vertex of each
//! component, every vertex is adjacent to an earlier one), which is the
//! standard pruning for subgraph isomorphism. The rainbow search adds one
//! constraint: no color may repeat inside a partial embedding.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColoredGraph, ColorId, Edge};
use crate::pattern::{Pattern, PatternError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("node budget exhausted after {nodes} search nodes; the partial result is not a count")]
    BudgetExhausted { nodes: u64 },
    #[error("visitor aborted after visiting {visited} copies")]
    VisitorAborted { visited: u64 },
    #[error("rainbow search requires a totally colored host graph")]
    UncoloredHost,
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Options for a census run. `node_limit` bounds the number of search-tree
/// nodes (accepted partial embeddings); exceeding it is an explicit error,
/// never a silently wrong count. `threads` parallelizes over the host
/// candidates of the first embedded pattern vertex; totals are independent
/// of the thread count.
#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub node_limit: Option<u64>,
    pub threads: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            node_limit: None,
            threads: 1,
        }
    }
}

/// One copy of the pattern in the host: sorted vertex set and sorted edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphCopy {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// A rainbow embedding: `vertex_map[p]` is the host vertex for pattern
/// vertex `p`; `edges` and `colors` are parallel to the pattern's edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RainbowWitness {
    pub vertex_map: Vec<usize>,
    pub edges: Vec<Edge>,
    pub colors: Vec<ColorId>,
}

/// Census output, serialized as the CLI's JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub pattern: String,
    pub copy_count: u64,
    pub rainbow_found: bool,
    pub witness_vertices: Option<Vec<usize>>,
    pub witness_edges: Option<Vec<(usize, usize)>>,
    pub nodes: u64,
    pub millis: u128,
}

// ---------------------------------------------------------------------------
// Embedding plan
// ---------------------------------------------------------------------------

/// Precomputed embedding order for a pattern.
struct EmbedPlan {
    /// Pattern vertices in embedding order: components by minimum vertex,
    /// inside a component BFS from its minimum vertex, neighbors ascending.
    order: Vec<usize>,
    /// For each order position, the earlier positions holding
    /// pattern-adjacent vertices.
    earlier: Vec<Vec<usize>>,
}

impl EmbedPlan {
    fn new(h: &Pattern) -> EmbedPlan {
        let t = h.vertex_count();
        let mut order = Vec::with_capacity(t);
        for comp in h.components() {
            let root = comp[0];
            let mut queue = std::collections::VecDeque::from([root]);
            let mut seen: HashSet<usize> = HashSet::from([root]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for y in h.neighbors(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), t);
        let mut pos_of_vertex = vec![0; t];
        for (i, &v) in order.iter().enumerate() {
            pos_of_vertex[v] = i;
        }
        let mut earlier = vec![Vec::new(); t];
        for (i, &v) in order.iter().enumerate() {
            for w in h.neighbors(v) {
                let j = pos_of_vertex[w];
                if j < i {
                    earlier[i].push(j);
                }
            }
        }
        EmbedPlan { order, earlier }
    }
}

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

enum NodeCounter<'a> {
    Local(u64),
    Shared(&'a AtomicU64),
}

impl NodeCounter<'_> {
    #[inline]
    fn bump(&mut self) -> u64 {
        match self {
            NodeCounter::Local(n) => {
                *n += 1;
                *n
            }
            NodeCounter::Shared(a) => a.fetch_add(1, Ordering::Relaxed) + 1,
        }
    }

    fn value(&self) -> u64 {
        match self {
            NodeCounter::Local(n) => *n,
            NodeCounter::Shared(a) => a.load(Ordering::Relaxed),
        }
    }
}

struct Search<'a, F> {
    g: &'a ColoredGraph,
    plan: &'a EmbedPlan,
    node_limit: Option<u64>,
    nodes: NodeCounter<'a>,
    assignment: Vec<usize>,
    used: Vec<bool>,
    /// Colors on the edges of the partial embedding; only maintained in
    /// rainbow mode.
    rainbow: bool,
    used_colors: Vec<ColorId>,
    on_complete: F,
}

enum Abort {
    Budget,
    Stop,
}

impl<'a, F> Search<'a, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn new(
        g: &'a ColoredGraph,
        plan: &'a EmbedPlan,
        node_limit: Option<u64>,
        nodes: NodeCounter<'a>,
        rainbow: bool,
        on_complete: F,
    ) -> Self {
        Search {
            g,
            plan,
            node_limit,
            nodes,
            assignment: vec![usize::MAX; plan.order.len()],
            used: vec![false; g.vertex_count()],
            rainbow,
            used_colors: Vec::new(),
            on_complete,
        }
    }

    /// Runs the search over all embeddings extending the current partial
    /// assignment, starting at order position `depth`.
    fn run(&mut self, depth: usize) -> ControlFlow<Abort> {
        if depth == self.plan.order.len() {
            let map = &self.assignment;
            // assignment is by order position; report by pattern vertex.
            let mut by_vertex = vec![usize::MAX; map.len()];
            for (pos, &host) in map.iter().enumerate() {
                by_vertex[self.plan.order[pos]] = host;
            }
            return match (self.on_complete)(&by_vertex) {
                ControlFlow::Continue(()) => ControlFlow::Continue(()),
                ControlFlow::Break(()) => ControlFlow::Break(Abort::Stop),
            };
        }
        let earlier = &self.plan.earlier[depth];
        if earlier.is_empty() {
            // Component root: every unused host vertex is a candidate.
            for x in 0..self.g.vertex_count() {
                if !self.used[x] {
                    self.accept(depth, x)?;
                }
            }
        } else {
            // Scan the adjacency of the anchor with the smallest host
            // neighborhood; remaining earlier neighbors filter candidates.
            let anchor = earlier
                .iter()
                .copied()
                .min_by_key(|&p| self.g.degree(self.assignment[p]))
                .expect("nonempty");
            let anchor_host = self.assignment[anchor];
            let neighbors: &[usize] = self.g.neighbors(anchor_host);
            'cand: for &x in neighbors {
                if self.used[x] {
                    continue;
                }
                for &p in earlier {
                    if p != anchor && !self.g.has_edge(self.assignment[p], x) {
                        continue 'cand;
                    }
                }
                self.accept(depth, x)?;
            }
        }
        ControlFlow::Continue(())
    }

    /// Accepts candidate `x` at `depth`, recurses, restores state.
    fn accept(&mut self, depth: usize, x: usize) -> ControlFlow<Abort> {
        let mut pushed_colors = 0usize;
        if self.rainbow {
            for &p in &self.plan.earlier[depth] {
                let c = self
                    .g
                    .color_of(self.assignment[p], x)
                    .expect("host checked totally colored");
                if self.used_colors.contains(&c) {
                    self.used_colors
                        .truncate(self.used_colors.len() - pushed_colors);
                    return ControlFlow::Continue(());
                }
                self.used_colors.push(c);
                pushed_colors += 1;
            }
        }
        let node = self.nodes.bump();
        if let Some(limit) = self.node_limit {
            if node > limit {
                return ControlFlow::Break(Abort::Budget);
            }
        }
        self.assignment[depth] = x;
        self.used[x] = true;
        let flow = self.run(depth + 1);
        self.used[x] = false;
        self.assignment[depth] = usize::MAX;
        if self.rainbow {
            self.used_colors
                .truncate(self.used_colors.len() - pushed_colors);
        }
        flow
    }
}

fn run_search<F>(
    g: &ColoredGraph,
    h: &Pattern,
    opts: &CensusOptions,
    rainbow: bool,
    on_complete: F,
) -> Result<u64, CensusError>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let plan = EmbedPlan::new(h);
    let mut search = Search::new(
        g,
        &plan,
        opts.node_limit,
        NodeCounter::Local(0),
        rainbow,
        on_complete,
    );
    match search.run(0) {
        ControlFlow::Continue(()) => Ok(search.nodes.value()),
        ControlFlow::Break(Abort::Budget) => Err(CensusError::BudgetExhausted {
            nodes: search.nodes.value(),
        }),
        ControlFlow::Break(Abort::Stop) => Ok(search.nodes.value()),
    }
}

/// Counts labeled embeddings of `h` into `g`, optionally sharded over the
/// first component root's host candidates.
fn count_labeled_embeddings(
    g: &ColoredGraph,
    h: &Pattern,
    opts: &CensusOptions,
) -> Result<(u64, u64), CensusError> {
    if h.vertex_count() > g.vertex_count() {
        return Ok((0, 0));
    }
    let plan = EmbedPlan::new(h);
    let threads = opts.threads.max(1).min(g.vertex_count().max(1));
    if threads == 1 {
        let mut count = 0u64;
        let nodes = run_search(g, h, opts, false, |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        return Ok((count, nodes));
    }

    let shared_nodes = AtomicU64::new(0);
    let exhausted = std::sync::atomic::AtomicBool::new(false);
    let mut totals = vec![0u64; threads];
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (shard, slot) in totals.iter_mut().enumerate() {
            let plan = &plan;
            let shared_nodes = &shared_nodes;
            let exhausted = &exhausted;
            handles.push(scope.spawn(move || {
                let local = std::cell::Cell::new(0u64);
                let mut search = Search::new(
                    g,
                    plan,
                    opts.node_limit,
                    NodeCounter::Shared(shared_nodes),
                    false,
                    |_: &[usize]| {
                        local.set(local.get() + 1);
                        ControlFlow::Continue(())
                    },
                );
                // Fix the first root to the candidates of this shard.
                for x in (shard..g.vertex_count()).step_by(threads) {
                    if let ControlFlow::Break(Abort::Budget) = search.accept(0, x) {
                        exhausted.store(true, Ordering::Relaxed);
                        break;
                    }
                }
                drop(search);
                *slot = local.get();
            }));
        }
        for handle in handles {
            handle.join().expect("census worker panicked");
        }
    });
    if exhausted.load(Ordering::Relaxed) {
        return Err(CensusError::BudgetExhausted {
            nodes: shared_nodes.load(Ordering::Relaxed),
        });
    }
    Ok((totals.iter().sum(), shared_nodes.load(Ordering::Relaxed)))
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Order of the pattern's automorphism group (the divisor converting
/// labeled embeddings to copies). Delegates to the pattern's cached scan.
pub fn automorphism_count(h: &Pattern) -> Result<u64, CensusError> {
    Ok(h.automorphism_count()?)
}

/// Exact number of copies of `h` in `g`.
pub fn count_copies(g: &ColoredGraph, h: &Pattern) -> Result<u64, CensusError> {
    count_copies_with(g, h, &CensusOptions::default())
}

/// Exact number of copies of `h` in `g`, with budget and thread options.
pub fn count_copies_with(
    g: &ColoredGraph,
    h: &Pattern,
    opts: &CensusOptions,
) -> Result<u64, CensusError> {
    let (labeled, _) = count_labeled_embeddings(g, h, opts)?;
    let aut = h.automorphism_count()?;
    if labeled % aut != 0 {
        return Err(CensusError::Internal(format!(
            "labeled embedding count {labeled} is not divisible by automorphism count {aut}"
        )));
    }
    Ok(labeled / aut)
}

/// Visits every copy of `h` in `g` exactly once, in a deterministic order,
/// and returns the number of copies visited. The visitor may abort the
/// enumeration by returning `ControlFlow::Break(())`; the abort is reported
/// as an error carrying the number of copies already visited.
pub fn enumerate_copies<F>(
    g: &ColoredGraph,
    h: &Pattern,
    mut visitor: F,
) -> Result<u64, CensusError>
where
    F: FnMut(&SubgraphCopy) -> ControlFlow<()>,
{
    let mut seen: HashSet<(Vec<usize>, Vec<Edge>)> = HashSet::new();
    let mut visited = 0u64;
    let mut aborted = false;
    if h.vertex_count() > g.vertex_count() {
        return Ok(0);
    }
    run_search(g, h, &CensusOptions::default(), false, |by_vertex| {
        let mut vertices: Vec<usize> = by_vertex.to_vec();
        vertices.sort_unstable();
        let mut edges: Vec<Edge> = h
            .edges()
            .iter()
            .map(|e| Edge::new(by_vertex[e.u()], by_vertex[e.v()]).expect("distinct hosts"))
            .collect();
        edges.sort_unstable();
        if seen.insert((vertices.clone(), edges.clone())) {
            visited += 1;
            let copy = SubgraphCopy { vertices, edges };
            if visitor(&copy).is_break() {
                aborted = true;
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    if aborted {
        return Err(CensusError::VisitorAborted { visited });
    }
    Ok(visited)
}

/// Finds an embedding of `h` into `g` whose edge colors are pairwise
/// distinct, or reports absence. Partial embeddings repeating a color are
/// pruned. The host must be totally colored.
pub fn find_rainbow_copy(
    g: &ColoredGraph,
    h: &Pattern,
) -> Result<Option<RainbowWitness>, CensusError> {
    find_rainbow_copy_with(g, h, &CensusOptions::default())
}

/// [`find_rainbow_copy`] with budget options. The returned witness is the
/// first one in the deterministic scan order.
pub fn find_rainbow_copy_with(
    g: &ColoredGraph,
    h: &Pattern,
    opts: &CensusOptions,
) -> Result<Option<RainbowWitness>, CensusError> {
    if !g.is_totally_colored() {
        return Err(CensusError::UncoloredHost);
    }
    if h.vertex_count() > g.vertex_count() {
        return Ok(None);
    }
    let mut witness: Option<RainbowWitness> = None;
    run_search(g, h, opts, true, |by_vertex| {
        let edges: Vec<Edge> = h
            .edges()
            .iter()
            .map(|e| Edge::new(by_vertex[e.u()], by_vertex[e.v()]).expect("distinct hosts"))
            .collect();
        let colors: Vec<ColorId> = edges
            .iter()
            .map(|e| g.color_of(e.u(), e.v()).expect("totally colored"))
            .collect();
        witness = Some(RainbowWitness {
            vertex_map: by_vertex.to_vec(),
            edges,
            colors,
        });
        ControlFlow::Break(())
    })?;
    Ok(witness)
}

/// Runs a full census: copy count plus rainbow search (the latter only when
/// the host is totally colored), with wall-time and node accounting.
pub fn run_census(
    g: &ColoredGraph,
    h: &Pattern,
    opts: &CensusOptions,
) -> Result<CensusReport, CensusError> {
    let start = Instant::now();
    let (labeled, nodes) = count_labeled_embeddings(g, h, opts)?;
    let aut = h.automorphism_count()?;
    if labeled % aut != 0 {
        return Err(CensusError::Internal(format!(
            "labeled embedding count {labeled} is not divisible by automorphism count {aut}"
        )));
    }
    let copy_count = labeled / aut;
    let mut rainbow_found = false;
    let mut witness_vertices = None;
    let mut witness_edges = None;
    if g.is_totally_colored() {
        let sequential = CensusOptions {
            node_limit: opts.node_limit,
            threads: 1,
        };
        if let Some(w) = find_rainbow_copy_with(g, h, &sequential)? {
            rainbow_found = true;
            witness_vertices = Some(w.vertex_map.clone());
            witness_edges = Some(w.edges.iter().map(|e| e.endpoints()).collect());
        }
    }
    Ok(CensusReport {
        pattern: h.name().to_string(),
        copy_count,
        rainbow_found,
        witness_vertices,
        witness_edges,
        nodes,
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    fn cycle(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> ColoredGraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((i, j));
            }
        }
        ColoredGraph::from_edges(n, &edges).unwrap()
    }

    fn p4() -> Pattern {
        Pattern::path(4).unwrap()
    }

    #[test]
    fn paper_count_regressions() {
        assert_eq!(count_copies(&complete(4), &p4()).unwrap(), 12);
        assert_eq!(count_copies(&cycle(6), &p4()).unwrap(), 6);
        for k in 4..=8 {
            assert_eq!(count_copies(&cycle(k), &p4()).unwrap(), k as u64);
        }
        // Paths indexed by vertex count hold m − 3 copies of P4.
        for m in 4..=9 {
            assert_eq!(count_copies(&path(m), &p4()).unwrap(), (m - 3) as u64);
        }
        assert_eq!(
            count_copies(&complete(3), &Pattern::clique(3).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn pattern_larger_than_host_counts_zero() {
        assert_eq!(count_copies(&complete(3), &p4()).unwrap(), 0);
    }

    #[test]
    fn enumerate_matches_frozen_values() {
        // C5 hosts five P3 copies, one per middle vertex.
        let visited = enumerate_copies(&cycle(5), &Pattern::path(3).unwrap(), |_| {
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(visited, 5);

        // K4 hosts three 4-cycles.
        let visited = enumerate_copies(&complete(4), &Pattern::cycle(4).unwrap(), |_| {
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(visited, 3);

        // No edges, no copies of anything with an edge.
        let empty = ColoredGraph::empty(5).unwrap();
        let visited =
            enumerate_copies(&empty, &Pattern::path(2).unwrap(), |_| ControlFlow::Continue(()))
                .unwrap();
        assert_eq!(visited, 0);
    }

    #[test]
    fn enumerate_agrees_with_count() {
        let hosts = [complete(5), cycle(7), path(6)];
        let patterns = [
            Pattern::path(3).unwrap(),
            Pattern::path(4).unwrap(),
            Pattern::cycle(4).unwrap(),
            Pattern::matching(2).unwrap(),
            Pattern::star(3).unwrap(),
        ];
        for g in &hosts {
            for h in &patterns {
                let counted = count_copies(g, h).unwrap();
                let visited = enumerate_copies(g, h, |_| ControlFlow::Continue(())).unwrap();
                assert_eq!(counted, visited, "host {g:?} pattern {h:?}");
            }
        }
    }

    #[test]
    fn enumerate_reports_visitor_abort() {
        let mut seen = 0;
        let err = enumerate_copies(&complete(4), &p4(), |_| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap_err();
        assert_eq!(err, CensusError::VisitorAborted { visited: 3 });
    }

    #[test]
    fn matching_count_in_disjoint_edges() {
        // Six disjoint edges hold C(6,2) = 15 copies of M2.
        let edges: Vec<_> = (0..6).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = ColoredGraph::from_edges(12, &edges).unwrap();
        assert_eq!(count_copies(&g, &Pattern::matching(2).unwrap()).unwrap(), 15);
    }

    #[test]
    fn rainbow_in_colored_star() {
        // A properly colored star is rainbow.
        let trips: Vec<_> = (1..=5).map(|i| (0usize, i, Some(i as ColorId - 1))).collect();
        let g = ColoredGraph::from_colored_edges(6, &trips).unwrap();
        let w = find_rainbow_copy(&g, &Pattern::star(5).unwrap())
            .unwrap()
            .expect("a properly colored star is rainbow");
        assert_eq!(w.colors.len(), 5);
        let mut colors = w.colors.clone();
        colors.sort_unstable();
        colors.dedup();
        assert_eq!(colors.len(), 5);
    }

    #[test]
    fn two_colored_even_cycle_has_no_rainbow_p4() {
        let trips: Vec<_> = (0..6)
            .map(|i| (i, (i + 1) % 6, Some((i % 2) as ColorId)))
            .collect();
        let trips: Vec<_> = trips
            .into_iter()
            .map(|(a, b, c)| (a.min(b), a.max(b), c))
            .collect();
        let g = ColoredGraph::from_colored_edges(6, &trips).unwrap();
        assert!(g.is_properly_colored());
        assert!(find_rainbow_copy(&g, &p4()).unwrap().is_none());
    }

    #[test]
    fn matching_colored_k4_has_no_rainbow_p4() {
        let g = ColoredGraph::from_colored_edges(
            4,
            &[
                (0, 1, Some(0)),
                (2, 3, Some(0)),
                (0, 2, Some(1)),
                (1, 3, Some(1)),
                (0, 3, Some(2)),
                (1, 2, Some(2)),
            ],
        )
        .unwrap();
        assert!(find_rainbow_copy(&g, &p4()).unwrap().is_none());
        // Sanity: the same host does have rainbow P3s.
        assert!(find_rainbow_copy(&g, &Pattern::path(3).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn rainbow_requires_total_coloring() {
        let g = ColoredGraph::from_colored_edges(3, &[(0, 1, Some(0)), (1, 2, None)]).unwrap();
        assert_eq!(
            find_rainbow_copy(&g, &Pattern::path(3).unwrap()).unwrap_err(),
            CensusError::UncoloredHost
        );
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let opts = CensusOptions {
            node_limit: Some(5),
            threads: 1,
        };
        let err = count_copies_with(&complete(6), &p4(), &opts).unwrap_err();
        assert!(matches!(err, CensusError::BudgetExhausted { .. }));
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let g = complete(7);
        for h in [p4(), Pattern::cycle(5).unwrap(), Pattern::matching(3).unwrap()] {
            let seq = count_copies(&g, &h).unwrap();
            for threads in [2, 3, 8] {
                let opts = CensusOptions {
                    node_limit: None,
                    threads,
                };
                assert_eq!(count_copies_with(&g, &h, &opts).unwrap(), seq);
            }
        }
    }

    #[test]
    fn census_report_shape() {
        let g = ColoredGraph::from_colored_edges(
            4,
            &[
                (0, 1, Some(0)),
                (2, 3, Some(0)),
                (0, 2, Some(1)),
                (1, 3, Some(1)),
                (0, 3, Some(2)),
                (1, 2, Some(2)),
            ],
        )
        .unwrap();
        let report = run_census(&g, &p4(), &CensusOptions::default()).unwrap();
        assert_eq!(report.copy_count, 12);
        assert!(!report.rainbow_found);
        assert!(report.witness_vertices.is_none());
        assert!(report.nodes > 0);
    }

    #[test]
    fn single_vertex_pattern_counts_vertices() {
        let g = path(5);
        assert_eq!(count_copies(&g, &Pattern::new(1, &[]).unwrap()).unwrap(), 5);
    }
}
