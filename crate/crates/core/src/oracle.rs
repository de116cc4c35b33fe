//! Ground truth at tiny scale: exhaustive host enumeration up to
//! isomorphism, exhaustive search for rainbow-free proper colorings, the
//! exact extremal value ex(n, H, rainbow-F), and the closed-form
//! characterization of the graphs admitting a rainbow-P4-free coloring.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::census::{count_copies, enumerate_copies, find_rainbow_copy, CensusError};
use crate::graph::{ColoredGraph, ColorId, GraphError};
use crate::pattern::{Pattern, PatternError};

/// Largest host order the enumerating oracle accepts. Eight vertices is
/// already 12346 isomorphism classes; past that the search is not a desk
/// computation.
pub const MAX_ORACLE_VERTICES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("budget caps must all be positive")]
    InvalidBudget,
    #[error("the forbidden pattern needs at least one edge")]
    ForbiddenPatternEdgeless,
    #[error("exhaustive search on {n} vertices exceeds the supported limit {limit}")]
    HostTooLarge { n: usize, limit: usize },
    #[error("coloring search over {m} edges exceeds the supported limit {limit}")]
    TooManyEdges { m: usize, limit: usize },
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Caps for the exhaustive searches. Exceeding any cap yields an explicit
/// `Incomplete` result, never a silently wrong value.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Cap on host graphs examined by the coloring search.
    pub max_graphs: u64,
    /// Backtracking-node cap per host graph.
    pub max_coloring_nodes: u64,
    /// Canonical-form deduplication of hosts.
    pub dedupe: bool,
    /// Wall-clock cap for a whole run.
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_graphs: u64::MAX,
            max_coloring_nodes: u64::MAX,
            dedupe: true,
            time_limit: Duration::from_secs(3600),
        }
    }
}

impl SearchBudget {
    fn validate(&self) -> Result<(), OracleError> {
        if self.max_graphs == 0 || self.max_coloring_nodes == 0 || self.time_limit.is_zero() {
            return Err(OracleError::InvalidBudget);
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Small-graph enumeration with canonical deduplication
// ---------------------------------------------------------------------------

/// An uncolored graph on at most [`MAX_ORACLE_VERTICES`] vertices, stored as
/// adjacency-row bitmasks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: [u8; MAX_ORACLE_VERTICES],
}

impl SmallGraph {
    pub fn empty(n: usize) -> SmallGraph {
        assert!(n <= MAX_ORACLE_VERTICES);
        SmallGraph {
            n,
            rows: [0; MAX_ORACLE_VERTICES],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_colored_graph(&self) -> ColoredGraph {
        ColoredGraph::from_edges(self.n, &self.edges()).expect("valid by construction")
    }

    /// Upper-triangle encoding of the edge set, row by row.
    pub fn key(&self) -> u64 {
        let mut key = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    key |= 1 << bit;
                }
                bit += 1;
            }
        }
        key
    }

    /// Minimum edge encoding over the relabelings that list vertex degrees
    /// in non-increasing position order. That labeling set is isomorphism
    /// invariant, so the minimum is a canonical form, and the degree
    /// restriction prunes most of the n! permutations on irregular graphs.
    pub fn canonical_key(&self) -> u64 {
        let n = self.n;
        let edges = self.edges();
        let mut degs = vec![0usize; n];
        for &(u, v) in &edges {
            degs[u] += 1;
            degs[v] += 1;
        }
        let mut by_degree: Vec<usize> = degs.clone();
        by_degree.sort_unstable_by(|a, b| b.cmp(a));
        by_degree.dedup();
        // Same-degree vertices compete for a contiguous block of positions.
        let mut blocks: Vec<(Vec<usize>, usize)> = Vec::new();
        let mut start = 0usize;
        for &d in &by_degree {
            let members: Vec<usize> = (0..n).filter(|&v| degs[v] == d).collect();
            let len = members.len();
            blocks.push((members, start));
            start += len;
        }

        struct Ctx<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
            blocks: &'a [(Vec<usize>, usize)],
            perm: Vec<usize>,
            used: Vec<bool>,
            best: u64,
        }

        fn pair_bit(n: usize, a: usize, b: usize) -> usize {
            let (i, j) = (a.min(b), a.max(b));
            i * n - i * (i + 1) / 2 + (j - i - 1)
        }

        fn rec(ctx: &mut Ctx<'_>, block: usize, offset: usize) {
            if block == ctx.blocks.len() {
                let mut key = 0u64;
                for &(u, v) in ctx.edges {
                    key |= 1 << pair_bit(ctx.n, ctx.perm[u], ctx.perm[v]);
                }
                if key < ctx.best {
                    ctx.best = key;
                }
                return;
            }
            let len = ctx.blocks[block].0.len();
            let start = ctx.blocks[block].1;
            if offset == len {
                rec(ctx, block + 1, 0);
                return;
            }
            for i in 0..len {
                let v = ctx.blocks[block].0[i];
                if ctx.used[v] {
                    continue;
                }
                ctx.used[v] = true;
                ctx.perm[v] = start + offset;
                rec(ctx, block, offset + 1);
                ctx.used[v] = false;
            }
        }

        let mut ctx = Ctx {
            n,
            edges: &edges,
            blocks: &blocks,
            perm: vec![usize::MAX; n],
            used: vec![false; n],
            best: u64::MAX,
        };
        rec(&mut ctx, 0, 0);
        ctx.best
    }

    fn from_key(n: usize, key: u64) -> SmallGraph {
        let mut g = SmallGraph::empty(n);
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if (key >> bit) & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }
}

/// All graphs on `n` vertices. With `dedupe` one canonical representative
/// per isomorphism class is produced (1, 2, 4, 11, 34, 156, 1044, 12346
/// classes for n = 1..8); without it, every labeled graph. The result is
/// sorted by edge encoding, so the order is deterministic.
pub fn enumerate_small_graphs(n: usize, dedupe: bool) -> Result<Vec<SmallGraph>, OracleError> {
    if n == 0 || n > MAX_ORACLE_VERTICES {
        return Err(OracleError::HostTooLarge {
            n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    if !dedupe {
        let pairs = n * (n - 1) / 2;
        let mut out = Vec::with_capacity(1usize << pairs);
        for key in 0..(1u64 << pairs) {
            out.push(SmallGraph::from_key(n, key));
        }
        return Ok(out);
    }
    let mut current: Vec<SmallGraph> = vec![SmallGraph::empty(1)];
    for size in 2..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<SmallGraph> = Vec::new();
        for g in &current {
            for subset in 0u8..(1 << (size - 1)) {
                let mut grown = SmallGraph::empty(size);
                grown.rows[..size - 1].copy_from_slice(&g.rows[..size - 1]);
                for v in 0..size - 1 {
                    if (subset >> v) & 1 == 1 {
                        grown.add_edge(v, size - 1);
                    }
                }
                let canon = grown.canonical_key();
                if seen.insert(canon) {
                    next.push(SmallGraph::from_key(size, canon));
                }
            }
        }
        next.sort_by_key(|g| g.key());
        current = next;
    }
    Ok(current)
}

// ---------------------------------------------------------------------------
// Rainbow-free colorability
// ---------------------------------------------------------------------------

/// Outcome of the exhaustive coloring search.
#[derive(Debug, Clone)]
pub enum ColorSearchOutcome {
    /// A total proper coloring with no rainbow copy of the forbidden
    /// pattern.
    Colorable(ColoredGraph),
    /// No such coloring exists (search exhausted).
    NotColorable,
    /// A budget cap cut the search before it could decide.
    Incomplete { nodes: u64, timed_out: bool },
}

impl ColorSearchOutcome {
    pub fn is_colorable(&self) -> bool {
        matches!(self, ColorSearchOutcome::Colorable(_))
    }
}

/// Exhaustive backtracking over the proper colorings of `g` (colors are
/// ignored; only the structure of `g` is used), up to color-class
/// relabeling: edge `e_i` may only use a color id at most one above the
/// maximum id used on `e_1..e_{i−1}`. Rainbow-freeness is checked
/// incrementally, on the copies of `f` whose lexicographically last edge
/// was just colored.
pub fn rainbow_free_colorable(
    g: &ColoredGraph,
    f: &Pattern,
    budget: &SearchBudget,
) -> Result<ColorSearchOutcome, OracleError> {
    budget.validate()?;
    if f.edge_count() == 0 {
        return Err(OracleError::ForbiddenPatternEdgeless);
    }
    if g.edge_count() >= 64 {
        return Err(OracleError::TooManyEdges {
            m: g.edge_count(),
            limit: 63,
        });
    }
    let g = g.uncolored();
    let deadline = Instant::now() + budget.time_limit;
    Ok(color_search(&g, f, budget.max_coloring_nodes, Some(deadline))?)
}

// Palette masks are u64; callers guarantee m < 64.
fn color_search(
    g: &ColoredGraph,
    f: &Pattern,
    max_nodes: u64,
    deadline: Option<Instant>,
) -> Result<ColorSearchOutcome, CensusError> {
    let m = g.edge_count();
    debug_assert!(m < 64);

    // Copies of f, grouped by their lexicographically largest edge: a copy
    // becomes fully colored exactly when that edge is colored.
    let mut copies_by_last: Vec<Vec<Vec<usize>>> = vec![Vec::new(); m];
    enumerate_copies(g, f, |copy| {
        let ids: Vec<usize> = copy
            .edges
            .iter()
            .map(|e| g.edge_index(e.u(), e.v()).expect("copy edge exists"))
            .collect();
        let last = *ids.iter().max().expect("pattern has edges");
        copies_by_last[last].push(ids);
        ControlFlow::Continue(())
    })?;

    struct Ctx<'a> {
        g: &'a ColoredGraph,
        copies_by_last: &'a [Vec<Vec<usize>>],
        colors: Vec<ColorId>,
        at_vertex: Vec<u64>,
        max_nodes: u64,
        nodes: u64,
        deadline: Option<Instant>,
        timed_out: bool,
    }

    enum Found {
        Yes,
        No,
        Cut,
    }

    fn rec(ctx: &mut Ctx<'_>, i: usize, palette: u32) -> Found {
        if i == ctx.g.edge_count() {
            return Found::Yes;
        }
        let e = ctx.g.edges()[i];
        let blocked = ctx.at_vertex[e.u()] | ctx.at_vertex[e.v()];
        // Color-class symmetry: at most one fresh color is worth trying.
        for c in 0..=palette.min(63) {
            if (blocked >> c) & 1 == 1 {
                continue;
            }
            ctx.nodes += 1;
            if ctx.nodes > ctx.max_nodes {
                return Found::Cut;
            }
            if ctx.nodes.is_multiple_of(4096) {
                if let Some(deadline) = ctx.deadline {
                    if Instant::now() > deadline {
                        ctx.timed_out = true;
                        return Found::Cut;
                    }
                }
            }
            ctx.colors[i] = c;
            let bit = 1u64 << c;
            ctx.at_vertex[e.u()] |= bit;
            ctx.at_vertex[e.v()] |= bit;
            let mut rainbow = false;
            'copies: for copy in &ctx.copies_by_last[i] {
                let mut seen = 0u64;
                for &id in copy {
                    let cb = 1u64 << ctx.colors[id];
                    if seen & cb != 0 {
                        continue 'copies;
                    }
                    seen |= cb;
                }
                rainbow = true;
                break;
            }
            if !rainbow {
                let next_palette = palette.max(c + 1);
                match rec(ctx, i + 1, next_palette) {
                    Found::Yes => return Found::Yes,
                    Found::Cut => return Found::Cut,
                    Found::No => {}
                }
            }
            ctx.at_vertex[e.u()] &= !bit;
            ctx.at_vertex[e.v()] &= !bit;
        }
        Found::No
    }

    let mut ctx = Ctx {
        g,
        copies_by_last: &copies_by_last,
        colors: vec![0; m],
        at_vertex: vec![0u64; g.vertex_count()],
        max_nodes,
        nodes: 0,
        deadline,
        timed_out: false,
    };
    match rec(&mut ctx, 0, 0) {
        Found::Yes => {
            let trips: Vec<(usize, usize, Option<ColorId>)> = g
                .edges()
                .iter()
                .zip(&ctx.colors)
                .map(|(e, &c)| (e.u(), e.v(), Some(c)))
                .collect();
            let colored = ColoredGraph::from_colored_edges(g.vertex_count(), &trips)
                .expect("same structure");
            Ok(ColorSearchOutcome::Colorable(colored))
        }
        Found::No => Ok(ColorSearchOutcome::NotColorable),
        Found::Cut => Ok(ColorSearchOutcome::Incomplete {
            nodes: ctx.nodes,
            timed_out: ctx.timed_out,
        }),
    }
}

// ---------------------------------------------------------------------------
// Exact extremal values
// ---------------------------------------------------------------------------

/// Which cap cut an incomplete run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindingCap {
    MaxGraphs,
    ColoringNodes,
    TimeLimit,
}

impl BindingCap {
    pub fn as_str(&self) -> &'static str {
        match self {
            BindingCap::MaxGraphs => "max_graphs",
            BindingCap::ColoringNodes => "max_coloring_nodes",
            BindingCap::TimeLimit => "time_limit",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalStatus {
    Exact,
    /// The value is only a certified lower bound; `binding` names the cap
    /// that cut the search.
    Incomplete { binding: BindingCap },
}

/// Result of an exact extremal run: the maximum number of copies of `h`
/// over all properly edge-colorable `n`-vertex hosts with no rainbow `f`,
/// with a witness attaining it.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub n: usize,
    pub h: Pattern,
    pub f: Pattern,
    pub value: u64,
    pub witness: Option<ColoredGraph>,
    pub status: ExtremalStatus,
    pub graphs_examined: u64,
}

/// Computes ex(n, h, rainbow-f) exactly by scanning every host on `n`
/// vertices (up to isomorphism when `budget.dedupe` is set) in order of
/// decreasing copy count and keeping the first one that admits a
/// rainbow-f-free proper coloring. Ties go to the lexicographically least
/// canonical encoding, so witnesses are deterministic.
pub fn exact_extremal(
    n: usize,
    h: &Pattern,
    f: &Pattern,
    budget: &SearchBudget,
) -> Result<ExtremalResult, OracleError> {
    budget.validate()?;
    if f.edge_count() == 0 {
        return Err(OracleError::ForbiddenPatternEdgeless);
    }
    let start = Instant::now();
    let deadline = start + budget.time_limit;

    let hosts = enumerate_small_graphs(n, budget.dedupe)?;
    let mut ranked: Vec<(u64, u64, SmallGraph)> = Vec::with_capacity(hosts.len());
    for host in hosts {
        let g = host.to_colored_graph();
        let count = count_copies(&g, h)?;
        ranked.push((count, host.key(), host));
    }
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut best: Option<(u64, ColoredGraph)> = None;
    let mut unknown_max: Option<u64> = None;
    let mut binding: Option<BindingCap> = None;
    let mut examined = 0u64;

    for (count, _, host) in &ranked {
        if let Some((value, _)) = &best {
            if count <= value {
                break;
            }
        }
        if examined >= budget.max_graphs {
            binding = Some(BindingCap::MaxGraphs);
            unknown_max = unknown_max.max(Some(*count));
            break;
        }
        if Instant::now() > deadline {
            binding = Some(BindingCap::TimeLimit);
            unknown_max = unknown_max.max(Some(*count));
            break;
        }
        examined += 1;
        let g = host.to_colored_graph();
        match color_search(&g, f, budget.max_coloring_nodes, Some(deadline))? {
            ColorSearchOutcome::Colorable(coloring) => {
                best = Some((*count, coloring));
            }
            ColorSearchOutcome::NotColorable => {}
            ColorSearchOutcome::Incomplete { timed_out, .. } => {
                unknown_max = unknown_max.max(Some(*count));
                binding.get_or_insert(if timed_out {
                    BindingCap::TimeLimit
                } else {
                    BindingCap::ColoringNodes
                });
            }
        }
    }

    let (value, witness) = match best {
        Some((value, coloring)) => (value, Some(coloring)),
        None => (0, None),
    };
    let status = match (unknown_max, binding) {
        (Some(u), Some(cap)) if u > value || witness.is_none() => {
            ExtremalStatus::Incomplete { binding: cap }
        }
        _ => ExtremalStatus::Exact,
    };

    if let Some(w) = &witness {
        if !w.validate_proper().is_empty() {
            return Err(OracleError::Internal("witness coloring is not proper".into()));
        }
        if find_rainbow_copy(w, f)?.is_some() {
            return Err(OracleError::Internal("witness contains a rainbow copy".into()));
        }
        let recount = count_copies(w, h)?;
        if recount != value {
            return Err(OracleError::Internal(format!(
                "witness recount {recount} does not match value {value}"
            )));
        }
    }
    Ok(ExtremalResult {
        n,
        h: h.clone(),
        f: f.clone(),
        value,
        witness,
        status,
        graphs_examined: examined,
    })
}

// ---------------------------------------------------------------------------
// The P4 recognizer
// ---------------------------------------------------------------------------

/// Why a component admits no rainbow-P4-free proper coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P4Obstruction {
    /// The vertices of the offending component.
    pub component: Vec<usize>,
}

/// Outcome of the closed-form rainbow-P4 recognizer.
#[derive(Debug, Clone)]
pub enum P4Characterization {
    Colorable { coloring: ColoredGraph },
    NotColorable(P4Obstruction),
}

impl P4Characterization {
    pub fn is_colorable(&self) -> bool {
        matches!(self, P4Characterization::Colorable { .. })
    }
}

/// Decides whether `g` admits a proper edge coloring without a rainbow P4,
/// by component classification: every component must be a star, a path, an
/// even cycle, or have at most four vertices. On the positive side a
/// witness coloring is produced (paths and even cycles use two colors,
/// stars distinct colors, tiny components an exhaustively found coloring).
pub fn p4_characterize(g: &ColoredGraph) -> P4Characterization {
    let components = graph_components(g);
    let f = Pattern::path(4).expect("P4");
    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for comp in &components {
        match classify_component(g, comp) {
            ComponentShape::Tiny => {
                let sub = induced_subgraph(g, comp);
                let outcome = color_search(&sub, &f, u64::MAX, None)
                    .expect("tiny component search cannot fail");
                let colored = match outcome {
                    ColorSearchOutcome::Colorable(c) => c,
                    _ => unreachable!("every graph on at most four vertices is colorable"),
                };
                for (i, e) in colored.edges().iter().enumerate() {
                    trips.push((
                        comp[e.u()],
                        comp[e.v()],
                        colored.color_by_index(i),
                    ));
                }
            }
            ComponentShape::Star => {
                for (i, e) in component_edges(g, comp).into_iter().enumerate() {
                    trips.push((e.0, e.1, Some(i as ColorId)));
                }
            }
            ComponentShape::Path | ComponentShape::EvenCycle => {
                for (a, b, c) in two_color_walk(g, comp) {
                    trips.push((a, b, Some(c)));
                }
            }
            ComponentShape::Obstruction => {
                return P4Characterization::NotColorable(P4Obstruction {
                    component: comp.clone(),
                });
            }
        }
    }
    let coloring = ColoredGraph::from_colored_edges(g.vertex_count(), &trips)
        .expect("same structure as input");
    P4Characterization::Colorable { coloring }
}

enum ComponentShape {
    Tiny,
    Star,
    Path,
    EvenCycle,
    Obstruction,
}

fn classify_component(g: &ColoredGraph, comp: &[usize]) -> ComponentShape {
    if comp.len() <= 4 {
        return ComponentShape::Tiny;
    }
    let degrees: Vec<usize> = comp.iter().map(|&v| g.degree(v)).collect();
    let edge_count: usize = degrees.iter().sum::<usize>() / 2;
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let ones = degrees.iter().filter(|&&d| d == 1).count();
    let twos = degrees.iter().filter(|&&d| d == 2).count();
    if edge_count == comp.len() - 1 && max_deg == comp.len() - 1 {
        return ComponentShape::Star;
    }
    if edge_count == comp.len() - 1 && ones == 2 && twos == comp.len() - 2 {
        return ComponentShape::Path;
    }
    if edge_count == comp.len() && twos == comp.len() && comp.len().is_multiple_of(2) {
        return ComponentShape::EvenCycle;
    }
    ComponentShape::Obstruction
}

fn graph_components(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
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

fn component_edges(g: &ColoredGraph, comp: &[usize]) -> Vec<(usize, usize)> {
    let set: HashSet<usize> = comp.iter().copied().collect();
    g.edges()
        .iter()
        .filter(|e| set.contains(&e.u()))
        .map(|e| (e.u(), e.v()))
        .collect()
}

fn induced_subgraph(g: &ColoredGraph, comp: &[usize]) -> ColoredGraph {
    let index: std::collections::BTreeMap<usize, usize> =
        comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = component_edges(g, comp)
        .into_iter()
        .map(|(a, b)| (index[&a], index[&b]))
        .collect();
    ColoredGraph::from_edges(comp.len(), &edges).expect("component is a valid graph")
}

/// Walks a path or cycle component from a deterministic start and colors
/// its edges 0, 1, 0, 1, ... A cycle of even length closes consistently.
fn two_color_walk(g: &ColoredGraph, comp: &[usize]) -> Vec<(usize, usize, ColorId)> {
    let endpoints: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 1).collect();
    let start = endpoints.first().copied().unwrap_or(comp[0]);
    let mut out = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    let mut color: ColorId = 0;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev);
        let Some(next) = next else { break };
        out.push((cur.min(next), cur.max(next), color));
        color = 1 - color;
        prev = cur;
        cur = next;
        if cur == start || out.len() == comp.len() {
            break;
        }
    }
    out
}
