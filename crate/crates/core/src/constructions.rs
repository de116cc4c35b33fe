//! Generators for the extremal properly edge-colored graphs: the path and
//! cycle gadgets, the C4-free double layer, disjoint component unions, the
//! three tree gadgets, the clique partition and the disjoint-K4 extremal
//! graph for P4.
//!
//! Every generator is deterministic: a given parameter set produces the
//! same graph, laid out class by class in a fixed order, and therefore the
//! same CGE bytes. Pre-assigned construction colors occupy ids `0..p−1` and
//! the greedy extension starts at id `p`, so the colors that carry the
//! argument stay identifiable in dumps.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColoredGraph, ColorId, Edge, GraphError};
use crate::pattern::{Pattern, PatternError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("path construction needs k >= 5, got k = {k}")]
    PathKTooSmall { k: usize },
    #[error("odd-cycle construction needs k >= 2 (C3 is identically zero: every properly colored triangle is rainbow)")]
    OddCycleKTooSmall { k: usize },
    #[error("even-cycle construction needs k >= 2, got k = {k}")]
    EvenCycleKTooSmall { k: usize },
    #[error("clique construction needs r >= 4, got r = {r}")]
    CliqueRTooSmall { r: usize },
    #[error("target of {n_target} vertices is too small: the skeleton needs {needed}")]
    TargetTooSmall { needed: usize, n_target: usize },
    #[error("explicit class size {b} yields {needed} vertices, above the target {n_target}")]
    ExplicitBTooLarge {
        b: usize,
        needed: usize,
        n_target: usize,
    },
    #[error("the pattern is a star: every proper edge coloring of a star is rainbow, so the extremal value is zero and no construction applies")]
    StarPattern,
    #[error("the pattern is a triangle: the construction's premise excludes it")]
    TrianglePattern,
    #[error("the pattern is a double star: its extremal value is only linear and this construction does not apply")]
    DoubleStarPattern,
    #[error("the pattern is not a tree")]
    NotATree,
    #[error("a rainbow copy would survive: the pattern has {edges} edges but the identical-copy coloring needs a palette of {palette}")]
    PaletteCoversPattern { edges: usize, palette: usize },
    #[error("strategy {strategy} does not apply: {reason}")]
    StrategyNotApplicable {
        strategy: &'static str,
        reason: String,
    },
    #[error("missing parameter {name} for family {family}")]
    MissingParameter {
        name: &'static str,
        family: &'static str,
    },
    #[error("unknown construction family {name:?}")]
    UnknownFamily { name: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// Which construction produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PathLower,
    OddCycleLower,
    EvenCycleLower,
    C4Lower,
    DisjointComponents,
    TreeLeafBlowup,
    TreeStarCase,
    TreeBarePath,
    CliqueLower,
    P4Extremal,
}

impl Family {
    pub fn from_name(name: &str) -> Option<Family> {
        Some(match name {
            "path-lower" => Family::PathLower,
            "odd-cycle-lower" => Family::OddCycleLower,
            "even-cycle-lower" => Family::EvenCycleLower,
            "c4-lower" => Family::C4Lower,
            "disjoint-components" => Family::DisjointComponents,
            "tree-leaf-blowup" => Family::TreeLeafBlowup,
            "tree-star-case" => Family::TreeStarCase,
            "tree-bare-path" => Family::TreeBarePath,
            "clique-lower" => Family::CliqueLower,
            "p4-extremal" => Family::P4Extremal,
            _ => return None,
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::PathLower => "path-lower",
            Family::OddCycleLower => "odd-cycle-lower",
            Family::EvenCycleLower => "even-cycle-lower",
            Family::C4Lower => "c4-lower",
            Family::DisjointComponents => "disjoint-components",
            Family::TreeLeafBlowup => "tree-leaf-blowup",
            Family::TreeStarCase => "tree-star-case",
            Family::TreeBarePath => "tree-bare-path",
            Family::CliqueLower => "clique-lower",
            Family::P4Extremal => "p4-extremal",
        }
    }

    fn theorem(&self) -> &'static str {
        match self {
            Family::PathLower => "Theorem 1.1",
            Family::OddCycleLower => "Theorem 1.2 (odd cycles)",
            Family::EvenCycleLower => "Theorem 1.2 (even cycles)",
            Family::C4Lower => "Proposition 3.3",
            Family::DisjointComponents => "Proposition 4.1",
            Family::TreeLeafBlowup | Family::TreeStarCase | Family::TreeBarePath => "Theorem 1.3",
            Family::CliqueLower => "Concluding remarks (K_r lower bound)",
            Family::P4Extremal => "Proposition 3.2",
        }
    }
}

/// Provenance header emitted next to every generated graph.
#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub family: &'static str,
    pub theorem: &'static str,
    pub params: BTreeMap<&'static str, u64>,
    pub b: Option<u64>,
    pub n: usize,
    pub target_pattern: String,
}

/// A generated graph together with its provenance and the pattern whose
/// rainbow copies the construction avoids.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: ColoredGraph,
    pub provenance: Provenance,
    pub target: Pattern,
}

/// Fully determines one reproducible construction run.
#[derive(Debug, Clone)]
pub struct ConstructionSpec {
    pub family: Family,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub pattern: Option<Pattern>,
    pub n_target: usize,
    /// Class size; derived as large as possible when absent.
    pub b: Option<usize>,
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Construction, ConstructError> {
        let need_k = || {
            self.k.ok_or(ConstructError::MissingParameter {
                name: "k",
                family: self.family.as_str(),
            })
        };
        let need_pattern = || {
            self.pattern.clone().ok_or(ConstructError::MissingParameter {
                name: "pattern",
                family: self.family.as_str(),
            })
        };
        match self.family {
            Family::PathLower => path_lower_with(need_k()?, self.n_target, self.b),
            Family::OddCycleLower => odd_cycle_lower_with(need_k()?, self.n_target, self.b),
            Family::EvenCycleLower => even_cycle_lower_with(need_k()?, self.n_target, self.b),
            Family::C4Lower => c4_lower(self.n_target),
            Family::DisjointComponents => {
                disjoint_components_with(&need_pattern()?, self.n_target, self.b)
            }
            Family::TreeLeafBlowup => {
                tree_strategy_a(&validated_tree(&need_pattern()?)?, self.n_target, self.b)
            }
            Family::TreeStarCase => {
                tree_strategy_b(&validated_tree(&need_pattern()?)?, self.n_target, self.b)
            }
            Family::TreeBarePath => {
                tree_strategy_c(&validated_tree(&need_pattern()?)?, self.n_target, self.b)
            }
            Family::CliqueLower => {
                let r = self.r.ok_or(ConstructError::MissingParameter {
                    name: "r",
                    family: self.family.as_str(),
                })?;
                clique_lower_with(r, self.n_target, self.b)
            }
            Family::P4Extremal => p4_extremal(self.n_target),
        }
    }
}

/// Builds a construction addressed by its family name. `"tree-lower"`
/// selects the tree strategy automatically; everything else maps directly
/// onto a [`Family`].
pub fn build_by_name(
    name: &str,
    k: Option<usize>,
    r: Option<usize>,
    pattern: Option<&Pattern>,
    n_target: usize,
    b: Option<usize>,
) -> Result<Construction, ConstructError> {
    if name == "tree-lower" {
        let tree = pattern.ok_or(ConstructError::MissingParameter {
            name: "pattern",
            family: "tree-lower",
        })?;
        return tree_lower_with(tree, n_target, b);
    }
    let family = Family::from_name(name).ok_or_else(|| ConstructError::UnknownFamily {
        name: name.to_string(),
    })?;
    ConstructionSpec {
        family,
        k,
        r,
        pattern: pattern.cloned(),
        n_target,
        b,
    }
    .build()
}

/// Largest `b >= 1` with `n_of(b) <= n_target`; `n_of` must be
/// non-decreasing.
fn derive_b(
    n_target: usize,
    n_of: impl Fn(usize) -> usize,
) -> Result<usize, ConstructError> {
    if n_of(1) > n_target {
        return Err(ConstructError::TargetTooSmall {
            needed: n_of(1),
            n_target,
        });
    }
    let mut lo = 1usize;
    let mut hi = 2usize;
    while n_of(hi) <= n_target {
        lo = hi;
        hi *= 2;
        if hi > n_target + 1 {
            break;
        }
    }
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if n_of(mid) <= n_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

fn resolve_b(
    n_target: usize,
    b_override: Option<usize>,
    n_of: impl Fn(usize) -> usize,
) -> Result<usize, ConstructError> {
    match b_override {
        None => derive_b(n_target, n_of),
        Some(0) => Err(ConstructError::ExplicitBTooLarge {
            b: 0,
            needed: 0,
            n_target,
        }),
        Some(b) => {
            let needed = n_of(b);
            if needed > n_target {
                return Err(ConstructError::ExplicitBTooLarge { b, needed, n_target });
            }
            Ok(b)
        }
    }
}

fn provenance(
    family: Family,
    params: &[(&'static str, u64)],
    b: Option<usize>,
    n: usize,
    target: &Pattern,
) -> Provenance {
    Provenance {
        family: family.as_str(),
        theorem: family.theorem(),
        params: params.iter().copied().collect(),
        b: b.map(|v| v as u64),
        n,
        target_pattern: target.name().to_string(),
    }
}

// ---------------------------------------------------------------------------
// Paths (Theorem 1.1)
// ---------------------------------------------------------------------------

/// Is class `i` (1-based) a size-`b` class in the P_k gadget?
fn path_class_is_big(k: usize, i: usize) -> bool {
    if k % 2 == 1 {
        matches!(i, 1 | 3 | 4) || (i >= 7 && i % 2 == 1)
    } else {
        matches!(i, 1 | 3) || (i >= 4 && i.is_multiple_of(2))
    }
}

/// The rainbow-P_k-free gadget: classes U_1..U_k alternating between size b
/// and singletons (with the parity-dependent exceptions around the middle),
/// the two color-coupled stars at u_2 and u_5, a matching between U_3 and
/// U_4, and complete bipartite joins further out.
pub fn path_lower(k: usize, n_target: usize) -> Result<Construction, ConstructError> {
    path_lower_with(k, n_target, None)
}

pub fn path_lower_with(
    k: usize,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    if k < 5 {
        return Err(ConstructError::PathKTooSmall { k });
    }
    let n_of = |b: usize| (1..=k).map(|i| if path_class_is_big(k, i) { b } else { 1 }).sum();
    let b = resolve_b(n_target, b_override, n_of)?;

    let sizes: Vec<usize> = (1..=k)
        .map(|i| if path_class_is_big(k, i) { b } else { 1 })
        .collect();
    let mut offset = vec![0usize; k + 1];
    for i in 1..=k {
        offset[i] = offset[i - 1] + sizes[i - 1];
    }
    let class = |i: usize, j: usize| offset[i - 1] + j;
    let n = offset[k];

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    // U_1 joined to u_2.
    for a in 0..sizes[0] {
        trips.push((class(1, a), class(2, 0), None));
    }
    // u_2 joined to U_3 with color i on u_2 u_{3,i}.
    for j in 0..b {
        trips.push((class(2, 0), class(3, j), Some(j as ColorId)));
    }
    // The U_3–U_4 matching.
    for j in 0..b {
        trips.push((class(3, j), class(4, j), None));
    }
    // U_4 joined to u_5 with color i on u_{4,i} u_5.
    for j in 0..b {
        trips.push((class(4, j), class(5, 0), Some(j as ColorId)));
    }
    // Complete bipartite joins from U_5 outward.
    for i in 5..k {
        for a in 0..sizes[i - 1] {
            for c in 0..sizes[i] {
                trips.push((class(i, a), class(i + 1, c), None));
            }
        }
    }
    let graph =
        ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(b as ColorId)?;
    let target = Pattern::path(k)?;
    let prov = provenance(Family::PathLower, &[("k", k as u64)], Some(b), n, &target);
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

// ---------------------------------------------------------------------------
// Odd cycles (Theorem 1.2)
// ---------------------------------------------------------------------------

/// Blow-up of C_{2k+1} with all classes of size b; the class pairs of two
/// non-adjacent cycle edges carry only perfect matchings, and both matchings
/// share one color, so any rainbow subgraph misses a matching entirely and
/// is bipartite.
pub fn odd_cycle_lower(k: usize, n_target: usize) -> Result<Construction, ConstructError> {
    odd_cycle_lower_with(k, n_target, None)
}

pub fn odd_cycle_lower_with(
    k: usize,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    if k < 2 {
        return Err(ConstructError::OddCycleKTooSmall { k });
    }
    let classes = 2 * k + 1;
    let b = resolve_b(n_target, b_override, |b| classes * b)?;
    let class = |c: usize, j: usize| c * b + j;
    let n = classes * b;

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for c in 0..classes {
        let d = (c + 1) % classes;
        let matching_pair = (c == 0 && d == 1) || (c == 2 && d == 3);
        if matching_pair {
            for j in 0..b {
                trips.push((class(c, j), class(d, j), Some(0)));
            }
        } else {
            for a in 0..b {
                for e in 0..b {
                    trips.push((class(c, a), class(d, e), None));
                }
            }
        }
    }
    let graph = ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(1)?;
    let target = Pattern::cycle(2 * k + 1)?;
    let prov = provenance(
        Family::OddCycleLower,
        &[("k", k as u64)],
        Some(b),
        n,
        &target,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

/// The two monochromatic matchings of an odd-cycle construction, as edge
/// lists. Deleting either one must leave a bipartite graph.
pub fn odd_cycle_matchings(b: usize) -> [Vec<(usize, usize)>; 2] {
    let class = |c: usize, j: usize| c * b + j;
    let m1 = (0..b).map(|j| (class(0, j), class(1, j))).collect();
    let m2 = (0..b).map(|j| (class(2, j), class(3, j))).collect();
    [m1, m2]
}

// ---------------------------------------------------------------------------
// Even cycles (Theorem 1.2)
// ---------------------------------------------------------------------------

/// Blow-up of C_{2k} with classes of size b at positions 3, 6, 8, ..., 2k−2,
/// 2k and singletons elsewhere; the edges v1v2 and v4v5 share one color and
/// lie on every copy of C_{2k}. For k = 2 the better bound is the C4
/// construction, to which this delegates.
pub fn even_cycle_lower(k: usize, n_target: usize) -> Result<Construction, ConstructError> {
    even_cycle_lower_with(k, n_target, None)
}

pub fn even_cycle_lower_with(
    k: usize,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    if k < 2 {
        return Err(ConstructError::EvenCycleKTooSmall { k });
    }
    if k == 2 {
        return c4_lower(n_target);
    }
    // 1-based cycle positions; big classes at 3 and the even positions from 6. There are k−1 of them.
    let is_big = |i: usize| i == 3 || (i >= 6 && i.is_multiple_of(2));
    let positions = 2 * k;
    let n_of = |b: usize| (1..=positions).map(|i| if is_big(i) { b } else { 1 }).sum();
    let b = resolve_b(n_target, b_override, n_of)?;

    let sizes: Vec<usize> = (1..=positions).map(|i| if is_big(i) { b } else { 1 }).collect();
    let mut offset = vec![0usize; positions + 1];
    for i in 1..=positions {
        offset[i] = offset[i - 1] + sizes[i - 1];
    }
    let class = |i: usize, j: usize| offset[i - 1] + j;
    let n = offset[positions];

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for i in 1..=positions {
        let next = if i == positions { 1 } else { i + 1 };
        let color = if (i, next) == (1, 2) || (i, next) == (4, 5) {
            Some(0)
        } else {
            None
        };
        for a in 0..sizes[i - 1] {
            for c in 0..sizes[next - 1] {
                trips.push((class(i, a), class(next, c), color));
            }
        }
    }
    let graph = ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(1)?;
    let target = Pattern::cycle(2 * k)?;
    let prov = provenance(
        Family::EvenCycleLower,
        &[("k", k as u64)],
        Some(b),
        n,
        &target,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

/// The two same-colored cycle edges of an even-cycle construction
/// (positions v1v2 and v4v5); every C_{2k} copy must contain both.
pub fn even_cycle_coupled_edges(k: usize, b: usize) -> [(usize, usize); 2] {
    let is_big = |i: usize| i == 3 || (i >= 6 && i.is_multiple_of(2));
    let positions = 2 * k;
    let sizes: Vec<usize> = (1..=positions).map(|i| if is_big(i) { b } else { 1 }).collect();
    let mut offset = vec![0usize; positions + 1];
    for i in 1..=positions {
        offset[i] = offset[i - 1] + sizes[i - 1];
    }
    let class = |i: usize| offset[i - 1];
    [(class(1), class(2)), (class(4), class(5))]
}

// ---------------------------------------------------------------------------
// C4 (Proposition 3.3)
// ---------------------------------------------------------------------------

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polarity graph of the projective plane over F_q (q prime): vertices are
/// the q²+q+1 projective points, and two distinct points are adjacent when
/// their dot product vanishes. Any two vertices have at most one common
/// neighbor, so the graph is C4-free, with Θ(q³) edges.
fn polarity_graph(q: usize) -> (usize, Vec<(usize, usize)>) {
    let mut points: Vec<[usize; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            points.push([1, a, b]);
        }
    }
    for a in 0..q {
        points.push([0, 1, a]);
    }
    points.push([0, 0, 1]);
    let dot = |p: &[usize; 3], r: &[usize; 3]| (p[0] * r[0] + p[1] * r[1] + p[2] * r[2]) % q;
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if dot(&points[i], &points[j]) == 0 {
                edges.push((i, j));
            }
        }
    }
    (points.len(), edges)
}

/// The C4-free layer used by [`c4_lower`]: the largest polarity graph
/// fitting in `m` vertices (padded with isolated vertices), or a plain C5
/// when even the Fano-plane graph does not fit.
pub fn c4_free_layer(m: usize) -> Result<ColoredGraph, ConstructError> {
    if m < 5 {
        return Err(ConstructError::TargetTooSmall {
            needed: 10,
            n_target: 2 * m,
        });
    }
    let mut best_q = None;
    let mut q = 2;
    while q * q + q < m {
        if is_prime(q) {
            best_q = Some(q);
        }
        q += 1;
    }
    let edges = match best_q {
        Some(q) => polarity_graph(q).1,
        None => (0..5).map(|i| (i, (i + 1) % 5)).collect(),
    };
    Ok(ColoredGraph::from_edges(m, &edges)?)
}

/// Two isomorphic C4-free layers with the cross matching v–v′ all in one
/// color: every C4 crosses the layers through two matching edges of equal
/// color.
pub fn c4_lower(n_target: usize) -> Result<Construction, ConstructError> {
    if n_target < 10 {
        return Err(ConstructError::TargetTooSmall {
            needed: 10,
            n_target,
        });
    }
    let m = n_target / 2;
    let layer = c4_free_layer(m)?;
    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for e in layer.edges() {
        trips.push((e.u(), e.v(), None));
        trips.push((e.u() + m, e.v() + m, None));
    }
    for v in 0..m {
        trips.push((v, v + m, Some(0)));
    }
    let graph = ColoredGraph::from_colored_edges(2 * m, &trips)?.extend_coloring_greedy_from(1)?;
    let target = Pattern::cycle(4)?;
    let prov = provenance(Family::C4Lower, &[], None, 2 * m, &target);
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

// ---------------------------------------------------------------------------
// Disjoint components (Proposition 4.1)
// ---------------------------------------------------------------------------

/// Minimum proper edge coloring of a small edge list, by backtracking.
/// Vizing guarantees success with Δ+1 colors.
fn min_edge_coloring(edges: &[Edge]) -> Vec<ColorId> {
    if edges.is_empty() {
        return Vec::new();
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for e in edges {
        *degree.entry(e.u()).or_default() += 1;
        *degree.entry(e.v()).or_default() += 1;
    }
    let delta = degree.values().copied().max().unwrap_or(0);
    for palette in delta..=delta + 1 {
        let mut colors = vec![ColorId::MAX; edges.len()];
        if color_edges(edges, palette as ColorId, 0, &mut colors) {
            return colors;
        }
    }
    unreachable!("a (Δ+1)-edge-coloring always exists");
}

fn color_edges(edges: &[Edge], palette: ColorId, i: usize, colors: &mut Vec<ColorId>) -> bool {
    if i == edges.len() {
        return true;
    }
    'next: for c in 0..palette {
        for j in 0..i {
            if colors[j] == c
                && (edges[j].touches(edges[i].u()) || edges[j].touches(edges[i].v()))
            {
                continue 'next;
            }
        }
        colors[i] = c;
        if color_edges(edges, palette, i + 1, colors) {
            return true;
        }
    }
    colors[i] = ColorId::MAX;
    false
}

/// Linearly many vertex-disjoint copies of each component of `h`, every
/// copy of a given component colored identically by a fixed minimum proper
/// edge coloring. The palette has fewer colors than `h` has edges, so no
/// copy of `h` can be rainbow.
pub fn disjoint_components(h: &Pattern, n_target: usize) -> Result<Construction, ConstructError> {
    disjoint_components_with(h, n_target, None)
}

pub fn disjoint_components_with(
    h: &Pattern,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    if h.is_star() {
        return Err(ConstructError::StarPattern);
    }
    if h.is_triangle() {
        return Err(ConstructError::TrianglePattern);
    }
    let comps = h.components();
    let mut comp_colorings: Vec<(Vec<usize>, Vec<Edge>, Vec<ColorId>)> = Vec::new();
    let mut palette = 0usize;
    for comp in &comps {
        let local: BTreeMap<usize, usize> =
            comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<Edge> = h
            .edges()
            .iter()
            .filter(|e| local.contains_key(&e.u()))
            .filter(|e| local.contains_key(&e.v()))
            .map(|e| Edge::new(local[&e.u()], local[&e.v()]).expect("distinct"))
            .collect();
        let colors = min_edge_coloring(&edges);
        palette = palette.max(colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0));
        comp_colorings.push((comp.clone(), edges, colors));
    }
    if h.edge_count() <= palette {
        return Err(ConstructError::PaletteCoversPattern {
            edges: h.edge_count(),
            palette,
        });
    }
    let t = h.vertex_count();
    let b = resolve_b(n_target, b_override, |b| b * t)?;

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    let mut base = 0usize;
    for (comp, edges, colors) in &comp_colorings {
        for _copy in 0..b {
            for (e, &c) in edges.iter().zip(colors) {
                trips.push((base + e.u(), base + e.v(), Some(c)));
            }
            base += comp.len();
        }
    }
    let graph = ColoredGraph::from_colored_edges(b * t, &trips)?;
    let prov = provenance(
        Family::DisjointComponents,
        &[("components", comps.len() as u64)],
        Some(b),
        b * t,
        h,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target: h.clone(),
    })
}

// ---------------------------------------------------------------------------
// Trees (Theorem 1.3)
// ---------------------------------------------------------------------------

fn validated_tree(t: &Pattern) -> Result<Pattern, ConstructError> {
    if !t.is_tree() {
        return Err(ConstructError::NotATree);
    }
    if t.is_star() || t.vertex_count() <= 2 {
        return Err(ConstructError::StarPattern);
    }
    if t.is_double_star() {
        return Err(ConstructError::DoubleStarPattern);
    }
    Ok(t.clone())
}

/// Picks the gadget for a tree per the case analysis: the bare-path gadget
/// when the tree has few leaves, the leaf blow-up when the pruned tree
/// still has two independent edges, and the star-case gadget otherwise.
/// P5 is the one tree where none of the three wins; it routes through the
/// path construction.
pub fn tree_lower(t: &Pattern, n_target: usize) -> Result<Construction, ConstructError> {
    tree_lower_with(t, n_target, None)
}

pub fn tree_lower_with(
    t: &Pattern,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    let tree = validated_tree(t)?;
    if tree.vertex_count() == 5 {
        // The only 5-vertex tree that is neither a star nor a double star is P5.
        return path_lower_with(5, n_target, b_override);
    }
    let leaves = tree.leaves();
    let ell = leaves.len();
    if tree.vertex_count() > 4 * ell - 3 {
        return tree_strategy_c(&tree, n_target, b_override);
    }
    let core = pruned_tree(&tree);
    if core_is_star(&core) {
        tree_strategy_b(&tree, n_target, b_override)
    } else {
        tree_strategy_a(&tree, n_target, b_override)
    }
}

/// Vertices and edges of T minus its leaves.
fn pruned_tree(t: &Pattern) -> (Vec<usize>, Vec<Edge>) {
    let leaves: std::collections::BTreeSet<usize> = t.leaves().into_iter().collect();
    let vertices: Vec<usize> = (0..t.vertex_count())
        .filter(|v| !leaves.contains(v))
        .collect();
    let edges: Vec<Edge> = t
        .edges()
        .iter()
        .filter(|e| !leaves.contains(&e.u()) && !leaves.contains(&e.v()))
        .copied()
        .collect();
    (vertices, edges)
}

fn core_is_star(core: &(Vec<usize>, Vec<Edge>)) -> bool {
    let (vertices, edges) = core;
    if vertices.len() <= 2 {
        return true;
    }
    vertices
        .iter()
        .any(|&c| edges.iter().all(|e| e.touches(c)) && edges.len() == vertices.len() - 1)
}

/// Strategy A: replace each leaf by b copies; two independent core edges
/// share a color, and a rainbow subgraph avoiding either has too few
/// non-leaf edges to be a copy of T.
pub fn tree_strategy_a(
    tree: &Pattern,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    let (core_vertices, core_edges) = pruned_tree(tree);
    let mut independent: Option<(Edge, Edge)> = None;
    'outer: for (i, e1) in core_edges.iter().enumerate() {
        for e2 in core_edges.iter().skip(i + 1) {
            if !e1.touches(e2.u()) && !e1.touches(e2.v()) {
                independent = Some((*e1, *e2));
                break 'outer;
            }
        }
    }
    let (e1, e2) = independent.ok_or_else(|| ConstructError::StrategyNotApplicable {
        strategy: "leaf-blowup",
        reason: "the pruned tree has no two independent edges".into(),
    })?;

    let leaves = tree.leaves();
    let ell = leaves.len();
    let t = tree.vertex_count();
    let b = resolve_b(n_target, b_override, |b| (t - ell) + ell * b)?;

    let mut map: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &v) in core_vertices.iter().enumerate() {
        map.insert(v, i);
    }
    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for e in &core_edges {
        let color = if *e == e1 || *e == e2 { Some(0) } else { None };
        trips.push((map[&e.u()], map[&e.v()], color));
    }
    let mut base = core_vertices.len();
    for &leaf in &leaves {
        let support = tree.neighbors(leaf)[0];
        for j in 0..b {
            trips.push((map[&support], base + j, None));
        }
        base += b;
    }
    let n = base;
    let graph = ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(1)?;
    let prov = provenance(
        Family::TreeLeafBlowup,
        &[("t", t as u64), ("leaves", ell as u64)],
        Some(b),
        n,
        tree,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target: tree.clone(),
    })
}

/// Strategy B: the pruned tree is a star with center u. With v a core leaf
/// of smallest degree in T, the leaves of T not adjacent to v are blown up,
/// and the edges uw and vv′ share a color.
pub fn tree_strategy_b(
    tree: &Pattern,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    let (core_vertices, core_edges) = pruned_tree(tree);
    if !core_is_star(&(core_vertices.clone(), core_edges.clone())) || core_vertices.len() < 3 {
        return Err(ConstructError::StrategyNotApplicable {
            strategy: "star-case",
            reason: "the pruned tree is not a star with at least two leaves".into(),
        });
    }
    let center = *core_vertices
        .iter()
        .find(|&&c| core_edges.iter().all(|e| e.touches(c)))
        .expect("checked star");
    let core_leaves: Vec<usize> = core_vertices.iter().copied().filter(|&v| v != center).collect();
    let v = *core_leaves
        .iter()
        .min_by_key(|&&x| (tree.degree(x), x))
        .expect("at least two core leaves");
    let w = *core_leaves.iter().find(|&&x| x != v).expect("two core leaves");
    let v_prime = *tree
        .neighbors(v)
        .iter()
        .find(|&&x| tree.degree(x) == 1)
        .expect("a core leaf keeps at least one tree leaf");

    let leaves = tree.leaves();
    let blown: Vec<usize> = leaves
        .iter()
        .copied()
        .filter(|&leaf| !tree.has_edge(leaf, v))
        .collect();
    let m = blown.len();
    debug_assert!(m >= 2, "m >= 2 holds for every admissible tree except P5");
    let t = tree.vertex_count();
    let b = resolve_b(n_target, b_override, |b| (t - m) + m * b)?;

    let blown_set: std::collections::BTreeSet<usize> = blown.iter().copied().collect();
    let kept: Vec<usize> = (0..t).filter(|x| !blown_set.contains(x)).collect();
    let map: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &x)| (x, i)).collect();

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for e in tree.edges() {
        if blown_set.contains(&e.u()) || blown_set.contains(&e.v()) {
            continue;
        }
        let is_uw = e.touches(center) && e.touches(w);
        let is_vv = e.touches(v) && e.touches(v_prime);
        let color = if is_uw || is_vv { Some(0) } else { None };
        trips.push((map[&e.u()], map[&e.v()], color));
    }
    let mut base = kept.len();
    for &leaf in &blown {
        let support = tree.neighbors(leaf)[0];
        for j in 0..b {
            trips.push((map[&support], base + j, None));
        }
        base += b;
    }
    let n = base;
    let graph = ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(1)?;
    let prov = provenance(
        Family::TreeStarCase,
        &[("t", t as u64), ("blown-leaves", m as u64)],
        Some(b),
        n,
        tree,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target: tree.clone(),
    })
}

/// Strategy C: a bare path v1 v2 v3 v4 is rewired through b parallel
/// two-edge channels u_i u_i′ whose outer edges share color i pairwise and
/// whose middle edges all share one color; degree-1 vertices and then
/// still-bare degree-2 vertices are blown up afterwards.
pub fn tree_strategy_c(
    tree: &Pattern,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    let bare = find_bare_path(tree).ok_or_else(|| ConstructError::StrategyNotApplicable {
        strategy: "bare-path",
        reason: "the tree has no path v1 v2 v3 v4 with both inner degrees 2".into(),
    })?;
    let layout_for = |b: usize| bare_path_layout(tree, bare, b);
    let b = resolve_b(n_target, b_override, |b| layout_for(b).total)?;
    let layout = layout_for(b);
    let [v1, _, _, v4] = bare;

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    // Surviving tree edges, as complete joins between classes.
    for e in tree.edges() {
        if layout.removed(e) {
            continue;
        }
        for a in layout.members(e.u()) {
            for c in layout.members(e.v()) {
                trips.push((a, c, None));
            }
        }
    }
    // The channel: v1–u_i (color i), u_i–u_i′ (color b), u_i′–v4 (color i).
    let v1_host = layout.members(v1)[0];
    let v4_host = layout.members(v4)[0];
    for i in 0..b {
        trips.push((v1_host, layout.channel_a + i, Some(i as ColorId)));
        trips.push((
            layout.channel_a + i,
            layout.channel_a_prime + i,
            Some(b as ColorId),
        ));
        trips.push((layout.channel_a_prime + i, v4_host, Some(i as ColorId)));
    }
    let graph = ColoredGraph::from_colored_edges(layout.total, &trips)?
        .extend_coloring_greedy_from(b as ColorId + 1)?;
    let prov = provenance(
        Family::TreeBarePath,
        &[("t", tree.vertex_count() as u64)],
        Some(b),
        layout.total,
        tree,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target: tree.clone(),
    })
}

/// Lexicographically least quadruple (v1,v2,v3,v4) with deg(v2) = deg(v3) = 2
/// and deg(v1) ≠ 2. Such a quadruple exists whenever the tree has any bare
/// path, because a maximal run of degree-2 vertices is anchored by vertices
/// of other degrees.
fn find_bare_path(tree: &Pattern) -> Option<[usize; 4]> {
    let t = tree.vertex_count();
    let mut best: Option<[usize; 4]> = None;
    for v1 in 0..t {
        if tree.degree(v1) == 2 {
            continue;
        }
        for v2 in tree.neighbors(v1) {
            if tree.degree(v2) != 2 {
                continue;
            }
            for v3 in tree.neighbors(v2) {
                if v3 == v1 || tree.degree(v3) != 2 {
                    continue;
                }
                for v4 in tree.neighbors(v3) {
                    if v4 == v2 || v4 == v1 {
                        continue;
                    }
                    let cand = [v1, v2, v3, v4];
                    if best.is_none_or(|cur| cand < cur) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

struct BarePathLayout {
    /// Class start index and size for each original tree vertex
    /// (v2 and v3 excluded, size 0 there).
    start: Vec<usize>,
    size: Vec<usize>,
    channel_a: usize,
    channel_a_prime: usize,
    total: usize,
    v2: usize,
    v3: usize,
}

impl BarePathLayout {
    fn members(&self, v: usize) -> Vec<usize> {
        (self.start[v]..self.start[v] + self.size[v]).collect()
    }

    fn removed(&self, e: &Edge) -> bool {
        e.touches(self.v2) || e.touches(self.v3)
    }
}

/// Computes the class sizes of the bare-path gadget at multiplicity b:
/// channels for v2/v3, then degree-1 vertices of the rewired tree, then the
/// still-bare degree-2 vertices in BFS order from v1 (skipping any whose
/// degree already grew).
fn bare_path_layout(tree: &Pattern, bare: [usize; 4], b: usize) -> BarePathLayout {
    let [v1, v2, v3, v4] = bare;
    let t = tree.vertex_count();
    let mut size = vec![1usize; t];
    size[v2] = 0;
    size[v3] = 0;

    // Degree in G (after the channel rewiring) for original vertices.
    let deg_g = |v: usize, size: &[usize]| -> usize {
        let mut d = 0;
        for w in tree.neighbors(v) {
            if w == v2 || w == v3 {
                continue;
            }
            d += size[w];
        }
        if v == v1 || v == v4 {
            d += b;
        }
        d
    };

    // Blow up degree-1 vertices of G.
    let ones: Vec<usize> = (0..t)
        .filter(|&v| v != v2 && v != v3 && deg_g(v, &size) == 1)
        .collect();
    for v in ones {
        size[v] = b;
    }

    // Blow up surviving bare degree-2 vertices, BFS order from v1.
    let mut bfs = Vec::new();
    let mut seen = vec![false; t];
    seen[v1] = true;
    let mut queue = std::collections::VecDeque::from([v1]);
    while let Some(x) = queue.pop_front() {
        bfs.push(x);
        for y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    for &w in &bfs {
        if w == v2 || w == v3 || tree.degree(w) != 2 {
            continue;
        }
        if deg_g(w, &size) == 2 {
            size[w] = b;
        }
    }

    let mut start = vec![0usize; t];
    let mut cursor = 0usize;
    for v in 0..t {
        start[v] = cursor;
        cursor += size[v];
    }
    let channel_a = cursor;
    let channel_a_prime = cursor + b;
    BarePathLayout {
        start,
        size,
        channel_a,
        channel_a_prime,
        total: cursor + 2 * b,
        v2,
        v3,
    }
}

// ---------------------------------------------------------------------------
// Cliques (Section on open problems)
// ---------------------------------------------------------------------------

/// r equal parts; the S1–S2 and S3–S4 pairs carry only matchings, all in
/// one color, and every other pair is complete bipartite. Every K_r picks
/// one vertex per part, hence one edge from each matching.
pub fn clique_lower(r: usize, n_target: usize) -> Result<Construction, ConstructError> {
    clique_lower_with(r, n_target, None)
}

pub fn clique_lower_with(
    r: usize,
    n_target: usize,
    b_override: Option<usize>,
) -> Result<Construction, ConstructError> {
    if r < 4 {
        return Err(ConstructError::CliqueRTooSmall { r });
    }
    let b = resolve_b(n_target, b_override, |b| r * b)?;
    let part = |p: usize, j: usize| p * b + j;
    let n = r * b;

    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for p in 0..r {
        for q in (p + 1)..r {
            let matching = (p, q) == (0, 1) || (p, q) == (2, 3);
            if matching {
                for j in 0..b {
                    trips.push((part(p, j), part(q, j), Some(0)));
                }
            } else {
                for a in 0..b {
                    for c in 0..b {
                        trips.push((part(p, a), part(q, c), None));
                    }
                }
            }
        }
    }
    let graph = ColoredGraph::from_colored_edges(n, &trips)?.extend_coloring_greedy_from(1)?;
    let target = Pattern::clique(r)?;
    let prov = provenance(
        Family::CliqueLower,
        &[("r", r as u64)],
        Some(b),
        n,
        &target,
    );
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

// ---------------------------------------------------------------------------
// P4 extremal graph (Proposition 3.2)
// ---------------------------------------------------------------------------

/// ⌊n/4⌋ disjoint K4s, each 3-colored by its perfect matchings, plus
/// isolated vertices: exactly 12⌊n/4⌋ copies of P4 and no rainbow P4.
pub fn p4_extremal(n_target: usize) -> Result<Construction, ConstructError> {
    let blocks = n_target / 4;
    let mut trips: Vec<(usize, usize, Option<ColorId>)> = Vec::new();
    for i in 0..blocks {
        let v = |j: usize| 4 * i + j;
        trips.push((v(0), v(1), Some(0)));
        trips.push((v(2), v(3), Some(0)));
        trips.push((v(0), v(2), Some(1)));
        trips.push((v(1), v(3), Some(1)));
        trips.push((v(0), v(3), Some(2)));
        trips.push((v(1), v(2), Some(2)));
    }
    let graph = ColoredGraph::from_colored_edges(n_target, &trips)?;
    let target = Pattern::path(4)?;
    let prov = provenance(Family::P4Extremal, &[], None, n_target, &target);
    Ok(Construction {
        graph,
        provenance: prov,
        target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{count_copies, enumerate_copies, find_rainbow_copy};
    use crate::cge::write_cge;
    use std::ops::ControlFlow;

    fn assert_sound(c: &Construction) {
        assert!(
            c.graph.validate_proper().is_empty(),
            "{:?} output must be properly colored",
            c.provenance.family
        );
        assert!(c.graph.palette_is_dense());
        assert!(
            find_rainbow_copy(&c.graph, &c.target).unwrap().is_none(),
            "{:?} output must be rainbow-free",
            c.provenance.family
        );
    }

    #[test]
    fn path_lower_k5_b2() {
        let c = path_lower(5, 8).unwrap();
        assert_eq!(c.graph.vertex_count(), 8);
        assert_eq!(c.provenance.b, Some(2));
        assert_sound(&c);
        assert!(count_copies(&c.graph, &c.target).unwrap() >= 4);

        // The pre-assigned matching colors survive the greedy extension:
        // u2–u3_i and u4_i–u5 carry color i, nothing else carries ids < b.
        let b = 2;
        let (u2, u5) = (b, 3 * b + 1);
        for i in 0..b {
            let u3 = b + 1 + i;
            let u4 = 2 * b + 1 + i;
            assert_eq!(c.graph.color_of(u2, u3), Some(i as ColorId));
            assert_eq!(c.graph.color_of(u4, u5), Some(i as ColorId));
        }
        let low_color_edges = c
            .graph
            .colors()
            .iter()
            .filter(|c| c.is_some_and(|v| v < b as ColorId))
            .count();
        assert_eq!(low_color_edges, 2 * b);
    }

    #[test]
    fn path_lower_small_target_errors() {
        assert!(matches!(
            path_lower(5, 4),
            Err(ConstructError::TargetTooSmall { needed: 5, .. })
        ));
        assert!(matches!(path_lower(4, 100), Err(ConstructError::PathKTooSmall { k: 4 })));
    }

    #[test]
    fn path_lower_bounds_by_parity() {
        for (k, b) in [(5, 2), (5, 3), (6, 2), (6, 3), (7, 2), (7, 3)] {
            let c = path_lower_with(k, 1000, Some(b)).unwrap();
            assert_sound(&c);
            let count = count_copies(&c.graph, &c.target).unwrap();
            let bound = (b as u64).pow((k / 2) as u32);
            assert!(count >= bound, "k={k} b={b}: {count} < {bound}");
        }
    }

    #[test]
    fn path_lower_copies_couple_the_two_colored_stars() {
        // Every P6 copy holds u2–u3_i and u4_i–u5 with the same color.
        let k = 6;
        let b = 2;
        let c = path_lower_with(k, 100, Some(b)).unwrap();
        // Layout: U1 (b), u2, U3 (b), U4 (b), u5, U6 (b).
        let u2 = b;
        let u3 = |i: usize| b + 1 + i;
        let u4 = |i: usize| 2 * b + 1 + i;
        let u5 = 3 * b + 1;
        enumerate_copies(&c.graph, &c.target, |copy| {
            let coupled = (0..b).any(|i| {
                let first = Edge::new(u2, u3(i)).unwrap();
                let second = Edge::new(u4(i), u5).unwrap();
                copy.edges.contains(&first) && copy.edges.contains(&second)
            });
            assert!(coupled, "copy {:?} misses the same-color pair", copy.vertices);
            ControlFlow::Continue(())
        })
        .unwrap();
    }

    #[test]
    fn odd_cycle_small_cases() {
        let c = odd_cycle_lower(2, 10).unwrap();
        assert_eq!(c.graph.vertex_count(), 10);
        assert_sound(&c);
        assert!(count_copies(&c.graph, &c.target).unwrap() >= 8);
        assert!(matches!(
            odd_cycle_lower(1, 100),
            Err(ConstructError::OddCycleKTooSmall { k: 1 })
        ));
    }

    #[test]
    fn odd_cycle_minus_either_matching_is_bipartite() {
        let c = odd_cycle_lower_with(2, 100, Some(2)).unwrap();
        let b = 2;
        for matching in odd_cycle_matchings(b) {
            let survivors: Vec<(usize, usize)> = c
                .graph
                .edges()
                .iter()
                .map(|e| e.endpoints())
                .filter(|pair| !matching.contains(pair))
                .collect();
            let stripped =
                ColoredGraph::from_edges(c.graph.vertex_count(), &survivors).unwrap();
            assert!(stripped.is_bipartite());
        }
    }

    #[test]
    fn even_cycle_k3() {
        let c = even_cycle_lower_with(3, 100, Some(2)).unwrap();
        assert_sound(&c);
        assert!(count_copies(&c.graph, &c.target).unwrap() >= 4);

        // Every C6 copy passes through both coupled edges.
        let c3 = even_cycle_lower_with(3, 100, Some(3)).unwrap();
        let coupled = even_cycle_coupled_edges(3, 3);
        let coupled: Vec<Edge> = coupled
            .iter()
            .map(|&(a, b)| Edge::new(a, b).unwrap())
            .collect();
        assert_eq!(
            c3.graph.color_of(coupled[0].u(), coupled[0].v()),
            c3.graph.color_of(coupled[1].u(), coupled[1].v())
        );
        enumerate_copies(&c3.graph, &c3.target, |copy| {
            assert!(copy.edges.contains(&coupled[0]));
            assert!(copy.edges.contains(&coupled[1]));
            ControlFlow::Continue(())
        })
        .unwrap();
    }

    #[test]
    fn even_cycle_k2_delegates_to_c4() {
        let c = even_cycle_lower(2, 12).unwrap();
        assert_eq!(c.provenance.family, "c4-lower");
        assert!(matches!(
            even_cycle_lower(1, 100),
            Err(ConstructError::EvenCycleKTooSmall { k: 1 })
        ));
        assert!(matches!(
            even_cycle_lower(3, 5),
            Err(ConstructError::TargetTooSmall { .. })
        ));
    }

    #[test]
    fn c4_layer_is_c4_free() {
        for m in [5, 7, 13, 15] {
            let layer = c4_free_layer(m).unwrap();
            assert_eq!(
                count_copies(&layer, &Pattern::cycle(4).unwrap()).unwrap(),
                0,
                "layer on {m} vertices contains a C4"
            );
        }
    }

    #[test]
    fn polarity_graph_shapes() {
        let (n2, e2) = polarity_graph(2);
        assert_eq!((n2, e2.len()), (7, 9));
        let (n3, e3) = polarity_graph(3);
        assert_eq!((n3, e3.len()), (13, 24));
    }

    #[test]
    fn c4_lower_soundness() {
        for n_target in [10, 20, 30] {
            let c = c4_lower(n_target).unwrap();
            assert_sound(&c);
            let m = n_target / 2;
            let layer = c4_free_layer(m).unwrap();
            assert!(
                count_copies(&c.graph, &c.target).unwrap() >= layer.edge_count() as u64
            );
        }
        assert!(matches!(
            c4_lower(9),
            Err(ConstructError::TargetTooSmall { needed: 10, .. })
        ));
    }

    #[test]
    fn disjoint_components_m2() {
        let c = disjoint_components(&Pattern::matching(2).unwrap(), 12).unwrap();
        assert_eq!(c.provenance.b, Some(3));
        assert_sound(&c);
        assert_eq!(count_copies(&c.graph, &c.target).unwrap(), 15);
        // All six edges carry the single matching color.
        assert_eq!(c.graph.palette_size(), 1);
    }

    #[test]
    fn disjoint_components_p4() {
        // S_{1,1} = P4 is admissible (one component, two colors, three edges).
        let c = disjoint_components_with(&Pattern::path(4).unwrap(), 100, Some(2)).unwrap();
        assert_sound(&c);
        assert_eq!(c.graph.palette_size(), 2);
    }

    #[test]
    fn disjoint_components_rejections() {
        assert!(matches!(
            disjoint_components(&Pattern::star(3).unwrap(), 100),
            Err(ConstructError::StarPattern)
        ));
        assert!(matches!(
            disjoint_components(&Pattern::clique(3).unwrap(), 100),
            Err(ConstructError::TrianglePattern)
        ));
        // Triangle plus an isolated vertex: palette 3 covers the 3 edges.
        let h = Pattern::new(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            disjoint_components(&h, 100),
            Err(ConstructError::PaletteCoversPattern { edges: 3, palette: 3 })
        ));
    }

    #[test]
    fn min_edge_coloring_uses_few_colors() {
        let p4 = Pattern::path(4).unwrap();
        let colors = min_edge_coloring(p4.edges());
        assert_eq!(colors.iter().max().map(|&c| c + 1), Some(2));
        let k4 = Pattern::clique(4).unwrap();
        let colors = min_edge_coloring(k4.edges());
        assert_eq!(colors.iter().max().map(|&c| c + 1), Some(3));
    }

    #[test]
    fn tree_lower_p6_uses_bare_path() {
        let c = tree_lower(&Pattern::path(6).unwrap(), 30).unwrap();
        assert_eq!(c.provenance.family, "tree-bare-path");
        assert_sound(&c);
        let b = c.provenance.b.unwrap();
        assert!(count_copies(&c.graph, &c.target).unwrap() >= b);
    }

    #[test]
    fn tree_lower_p7_uses_bare_path() {
        let c = tree_lower_with(&Pattern::path(7).unwrap(), 100, Some(2)).unwrap();
        assert_eq!(c.provenance.family, "tree-bare-path");
        assert_sound(&c);
    }

    #[test]
    fn tree_lower_spider_uses_star_case() {
        let spider =
            Pattern::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let c = tree_lower_with(&spider, 50, Some(2)).unwrap();
        assert_eq!(c.provenance.family, "tree-star-case");
        assert_sound(&c);
        assert!(count_copies(&c.graph, &c.target).unwrap() >= 4);
    }

    #[test]
    fn tree_lower_double_broom_uses_leaf_blowup() {
        // Core path 0-1-2-3 with two leaves on each end vertex.
        let broom = Pattern::new(
            8,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)],
        )
        .unwrap();
        let c = tree_lower_with(&broom, 100, Some(2)).unwrap();
        assert_eq!(c.provenance.family, "tree-leaf-blowup");
        assert_sound(&c);
        // One clone choice per leaf.
        assert!(count_copies(&c.graph, &c.target).unwrap() >= 16);
    }

    #[test]
    fn tree_lower_p5_routes_through_path_gadget() {
        let c = tree_lower(&Pattern::path(5).unwrap(), 20).unwrap();
        assert_eq!(c.provenance.family, "path-lower");
        assert_sound(&c);
    }

    #[test]
    fn tree_lower_rejections() {
        assert!(matches!(
            tree_lower(&Pattern::star(4).unwrap(), 100),
            Err(ConstructError::StarPattern)
        ));
        assert!(matches!(
            tree_lower(&Pattern::double_star(2, 3).unwrap(), 100),
            Err(ConstructError::DoubleStarPattern)
        ));
        assert!(matches!(
            tree_lower(&Pattern::cycle(5).unwrap(), 100),
            Err(ConstructError::NotATree)
        ));
    }

    #[test]
    fn clique_lower_exact_k4_count() {
        let c = clique_lower(4, 12).unwrap();
        assert_eq!(c.graph.vertex_count(), 12);
        assert_sound(&c);
        assert_eq!(count_copies(&c.graph, &c.target).unwrap(), 9);

        // Every K4 uses one edge from each matching.
        let b = 3;
        enumerate_copies(&c.graph, &c.target, |copy| {
            let m1 = (0..b).any(|j| copy.edges.contains(&Edge::new(j, b + j).unwrap()));
            let m2 = (0..b)
                .any(|j| copy.edges.contains(&Edge::new(2 * b + j, 3 * b + j).unwrap()));
            assert!(m1 && m2);
            ControlFlow::Continue(())
        })
        .unwrap();

        assert!(matches!(
            clique_lower(3, 30),
            Err(ConstructError::CliqueRTooSmall { r: 3 })
        ));
    }

    #[test]
    fn p4_extremal_counts() {
        let c4 = p4_extremal(4).unwrap();
        assert_sound(&c4);
        assert_eq!(count_copies(&c4.graph, &c4.target).unwrap(), 12);

        let c9 = p4_extremal(9).unwrap();
        assert_eq!(c9.graph.vertex_count(), 9);
        assert_sound(&c9);
        assert_eq!(count_copies(&c9.graph, &c9.target).unwrap(), 24);

        let c3 = p4_extremal(3).unwrap();
        assert_eq!(c3.graph.edge_count(), 0);
        assert_eq!(count_copies(&c3.graph, &c3.target).unwrap(), 0);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = write_cge(&path_lower(6, 40).unwrap().graph);
        let b = write_cge(&path_lower(6, 40).unwrap().graph);
        assert_eq!(a, b);
        let a = write_cge(&c4_lower(30).unwrap().graph);
        let b = write_cge(&c4_lower(30).unwrap().graph);
        assert_eq!(a, b);
        let a = write_cge(&tree_lower(&Pattern::path(6).unwrap(), 30).unwrap().graph);
        let b = write_cge(&tree_lower(&Pattern::path(6).unwrap(), 30).unwrap().graph);
        assert_eq!(a, b);
    }

    #[test]
    fn spec_dispatch_and_explicit_b() {
        let spec = ConstructionSpec {
            family: Family::PathLower,
            k: Some(5),
            r: None,
            pattern: None,
            n_target: 100,
            b: Some(3),
        };
        let c = spec.build().unwrap();
        assert_eq!(c.provenance.b, Some(3));
        assert_eq!(c.graph.vertex_count(), 11);

        let too_big = ConstructionSpec {
            b: Some(50),
            ..spec
        };
        assert!(matches!(
            too_big.build(),
            Err(ConstructError::ExplicitBTooLarge { .. })
        ));
    }
}
