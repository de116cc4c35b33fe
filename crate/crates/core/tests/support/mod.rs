//! Shared test support: the independent slow census oracle (t-subset and
//! edge-subset enumeration with permutation isomorphism checks), host
//! builders, and a generator for random lemma instances that satisfy the
//! common-neighbor bound.

#![allow(dead_code)]

use rainbow_turan::graph::{ColorId, ColoredGraph};
use rainbow_turan::pattern::Pattern;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Host builders
// ---------------------------------------------------------------------------

pub fn path_host(n: usize) -> ColoredGraph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn cycle_host(n: usize) -> ColoredGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn complete_host(n: usize) -> ColoredGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    ColoredGraph::from_edges(n, &edges).unwrap()
}

pub fn random_host(rng: &mut ChaCha8Rng, n: usize, p: f64) -> ColoredGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    ColoredGraph::from_edges(n, &edges).unwrap()
}

/// A random pattern on at most `max_t` vertices (arbitrary edge subset).
pub fn random_pattern(rng: &mut ChaCha8Rng, max_t: usize) -> Pattern {
    let t = rng.random_range(1..=max_t);
    let mut edges = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            if rng.random_bool(0.5) {
                edges.push((i, j));
            }
        }
    }
    Pattern::new(t, &edges).unwrap()
}

// ---------------------------------------------------------------------------
// The slow census oracle
// ---------------------------------------------------------------------------

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}

fn permutations(t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..t).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(t, &mut items, &mut out);
    out
}

fn degree_sequence(t: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut deg = vec![0usize; t];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg.sort_unstable();
    deg
}

/// Are the two labeled graphs on `0..t` isomorphic? Brute-force bijections.
fn isomorphic(t: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if degree_sequence(t, a) != degree_sequence(t, b) {
        return false;
    }
    let b_set: std::collections::HashSet<(usize, usize)> = b
        .iter()
        .map(|&(x, y)| (x.min(y), x.max(y)))
        .collect();
    for perm in permutations(t) {
        let ok = a.iter().all(|&(x, y)| {
            let (px, py) = (perm[x], perm[y]);
            b_set.contains(&(px.min(py), px.max(py)))
        });
        if ok {
            return true;
        }
    }
    false
}

/// The independent slow oracle: enumerates every t-subset of host vertices
/// and every edge subset of the right size inside it, and counts the pairs
/// isomorphic to the pattern. Counts copies (subgraphs), exactly like the
/// census is supposed to.
pub fn naive_count_copies(g: &ColoredGraph, h: &Pattern) -> u64 {
    let t = h.vertex_count();
    let n = g.vertex_count();
    if t > n {
        return 0;
    }
    let pattern_edges: Vec<(usize, usize)> =
        h.edges().iter().map(|e| e.endpoints()).collect();
    let vertices: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    for subset in subsets_of_size(&vertices, t) {
        let local: std::collections::HashMap<usize, usize> = subset
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let inside: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|e| local.contains_key(&e.u()) && local.contains_key(&e.v()))
            .map(|e| (local[&e.u()], local[&e.v()]))
            .collect();
        if inside.len() < pattern_edges.len() {
            continue;
        }
        let ids: Vec<usize> = (0..inside.len()).collect();
        for chosen in subsets_of_size(&ids, pattern_edges.len()) {
            let sub: Vec<(usize, usize)> = chosen.iter().map(|&i| inside[i]).collect();
            if isomorphic(t, &sub, &pattern_edges) {
                count += 1;
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Random lemma instances satisfying the common-neighbor bound
// ---------------------------------------------------------------------------

pub struct BuiltLemmaInstance {
    pub graph: ColoredGraph,
    pub anchors: Vec<usize>,
    pub forbidden_vertices: Vec<usize>,
    pub forbidden_colors: Vec<ColorId>,
}

/// Builds a random host in which consecutive anchors share a dedicated pool
/// of at least `bound + slack` common neighbors, then sprinkles noise edges
/// and picks U from the pool vertices and A from the palette. The
/// common-neighbor precondition holds by construction.
pub fn random_lemma_instance(rng: &mut ChaCha8Rng, k: usize) -> BuiltLemmaInstance {
    let u_size = rng.random_range(0..=3);
    let a_size = rng.random_range(0..=3);
    let bound = (u_size + 2 * a_size + 5 * k).saturating_sub(9);
    let slack = rng.random_range(1..=3);
    let pool_size = bound + slack + u_size;

    let anchors: Vec<usize> = (0..k).collect();
    let mut n = k;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut pool_vertices: Vec<usize> = Vec::new();
    for i in 0..k.saturating_sub(1) {
        for _ in 0..pool_size {
            let x = n;
            n += 1;
            pool_vertices.push(x);
            edges.push((anchors[i], x));
            edges.push((anchors[i + 1], x));
        }
    }
    // Noise: a few extra vertices and random edges among non-anchors.
    let extra = rng.random_range(0..=4);
    for _ in 0..extra {
        n += 1;
    }
    let non_anchor: Vec<usize> = (k..n).collect();
    for _ in 0..(n / 2) {
        if non_anchor.len() < 2 {
            break;
        }
        let a = non_anchor[rng.random_range(0..non_anchor.len())];
        let b = non_anchor[rng.random_range(0..non_anchor.len())];
        if a != b && !edges.contains(&(a.min(b), a.max(b))) {
            edges.push((a.min(b), a.max(b)));
        }
    }
    let graph = ColoredGraph::from_edges(n, &edges)
        .unwrap()
        .extend_coloring_greedy()
        .unwrap();

    // U: pool vertices only, so the per-pair surplus stays >= slack.
    let mut forbidden_vertices = Vec::new();
    let mut pool_shuffled = pool_vertices.clone();
    pool_shuffled.shuffle(rng);
    forbidden_vertices.extend(pool_shuffled.into_iter().take(u_size));

    let palette: Vec<ColorId> = graph.palette().into_iter().collect();
    let mut forbidden_colors = Vec::new();
    let mut palette_shuffled = palette;
    palette_shuffled.shuffle(rng);
    forbidden_colors.extend(palette_shuffled.into_iter().take(a_size));

    BuiltLemmaInstance {
        graph,
        anchors,
        forbidden_vertices,
        forbidden_colors,
    }
}
