//! The greedy rainbow-path step, executable: given anchor vertices whose
//! consecutive pairs have many common neighbors, a set of forbidden
//! vertices and a set of forbidden colors, grow a rainbow alternating path
//! v1 u1 v2 u2 ... u_{k−1} v_k connector by connector.
//!
//! The quantitative precondition is that each consecutive anchor pair has
//! at least |U| + 2|A| + 5k − 9 common neighbors. When it holds the greedy
//! step can never get stuck; a stuck search under the precondition is an
//! internal consistency failure, not a result.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColoredGraph, ColorId, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LemmaError {
    #[error("instance needs at least one anchor")]
    NoAnchors,
    #[error("anchor {v} repeats")]
    DuplicateAnchor { v: usize },
    #[error("anchor {v} out of range for a graph on {n} vertices")]
    AnchorOutOfRange { v: usize, n: usize },
    #[error("the host graph must be totally colored")]
    UncoloredHost,
    #[error("precondition violated at anchor pair {pair_index}: {common} common neighbors, {required} required")]
    PreconditionViolated {
        pair_index: usize,
        common: usize,
        required: usize,
    },
    #[error("no connector at step {stuck_index}: all {candidates} common neighbors are forbidden")]
    NotFound {
        stuck_index: usize,
        candidates: usize,
    },
    #[error("internal consistency failure: the precondition holds but the greedy step is stuck at index {stuck_index}")]
    GuaranteeViolated { stuck_index: usize },
    #[error("anchors {u} and {v} are not adjacent, cannot close the cycle")]
    ClosingEdgeMissing { u: usize, v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One lemma run: host, ordered anchors, forbidden vertices U and forbidden
/// colors A. U may intersect the anchors; anchors are excluded from
/// connector choices separately.
#[derive(Debug, Clone)]
pub struct LemmaInstance<'a> {
    g: &'a ColoredGraph,
    anchors: Vec<usize>,
    forbidden_vertices: BTreeSet<usize>,
    forbidden_colors: BTreeSet<ColorId>,
}

/// A successful run: `vertices` is v1 u1 v2 ... u_{k−1} v_k and `colors`
/// lists the 2(k−1) edge colors along it. `max_forbidden_observed` is the
/// largest number of rejected common-neighbor candidates at any single
/// greedy step.
#[derive(Debug, Clone, Serialize)]
pub struct AlternatingPath {
    pub vertices: Vec<usize>,
    pub colors: Vec<ColorId>,
    pub max_forbidden_observed: usize,
    pub precondition_ok: bool,
}

/// A rainbow odd cycle produced by closing an alternating path with one
/// pre-existing edge.
#[derive(Debug, Clone, Serialize)]
pub struct RainbowCycle {
    pub vertices: Vec<usize>,
    pub colors: Vec<ColorId>,
}

impl<'a> LemmaInstance<'a> {
    pub fn new(
        g: &'a ColoredGraph,
        anchors: &[usize],
        forbidden_vertices: &[usize],
        forbidden_colors: &[ColorId],
    ) -> Result<Self, LemmaError> {
        if anchors.is_empty() {
            return Err(LemmaError::NoAnchors);
        }
        let mut seen = BTreeSet::new();
        for &a in anchors {
            if a >= g.vertex_count() {
                return Err(LemmaError::AnchorOutOfRange {
                    v: a,
                    n: g.vertex_count(),
                });
            }
            if !seen.insert(a) {
                return Err(LemmaError::DuplicateAnchor { v: a });
            }
        }
        if !g.is_totally_colored() {
            return Err(LemmaError::UncoloredHost);
        }
        Ok(LemmaInstance {
            g,
            anchors: anchors.to_vec(),
            forbidden_vertices: forbidden_vertices.iter().copied().collect(),
            forbidden_colors: forbidden_colors.iter().copied().collect(),
        })
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// |U| + 2|A| + 5k − 9, clamped at zero.
    pub fn common_neighbor_bound(&self) -> usize {
        let k = self.anchors.len();
        (self.forbidden_vertices.len() + 2 * self.forbidden_colors.len() + 5 * k)
            .saturating_sub(9)
    }

    /// First consecutive anchor pair violating the bound, if any.
    pub fn precondition_violation(&self) -> Option<(usize, usize, usize)> {
        let required = self.common_neighbor_bound();
        for i in 0..self.anchors.len().saturating_sub(1) {
            let common = self
                .g
                .common_neighbors(self.anchors[i], self.anchors[i + 1])
                .expect("anchors validated")
                .len();
            if common < required {
                return Some((i, common, required));
            }
        }
        None
    }

    pub fn precondition_holds(&self) -> bool {
        self.precondition_violation().is_none()
    }

    /// Grows the rainbow alternating path. Connectors are chosen as the
    /// smallest-index valid common neighbor, so runs are deterministic.
    /// With `best_effort` the search runs even when the precondition fails,
    /// reporting the first stuck step on failure.
    pub fn find_rainbow_alternating_path(
        &self,
        best_effort: bool,
    ) -> Result<AlternatingPath, LemmaError> {
        let violation = self.precondition_violation();
        if let Some((pair_index, common, required)) = violation {
            if !best_effort {
                return Err(LemmaError::PreconditionViolated {
                    pair_index,
                    common,
                    required,
                });
            }
        }
        let precondition_ok = violation.is_none();
        let k = self.anchors.len();
        let anchor_set: BTreeSet<usize> = self.anchors.iter().copied().collect();
        let mut connectors: Vec<usize> = Vec::with_capacity(k.saturating_sub(1));
        let mut used_colors: BTreeSet<ColorId> = BTreeSet::new();
        let mut max_forbidden = 0usize;

        for j in 0..k.saturating_sub(1) {
            let (vj, vj1) = (self.anchors[j], self.anchors[j + 1]);
            let candidates = self.g.common_neighbors(vj, vj1).expect("anchors validated");
            let mut rejected = 0usize;
            let mut chosen: Option<(usize, ColorId, ColorId)> = None;
            for &x in &candidates {
                let ok = !self.forbidden_vertices.contains(&x)
                    && !anchor_set.contains(&x)
                    && !connectors.contains(&x);
                if !ok {
                    rejected += 1;
                    continue;
                }
                let c1 = self.g.color_of(x, vj).expect("totally colored");
                let c2 = self.g.color_of(x, vj1).expect("totally colored");
                let colors_ok = c1 != c2
                    && !self.forbidden_colors.contains(&c1)
                    && !self.forbidden_colors.contains(&c2)
                    && !used_colors.contains(&c1)
                    && !used_colors.contains(&c2);
                if !colors_ok {
                    rejected += 1;
                    continue;
                }
                chosen = Some((x, c1, c2));
                break;
            }
            max_forbidden = max_forbidden.max(rejected);
            match chosen {
                Some((x, c1, c2)) => {
                    connectors.push(x);
                    used_colors.insert(c1);
                    used_colors.insert(c2);
                }
                None => {
                    return Err(if precondition_ok {
                        LemmaError::GuaranteeViolated { stuck_index: j }
                    } else {
                        LemmaError::NotFound {
                            stuck_index: j,
                            candidates: candidates.len(),
                        }
                    });
                }
            }
        }

        let mut vertices = Vec::with_capacity(2 * k - 1);
        let mut colors = Vec::with_capacity(2 * (k - 1));
        for (j, &x) in connectors.iter().enumerate() {
            vertices.push(self.anchors[j]);
            colors.push(self.g.color_of(self.anchors[j], x).expect("colored"));
            colors.push(self.g.color_of(x, self.anchors[j + 1]).expect("colored"));
            vertices.push(x);
        }
        vertices.push(self.anchors[k - 1]);
        Ok(AlternatingPath {
            vertices,
            colors,
            max_forbidden_observed: max_forbidden,
            precondition_ok,
        })
    }
}

/// Closes a rainbow alternating path into an odd cycle: the anchors are
/// v1..v_{k+1} with v1 and v_{k+1} adjacent, the closing edge's color is
/// added to the forbidden colors, and the lemma path plus the closing edge
/// forms a rainbow C_{2k+1}.
pub fn close_rainbow_odd_cycle(
    g: &ColoredGraph,
    anchors: &[usize],
    forbidden_vertices: &[usize],
    forbidden_colors: &[ColorId],
    best_effort: bool,
) -> Result<RainbowCycle, LemmaError> {
    if anchors.len() < 2 {
        return Err(LemmaError::NoAnchors);
    }
    let (first, last) = (anchors[0], anchors[anchors.len() - 1]);
    if !g.has_edge(first, last) {
        return Err(LemmaError::ClosingEdgeMissing { u: first, v: last });
    }
    if !g.is_totally_colored() {
        return Err(LemmaError::UncoloredHost);
    }
    let closing_color = g.color_of(first, last).expect("totally colored");
    let mut colors: Vec<ColorId> = forbidden_colors.to_vec();
    if !colors.contains(&closing_color) {
        colors.push(closing_color);
    }
    let inst = LemmaInstance::new(g, anchors, forbidden_vertices, &colors)?;
    let path = inst.find_rainbow_alternating_path(best_effort)?;

    let mut vertices = path.vertices.clone();
    let mut cycle_colors = path.colors.clone();
    cycle_colors.push(closing_color);
    debug_assert_eq!(vertices.len(), cycle_colors.len());
    let distinct: BTreeSet<ColorId> = cycle_colors.iter().copied().collect();
    debug_assert_eq!(distinct.len(), cycle_colors.len(), "cycle must be rainbow");
    vertices.shrink_to_fit();
    Ok(RainbowCycle {
        vertices,
        colors: cycle_colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    #[test]
    fn two_anchor_path_through_shared_neighbor() {
        // K_{2,1} is the path a–m–b; properness forces distinct colors at m.
        let g = ColoredGraph::from_colored_edges(3, &[(0, 2, Some(0)), (1, 2, Some(1))]).unwrap();
        let inst = LemmaInstance::new(&g, &[0, 1], &[], &[]).unwrap();
        assert_eq!(inst.common_neighbor_bound(), 1);
        assert!(inst.precondition_holds());
        let path = inst.find_rainbow_alternating_path(false).unwrap();
        assert_eq!(path.vertices, vec![0, 2, 1]);
        assert_eq!(path.colors.len(), 2);
        assert_ne!(path.colors[0], path.colors[1]);
    }

    #[test]
    fn starvation_reports_not_found() {
        // Both middle edges use color 0, which is forbidden.
        let g = ColoredGraph::from_colored_edges(
            4,
            &[(0, 2, Some(0)), (1, 2, Some(1)), (0, 3, Some(1)), (1, 3, Some(0))],
        )
        .unwrap();
        let inst = LemmaInstance::new(&g, &[0, 1], &[], &[0]).unwrap();
        assert!(!inst.precondition_holds());
        let err = inst.find_rainbow_alternating_path(true).unwrap_err();
        assert!(matches!(err, LemmaError::NotFound { stuck_index: 0, candidates: 2 }));
        // Without best effort the violated precondition is the error.
        let err = inst.find_rainbow_alternating_path(false).unwrap_err();
        assert!(matches!(err, LemmaError::PreconditionViolated { .. }));
    }

    #[test]
    fn forbidden_vertices_are_avoided() {
        // Two common neighbors; the smaller one is in U.
        let g = ColoredGraph::from_colored_edges(
            4,
            &[(0, 2, Some(0)), (1, 2, Some(1)), (0, 3, Some(2)), (1, 3, Some(3))],
        )
        .unwrap();
        let inst = LemmaInstance::new(&g, &[0, 1], &[2], &[]).unwrap();
        let path = inst.find_rainbow_alternating_path(true).unwrap();
        assert_eq!(path.vertices, vec![0, 3, 1]);
        assert_eq!(path.max_forbidden_observed, 1);
    }

    #[test]
    fn instance_validation() {
        let g = ColoredGraph::from_colored_edges(3, &[(0, 1, Some(0))]).unwrap();
        assert!(matches!(
            LemmaInstance::new(&g, &[], &[], &[]),
            Err(LemmaError::NoAnchors)
        ));
        assert!(matches!(
            LemmaInstance::new(&g, &[0, 0], &[], &[]),
            Err(LemmaError::DuplicateAnchor { v: 0 })
        ));
        assert!(matches!(
            LemmaInstance::new(&g, &[0, 7], &[], &[]),
            Err(LemmaError::AnchorOutOfRange { v: 7, .. })
        ));
        let partial = ColoredGraph::from_colored_edges(3, &[(0, 1, None)]).unwrap();
        assert!(matches!(
            LemmaInstance::new(&partial, &[0, 1], &[], &[]),
            Err(LemmaError::UncoloredHost)
        ));
    }

    #[test]
    fn triangle_closes_to_rainbow_c3() {
        let g = ColoredGraph::from_colored_edges(
            3,
            &[(0, 1, Some(0)), (1, 2, Some(1)), (0, 2, Some(2))],
        )
        .unwrap();
        let cycle = close_rainbow_odd_cycle(&g, &[0, 1], &[], &[], true).unwrap();
        assert_eq!(cycle.vertices.len(), 3);
        let mut colors = cycle.colors.clone();
        colors.sort_unstable();
        colors.dedup();
        assert_eq!(colors.len(), 3);
    }

    #[test]
    fn closing_requires_the_edge() {
        let g = ColoredGraph::from_colored_edges(3, &[(0, 1, Some(0)), (1, 2, Some(1))]).unwrap();
        assert!(matches!(
            close_rainbow_odd_cycle(&g, &[0, 2], &[], &[], true),
            Err(LemmaError::ClosingEdgeMissing { u: 0, v: 2 })
        ));
    }
}
