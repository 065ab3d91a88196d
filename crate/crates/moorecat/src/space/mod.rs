//! Metric graphs and their Moore paths.
//!
//! A [`GraphSpace`] is a finite directed graph whose edges all have intrinsic
//! length 1; it is the combinatorial stand-in for a topological space used
//! throughout this crate. A [`MoorePath`] is a path together with an explicit
//! nonnegative rational length: a sequence of whole-edge traversals and dwells
//! whose durations sum to the length. Concatenation of Moore paths adds
//! lengths and, on normal forms, is strictly associative and unital as literal
//! data equality.
//!
//! Paths are only ever evaluated at their breakpoints. Between breakpoints a
//! traversal is piecewise linear along its edge, but no operation needs that
//! evaluation, so no real arithmetic appears.

mod pairing;

pub use pairing::{moore_pairing, pair_vertex, product_space, PairingFailure, PairingOutcome};

use crate::ids::{EdgeId, VertexId};
use crate::rat::{self, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate {kind} identifier {id}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("edge {edge} references missing vertex {vertex}")]
    DanglingEdge { edge: EdgeId, vertex: VertexId },
    #[error("step {index} starts at {found} but the path is at {expected}")]
    BrokenChain {
        index: usize,
        expected: VertexId,
        found: VertexId,
    },
    #[error("traverse step {index} has non-positive duration")]
    NonPositiveTraverse { index: usize },
    #[error("dwell step {index} has negative duration")]
    NegativeDwell { index: usize },
    #[error("endpoint mismatch: left path ends at {left_end}, right path starts at {right_start}")]
    EndpointMismatch {
        left_end: VertexId,
        right_start: VertexId,
    },
    #[error("cannot rescale a path of length 0")]
    RescaleZeroLength,
    #[error("rescale target length must be positive")]
    RescaleNonPositive,
}

/// Direction in which an edge is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "+")]
    Forward,
    #[serde(rename = "-")]
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub src: VertexId,
    pub tgt: VertexId,
}

/// A finite metric graph: the carrier of all "topological" data.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpace {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl GraphSpace {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        GraphSpace {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    /// Check identifier uniqueness and that edges reference existing vertices.
    pub fn validate(&self) -> Result<(), SpaceError> {
        let mut seen = BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(v.clone()) {
                return Err(SpaceError::DuplicateId {
                    kind: "vertex",
                    id: v.0.clone(),
                });
            }
        }
        let mut eseen = BTreeSet::new();
        for e in &self.edges {
            if !eseen.insert(e.id.clone()) {
                return Err(SpaceError::DuplicateId {
                    kind: "edge",
                    id: e.id.0.clone(),
                });
            }
            for v in [&e.src, &e.tgt] {
                if !seen.contains(v) {
                    return Err(SpaceError::DanglingEdge {
                        edge: e.id.clone(),
                        vertex: v.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| &e.id == id)
    }

    /// Endpoints of an edge in the given traversal direction: (from, to).
    pub fn edge_endpoints(&self, id: &EdgeId, dir: Dir) -> Result<(VertexId, VertexId), SpaceError> {
        let e = self.edge(id).ok_or_else(|| SpaceError::UnknownEdge(id.clone()))?;
        Ok(match dir {
            Dir::Forward => (e.src.clone(), e.tgt.clone()),
            Dir::Backward => (e.tgt.clone(), e.src.clone()),
        })
    }

    /// Undirected connected components, as a sorted partition of vertices.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut uf = UnionFind::new(self.vertices.len());
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        for e in &self.edges {
            uf.union(index[&e.src], index[&e.tgt]);
        }
        let mut classes: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (v, &i) in &index {
            classes.entry(uf.find(i)).or_default().push((*v).clone());
        }
        let mut out: Vec<Vec<VertexId>> = classes.into_values().collect();
        for class in &mut out {
            class.sort();
        }
        out.sort();
        out
    }

    /// True when the underlying undirected graph has no cycles.
    pub fn is_forest(&self) -> bool {
        let mut uf = UnionFind::new(self.vertices.len());
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        for e in &self.edges {
            if !uf.union(index[&e.src], index[&e.tgt]) {
                return false;
            }
        }
        true
    }
}

/// Union-find over `0..n` with union by rank.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    /// Returns false when both elements were already in the same class.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// One step of a Moore path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// Traverse the whole edge in the given direction, taking `dur` time.
    #[serde(rename = "traverse")]
    Traverse {
        edge: EdgeId,
        dir: Dir,
        #[serde(with = "crate::rat")]
        dur: Rat,
    },
    /// Stay at a vertex for `dur` time.
    #[serde(rename = "dwell")]
    Dwell {
        at: VertexId,
        #[serde(with = "crate::rat")]
        dur: Rat,
    },
}

impl Step {
    pub fn dur(&self) -> &Rat {
        match self {
            Step::Traverse { dur, .. } | Step::Dwell { dur, .. } => dur,
        }
    }
}

/// A Moore path: a start vertex, a chain of steps, and thereby an exact
/// rational length (the sum of step durations).
///
/// The normal form has no zero-duration step and no two consecutive dwells;
/// the length-0 path at a vertex is the empty step list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoorePath {
    pub start: VertexId,
    pub steps: Vec<Step>,
}

impl MoorePath {
    pub fn length(&self) -> Rat {
        self.steps.iter().map(|s| s.dur().clone()).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.steps.is_empty()
    }
}

/// The constant path of length 0 at `v`.
pub fn unit_path(space: &GraphSpace, v: &VertexId) -> Result<MoorePath, SpaceError> {
    if !space.has_vertex(v) {
        return Err(SpaceError::UnknownVertex(v.clone()));
    }
    Ok(MoorePath {
        start: v.clone(),
        steps: Vec::new(),
    })
}

/// Check well-formedness of a path in `space` and return its end vertex.
pub fn validate_path(space: &GraphSpace, p: &MoorePath) -> Result<VertexId, SpaceError> {
    if !space.has_vertex(&p.start) {
        return Err(SpaceError::UnknownVertex(p.start.clone()));
    }
    let mut at = p.start.clone();
    for (index, step) in p.steps.iter().enumerate() {
        match step {
            Step::Traverse { edge, dir, dur } => {
                if !rat::is_positive(dur) {
                    return Err(SpaceError::NonPositiveTraverse { index });
                }
                let (from, to) = space.edge_endpoints(edge, *dir)?;
                if from != at {
                    return Err(SpaceError::BrokenChain {
                        index,
                        expected: at,
                        found: from,
                    });
                }
                at = to;
            }
            Step::Dwell { at: v, dur } => {
                if dur < &Rat::zero() {
                    return Err(SpaceError::NegativeDwell { index });
                }
                if v != &at {
                    return Err(SpaceError::BrokenChain {
                        index,
                        expected: at,
                        found: v.clone(),
                    });
                }
            }
        }
    }
    Ok(at)
}

/// The maps (start, end) out of the Moore path space.
pub fn endpoints(space: &GraphSpace, p: &MoorePath) -> Result<(VertexId, VertexId), SpaceError> {
    let end = validate_path(space, p)?;
    Ok((p.start.clone(), end))
}

/// Canonical representative: drop zero-duration steps and merge consecutive
/// dwells. Idempotent; preserves start, endpoints, length and the traversed
/// edge sequence.
pub fn normalize(space: &GraphSpace, p: &MoorePath) -> Result<MoorePath, SpaceError> {
    validate_path(space, p)?;
    let mut steps: Vec<Step> = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        if step.dur().is_zero() {
            continue;
        }
        match (steps.last_mut(), step) {
            (Some(Step::Dwell { dur: d0, .. }), Step::Dwell { dur, .. }) => {
                *d0 += dur.clone();
            }
            (_, s) => steps.push(s.clone()),
        }
    }
    Ok(MoorePath {
        start: p.start.clone(),
        steps,
    })
}

/// Strict composition by concatenation: `p` first, then `q`.
///
/// Lengths add exactly; the result is in normal form. Errors when the end of
/// `p` is not the start of `q`.
pub fn concat(space: &GraphSpace, p: &MoorePath, q: &MoorePath) -> Result<MoorePath, SpaceError> {
    let p_end = validate_path(space, p)?;
    if p_end != q.start {
        return Err(SpaceError::EndpointMismatch {
            left_end: p_end,
            right_start: q.start.clone(),
        });
    }
    let mut steps = p.steps.clone();
    steps.extend(q.steps.iter().cloned());
    normalize(
        space,
        &MoorePath {
            start: p.start.clone(),
            steps,
        },
    )
}

/// Multiply every duration by `target / length(p)`, giving total length
/// `target` with the same edge word. Errors on zero-length input.
pub fn rescale(space: &GraphSpace, p: &MoorePath, target: &Rat) -> Result<MoorePath, SpaceError> {
    let len = p.length();
    if len.is_zero() {
        return Err(SpaceError::RescaleZeroLength);
    }
    if !rat::is_positive(target) {
        return Err(SpaceError::RescaleNonPositive);
    }
    let factor = target / len;
    let steps = p
        .steps
        .iter()
        .map(|s| match s {
            Step::Traverse { edge, dir, dur } => Step::Traverse {
                edge: edge.clone(),
                dir: *dir,
                dur: dur * factor.clone(),
            },
            Step::Dwell { at, dur } => Step::Dwell {
                at: at.clone(),
                dur: dur * factor.clone(),
            },
        })
        .collect();
    normalize(
        space,
        &MoorePath {
            start: p.start.clone(),
            steps,
        },
    )
}

/// Reverse a path: same length, endpoints swapped, edge word inverted.
pub fn reverse(space: &GraphSpace, p: &MoorePath) -> Result<MoorePath, SpaceError> {
    let end = validate_path(space, p)?;
    let steps = p
        .steps
        .iter()
        .rev()
        .map(|s| match s {
            Step::Traverse { edge, dir, dur } => Step::Traverse {
                edge: edge.clone(),
                dir: dir.flip(),
                dur: dur.clone(),
            },
            Step::Dwell { at, dur } => Step::Dwell {
                at: at.clone(),
                dur: dur.clone(),
            },
        })
        .collect();
    normalize(space, &MoorePath { start: end, steps })
}

/// A signed edge letter of an [`EdgeWord`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub edge: EdgeId,
    pub dir: Dir,
}

impl Letter {
    fn inverse_of(&self, other: &Letter) -> bool {
        self.edge == other.edge && self.dir == other.dir.flip()
    }
}

/// Freely reduced word of signed edges. In a graph, two paths with the same
/// endpoints are homotopic rel endpoints exactly when their reduced words
/// agree, so this is the canonical form for homotopy classes.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeWord(pub Vec<Letter>);

impl EdgeWord {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Free reduction of a letter sequence.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> EdgeWord {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.inverse_of(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        EdgeWord(stack)
    }

    /// Concatenate and reduce.
    pub fn concat(&self, other: &EdgeWord) -> EdgeWord {
        EdgeWord::reduce(self.0.iter().chain(other.0.iter()).cloned())
    }

    /// Formal inverse word.
    pub fn inverse(&self) -> EdgeWord {
        EdgeWord(
            self.0
                .iter()
                .rev()
                .map(|l| Letter {
                    edge: l.edge.clone(),
                    dir: l.dir.flip(),
                })
                .collect(),
        )
    }
}

/// The freely reduced word of traversed signed edges. Duration-independent.
pub fn reduced_word(space: &GraphSpace, p: &MoorePath) -> Result<EdgeWord, SpaceError> {
    validate_path(space, p)?;
    Ok(EdgeWord::reduce(p.steps.iter().filter_map(|s| match s {
        Step::Traverse { edge, dir, .. } => Some(Letter {
            edge: edge.clone(),
            dir: *dir,
        }),
        Step::Dwell { .. } => None,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn vx(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn two_vertex_space() -> GraphSpace {
        GraphSpace::new(
            [vx("p"), vx("q")],
            [Edge {
                id: EdgeId::from("e"),
                src: vx("p"),
                tgt: vx("q"),
            }],
        )
    }

    fn tr(edge: &str, dir: Dir, n: i64, d: i64) -> Step {
        Step::Traverse {
            edge: EdgeId::from(edge),
            dir,
            dur: rat(n, d),
        }
    }

    fn dw(at: &str, n: i64, d: i64) -> Step {
        Step::Dwell {
            at: vx(at),
            dur: rat(n, d),
        }
    }

    #[test]
    fn normalize_drops_lone_zero_dwell() {
        let s = two_vertex_space();
        let p = MoorePath {
            start: vx("p"),
            steps: vec![dw("p", 0, 1)],
        };
        let n = normalize(&s, &p).unwrap();
        assert_eq!(n, unit_path(&s, &vx("p")).unwrap());
    }

    #[test]
    fn normalize_merges_consecutive_dwells() {
        let s = two_vertex_space();
        let p = MoorePath {
            start: vx("p"),
            steps: vec![dw("p", 1, 2), dw("p", 1, 3)],
        };
        let n = normalize(&s, &p).unwrap();
        assert_eq!(n.steps, vec![dw("p", 5, 6)]);
    }

    #[test]
    fn normalize_removes_interior_zero_dwell() {
        let s = two_vertex_space();
        let p = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 1, 2), dw("q", 0, 1), tr("e", Dir::Backward, 1, 2)],
        };
        let n = normalize(&s, &p).unwrap();
        assert_eq!(
            n.steps,
            vec![tr("e", Dir::Forward, 1, 2), tr("e", Dir::Backward, 1, 2)]
        );
    }

    #[test]
    fn concat_adds_lengths() {
        let s = two_vertex_space();
        let a = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 1, 2)],
        };
        let b = MoorePath {
            start: vx("q"),
            steps: vec![tr("e", Dir::Backward, 1, 3)],
        };
        let c = concat(&s, &a, &b).unwrap();
        assert_eq!(c.length(), rat(5, 6));
        assert_eq!(endpoints(&s, &c).unwrap(), (vx("p"), vx("p")));
    }

    #[test]
    fn concat_rejects_endpoint_mismatch() {
        let s = two_vertex_space();
        let a = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 1, 2)],
        };
        let err = concat(&s, &a, &a).unwrap_err();
        assert!(matches!(err, SpaceError::EndpointMismatch { .. }));
    }

    #[test]
    fn unit_path_is_identity_for_concat() {
        let s = two_vertex_space();
        let a = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 3, 4), dw("q", 1, 4)],
        };
        let u_left = unit_path(&s, &vx("p")).unwrap();
        let u_right = unit_path(&s, &vx("q")).unwrap();
        assert_eq!(concat(&s, &u_left, &a).unwrap(), a);
        assert_eq!(concat(&s, &a, &u_right).unwrap(), a);
        assert_eq!(u_left.length(), rat(0, 1));
        assert!(unit_path(&s, &vx("missing")).is_err());
    }

    #[test]
    fn rescale_hits_target_and_keeps_word() {
        let s = two_vertex_space();
        let a = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 1, 2)],
        };
        let r = rescale(&s, &a, &rat(1, 1)).unwrap();
        assert_eq!(r.length(), rat(1, 1));
        assert_eq!(reduced_word(&s, &r).unwrap(), reduced_word(&s, &a).unwrap());
        // rescaling to the current length is the identity
        assert_eq!(rescale(&s, &a, &rat(1, 2)).unwrap(), a);
        // rescaling twice composes multiplicatively
        let twice = rescale(&s, &rescale(&s, &a, &rat(2, 3)).unwrap(), &rat(7, 5)).unwrap();
        assert_eq!(twice, rescale(&s, &a, &rat(7, 5)).unwrap());
        let u = unit_path(&s, &vx("p")).unwrap();
        assert!(matches!(
            rescale(&s, &u, &rat(1, 1)),
            Err(SpaceError::RescaleZeroLength)
        ));
    }

    #[test]
    fn reduced_word_cancels_backtracking() {
        let s = two_vertex_space();
        let p = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 1, 2), tr("e", Dir::Backward, 1, 2)],
        };
        assert!(reduced_word(&s, &p).unwrap().is_empty());
        let u = unit_path(&s, &vx("p")).unwrap();
        assert!(reduced_word(&s, &u).unwrap().is_empty());
    }

    #[test]
    fn validate_rejects_malformed_paths() {
        let s = two_vertex_space();
        let broken = MoorePath {
            start: vx("q"),
            steps: vec![tr("e", Dir::Forward, 1, 2)],
        };
        assert!(matches!(
            validate_path(&s, &broken),
            Err(SpaceError::BrokenChain { .. })
        ));
        let zero_traverse = MoorePath {
            start: vx("p"),
            steps: vec![tr("e", Dir::Forward, 0, 1)],
        };
        assert!(matches!(
            validate_path(&s, &zero_traverse),
            Err(SpaceError::NonPositiveTraverse { .. })
        ));
    }

    #[test]
    fn forest_and_components() {
        let s = two_vertex_space();
        assert!(s.is_forest());
        assert_eq!(s.components().len(), 1);
        let mut cyclic = s.clone();
        cyclic.edges.push(Edge {
            id: EdgeId::from("f"),
            src: vx("p"),
            tgt: vx("q"),
        });
        assert!(!cyclic.is_forest());
    }
}
