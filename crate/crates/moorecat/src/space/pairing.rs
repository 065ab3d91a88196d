//! Synchronized pairing of Moore paths into a product graph.
//!
//! The product of two metric graphs, as used here, is the 1-skeleton of the
//! product cell complex: its vertices are pairs of vertices and its edges are
//! (edge, vertex) and (vertex, edge) pairs. The product of two edges is a
//! square, not a graph cell, so a pair of paths can only be combined when at
//! no instant both are in the middle of a traversal. That partiality — plus
//! the requirement that the two lengths agree — is exactly what makes the
//! Moore construction fail to commute with products, and this module keeps it
//! observable rather than papering over it.

use super::{normalize, Edge, GraphSpace, MoorePath, SpaceError, Step};
use crate::ids::{EdgeId, VertexId};
use crate::rat::{rat_to_string, Rat};
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Why a pairing did not exist. This is a result, not an error: the absence
/// of a pairing is the observable fact the operation exists to report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PairingFailure {
    #[serde(rename = "length_mismatch")]
    LengthMismatch {
        #[serde(with = "crate::rat")]
        left: Rat,
        #[serde(with = "crate::rat")]
        right: Rat,
    },
    /// Both paths were mid-traversal at (or just after) the given time.
    #[serde(rename = "simultaneous_traversal")]
    SimultaneousTraversal {
        #[serde(with = "crate::rat")]
        at: Rat,
    },
}

impl std::fmt::Display for PairingFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairingFailure::LengthMismatch { left, right } => write!(
                f,
                "length mismatch: {} vs {}",
                rat_to_string(left),
                rat_to_string(right)
            ),
            PairingFailure::SimultaneousTraversal { at } => {
                write!(f, "simultaneous traversal at time {}", rat_to_string(at))
            }
        }
    }
}

/// Outcome of [`moore_pairing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairingOutcome {
    Paired(MoorePath),
    Failed(PairingFailure),
}

impl PairingOutcome {
    pub fn paired(self) -> Option<MoorePath> {
        match self {
            PairingOutcome::Paired(p) => Some(p),
            PairingOutcome::Failed(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&PairingFailure> {
        match self {
            PairingOutcome::Paired(_) => None,
            PairingOutcome::Failed(f) => Some(f),
        }
    }
}

pub fn pair_vertex(u: &VertexId, v: &VertexId) -> VertexId {
    VertexId::new(format!("({},{})", u, v))
}

fn edge_times_vertex(e: &EdgeId, v: &VertexId) -> EdgeId {
    EdgeId::new(format!("({},{})", e, v))
}

fn vertex_times_edge(u: &VertexId, e: &EdgeId) -> EdgeId {
    EdgeId::new(format!("({},{})", u, e))
}

/// The 1-skeleton of the product of two graphs.
pub fn product_space(x: &GraphSpace, y: &GraphSpace) -> GraphSpace {
    let mut vertices = Vec::new();
    for u in &x.vertices {
        for v in &y.vertices {
            vertices.push(pair_vertex(u, v));
        }
    }
    let mut edges = Vec::new();
    for e in &x.edges {
        for v in &y.vertices {
            edges.push(Edge {
                id: edge_times_vertex(&e.id, v),
                src: pair_vertex(&e.src, v),
                tgt: pair_vertex(&e.tgt, v),
            });
        }
    }
    for u in &x.vertices {
        for e in &y.edges {
            edges.push(Edge {
                id: vertex_times_edge(u, &e.id),
                src: pair_vertex(u, &e.src),
                tgt: pair_vertex(u, &e.tgt),
            });
        }
    }
    GraphSpace { vertices, edges }
}

/// Cursor over the steps of a normalized path. Dwells may be consumed
/// piecemeal; traversals are atomic.
struct Scan<'a> {
    space: &'a GraphSpace,
    steps: std::slice::Iter<'a, Step>,
    current: Option<(Step, Rat)>,
    at: VertexId,
}

impl<'a> Scan<'a> {
    fn new(space: &'a GraphSpace, p: &'a MoorePath) -> Self {
        let mut s = Scan {
            space,
            steps: p.steps.iter(),
            current: None,
            at: p.start.clone(),
        };
        s.advance();
        s
    }

    fn advance(&mut self) {
        if self.current.is_none() {
            self.current = self.steps.next().map(|s| (s.clone(), s.dur().clone()));
        }
    }

    /// Consume `d` time from a dwell front (or finish an atomic traverse).
    fn consume(&mut self, d: &Rat) -> Result<(), SpaceError> {
        let (step, rem) = self.current.as_mut().expect("consume on exhausted scan");
        match step {
            Step::Dwell { .. } => {
                *rem -= d.clone();
                debug_assert!(!rem.is_negative());
            }
            Step::Traverse { edge, dir, dur } => {
                debug_assert_eq!(d, &*dur);
                let (_, to) = self.space.edge_endpoints(edge, *dir)?;
                self.at = to;
                *rem = Rat::zero();
            }
        }
        if self.current.as_ref().is_some_and(|(_, rem)| rem.is_zero()) {
            self.current = None;
            self.advance();
        }
        Ok(())
    }
}

/// Pair two Moore paths into the product graph, pointwise in time.
///
/// Succeeds exactly when the lengths agree and at every instant at most one
/// of the two paths is mid-traversal; the synchronized refinement at the
/// union of breakpoints is then itself a Moore path of the common length.
pub fn moore_pairing(
    x: &GraphSpace,
    y: &GraphSpace,
    alpha: &MoorePath,
    beta: &MoorePath,
) -> Result<PairingOutcome, SpaceError> {
    let a = normalize(x, alpha)?;
    let b = normalize(y, beta)?;
    let (la, lb) = (a.length(), b.length());
    if la != lb {
        return Ok(PairingOutcome::Failed(PairingFailure::LengthMismatch {
            left: la,
            right: lb,
        }));
    }

    let product = product_space(x, y);
    let mut sa = Scan::new(x, &a);
    let mut sb = Scan::new(y, &b);
    let mut now = Rat::zero();
    let mut steps: Vec<Step> = Vec::new();
    let start = pair_vertex(&a.start, &b.start);

    loop {
        match (sa.current.clone(), sb.current.clone()) {
            (None, None) => break,
            (Some((Step::Dwell { .. }, ra)), Some((Step::Dwell { .. }, rb))) => {
                let d = ra.min(rb);
                steps.push(Step::Dwell {
                    at: pair_vertex(&sa.at, &sb.at),
                    dur: d.clone(),
                });
                sa.consume(&d)?;
                sb.consume(&d)?;
                now += d;
            }
            (Some((Step::Traverse { edge, dir, dur }, _)), Some((Step::Dwell { .. }, rb))) => {
                if rb < dur {
                    return Ok(PairingOutcome::Failed(PairingFailure::SimultaneousTraversal {
                        at: now + rb,
                    }));
                }
                steps.push(Step::Traverse {
                    edge: edge_times_vertex(&edge, &sb.at),
                    dir,
                    dur: dur.clone(),
                });
                sa.consume(&dur)?;
                sb.consume(&dur)?;
                now += dur;
            }
            (Some((Step::Dwell { .. }, ra)), Some((Step::Traverse { edge, dir, dur }, _))) => {
                if ra < dur {
                    return Ok(PairingOutcome::Failed(PairingFailure::SimultaneousTraversal {
                        at: now + ra,
                    }));
                }
                steps.push(Step::Traverse {
                    edge: vertex_times_edge(&sa.at, &edge),
                    dir,
                    dur: dur.clone(),
                });
                sa.consume(&dur)?;
                sb.consume(&dur)?;
                now += dur;
            }
            (Some((Step::Traverse { .. }, _)), Some((Step::Traverse { .. }, _))) => {
                return Ok(PairingOutcome::Failed(PairingFailure::SimultaneousTraversal {
                    at: now,
                }));
            }
            // Equal lengths and positive step durations force both scans to
            // exhaust at the same instant.
            (Some(_), None) | (None, Some(_)) => {
                unreachable!("equal-length normalized paths must exhaust together")
            }
        }
    }

    let paired = normalize(&product, &MoorePath { start, steps })?;
    Ok(PairingOutcome::Paired(paired))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ids::EdgeId;
    use crate::rat::rat;
    use crate::space::{unit_path, Dir};

    fn vx(s: &str) -> VertexId {
        VertexId::from(s)
    }

    fn line(prefix: &str) -> GraphSpace {
        GraphSpace::new(
            [vx(&format!("{prefix}0")), vx(&format!("{prefix}1"))],
            [Edge {
                id: EdgeId::from(format!("{prefix}e").as_str()),
                src: vx(&format!("{prefix}0")),
                tgt: vx(&format!("{prefix}1")),
            }],
        )
    }

    #[test]
    fn length_mismatch_fails() {
        let x = line("x");
        let y = line("y");
        let a = MoorePath {
            start: vx("x0"),
            steps: vec![Step::Traverse {
                edge: EdgeId::from("xe"),
                dir: Dir::Forward,
                dur: rat(1, 1),
            }],
        };
        let b = MoorePath {
            start: vx("y0"),
            steps: vec![Step::Traverse {
                edge: EdgeId::from("ye"),
                dir: Dir::Forward,
                dur: rat(2, 1),
            }],
        };
        let out = moore_pairing(&x, &y, &a, &b).unwrap();
        assert!(matches!(
            out.failure(),
            Some(PairingFailure::LengthMismatch { .. })
        ));
    }

    #[test]
    fn unit_paths_pair() {
        let x = line("x");
        let y = line("y");
        let a = unit_path(&x, &vx("x0")).unwrap();
        let b = unit_path(&y, &vx("y0")).unwrap();
        let out = moore_pairing(&x, &y, &a, &b).unwrap();
        let p = out.paired().unwrap();
        assert!(p.is_constant());
        assert_eq!(p.start, vx("(x0,y0)"));
    }

    #[test]
    fn overlapping_traversals_fail() {
        // One full-length traverse against a dwell-then-traverse: the two are
        // both mid-edge on (1/2, 1), so no pair path exists.
        let x = line("x");
        let y = line("y");
        let a = MoorePath {
            start: vx("x0"),
            steps: vec![Step::Traverse {
                edge: EdgeId::from("xe"),
                dir: Dir::Forward,
                dur: rat(1, 1),
            }],
        };
        let b = MoorePath {
            start: vx("y0"),
            steps: vec![
                Step::Dwell {
                    at: vx("y0"),
                    dur: rat(1, 2),
                },
                Step::Traverse {
                    edge: EdgeId::from("ye"),
                    dir: Dir::Forward,
                    dur: rat(1, 2),
                },
            ],
        };
        let out = moore_pairing(&x, &y, &a, &b).unwrap();
        assert_eq!(
            out.failure(),
            Some(&PairingFailure::SimultaneousTraversal { at: rat(1, 2) })
        );
    }

    #[test]
    fn interleaved_traversals_pair() {
        let x = line("x");
        let y = line("y");
        let a = MoorePath {
            start: vx("x0"),
            steps: vec![
                Step::Traverse {
                    edge: EdgeId::from("xe"),
                    dir: Dir::Forward,
                    dur: rat(1, 2),
                },
                Step::Dwell {
                    at: vx("x1"),
                    dur: rat(1, 2),
                },
            ],
        };
        let b = MoorePath {
            start: vx("y0"),
            steps: vec![
                Step::Dwell {
                    at: vx("y0"),
                    dur: rat(1, 2),
                },
                Step::Traverse {
                    edge: EdgeId::from("ye"),
                    dir: Dir::Forward,
                    dur: rat(1, 2),
                },
            ],
        };
        let out = moore_pairing(&x, &y, &a, &b).unwrap();
        let p = out.paired().unwrap();
        assert_eq!(p.length(), rat(1, 1));
        assert_eq!(p.steps.len(), 2);
        let product = product_space(&x, &y);
        let (s, e) = crate::space::endpoints(&product, &p).unwrap();
        assert_eq!(s, vx("(x0,y0)"));
        assert_eq!(e, vx("(x1,y1)"));
    }
}
