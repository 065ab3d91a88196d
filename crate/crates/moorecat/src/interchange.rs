//! The pointwise tensor of Moore paths and its failure to be a bifunctor.
//!
//! Over a monoidal enriched category, two Moore paths can be tensored
//! pointwise in time: `(beta (.) alpha)(t) = beta(t) (x) alpha(t)`. On a
//! metric graph this is defined exactly when at no instant both paths are
//! mid-traversal, and the result stabilizes after the larger of the two
//! lengths — so the operation takes length `max(r, s)`, while composition
//! adds lengths. The mismatch between those two bookkeepings is the precise
//! reason the tensor does not extend to a bifunctor on the path object, and
//! [`check_interchange`] makes the failure locus observable cell by cell.
//!
//! The source derivation declares the pointwise tensor to have length
//! `r + s`; that contradicts the pointwise formula, which is constant after
//! `max(r, s)`. The pointwise semantics is implemented and the declared
//! length is reported alongside it rather than silently corrected.

use crate::enriched::{EdgeImage, EnrichedCat, GraphMap};
use crate::ids::{EdgeId, ObjId, VertexId};
use crate::pathobj::{PMorphism, PObject};
use crate::rat::{rat, rat_to_string, Rat};
use crate::report::Report;
use crate::space::{concat, normalize, unit_path, Dir, GraphSpace, MoorePath, SpaceError, Step};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InterchangeError {
    #[error("tensor of objects ({0},{1}) missing")]
    MissingObjTensor(ObjId, ObjId),
    #[error("tensor of vertices ({0},{1}) missing")]
    MissingVertexTensor(VertexId, VertexId),
    #[error("whiskering of ({0:?},{1:?}) missing")]
    MissingWhisker(String, String),
    #[error("tensor {0} of marked morphisms is not marked")]
    TensorNotMarked(VertexId),
    #[error("paths do not chain: {0}")]
    Chain(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Cat(#[from] crate::enriched::CatError),
    #[error(transparent)]
    PathObj(#[from] crate::pathobj::PathObjError),
}

/// An enriched category with a strict tensor on objects and hom vertices and
/// whiskering actions of vertices on hom edges.
///
/// Vertex identifiers must be unique across all hom graphs of the category;
/// the tensor and whiskering tables are keyed by bare vertex and edge names.
#[derive(Debug, Clone, Default)]
pub struct MonoidalEnrichedCat {
    pub cat: EnrichedCat,
    pub obj_tensor: BTreeMap<(ObjId, ObjId), ObjId>,
    pub vertex_tensor: BTreeMap<(VertexId, VertexId), VertexId>,
    /// edge (x) vertex
    pub whisker_edge_vertex: BTreeMap<(EdgeId, VertexId), EdgeImage>,
    /// vertex (x) edge
    pub whisker_vertex_edge: BTreeMap<(VertexId, EdgeId), EdgeImage>,
    pub unit: Option<ObjId>,
}

/// A Moore path together with the hom graph it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPath {
    pub src: ObjId,
    pub tgt: ObjId,
    pub path: MoorePath,
}

impl MonoidalEnrichedCat {
    pub fn obj_tensor(&self, a: &ObjId, b: &ObjId) -> Result<ObjId, InterchangeError> {
        self.obj_tensor
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| InterchangeError::MissingObjTensor(a.clone(), b.clone()))
    }

    pub fn vertex_tensor(&self, u: &VertexId, v: &VertexId) -> Result<VertexId, InterchangeError> {
        self.vertex_tensor
            .get(&(u.clone(), v.clone()))
            .cloned()
            .ok_or_else(|| InterchangeError::MissingVertexTensor(u.clone(), v.clone()))
    }

    fn whisker_ev(&self, e: &EdgeId, v: &VertexId) -> Result<EdgeImage, InterchangeError> {
        self.whisker_edge_vertex
            .get(&(e.clone(), v.clone()))
            .cloned()
            .ok_or_else(|| InterchangeError::MissingWhisker(e.to_string(), v.to_string()))
    }

    fn whisker_ve(&self, v: &VertexId, e: &EdgeId) -> Result<EdgeImage, InterchangeError> {
        self.whisker_vertex_edge
            .get(&(v.clone(), e.clone()))
            .cloned()
            .ok_or_else(|| InterchangeError::MissingWhisker(v.to_string(), e.to_string()))
    }

    /// The hom graph that `left (x) right` paths land in.
    pub fn tensor_hom(
        &self,
        left: (&ObjId, &ObjId),
        right: (&ObjId, &ObjId),
    ) -> Result<(ObjId, ObjId), InterchangeError> {
        Ok((
            self.obj_tensor(left.0, right.0)?,
            self.obj_tensor(left.1, right.1)?,
        ))
    }
}

/// Why a pointwise tensor of paths did not exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimultaneousTraversal {
    #[serde(with = "crate::rat")]
    pub at: Rat,
}

/// Outcome of [`odot_paths`]: the tensor path, or the obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OdotOutcome {
    Path(HomPath),
    Failed(SimultaneousTraversal),
}

impl OdotOutcome {
    pub fn path(&self) -> Option<&HomPath> {
        match self {
            OdotOutcome::Path(p) => Some(p),
            OdotOutcome::Failed(_) => None,
        }
    }
}

struct OdotScan<'a> {
    space: &'a GraphSpace,
    steps: std::slice::Iter<'a, Step>,
    current: Option<(Step, Rat)>,
    at: VertexId,
}

impl<'a> OdotScan<'a> {
    fn new(space: &'a GraphSpace, p: &'a MoorePath) -> Self {
        let mut s = OdotScan {
            space,
            steps: p.steps.iter(),
            current: None,
            at: p.start.clone(),
        };
        s.fill();
        s
    }

    fn fill(&mut self) {
        if self.current.is_none() {
            self.current = self.steps.next().map(|s| (s.clone(), s.dur().clone()));
        }
    }

    fn consume(&mut self, d: &Rat) -> Result<(), SpaceError> {
        if let Some((step, rem)) = self.current.as_mut() {
            match step {
                Step::Dwell { .. } => *rem -= d.clone(),
                Step::Traverse { edge, dir, dur } => {
                    debug_assert_eq!(d, &*dur);
                    let (_, to) = self.space.edge_endpoints(edge, *dir)?;
                    self.at = to;
                    *rem = Rat::zero();
                }
            }
            if self.current.as_ref().is_some_and(|(_, r)| r.is_zero()) {
                self.current = None;
                self.fill();
            }
        }
        Ok(())
    }
}

/// Pointwise tensor of two Moore paths: `result(t) = left(t) (x) right(t)`.
///
/// The synchronized refinement runs to the larger of the two lengths; the
/// shorter path dwells at its endpoint from its length onward. On each
/// refined segment at most one side may traverse (whiskered through the
/// tensor); two simultaneous traversals are the obstruction and produce a
/// failure, not an error.
pub fn odot_paths(
    m: &MonoidalEnrichedCat,
    left: &HomPath,
    right: &HomPath,
) -> Result<OdotOutcome, InterchangeError> {
    let lspace = m.cat.hom(&left.src, &left.tgt);
    let rspace = m.cat.hom(&right.src, &right.tgt);
    let l = normalize(lspace, &left.path)?;
    let r = normalize(rspace, &right.path)?;
    let (tx, ty) = m.tensor_hom((&left.src, &left.tgt), (&right.src, &right.tgt))?;
    let tspace = m.cat.hom(&tx, &ty);

    let mut sl = OdotScan::new(lspace, &l);
    let mut sr = OdotScan::new(rspace, &r);
    let start = m.vertex_tensor(&l.start, &r.start)?;
    let mut steps: Vec<Step> = Vec::new();
    let mut now = Rat::zero();

    loop {
        match (sl.current.clone(), sr.current.clone()) {
            (None, None) => break,
            (Some((Step::Dwell { .. }, ra)), Some((Step::Dwell { .. }, rb))) => {
                let d = ra.min(rb);
                steps.push(Step::Dwell {
                    at: m.vertex_tensor(&sl.at, &sr.at)?,
                    dur: d.clone(),
                });
                sl.consume(&d)?;
                sr.consume(&d)?;
                now += d;
            }
            (Some((Step::Dwell { .. }, ra)), None) => {
                steps.push(Step::Dwell {
                    at: m.vertex_tensor(&sl.at, &sr.at)?,
                    dur: ra.clone(),
                });
                sl.consume(&ra)?;
                now += ra;
            }
            (None, Some((Step::Dwell { .. }, rb))) => {
                steps.push(Step::Dwell {
                    at: m.vertex_tensor(&sl.at, &sr.at)?,
                    dur: rb.clone(),
                });
                sr.consume(&rb)?;
                now += rb;
            }
            (Some((Step::Traverse { edge, dir, dur }, _)), other) => {
                // the other side must be dwelling (or exhausted) for the
                // whole traversal
                let available = match &other {
                    None => None, // exhausted: dwells forever
                    Some((Step::Dwell { .. }, rb)) => Some(rb.clone()),
                    Some((Step::Traverse { .. }, _)) => {
                        return Ok(OdotOutcome::Failed(SimultaneousTraversal { at: now }))
                    }
                };
                if let Some(avail) = &available {
                    if avail < &dur {
                        return Ok(OdotOutcome::Failed(SimultaneousTraversal {
                            at: now + avail.clone(),
                        }));
                    }
                }
                let img = m.whisker_ev(&edge, &sr.at)?;
                push_whiskered(&mut steps, tspace, &img, dir, &dur, |mm| {
                    mm.vertex_tensor(&sl_end_vertex(lspace, &edge, dir)?, &sr.at)
                }, m)?;
                sl.consume(&dur)?;
                sr.consume(&dur)?;
                now += dur;
            }
            (other, Some((Step::Traverse { edge, dir, dur }, _))) => {
                let available = match &other {
                    None => None,
                    Some((Step::Dwell { .. }, ra)) => Some(ra.clone()),
                    Some((Step::Traverse { .. }, _)) => unreachable!("handled above"),
                };
                if let Some(avail) = &available {
                    if avail < &dur {
                        return Ok(OdotOutcome::Failed(SimultaneousTraversal {
                            at: now + avail.clone(),
                        }));
                    }
                }
                let img = m.whisker_ve(&sl.at, &edge)?;
                push_whiskered(&mut steps, tspace, &img, dir, &dur, |mm| {
                    mm.vertex_tensor(&sl.at, &sl_end_vertex(rspace, &edge, dir)?)
                }, m)?;
                sl.consume(&dur)?;
                sr.consume(&dur)?;
                now += dur;
            }
        }
    }

    let path = normalize(tspace, &MoorePath { start, steps })?;
    Ok(OdotOutcome::Path(HomPath {
        src: tx,
        tgt: ty,
        path,
    }))
}

fn sl_end_vertex(space: &GraphSpace, edge: &EdgeId, dir: Dir) -> Result<VertexId, InterchangeError> {
    Ok(space.edge_endpoints(edge, dir)?.1)
}

fn push_whiskered(
    steps: &mut Vec<Step>,
    tspace: &GraphSpace,
    img: &EdgeImage,
    dir: Dir,
    dur: &Rat,
    collapse_vertex: impl FnOnce(&MonoidalEnrichedCat) -> Result<VertexId, InterchangeError>,
    m: &MonoidalEnrichedCat,
) -> Result<(), InterchangeError> {
    match img {
        EdgeImage::Edge { to, rev } => {
            let dir = if *rev { dir.flip() } else { dir };
            // sanity: the image edge must exist in the tensor hom
            tspace
                .edge(to)
                .ok_or_else(|| InterchangeError::MissingWhisker(to.to_string(), String::new()))?;
            steps.push(Step::Traverse {
                edge: to.clone(),
                dir,
                dur: dur.clone(),
            });
        }
        EdgeImage::Collapse => {
            steps.push(Step::Dwell {
                at: collapse_vertex(m)?,
                dur: dur.clone(),
            });
        }
    }
    Ok(())
}

/// Structural invariants of the monoidal enrichment: totality and typing of
/// the tensor tables, identity tensor, interchange on vertices, valid
/// whiskering graph maps, and closure of the marked class under tensor.
pub fn validate_monoidal(m: &MonoidalEnrichedCat) -> Report {
    let mut report = Report::default();
    let cat = &m.cat;
    // vertex ids must be globally unique for the bare-name tables
    {
        let mut seen: BTreeMap<&VertexId, (&ObjId, &ObjId)> = BTreeMap::new();
        for ((x, y), hom) in &cat.homs {
            for v in &hom.vertices {
                if let Some((px, py)) = seen.insert(v, (x, y)) {
                    report.push(
                        "vertex-name-collision",
                        format!("{v} in hom({px},{py}) and hom({x},{y})"),
                    );
                }
            }
        }
    }
    for a in &cat.objects {
        for b in &cat.objects {
            if m.obj_tensor(a, b).is_err() {
                report.push("obj-tensor-missing", format!("({a},{b})"));
            } else if !cat.objects.contains(&m.obj_tensor(a, b).unwrap()) {
                report.push("obj-tensor-unknown", format!("({a},{b})"));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let homs: Vec<(&ObjId, &ObjId, &GraphSpace)> =
        cat.homs.iter().map(|((x, y), h)| (x, y, h)).collect();
    for (x1, y1, h1) in &homs {
        for (x2, y2, h2) in &homs {
            let tx = m.obj_tensor(x1, x2).unwrap();
            let ty = m.obj_tensor(y1, y2).unwrap();
            let thom = cat.hom(&tx, &ty);
            for u in &h1.vertices {
                for v in &h2.vertices {
                    match m.vertex_tensor(u, v) {
                        Err(_) => report.push("vertex-tensor-missing", format!("({u},{v})")),
                        Ok(w) => {
                            if !thom.has_vertex(&w) {
                                report.push(
                                    "vertex-tensor-ill-typed",
                                    format!("({u},{v}) -> {w} not in hom({tx},{ty})"),
                                );
                            }
                        }
                    }
                }
            }
            // whiskering graph maps
            for u in &h1.vertices {
                let map = whisker_map_ve(m, u, h2);
                match map {
                    Err(e) => report.push("whisker-missing", e.to_string()),
                    Ok(gm) => {
                        if let Err(e) = gm.check(h2, thom) {
                            report.push("whisker-ill-formed", format!("{u} (x) -: {e}"));
                        }
                    }
                }
            }
            for v in &h2.vertices {
                let map = whisker_map_ev(m, h1, v);
                match map {
                    Err(e) => report.push("whisker-missing", e.to_string()),
                    Ok(gm) => {
                        if let Err(e) = gm.check(h1, thom) {
                            report.push("whisker-ill-formed", format!("- (x) {v}: {e}"));
                        }
                    }
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // identity tensor and interchange of tensor with composition on vertices
    for x in &cat.objects {
        for y in &cat.objects {
            let idx = &cat.identities[x];
            let idy = &cat.identities[y];
            let xy = m.obj_tensor(x, y).unwrap();
            if m.vertex_tensor(idx, idy).ok().as_ref() != cat.identities.get(&xy) {
                report.push("tensor-identity", format!("id_{x} (x) id_{y}"));
            }
        }
    }
    for (x1, y1, h1) in &homs {
        for (y1b, z1, k1) in &homs {
            if y1b != y1 {
                continue;
            }
            for (x2, y2, h2) in &homs {
                for (y2b, z2, k2) in &homs {
                    if y2b != y2 {
                        continue;
                    }
                    for f1 in &h1.vertices {
                        for g1 in &k1.vertices {
                            for f2 in &h2.vertices {
                                for g2 in &k2.vertices {
                                    let gf1 = cat.compose(x1, y1, z1, g1, f1).unwrap();
                                    let gf2 = cat.compose(x2, y2, z2, g2, f2).unwrap();
                                    let lhs = m.vertex_tensor(&gf1, &gf2).unwrap();
                                    let ff = m.vertex_tensor(f1, f2).unwrap();
                                    let gg = m.vertex_tensor(g1, g2).unwrap();
                                    let tx = m.obj_tensor(x1, x2).unwrap();
                                    let ty = m.obj_tensor(y1, y2).unwrap();
                                    let tz = m.obj_tensor(z1, z2).unwrap();
                                    let rhs = cat.compose(&tx, &ty, &tz, &gg, &ff).unwrap();
                                    if lhs != rhs {
                                        report.push(
                                            "vertex-interchange",
                                            format!("({g1}.{f1}) (x) ({g2}.{f2})"),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // marked class closed under tensor
    for (x1, y1, a) in &cat.weq {
        for (x2, y2, b) in &cat.weq {
            let ab = m.vertex_tensor(a, b).unwrap();
            let tx = m.obj_tensor(x1, x2).unwrap();
            let ty = m.obj_tensor(y1, y2).unwrap();
            if !cat.is_marked(&tx, &ty, &ab) {
                report.push("weq-tensor-not-marked", format!("{a} (x) {b} = {ab}"));
            }
        }
    }
    report
}

fn whisker_map_ve(
    m: &MonoidalEnrichedCat,
    u: &VertexId,
    domain: &GraphSpace,
) -> Result<GraphMap, InterchangeError> {
    let mut vertices = BTreeMap::new();
    for v in &domain.vertices {
        vertices.insert(v.clone(), m.vertex_tensor(u, v)?);
    }
    let mut edges = BTreeMap::new();
    for e in &domain.edges {
        edges.insert(e.id.clone(), m.whisker_ve(u, &e.id)?);
    }
    Ok(GraphMap { vertices, edges })
}

fn whisker_map_ev(
    m: &MonoidalEnrichedCat,
    domain: &GraphSpace,
    v: &VertexId,
) -> Result<GraphMap, InterchangeError> {
    let mut vertices = BTreeMap::new();
    for u in &domain.vertices {
        vertices.insert(u.clone(), m.vertex_tensor(u, v)?);
    }
    let mut edges = BTreeMap::new();
    for e in &domain.edges {
        edges.insert(e.id.clone(), m.whisker_ev(&e.id, v)?);
    }
    Ok(GraphMap { vertices, edges })
}

/// Tensor of path-object objects: `(x -> y) (.) (x' -> y') = x(x)x' -> y(x)y'`.
pub fn odot_objects(
    m: &MonoidalEnrichedCat,
    a: &PObject,
    b: &PObject,
) -> Result<PObject, InterchangeError> {
    let x = m.obj_tensor(&a.x, &b.x)?;
    let y = m.obj_tensor(&a.y, &b.y)?;
    let v = m.vertex_tensor(&a.a, &b.a)?;
    if !m.cat.is_marked(&x, &y, &v) {
        return Err(InterchangeError::TensorNotMarked(v));
    }
    Ok(PObject { x, y, a: v })
}

/// Tensor of path-object morphisms, when the pointwise tensor of the two
/// homotopies exists.
pub fn odot_morphisms(
    m: &MonoidalEnrichedCat,
    m1: &PMorphism,
    m2: &PMorphism,
) -> Result<Result<PMorphism, SimultaneousTraversal>, InterchangeError> {
    let src = odot_objects(m, &m1.src, &m2.src)?;
    let tgt = odot_objects(m, &m1.tgt, &m2.tgt)?;
    let f = m.vertex_tensor(&m1.f, &m2.f)?;
    let g = m.vertex_tensor(&m1.g, &m2.g)?;
    let left = HomPath {
        src: m1.src.x.clone(),
        tgt: m1.tgt.y.clone(),
        path: m1.path.clone(),
    };
    let right = HomPath {
        src: m2.src.x.clone(),
        tgt: m2.tgt.y.clone(),
        path: m2.path.clone(),
    };
    match odot_paths(m, &left, &right)? {
        OdotOutcome::Failed(f) => Ok(Err(f)),
        OdotOutcome::Path(p) => {
            let out = PMorphism {
                src,
                tgt,
                f,
                g,
                path: p.path,
            };
            crate::pathobj::validate_pmorphism(&m.cat, &out)?;
            Ok(Ok(out))
        }
    }
}

/// How a single interchange instance came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    /// Both sides defined, normal forms identical.
    Equal,
    /// Both sides defined, normal forms differ.
    Unequal,
    /// Only the right-hand side exists.
    LhsUndefined,
    /// Only the left-hand side exists.
    RhsUndefined,
    /// Neither side exists.
    BothUndefined,
}

/// Verdict of one interchange comparison, with the length bookkeeping of
/// both routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterchangeVerdict {
    pub verdict: VerdictKind,
    /// Length of (beta (.) beta') * (alpha (.) alpha'), when defined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_length: Option<String>,
    /// Length of (beta * alpha) (.) (beta' * alpha'), when defined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_length: Option<String>,
}

/// Compare `(beta (.) beta') after (alpha (.) alpha')` with
/// `(beta after alpha) (.) (beta' after alpha')` on normal forms.
///
/// `alpha` must chain into `beta` and `alpha'` into `beta'`.
pub fn check_interchange(
    m: &MonoidalEnrichedCat,
    alpha: &HomPath,
    beta: &HomPath,
    alpha2: &HomPath,
    beta2: &HomPath,
) -> Result<InterchangeVerdict, InterchangeError> {
    for (first, second, side) in [(alpha, beta, "left"), (alpha2, beta2, "right")] {
        let space = m.cat.hom(&first.src, &first.tgt);
        let (_, end) = crate::space::endpoints(space, &first.path)?;
        if end != second.path.start {
            return Err(InterchangeError::Chain(format!(
                "{side} side: stage one ends at {end}, stage two starts at {}",
                second.path.start
            )));
        }
    }
    let lhs = {
        let stage1 = odot_paths(m, alpha, alpha2)?;
        let stage2 = odot_paths(m, beta, beta2)?;
        match (stage1, stage2) {
            (OdotOutcome::Path(p1), OdotOutcome::Path(p2)) => {
                let space = m.cat.hom(&p1.src, &p1.tgt);
                Some(concat(space, &p1.path, &p2.path)?)
            }
            _ => None,
        }
    };
    let rhs = {
        let space1 = m.cat.hom(&alpha.src, &alpha.tgt);
        let space2 = m.cat.hom(&alpha2.src, &alpha2.tgt);
        let side1 = HomPath {
            src: alpha.src.clone(),
            tgt: alpha.tgt.clone(),
            path: concat(space1, &alpha.path, &beta.path)?,
        };
        let side2 = HomPath {
            src: alpha2.src.clone(),
            tgt: alpha2.tgt.clone(),
            path: concat(space2, &alpha2.path, &beta2.path)?,
        };
        odot_paths(m, &side1, &side2)?.path().map(|p| p.path.clone())
    };
    let verdict = match (&lhs, &rhs) {
        (Some(l), Some(r)) if l == r => VerdictKind::Equal,
        (Some(_), Some(_)) => VerdictKind::Unequal,
        (None, Some(_)) => VerdictKind::LhsUndefined,
        (Some(_), None) => VerdictKind::RhsUndefined,
        (None, None) => VerdictKind::BothUndefined,
    };
    Ok(InterchangeVerdict {
        verdict,
        lhs_length: lhs.as_ref().map(|p| rat_to_string(&p.length())),
        rhs_length: rhs.as_ref().map(|p| rat_to_string(&p.length())),
    })
}

/// Where interchange holds for the sweep patterns, derived from the pointwise
/// semantics rather than taken on authority:
///
/// * both stages tensor paths of matched lengths (`r = v` and `s = z`), or
/// * the first stages match and a second-stage path is constant
///   (`r = v` and `s = 0` or `z = 0`), or
/// * one whole side is constant (`r = 0, s = 0` or `v = 0, z = 0`).
///
/// The prediction is exact for sweep grids whose positive values stay below
/// ratio 4, which keeps the staggered traversal windows of the patterns
/// overlapping whenever `r != v` or `s != z`.
pub fn interchange_expected(r: &Rat, v: &Rat, s: &Rat, z: &Rat) -> bool {
    let zero = Rat::zero();
    (r == v && s == z)
        || (r == v && (*s == zero || *z == zero))
        || (*r == zero && *s == zero)
        || (*v == zero && *z == zero)
}

/// The shipped sweep grid.
pub fn default_grid() -> Vec<Rat> {
    vec![rat(0, 1), rat(1, 2), rat(1, 1), rat(3, 2)]
}

fn tvertex(i: usize) -> VertexId {
    VertexId::new(format!("v{}", i % 6))
}

fn tedge(i: usize) -> EdgeId {
    EdgeId::new(format!("E{}", i % 6))
}

fn s_obj() -> ObjId {
    ObjId::from("s")
}

fn hom_path(path: MoorePath) -> HomPath {
    HomPath {
        src: s_obj(),
        tgt: s_obj(),
        path,
    }
}

/// Sweep pattern, first stage of the left side: traversal windows at the
/// very start and very end of the interval.
pub fn sweep_alpha(m: &MonoidalEnrichedCat, r: &Rat) -> Result<HomPath, InterchangeError> {
    if r.is_zero() {
        let u = unit_path(m.cat.hom(&s_obj(), &s_obj()), &tvertex(2))?;
        return Ok(hom_path(u));
    }
    let q = r / rat(4, 1);
    Ok(hom_path(MoorePath {
        start: tvertex(0),
        steps: vec![
            Step::Traverse {
                edge: tedge(0),
                dir: Dir::Forward,
                dur: q.clone(),
            },
            Step::Dwell {
                at: tvertex(1),
                dur: &q * rat(2, 1),
            },
            Step::Traverse {
                edge: tedge(1),
                dir: Dir::Forward,
                dur: q,
            },
        ],
    }))
}

/// Second stage of the left side, continuing where the first stage ends.
pub fn sweep_beta(m: &MonoidalEnrichedCat, s: &Rat) -> Result<HomPath, InterchangeError> {
    if s.is_zero() {
        let u = unit_path(m.cat.hom(&s_obj(), &s_obj()), &tvertex(2))?;
        return Ok(hom_path(u));
    }
    let q = s / rat(4, 1);
    Ok(hom_path(MoorePath {
        start: tvertex(2),
        steps: vec![
            Step::Traverse {
                edge: tedge(2),
                dir: Dir::Forward,
                dur: q.clone(),
            },
            Step::Dwell {
                at: tvertex(3),
                dur: &q * rat(2, 1),
            },
            Step::Traverse {
                edge: tedge(3),
                dir: Dir::Forward,
                dur: q,
            },
        ],
    }))
}

/// First stage of the right side: a single traversal window in the middle.
pub fn sweep_alpha2(m: &MonoidalEnrichedCat, v: &Rat) -> Result<HomPath, InterchangeError> {
    if v.is_zero() {
        let u = unit_path(m.cat.hom(&s_obj(), &s_obj()), &tvertex(1))?;
        return Ok(hom_path(u));
    }
    let q = v / rat(4, 1);
    Ok(hom_path(MoorePath {
        start: tvertex(0),
        steps: vec![
            Step::Dwell {
                at: tvertex(0),
                dur: q.clone(),
            },
            Step::Traverse {
                edge: tedge(0),
                dir: Dir::Forward,
                dur: &q * rat(2, 1),
            },
            Step::Dwell {
                at: tvertex(1),
                dur: q,
            },
        ],
    }))
}

/// Second stage of the right side.
pub fn sweep_beta2(m: &MonoidalEnrichedCat, z: &Rat) -> Result<HomPath, InterchangeError> {
    if z.is_zero() {
        let u = unit_path(m.cat.hom(&s_obj(), &s_obj()), &tvertex(1))?;
        return Ok(hom_path(u));
    }
    let q = z / rat(4, 1);
    Ok(hom_path(MoorePath {
        start: tvertex(1),
        steps: vec![
            Step::Dwell {
                at: tvertex(1),
                dur: q.clone(),
            },
            Step::Traverse {
                edge: tedge(1),
                dir: Dir::Forward,
                dur: &q * rat(2, 1),
            },
            Step::Dwell {
                at: tvertex(2),
                dur: q,
            },
        ],
    }))
}

/// One cell of the sweep report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepCell {
    pub r: String,
    pub v: String,
    pub s: String,
    pub z: String,
    #[serde(flatten)]
    pub outcome: InterchangeVerdict,
    /// Whether the derived locus predicts equality here.
    pub matched_length_locus: bool,
}

/// The full sweep report: every cell of the grid, in lexicographic order,
/// with both the claimed and the derived locus stated up front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub grid: Vec<String>,
    /// The equality condition as stated by the source derivation.
    pub stated_locus: String,
    /// The condition the pointwise semantics actually yields.
    pub derived_locus: String,
    pub cells: Vec<SweepCell>,
    /// True when the computed verdicts equal the derived locus exactly.
    pub locus_matches_derivation: bool,
}

/// Run the four-length sweep over a grid.
pub fn interchange_sweep(
    m: &MonoidalEnrichedCat,
    grid: &[Rat],
) -> Result<SweepReport, InterchangeError> {
    let mut cells = Vec::new();
    let mut all_match = true;
    for r in grid {
        for v in grid {
            for s in grid {
                for z in grid {
                    let alpha = sweep_alpha(m, r)?;
                    let beta = sweep_beta(m, s)?;
                    let alpha2 = sweep_alpha2(m, v)?;
                    let beta2 = sweep_beta2(m, z)?;
                    let outcome = check_interchange(m, &alpha, &beta, &alpha2, &beta2)?;
                    let expected = interchange_expected(r, v, s, z);
                    if expected != (outcome.verdict == VerdictKind::Equal) {
                        all_match = false;
                    }
                    cells.push(SweepCell {
                        r: rat_to_string(r),
                        v: rat_to_string(v),
                        s: rat_to_string(s),
                        z: rat_to_string(z),
                        outcome,
                        matched_length_locus: expected,
                    });
                }
            }
        }
    }
    Ok(SweepReport {
        grid: grid.iter().map(rat_to_string).collect(),
        stated_locus: "r=s and z=v (as printed; the variable pairing reads as a typo)".into(),
        derived_locus:
            "r=v and s=z, plus degenerate cells where a stage or side is constant (see \
             interchange_expected)"
                .into(),
        cells,
        locus_matches_derivation: all_match,
    })
}

/// Result of the bounded counterexample search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lengths: Option<(String, String, String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictKind>,
}

/// Search bounded path-object morphism pairs for a violation of interchange:
/// the first length quadruple (in lexicographic grid order) where the two
/// composites exist and differ, or where exactly one of them exists.
///
/// With `equal_lengths_only` the search is restricted to stage-matched
/// quadruples, where no violation can occur.
pub fn bifunctor_counterexample(
    m: &MonoidalEnrichedCat,
    grid: &[Rat],
    equal_lengths_only: bool,
) -> Result<CounterexampleReport, InterchangeError> {
    for r in grid {
        for v in grid {
            if equal_lengths_only && r != v {
                continue;
            }
            for s in grid {
                for z in grid {
                    if equal_lengths_only && s != z {
                        continue;
                    }
                    let alpha = sweep_alpha(m, r)?;
                    let beta = sweep_beta(m, s)?;
                    let alpha2 = sweep_alpha2(m, v)?;
                    let beta2 = sweep_beta2(m, z)?;
                    // wrap the four paths as morphisms of P(C) with identity
                    // square components and compare the two composites there
                    let m_alpha = pmor_of(m, &alpha)?;
                    let m_beta = pmor_of(m, &beta)?;
                    let m_alpha2 = pmor_of(m, &alpha2)?;
                    let m_beta2 = pmor_of(m, &beta2)?;
                    let lhs = {
                        let t1 = odot_morphisms(m, &m_alpha, &m_alpha2)?;
                        let t2 = odot_morphisms(m, &m_beta, &m_beta2)?;
                        match (t1, t2) {
                            (Ok(a), Ok(b)) => crate::pathobj::p_compose(&m.cat, &b, &a).ok(),
                            _ => None,
                        }
                    };
                    let rhs = {
                        let c1 = crate::pathobj::p_compose(&m.cat, &m_beta, &m_alpha)?;
                        let c2 = crate::pathobj::p_compose(&m.cat, &m_beta2, &m_alpha2)?;
                        odot_morphisms(m, &c1, &c2)?.ok()
                    };
                    let violated = match (&lhs, &rhs) {
                        (Some(a), Some(b)) => a != b,
                        (None, None) => false,
                        _ => true,
                    };
                    if violated {
                        let verdict = match (&lhs, &rhs) {
                            (Some(_), Some(_)) => VerdictKind::Unequal,
                            (None, Some(_)) => VerdictKind::LhsUndefined,
                            (Some(_), None) => VerdictKind::RhsUndefined,
                            (None, None) => unreachable!(),
                        };
                        return Ok(CounterexampleReport {
                            found: true,
                            lengths: Some((
                                rat_to_string(r),
                                rat_to_string(v),
                                rat_to_string(s),
                                rat_to_string(z),
                            )),
                            verdict: Some(verdict),
                        });
                    }
                }
            }
        }
    }
    Ok(CounterexampleReport {
        found: false,
        lengths: None,
        verdict: None,
    })
}

/// Wrap a hom path as a morphism of P(C) with identity square components.
fn pmor_of(m: &MonoidalEnrichedCat, p: &HomPath) -> Result<PMorphism, InterchangeError> {
    let space = m.cat.hom(&p.src, &p.tgt);
    let (from, to) = crate::space::endpoints(space, &p.path)?;
    let src = crate::pathobj::make_object(&m.cat, &p.src, &p.tgt, &from)?;
    let tgt = crate::pathobj::make_object(&m.cat, &p.src, &p.tgt, &to)?;
    let out = PMorphism {
        src,
        tgt,
        f: m.cat.identity(&p.src)?.clone(),
        g: m.cat.identity(&p.tgt)?.clone(),
        path: p.path.clone(),
    };
    crate::pathobj::validate_pmorphism(&m.cat, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn monoidal_fixture_validates() {
        let m = fixtures::interchange_default();
        let report = validate_monoidal(&m);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn odot_with_unit_path_whiskers() {
        let m = fixtures::interchange_default();
        let alpha = sweep_alpha(&m, &rat(1, 1)).unwrap();
        let unit = hom_path(unit_path(m.cat.hom(&s_obj(), &s_obj()), &tvertex(0)).unwrap());
        let out = odot_paths(&m, &alpha, &unit).unwrap();
        let p = out.path().unwrap();
        assert_eq!(p.path.length(), rat(1, 1));
        // dwell-only against dwell-only gives a dwell of the max length
        let d1 = hom_path(MoorePath {
            start: tvertex(0),
            steps: vec![Step::Dwell {
                at: tvertex(0),
                dur: rat(1, 2),
            }],
        });
        let d2 = hom_path(MoorePath {
            start: tvertex(3),
            steps: vec![Step::Dwell {
                at: tvertex(3),
                dur: rat(2, 1),
            }],
        });
        let out = odot_paths(&m, &d1, &d2).unwrap();
        let p = out.path().unwrap();
        assert_eq!(p.path.length(), rat(2, 1));
        assert_eq!(p.path.steps.len(), 1);
    }

    #[test]
    fn overlapping_traversals_fail_odot() {
        let m = fixtures::interchange_default();
        let a = hom_path(MoorePath {
            start: tvertex(0),
            steps: vec![Step::Traverse {
                edge: tedge(0),
                dir: Dir::Forward,
                dur: rat(1, 1),
            }],
        });
        let b = hom_path(MoorePath {
            start: tvertex(2),
            steps: vec![Step::Traverse {
                edge: tedge(2),
                dir: Dir::Forward,
                dur: rat(2, 1),
            }],
        });
        let out = odot_paths(&m, &a, &b).unwrap();
        assert_eq!(
            out,
            OdotOutcome::Failed(SimultaneousTraversal { at: rat(0, 1) })
        );
    }

    #[test]
    fn matched_lengths_interchange() {
        let m = fixtures::interchange_default();
        let alpha = sweep_alpha(&m, &rat(1, 1)).unwrap();
        let beta = sweep_beta(&m, &rat(1, 1)).unwrap();
        let alpha2 = sweep_alpha2(&m, &rat(1, 1)).unwrap();
        let beta2 = sweep_beta2(&m, &rat(1, 1)).unwrap();
        let v = check_interchange(&m, &alpha, &beta, &alpha2, &beta2).unwrap();
        assert_eq!(v.verdict, VerdictKind::Equal);
        assert_eq!(v.lhs_length.as_deref(), Some("2"));
    }

    #[test]
    fn mismatched_first_stage_breaks_interchange() {
        let m = fixtures::interchange_default();
        let alpha = sweep_alpha(&m, &rat(1, 1)).unwrap();
        let beta = sweep_beta(&m, &rat(1, 1)).unwrap();
        let alpha2 = sweep_alpha2(&m, &rat(2, 1)).unwrap();
        let beta2 = sweep_beta2(&m, &rat(1, 1)).unwrap();
        let v = check_interchange(&m, &alpha, &beta, &alpha2, &beta2).unwrap();
        assert_ne!(v.verdict, VerdictKind::Equal);
    }

    #[test]
    fn degenerate_all_zero_is_equal() {
        let m = fixtures::interchange_default();
        let z = rat(0, 1);
        let v = check_interchange(
            &m,
            &sweep_alpha(&m, &z).unwrap(),
            &sweep_beta(&m, &z).unwrap(),
            &sweep_alpha2(&m, &z).unwrap(),
            &sweep_beta2(&m, &z).unwrap(),
        )
        .unwrap();
        assert_eq!(v.verdict, VerdictKind::Equal);
    }

    #[test]
    fn sweep_matches_derived_locus() {
        let m = fixtures::interchange_default();
        let report = interchange_sweep(&m, &default_grid()).unwrap();
        assert!(report.locus_matches_derivation);
        assert_eq!(report.cells.len(), 256);
        // the strict stage-matched cells are always equal
        for cell in &report.cells {
            if cell.r == cell.v && cell.s == cell.z {
                assert_eq!(cell.outcome.verdict, VerdictKind::Equal, "{cell:?}");
            }
        }
    }

    #[test]
    fn counterexample_found_unless_lengths_match() {
        let m = fixtures::interchange_default();
        let grid = [rat(0, 1), rat(1, 2), rat(1, 1)];
        let report = bifunctor_counterexample(&m, &grid, false).unwrap();
        assert!(report.found);
        let report = bifunctor_counterexample(&m, &grid, true).unwrap();
        assert!(!report.found);
        // only unit paths: no counterexample either
        let report = bifunctor_counterexample(&m, &[rat(0, 1)], false).unwrap();
        assert!(!report.found);
    }

    #[test]
    fn odot_objects_tensors_markings() {
        let m = fixtures::interchange_default();
        let a = crate::pathobj::make_object(&m.cat, &s_obj(), &s_obj(), &tvertex(1)).unwrap();
        let b = crate::pathobj::make_object(&m.cat, &s_obj(), &s_obj(), &tvertex(2)).unwrap();
        let ab = odot_objects(&m, &a, &b).unwrap();
        assert_eq!(ab.a, tvertex(3));
        // tensoring with the embedded identity is the identity on objects
        let i = crate::pathobj::i_embed(&m.cat, &s_obj()).unwrap();
        assert_eq!(odot_objects(&m, &a, &i).unwrap(), a);
    }
}
