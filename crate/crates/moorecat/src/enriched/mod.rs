//! Finitely presented enriched categories.
//!
//! An [`EnrichedCat`] has a finite object set, a [`GraphSpace`] of morphisms
//! for every ordered pair of objects, a strictly associative and unital
//! composition table on hom vertices, pre- and post-composition actions of
//! vertices on hom graphs, and a marked class `W` of weak equivalences.
//!
//! The actions are graph maps: a vertex goes to a vertex and an edge goes to
//! an edge (possibly reversed) or collapses onto a vertex. On vertices the
//! actions are forced to agree with the composition table, so only the edge
//! part is free data; the validator enforces agreement, functoriality and the
//! interchange of the two actions.

mod pi0;

pub use pi0::{edge_path, homotopy_category, is_pi0_iso, pi0_hom, HoCat, Pi0IsoWitness};

use crate::ids::{EdgeId, ObjId, VertexId};
use crate::space::{normalize, GraphSpace, MoorePath, SpaceError, Step};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatError {
    #[error("unknown object {0}")]
    UnknownObject(ObjId),
    #[error("vertex {vertex} not in hom({x},{y})")]
    UnknownHomVertex { x: ObjId, y: ObjId, vertex: VertexId },
    #[error("composite of {g} after {f} missing from the composition table")]
    MissingComposite { g: VertexId, f: VertexId },
    #[error("no action of {f} on hom edges toward {z} covers edge {edge}")]
    MissingActionEdge { f: VertexId, z: ObjId, edge: EdgeId },
    #[error("vertex {0} not found in any hom graph")]
    VertexNotFound(VertexId),
    #[error("vertex {0} is ambiguous across hom graphs; qualify it with its hom pair")]
    VertexAmbiguous(VertexId),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Image of an edge under a graph map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeImage {
    /// Maps onto an edge, possibly orientation-reversed.
    #[serde(rename = "edge")]
    Edge { to: EdgeId, rev: bool },
    /// Collapses onto the common image of its endpoints.
    #[serde(rename = "collapse")]
    Collapse,
}

/// A map of graphs: vertices to vertices, edges to edges-or-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMap {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeImage>,
}

impl GraphMap {
    pub fn identity(space: &GraphSpace) -> GraphMap {
        GraphMap {
            vertices: space
                .vertices
                .iter()
                .map(|v| (v.clone(), v.clone()))
                .collect(),
            edges: space
                .edges
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        EdgeImage::Edge {
                            to: e.id.clone(),
                            rev: false,
                        },
                    )
                })
                .collect(),
        }
    }

    /// Composite graph map: `self` first, then `other`. Both maps must be
    /// well-formed over matching graphs.
    pub fn then(&self, other: &GraphMap) -> GraphMap {
        let vertices = self
            .vertices
            .iter()
            .map(|(v, img)| {
                let img2 = other
                    .vertices
                    .get(img)
                    .expect("composite of checked graph maps")
                    .clone();
                (v.clone(), img2)
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|(e, img)| {
                let composed = match img {
                    EdgeImage::Collapse => EdgeImage::Collapse,
                    EdgeImage::Edge { to, rev } => {
                        match other.edges.get(to).expect("composite of checked graph maps") {
                            EdgeImage::Collapse => EdgeImage::Collapse,
                            EdgeImage::Edge { to: to2, rev: rev2 } => EdgeImage::Edge {
                                to: to2.clone(),
                                rev: rev ^ rev2,
                            },
                        }
                    }
                };
                (e.clone(), composed)
            })
            .collect();
        GraphMap { vertices, edges }
    }

    /// Check that this is a well-formed map `domain -> codomain`.
    pub fn check(&self, domain: &GraphSpace, codomain: &GraphSpace) -> Result<(), String> {
        for v in &domain.vertices {
            let img = self
                .vertices
                .get(v)
                .ok_or_else(|| format!("vertex {v} has no image"))?;
            if !codomain.has_vertex(img) {
                return Err(format!("vertex {v} maps to unknown vertex {img}"));
            }
        }
        for e in &domain.edges {
            let img = self
                .edges
                .get(&e.id)
                .ok_or_else(|| format!("edge {} has no image", e.id))?;
            let (src_img, tgt_img) = (&self.vertices[&e.src], &self.vertices[&e.tgt]);
            match img {
                EdgeImage::Collapse => {
                    if src_img != tgt_img {
                        return Err(format!(
                            "edge {} collapses but its endpoints map to {} and {}",
                            e.id, src_img, tgt_img
                        ));
                    }
                }
                EdgeImage::Edge { to, rev } => {
                    let Some(target) = codomain.edge(to) else {
                        return Err(format!("edge {} maps to unknown edge {to}", e.id));
                    };
                    let (want_src, want_tgt) = if *rev {
                        (&target.tgt, &target.src)
                    } else {
                        (&target.src, &target.tgt)
                    };
                    if src_img != want_src || tgt_img != want_tgt {
                        return Err(format!(
                            "edge {} maps to {to} but endpoint images do not match",
                            e.id
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Push a Moore path forward, step by step. A traversal over a collapsed
    /// edge becomes a dwell of the same duration, so length is preserved.
    pub fn apply_path(
        &self,
        domain: &GraphSpace,
        codomain: &GraphSpace,
        p: &MoorePath,
    ) -> Result<MoorePath, SpaceError> {
        crate::space::validate_path(domain, p)?;
        let start = self
            .vertices
            .get(&p.start)
            .ok_or_else(|| SpaceError::UnknownVertex(p.start.clone()))?
            .clone();
        let mut at = start.clone();
        let mut steps = Vec::with_capacity(p.steps.len());
        for step in &p.steps {
            match step {
                Step::Dwell { dur, .. } => steps.push(Step::Dwell {
                    at: at.clone(),
                    dur: dur.clone(),
                }),
                Step::Traverse { edge, dir, dur } => {
                    let img = self
                        .edges
                        .get(edge)
                        .ok_or_else(|| SpaceError::UnknownEdge(edge.clone()))?;
                    match img {
                        EdgeImage::Collapse => steps.push(Step::Dwell {
                            at: at.clone(),
                            dur: dur.clone(),
                        }),
                        EdgeImage::Edge { to, rev } => {
                            let dir = if *rev { dir.flip() } else { *dir };
                            let (_, end) = codomain.edge_endpoints(to, dir)?;
                            steps.push(Step::Traverse {
                                edge: to.clone(),
                                dir,
                                dur: dur.clone(),
                            });
                            at = end;
                        }
                    }
                }
            }
        }
        normalize(codomain, &MoorePath { start, steps })
    }
}

/// A marked weak equivalence: a vertex of hom(x, y).
pub type WeqMark = (ObjId, ObjId, VertexId);

/// A finitely presented enriched category.
#[derive(Debug, Clone, Default)]
pub struct EnrichedCat {
    pub objects: Vec<ObjId>,
    /// hom graphs; a missing entry means the empty graph.
    pub homs: BTreeMap<(ObjId, ObjId), GraphSpace>,
    pub identities: BTreeMap<ObjId, VertexId>,
    /// (x, y, z) -> ((g in hom(y,z), f in hom(x,y)) -> g.f in hom(x,z))
    pub comp: BTreeMap<(ObjId, ObjId, ObjId), BTreeMap<(VertexId, VertexId), VertexId>>,
    /// Edge part of f^*: hom(x', z) -> hom(x, z), keyed (x, x', f, z).
    pub pre_edges: BTreeMap<(ObjId, ObjId, VertexId, ObjId), BTreeMap<EdgeId, EdgeImage>>,
    /// Edge part of g_*: hom(w, y') -> hom(w, z'), keyed (y', z', g, w).
    pub post_edges: BTreeMap<(ObjId, ObjId, VertexId, ObjId), BTreeMap<EdgeId, EdgeImage>>,
    pub weq: BTreeSet<WeqMark>,
}

fn empty_space() -> &'static GraphSpace {
    static EMPTY: OnceLock<GraphSpace> = OnceLock::new();
    EMPTY.get_or_init(GraphSpace::default)
}

impl EnrichedCat {
    pub fn hom(&self, x: &ObjId, y: &ObjId) -> &GraphSpace {
        self.homs
            .get(&(x.clone(), y.clone()))
            .unwrap_or_else(|| empty_space())
    }

    pub fn identity(&self, x: &ObjId) -> Result<&VertexId, CatError> {
        self.identities
            .get(x)
            .ok_or_else(|| CatError::UnknownObject(x.clone()))
    }

    /// g.f for f: x -> y and g: y -> z (vertices of the respective homs).
    pub fn compose(
        &self,
        x: &ObjId,
        y: &ObjId,
        z: &ObjId,
        g: &VertexId,
        f: &VertexId,
    ) -> Result<VertexId, CatError> {
        self.comp
            .get(&(x.clone(), y.clone(), z.clone()))
            .and_then(|t| t.cloned_get(g, f))
            .ok_or_else(|| CatError::MissingComposite {
                g: g.clone(),
                f: f.clone(),
            })
    }

    pub fn is_marked(&self, x: &ObjId, y: &ObjId, v: &VertexId) -> bool {
        self.weq.contains(&(x.clone(), y.clone(), v.clone()))
    }

    /// Locate a vertex by bare name across all hom graphs.
    pub fn find_vertex(&self, v: &VertexId) -> Result<(ObjId, ObjId), CatError> {
        let mut found = None;
        for ((x, y), hom) in &self.homs {
            if hom.has_vertex(v) {
                if found.is_some() {
                    return Err(CatError::VertexAmbiguous(v.clone()));
                }
                found = Some((x.clone(), y.clone()));
            }
        }
        found.ok_or_else(|| CatError::VertexNotFound(v.clone()))
    }

    /// The graph map f^*: hom(x', z) -> hom(x, z) for f a vertex of hom(x, x').
    pub fn pre_map(
        &self,
        x: &ObjId,
        xp: &ObjId,
        f: &VertexId,
        z: &ObjId,
    ) -> Result<GraphMap, CatError> {
        let domain = self.hom(xp, z);
        let mut vertices = BTreeMap::new();
        for u in &domain.vertices {
            vertices.insert(u.clone(), self.compose(x, xp, z, u, f)?);
        }
        let table = self
            .pre_edges
            .get(&(x.clone(), xp.clone(), f.clone(), z.clone()));
        let mut edges = BTreeMap::new();
        for e in &domain.edges {
            let img = table.and_then(|t| t.get(&e.id)).ok_or_else(|| {
                CatError::MissingActionEdge {
                    f: f.clone(),
                    z: z.clone(),
                    edge: e.id.clone(),
                }
            })?;
            edges.insert(e.id.clone(), img.clone());
        }
        Ok(GraphMap { vertices, edges })
    }

    /// The graph map g_*: hom(w, y') -> hom(w, z') for g a vertex of hom(y', z').
    pub fn post_map(
        &self,
        yp: &ObjId,
        zp: &ObjId,
        g: &VertexId,
        w: &ObjId,
    ) -> Result<GraphMap, CatError> {
        let domain = self.hom(w, yp);
        let mut vertices = BTreeMap::new();
        for u in &domain.vertices {
            vertices.insert(u.clone(), self.compose(w, yp, zp, g, u)?);
        }
        let table = self
            .post_edges
            .get(&(yp.clone(), zp.clone(), g.clone(), w.clone()));
        let mut edges = BTreeMap::new();
        for e in &domain.edges {
            let img = table.and_then(|t| t.get(&e.id)).ok_or_else(|| {
                CatError::MissingActionEdge {
                    f: g.clone(),
                    z: w.clone(),
                    edge: e.id.clone(),
                }
            })?;
            edges.insert(e.id.clone(), img.clone());
        }
        Ok(GraphMap { vertices, edges })
    }

    /// Pre-composition action on paths: f . p for p in hom(x', z).
    pub fn act_pre(
        &self,
        x: &ObjId,
        xp: &ObjId,
        f: &VertexId,
        z: &ObjId,
        p: &MoorePath,
    ) -> Result<MoorePath, CatError> {
        let map = self.pre_map(x, xp, f, z)?;
        Ok(map.apply_path(self.hom(xp, z), self.hom(x, z), p)?)
    }

    /// Post-composition action on paths: g . p for p in hom(w, y').
    pub fn act_post(
        &self,
        yp: &ObjId,
        zp: &ObjId,
        g: &VertexId,
        w: &ObjId,
        p: &MoorePath,
    ) -> Result<MoorePath, CatError> {
        let map = self.post_map(yp, zp, g, w)?;
        Ok(map.apply_path(self.hom(w, yp), self.hom(w, zp), p)?)
    }
}

trait ClonedGet {
    fn cloned_get(&self, g: &VertexId, f: &VertexId) -> Option<VertexId>;
}

impl ClonedGet for BTreeMap<(VertexId, VertexId), VertexId> {
    fn cloned_get(&self, g: &VertexId, f: &VertexId) -> Option<VertexId> {
        self.get(&(g.clone(), f.clone())).cloned()
    }
}

pub use crate::report::{Report as ValidationReport, Violation};

/// Check every invariant of an enriched category, reporting each violation
/// with a witness. Later modules assume a category that validates cleanly.
pub fn validate(cat: &EnrichedCat) -> ValidationReport {
    let mut report = ValidationReport::default();
    structural(cat, &mut report);
    if !report.is_valid() {
        return report;
    }
    composition_laws(cat, &mut report);
    if !report.is_valid() {
        return report;
    }
    action_laws(cat, &mut report);
    weq_laws(cat, &mut report);
    report
}

fn structural(cat: &EnrichedCat, report: &mut ValidationReport) {
    let objset: BTreeSet<_> = cat.objects.iter().collect();
    if objset.len() != cat.objects.len() {
        report.push("duplicate-object", format!("{:?}", cat.objects));
    }
    for ((x, y), hom) in &cat.homs {
        if !objset.contains(x) || !objset.contains(y) {
            report.push("hom-unknown-object", format!("hom({x},{y})"));
        }
        if let Err(e) = hom.validate() {
            report.push("bad-hom-graph", format!("hom({x},{y}): {e}"));
        }
    }
    for x in &cat.objects {
        match cat.identities.get(x) {
            None => report.push("missing-identity", format!("object {x}")),
            Some(id) => {
                if !cat.hom(x, x).has_vertex(id) {
                    report.push("identity-not-a-vertex", format!("id({x}) = {id}"));
                }
            }
        }
    }
    // composition totality, with values in the right hom
    for x in &cat.objects {
        for y in &cat.objects {
            for z in &cat.objects {
                for g in &cat.hom(y, z).vertices {
                    for f in &cat.hom(x, y).vertices {
                        match cat.compose(x, y, z, g, f) {
                            Err(_) => report.push(
                                "missing-composite",
                                format!("comp({g}: {y}->{z}, {f}: {x}->{y})"),
                            ),
                            Ok(h) => {
                                if !cat.hom(x, z).has_vertex(&h) {
                                    report.push(
                                        "composite-outside-hom",
                                        format!("comp({g},{f}) = {h} not in hom({x},{z})"),
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

fn composition_laws(cat: &EnrichedCat, report: &mut ValidationReport) {
    for x in &cat.objects {
        for y in &cat.objects {
            let id_x = &cat.identities[x];
            let id_y = &cat.identities[y];
            for f in &cat.hom(x, y).vertices {
                if cat.compose(x, x, y, f, id_x).ok().as_ref() != Some(f) {
                    report.push("unit-law", format!("comp({f}, id_{x}) != {f}"));
                }
                if cat.compose(x, y, y, id_y, f).ok().as_ref() != Some(f) {
                    report.push("unit-law", format!("comp(id_{y}, {f}) != {f}"));
                }
            }
        }
    }
    for x in &cat.objects {
        for y in &cat.objects {
            for z in &cat.objects {
                for w in &cat.objects {
                    for f in &cat.hom(x, y).vertices {
                        for g in &cat.hom(y, z).vertices {
                            for h in &cat.hom(z, w).vertices {
                                let gf = cat.compose(x, y, z, g, f).unwrap();
                                let hg = cat.compose(y, z, w, h, g).unwrap();
                                let left = cat.compose(x, z, w, h, &gf).unwrap();
                                let right = cat.compose(x, y, w, &hg, f).unwrap();
                                if left != right {
                                    report.push(
                                        "associativity",
                                        format!(
                                            "h={h}, g={g}, f={f}: ({h}.{g}).{f} = {right} but {h}.({g}.{f}) = {left}"
                                        ),
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

fn action_laws(cat: &EnrichedCat, report: &mut ValidationReport) {
    // Well-formedness and identity actions.
    for x in &cat.objects {
        for xp in &cat.objects {
            for f in &cat.hom(x, xp).vertices {
                for z in &cat.objects {
                    match cat.pre_map(x, xp, f, z) {
                        Err(e) => report.push("missing-pre-action", format!("{f}^* toward {z}: {e}")),
                        Ok(map) => {
                            if let Err(e) = map.check(cat.hom(xp, z), cat.hom(x, z)) {
                                report.push("bad-pre-action", format!("{f}^* toward {z}: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    for yp in &cat.objects {
        for zp in &cat.objects {
            for g in &cat.hom(yp, zp).vertices {
                for w in &cat.objects {
                    match cat.post_map(yp, zp, g, w) {
                        Err(e) => report.push("missing-post-action", format!("{g}_* from {w}: {e}")),
                        Ok(map) => {
                            if let Err(e) = map.check(cat.hom(w, yp), cat.hom(w, zp)) {
                                report.push("bad-post-action", format!("{g}_* from {w}: {e}"));
                            }
                        }
                    }
                }
            }
        }
    }
    if !report.is_valid() {
        return;
    }
    for x in &cat.objects {
        let id = cat.identities[x].clone();
        for z in &cat.objects {
            let expect = GraphMap::identity(cat.hom(x, z));
            if cat.pre_map(x, x, &id, z).unwrap() != expect {
                report.push("identity-pre-action", format!("id_{x}^* toward {z}"));
            }
            let expect = GraphMap::identity(cat.hom(z, x));
            if cat.post_map(x, x, &id, z).unwrap() != expect {
                report.push("identity-post-action", format!("id_{x}_* from {z}"));
            }
        }
    }
    // Functoriality: (f'.f)^* = f^* after f'^*, and (g.g')_* = g_* after g'_*.
    for x in &cat.objects {
        for xp in &cat.objects {
            for xpp in &cat.objects {
                for f in &cat.hom(x, xp).vertices {
                    for fp in &cat.hom(xp, xpp).vertices {
                        let fpf = cat.compose(x, xp, xpp, fp, f).unwrap();
                        for z in &cat.objects {
                            let via = cat
                                .pre_map(xp, xpp, fp, z)
                                .unwrap()
                                .then(&cat.pre_map(x, xp, f, z).unwrap());
                            let direct = cat.pre_map(x, xpp, &fpf, z).unwrap();
                            if via != direct {
                                report.push(
                                    "pre-action-functoriality",
                                    format!("({fp}.{f})^* toward {z}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    for y in &cat.objects {
        for yp in &cat.objects {
            for zp in &cat.objects {
                for gp in &cat.hom(y, yp).vertices {
                    for g in &cat.hom(yp, zp).vertices {
                        let ggp = cat.compose(y, yp, zp, g, gp).unwrap();
                        for w in &cat.objects {
                            let via = cat
                                .post_map(y, yp, gp, w)
                                .unwrap()
                                .then(&cat.post_map(yp, zp, g, w).unwrap());
                            let direct = cat.post_map(y, zp, &ggp, w).unwrap();
                            if via != direct {
                                report.push(
                                    "post-action-functoriality",
                                    format!("({g}.{gp})_* from {w}"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    // Interchange of the two actions.
    for x in &cat.objects {
        for xp in &cat.objects {
            for f in &cat.hom(x, xp).vertices {
                for yp in &cat.objects {
                    for zp in &cat.objects {
                        for g in &cat.hom(yp, zp).vertices {
                            let pre_then_post = cat
                                .pre_map(x, xp, f, yp)
                                .unwrap()
                                .then(&cat.post_map(yp, zp, g, x).unwrap());
                            let post_then_pre = cat
                                .post_map(yp, zp, g, xp)
                                .unwrap()
                                .then(&cat.pre_map(x, xp, f, zp).unwrap());
                            if pre_then_post != post_then_pre {
                                report.push(
                                    "action-interchange",
                                    format!("{g}_* {f}^* != {f}^* {g}_* on hom({xp},{yp})"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

fn weq_laws(cat: &EnrichedCat, report: &mut ValidationReport) {
    for (x, y, v) in &cat.weq {
        if !cat.hom(x, y).has_vertex(v) {
            report.push("weq-unknown-vertex", format!("({x},{y},{v})"));
            return;
        }
    }
    for x in &cat.objects {
        let id = cat.identities[x].clone();
        if !cat.is_marked(x, x, &id) {
            report.push("weq-missing-identity", format!("id_{x}"));
        }
    }
    // closure under composition
    for (x, y, f) in &cat.weq {
        for (y2, z, g) in &cat.weq {
            if y2 != y {
                continue;
            }
            let gf = match cat.compose(x, y, z, g, f) {
                Ok(v) => v,
                Err(_) => continue,
            };
            if !cat.is_marked(x, z, &gf) {
                report.push(
                    "weq-not-closed",
                    format!("comp({g},{f}) = {gf} unmarked"),
                );
            }
        }
    }
    // constant on connected components
    for x in &cat.objects {
        for y in &cat.objects {
            for class in cat.hom(x, y).components() {
                let marked: Vec<_> = class.iter().filter(|v| cat.is_marked(x, y, v)).collect();
                if !marked.is_empty() && marked.len() != class.len() {
                    report.push(
                        "weq-not-component-constant",
                        format!("hom({x},{y}) component {class:?}"),
                    );
                }
            }
        }
    }
    if !report.is_valid() {
        return;
    }
    // invertibility in the homotopy category
    match homotopy_category(cat) {
        Err(e) => report.push("homotopy-category", e),
        Ok(_) => {
            for (x, y, v) in &cat.weq {
                if is_pi0_iso(cat, x, y, v).ok().flatten().is_none() {
                    report.push("weq-not-pi0-invertible", format!("({x},{y},{v})"));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::rat;
    use crate::space::{unit_path, Dir};

    fn obj(s: &str) -> ObjId {
        ObjId::from(s)
    }

    fn vx(s: &str) -> VertexId {
        VertexId::from(s)
    }

    #[test]
    fn one_object_identity_category_validates() {
        let cat = fixtures::one_object_identity();
        assert!(validate(&cat).is_valid(), "{}", validate(&cat));
    }

    #[test]
    fn walking_weq_validates() {
        let cat = fixtures::walking_weq();
        let report = validate(&cat);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn walking_arrow_validates() {
        let report = validate(&fixtures::walking_arrow());
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn cylinder_validates() {
        let report = validate(&fixtures::cylinder());
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn broken_associativity_is_named() {
        let mut cat = fixtures::walking_weq();
        // break comp(ab, ab) = ab
        let key = (obj("y"), obj("y"), obj("y"));
        cat.comp
            .get_mut(&key)
            .unwrap()
            .insert((vx("ab"), vx("ab")), vx("id_y"));
        let report = validate(&cat);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.code == "associativity"
            || v.code == "unit-law"
            || v.code == "pre-action-functoriality"
            || v.code == "post-action-functoriality"));
    }

    #[test]
    fn weq_closure_violation_is_named() {
        let mut cat = fixtures::walking_weq();
        cat.weq.remove(&(obj("x"), obj("x"), vx("ba")));
        let report = validate(&cat);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "weq-not-closed" || v.code == "weq-not-component-constant"));
    }

    #[test]
    fn act_pre_collapses_edge_to_dwell() {
        let cat = fixtures::walking_weq();
        // a^* sends the homotopy edge h_y to a dwell at a of the same length.
        let p = MoorePath {
            start: vx("ab"),
            steps: vec![Step::Traverse {
                edge: EdgeId::from("h_y"),
                dir: Dir::Forward,
                dur: rat(1, 1),
            }],
        };
        let q = cat
            .act_pre(&obj("x"), &obj("y"), &vx("a"), &obj("y"), &p)
            .unwrap();
        assert_eq!(q.length(), rat(1, 1));
        assert_eq!(
            q.steps,
            vec![Step::Dwell {
                at: vx("a"),
                dur: rat(1, 1)
            }]
        );
    }

    #[test]
    fn actions_send_identities_to_composites() {
        let cat = fixtures::walking_weq();
        let u = unit_path(cat.hom(&obj("y"), &obj("y")), &vx("id_y")).unwrap();
        let q = cat
            .act_pre(&obj("x"), &obj("y"), &vx("a"), &obj("y"), &u)
            .unwrap();
        assert_eq!(q, unit_path(cat.hom(&obj("x"), &obj("y")), &vx("a")).unwrap());
        let u = unit_path(cat.hom(&obj("x"), &obj("x")), &vx("id_x")).unwrap();
        let q = cat
            .act_post(&obj("x"), &obj("y"), &vx("a"), &obj("x"), &u)
            .unwrap();
        assert_eq!(q, unit_path(cat.hom(&obj("x"), &obj("y")), &vx("a")).unwrap());
    }
}
