//! The homotopy category of an enriched category.
//!
//! Hom-sets of [`HoCat`] are the connected components of the hom graphs, with
//! the induced composition. This is the level at which weak-equivalence
//! invertibility is decided.

use super::{CatError, EnrichedCat};
use crate::ids::{ObjId, VertexId};
use crate::rat::Rat;
use crate::space::{GraphSpace, MoorePath, Step};
use num_traits::One;
use std::collections::{BTreeMap, VecDeque};

/// Connected components of hom(x, y), as a sorted partition.
pub fn pi0_hom(cat: &EnrichedCat, x: &ObjId, y: &ObjId) -> Vec<Vec<VertexId>> {
    cat.hom(x, y).components()
}

/// The homotopy category: same objects, hom-sets the components of the hom
/// graphs, with the induced composition table.
#[derive(Debug, Clone)]
pub struct HoCat {
    pub objects: Vec<ObjId>,
    /// (x, y) -> partition of the vertices of hom(x, y).
    pub homs: BTreeMap<(ObjId, ObjId), Vec<Vec<VertexId>>>,
    /// vertex -> index of its class within its hom partition.
    class_index: BTreeMap<(ObjId, ObjId, VertexId), usize>,
    /// (x, y, z) -> (class in hom(y,z), class in hom(x,y)) -> class in hom(x,z).
    pub comp: BTreeMap<(ObjId, ObjId, ObjId), BTreeMap<(usize, usize), usize>>,
}

impl HoCat {
    pub fn class_of(&self, x: &ObjId, y: &ObjId, v: &VertexId) -> Option<usize> {
        self.class_index.get(&(x.clone(), y.clone(), v.clone())).copied()
    }

    pub fn hom_classes(&self, x: &ObjId, y: &ObjId) -> &[Vec<VertexId>] {
        self.homs
            .get(&(x.clone(), y.clone()))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn compose_classes(&self, x: &ObjId, y: &ObjId, z: &ObjId, g: usize, f: usize) -> Option<usize> {
        self.comp
            .get(&(x.clone(), y.clone(), z.clone()))
            .and_then(|t| t.get(&(g, f)))
            .copied()
    }

    /// True when the class is invertible: some class composes with it to the
    /// identity class on both sides.
    pub fn is_iso(&self, cat: &EnrichedCat, x: &ObjId, y: &ObjId, class: usize) -> bool {
        self.iso_inverse(cat, x, y, class).is_some()
    }

    pub fn iso_inverse(
        &self,
        cat: &EnrichedCat,
        x: &ObjId,
        y: &ObjId,
        class: usize,
    ) -> Option<usize> {
        let id_x = self.class_of(x, x, cat.identities.get(x)?)?;
        let id_y = self.class_of(y, y, cat.identities.get(y)?)?;
        let n = self.hom_classes(y, x).len();
        (0..n).find(|&g| {
            self.compose_classes(x, y, x, g, class) == Some(id_x)
                && self.compose_classes(y, x, y, class, g) == Some(id_y)
        })
    }
}

/// Build the homotopy category. Fails with a witness when composition is not
/// constant on components — impossible for a validated category, but checked
/// anyway since a failure here means the validator let something through.
pub fn homotopy_category(cat: &EnrichedCat) -> Result<HoCat, String> {
    let mut homs = BTreeMap::new();
    let mut class_index = BTreeMap::new();
    for x in &cat.objects {
        for y in &cat.objects {
            let classes = pi0_hom(cat, x, y);
            for (i, class) in classes.iter().enumerate() {
                for v in class {
                    class_index.insert((x.clone(), y.clone(), v.clone()), i);
                }
            }
            homs.insert((x.clone(), y.clone()), classes);
        }
    }
    let mut comp = BTreeMap::new();
    for x in &cat.objects {
        for y in &cat.objects {
            for z in &cat.objects {
                let gs = &homs[&(y.clone(), z.clone())];
                let fs = &homs[&(x.clone(), y.clone())];
                let mut table = BTreeMap::new();
                for (gi, gclass) in gs.iter().enumerate() {
                    for (fi, fclass) in fs.iter().enumerate() {
                        let mut value: Option<usize> = None;
                        for g in gclass {
                            for f in fclass {
                                let h = cat
                                    .compose(x, y, z, g, f)
                                    .map_err(|e| format!("composition not total: {e}"))?;
                                let hclass = class_index[&(x.clone(), z.clone(), h.clone())];
                                match value {
                                    None => value = Some(hclass),
                                    Some(prev) if prev != hclass => {
                                        return Err(format!(
                                            "composition not constant on components: \
                                             comp({g},{f}) lands in class {hclass}, expected {prev}"
                                        ));
                                    }
                                    Some(_) => {}
                                }
                            }
                        }
                        if let Some(v) = value {
                            table.insert((gi, fi), v);
                        }
                    }
                }
                comp.insert((x.clone(), y.clone(), z.clone()), table);
            }
        }
    }
    Ok(HoCat {
        objects: cat.objects.clone(),
        homs,
        class_index,
        comp,
    })
}

/// Breadth-first edge path between two vertices, as a Moore path with one
/// unit of time per edge. None when the vertices are not connected.
pub fn edge_path(space: &GraphSpace, from: &VertexId, to: &VertexId) -> Option<MoorePath> {
    if !space.has_vertex(from) || !space.has_vertex(to) {
        return None;
    }
    if from == to {
        return Some(MoorePath {
            start: from.clone(),
            steps: Vec::new(),
        });
    }
    let mut prev: BTreeMap<VertexId, Step> = BTreeMap::new();
    let mut queue = VecDeque::from([from.clone()]);
    let mut seen = std::collections::BTreeSet::from([from.clone()]);
    while let Some(v) = queue.pop_front() {
        for e in &space.edges {
            for (dir, a, b) in [
                (crate::space::Dir::Forward, &e.src, &e.tgt),
                (crate::space::Dir::Backward, &e.tgt, &e.src),
            ] {
                if a == &v && seen.insert(b.clone()) {
                    prev.insert(
                        b.clone(),
                        Step::Traverse {
                            edge: e.id.clone(),
                            dir,
                            dur: Rat::one(),
                        },
                    );
                    if b == to {
                        // reconstruct
                        let mut steps = Vec::new();
                        let mut cur = to.clone();
                        while cur != *from {
                            let step = prev[&cur].clone();
                            let Step::Traverse { ref edge, dir, .. } = step else {
                                unreachable!()
                            };
                            let (src, _) = space.edge_endpoints(edge, dir).ok()?;
                            steps.push(step);
                            cur = src;
                        }
                        steps.reverse();
                        return Some(MoorePath {
                            start: from.clone(),
                            steps,
                        });
                    }
                    queue.push_back(b.clone());
                }
            }
        }
    }
    None
}

/// Witness that a vertex is invertible in the homotopy category.
#[derive(Debug, Clone)]
pub struct Pi0IsoWitness {
    /// A vertex of hom(y, x) whose class inverts the class of f.
    pub inverse: VertexId,
    /// Edge path in hom(x, x) from inverse.f to the identity.
    pub to_id_src: MoorePath,
    /// Edge path in hom(y, y) from f.inverse to the identity.
    pub to_id_tgt: MoorePath,
}

/// Decide whether [f] is an isomorphism in the homotopy category; when it is,
/// return an inverse vertex together with connecting edge paths.
pub fn is_pi0_iso(
    cat: &EnrichedCat,
    x: &ObjId,
    y: &ObjId,
    f: &VertexId,
) -> Result<Option<Pi0IsoWitness>, CatError> {
    if !cat.hom(x, y).has_vertex(f) {
        return Err(CatError::UnknownHomVertex {
            x: x.clone(),
            y: y.clone(),
            vertex: f.clone(),
        });
    }
    let id_x = cat.identity(x)?.clone();
    let id_y = cat.identity(y)?.clone();
    let hom_xx = cat.hom(x, x);
    let hom_yy = cat.hom(y, y);
    for g in &cat.hom(y, x).vertices {
        let gf = cat.compose(x, y, x, g, f)?;
        let fg = cat.compose(y, x, y, f, g)?;
        let (Some(p), Some(q)) = (edge_path(hom_xx, &gf, &id_x), edge_path(hom_yy, &fg, &id_y))
        else {
            continue;
        };
        return Ok(Some(Pi0IsoWitness {
            inverse: g.clone(),
            to_id_src: p,
            to_id_tgt: q,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn obj(s: &str) -> ObjId {
        ObjId::from(s)
    }

    fn vx(s: &str) -> VertexId {
        VertexId::from(s)
    }

    #[test]
    fn discrete_hom_gives_singletons() {
        let cat = fixtures::walking_arrow();
        let classes = pi0_hom(&cat, &obj("x"), &obj("y"));
        assert_eq!(classes, vec![vec![vx("u")]]);
    }

    #[test]
    fn cylinder_hom_collapses_to_one_class() {
        let cat = fixtures::cylinder();
        let classes = pi0_hom(&cat, &obj("x"), &obj("y"));
        assert_eq!(classes.len(), 1);
        let ho = homotopy_category(&cat).unwrap();
        assert_eq!(ho.hom_classes(&obj("x"), &obj("y")).len(), 1);
    }

    #[test]
    fn hocat_composition_is_associative() {
        for cat in [fixtures::walking_weq(), fixtures::walking_arrow(), fixtures::cylinder()] {
            let ho = homotopy_category(&cat).unwrap();
            for x in &ho.objects {
                for y in &ho.objects {
                    for z in &ho.objects {
                        for w in &ho.objects {
                            for f in 0..ho.hom_classes(x, y).len() {
                                for g in 0..ho.hom_classes(y, z).len() {
                                    for h in 0..ho.hom_classes(z, w).len() {
                                        let gf = ho.compose_classes(x, y, z, g, f).unwrap();
                                        let hg = ho.compose_classes(y, z, w, h, g).unwrap();
                                        assert_eq!(
                                            ho.compose_classes(x, z, w, h, gf),
                                            ho.compose_classes(x, y, w, hg, f)
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

    #[test]
    fn identity_is_pi0_iso() {
        let cat = fixtures::walking_arrow();
        let w = is_pi0_iso(&cat, &obj("x"), &obj("x"), &vx("id_x"))
            .unwrap()
            .expect("identity invertible");
        assert_eq!(w.inverse, vx("id_x"));
        assert!(w.to_id_src.is_constant());
    }

    #[test]
    fn marked_weq_is_pi0_iso_with_edge_witness() {
        let cat = fixtures::walking_weq();
        let w = is_pi0_iso(&cat, &obj("x"), &obj("y"), &vx("a"))
            .unwrap()
            .expect("a invertible up to homotopy");
        assert_eq!(w.inverse, vx("b"));
        assert_eq!(w.to_id_src.steps.len(), 1);
        assert_eq!(w.to_id_tgt.steps.len(), 1);
    }

    #[test]
    fn walking_arrow_generator_is_not_pi0_iso() {
        let cat = fixtures::walking_arrow();
        assert!(is_pi0_iso(&cat, &obj("x"), &obj("y"), &vx("u"))
            .unwrap()
            .is_none());
    }
}
