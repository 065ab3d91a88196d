//! Programmatic constructions of the shipped fixtures.
//!
//! The JSON bundles under `fixtures/` are serialized from these constructions
//! and a test keeps them in sync, so tests can use either form.

use crate::enriched::{EdgeImage, EnrichedCat};
use crate::ids::{EdgeId, MorId, ObjId, VertexId};
use crate::monoidal::{FinCat, IsoPair, TensorData};
use crate::space::{Edge, GraphSpace};
use std::collections::BTreeMap;

pub(crate) struct CatBuilder {
    cat: EnrichedCat,
}

impl CatBuilder {
    pub fn new(objects: &[&str]) -> Self {
        CatBuilder {
            cat: EnrichedCat {
                objects: objects.iter().map(|o| ObjId::from(*o)).collect(),
                ..Default::default()
            },
        }
    }

    pub fn hom(mut self, x: &str, y: &str, vertices: &[&str], edges: &[(&str, &str, &str)]) -> Self {
        let space = GraphSpace::new(
            vertices.iter().map(|v| VertexId::from(*v)),
            edges.iter().map(|(id, src, tgt)| Edge {
                id: EdgeId::from(*id),
                src: VertexId::from(*src),
                tgt: VertexId::from(*tgt),
            }),
        );
        self.cat.homs.insert((ObjId::from(x), ObjId::from(y)), space);
        self
    }

    pub fn identity(mut self, x: &str, id: &str) -> Self {
        self.cat.identities.insert(ObjId::from(x), VertexId::from(id));
        self
    }

    pub fn comp(mut self, x: &str, y: &str, z: &str, g: &str, f: &str, h: &str) -> Self {
        self.cat
            .comp
            .entry((ObjId::from(x), ObjId::from(y), ObjId::from(z)))
            .or_default()
            .insert((VertexId::from(g), VertexId::from(f)), VertexId::from(h));
        self
    }

    pub fn pre_edge(mut self, x: &str, xp: &str, f: &str, z: &str, edge: &str, img: EdgeImage) -> Self {
        self.cat
            .pre_edges
            .entry((ObjId::from(x), ObjId::from(xp), VertexId::from(f), ObjId::from(z)))
            .or_default()
            .insert(EdgeId::from(edge), img);
        self
    }

    pub fn post_edge(mut self, yp: &str, zp: &str, g: &str, w: &str, edge: &str, img: EdgeImage) -> Self {
        self.cat
            .post_edges
            .entry((ObjId::from(yp), ObjId::from(zp), VertexId::from(g), ObjId::from(w)))
            .or_default()
            .insert(EdgeId::from(edge), img);
        self
    }

    pub fn mark(mut self, x: &str, y: &str, v: &str) -> Self {
        self.cat
            .weq
            .insert((ObjId::from(x), ObjId::from(y), VertexId::from(v)));
        self
    }

    /// The composites and actions forced by the unit laws are filled in
    /// automatically: comp with an identity, and the identity action maps.
    pub fn build(mut self) -> EnrichedCat {
        let objects = self.cat.objects.clone();
        for x in &objects {
            for y in &objects {
                let Some(id_x) = self.cat.identities.get(x).cloned() else {
                    continue;
                };
                let Some(id_y) = self.cat.identities.get(y).cloned() else {
                    continue;
                };
                let hom_vertices = self.cat.hom(x, y).vertices.clone();
                for f in hom_vertices {
                    self.cat
                        .comp
                        .entry((x.clone(), x.clone(), y.clone()))
                        .or_default()
                        .entry((f.clone(), id_x.clone()))
                        .or_insert_with(|| f.clone());
                    self.cat
                        .comp
                        .entry((x.clone(), y.clone(), y.clone()))
                        .or_default()
                        .entry((id_y.clone(), f.clone()))
                        .or_insert_with(|| f.clone());
                }
            }
        }
        for x in &objects {
            let Some(id_x) = self.cat.identities.get(x).cloned() else {
                continue;
            };
            for z in &objects {
                let identity_edges = |hom: &GraphSpace| -> BTreeMap<EdgeId, EdgeImage> {
                    hom.edges
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
                        .collect()
                };
                let pre = identity_edges(self.cat.hom(x, z));
                self.cat
                    .pre_edges
                    .entry((x.clone(), x.clone(), id_x.clone(), z.clone()))
                    .or_insert(pre);
                let post = identity_edges(self.cat.hom(z, x));
                self.cat
                    .post_edges
                    .entry((x.clone(), x.clone(), id_x.clone(), z.clone()))
                    .or_insert(post);
            }
        }
        self.cat
    }
}

/// One object, one (identity) morphism.
pub fn one_object_identity() -> EnrichedCat {
    CatBuilder::new(&["s"])
        .hom("s", "s", &["id"], &[])
        .identity("s", "id")
        .mark("s", "s", "id")
        .build()
}

/// Two objects and one non-invertible generator `u: x -> y`.
pub fn walking_arrow() -> EnrichedCat {
    CatBuilder::new(&["x", "y"])
        .hom("x", "x", &["id_x"], &[])
        .hom("x", "y", &["u"], &[])
        .hom("y", "x", &[], &[])
        .hom("y", "y", &["id_y"], &[])
        .identity("x", "id_x")
        .identity("y", "id_y")
        .mark("x", "x", "id_x")
        .mark("y", "y", "id_y")
        .build()
}

/// Two parallel points joined by a homotopy: hom(x, y) is a single edge.
pub fn cylinder() -> EnrichedCat {
    CatBuilder::new(&["x", "y"])
        .hom("x", "x", &["id_x"], &[])
        .hom("x", "y", &["u", "v"], &[("c", "u", "v")])
        .hom("y", "x", &[], &[])
        .hom("y", "y", &["id_y"], &[])
        .identity("x", "id_x")
        .identity("y", "id_y")
        .mark("x", "x", "id_x")
        .mark("y", "y", "id_y")
        .build()
}

/// The walking weak equivalence: a marked generator `a: x -> y` with a
/// two-sided homotopy inverse `b`, the composites `ba` and `ab` joined to the
/// identities by edges `h_x` and `h_y`.
pub fn walking_weq() -> EnrichedCat {
    CatBuilder::new(&["x", "y"])
        .hom("x", "x", &["id_x", "ba"], &[("h_x", "ba", "id_x")])
        .hom("x", "y", &["a"], &[])
        .hom("y", "x", &["b"], &[])
        .hom("y", "y", &["id_y", "ab"], &[("h_y", "ab", "id_y")])
        .identity("x", "id_x")
        .identity("y", "id_y")
        .comp("x", "x", "x", "ba", "ba", "ba")
        .comp("x", "x", "y", "a", "ba", "a")
        .comp("x", "y", "x", "b", "a", "ba")
        .comp("x", "y", "y", "ab", "a", "a")
        .comp("y", "x", "x", "ba", "b", "b")
        .comp("y", "x", "y", "a", "b", "ab")
        .comp("y", "y", "x", "b", "ab", "b")
        .comp("y", "y", "y", "ab", "ab", "ab")
        .pre_edge("x", "y", "a", "y", "h_y", EdgeImage::Collapse)
        .pre_edge("y", "x", "b", "x", "h_x", EdgeImage::Collapse)
        .pre_edge("x", "x", "ba", "x", "h_x", EdgeImage::Collapse)
        .pre_edge("y", "y", "ab", "y", "h_y", EdgeImage::Collapse)
        .post_edge("x", "y", "a", "x", "h_x", EdgeImage::Collapse)
        .post_edge("y", "x", "b", "y", "h_y", EdgeImage::Collapse)
        .post_edge("x", "x", "ba", "x", "h_x", EdgeImage::Collapse)
        .post_edge("y", "y", "ab", "y", "h_y", EdgeImage::Collapse)
        .mark("x", "x", "id_x")
        .mark("x", "x", "ba")
        .mark("x", "y", "a")
        .mark("y", "y", "id_y")
        .mark("y", "y", "ab")
        .build()
}

/// One object whose endomorphism space is a directed 6-cycle with rotation
/// composition: the enriched carrier for the interchange experiments.
pub fn interchange_cycle() -> EnrichedCat {
    let n = 6usize;
    let v = |i: usize| format!("v{}", i % n);
    let e = |i: usize| format!("E{}", i % n);
    let vertices: Vec<String> = (0..n).map(v).collect();
    let edges: Vec<(String, String, String)> = (0..n).map(|i| (e(i), v(i), v(i + 1))).collect();
    let mut b = CatBuilder::new(&["s"])
        .hom(
            "s",
            "s",
            &vertices.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            &edges
                .iter()
                .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
                .collect::<Vec<_>>(),
        )
        .identity("s", "v0");
    for i in 0..n {
        for j in 0..n {
            b = b.comp("s", "s", "s", &v(i), &v(j), &v(i + j));
        }
        for j in 0..n {
            // rotation by i on edges, both as pre- and post-action
            b = b.pre_edge(
                "s",
                "s",
                &v(i),
                "s",
                &e(j),
                EdgeImage::Edge {
                    to: EdgeId::new(e(j + i)),
                    rev: false,
                },
            );
            b = b.post_edge(
                "s",
                "s",
                &v(i),
                "s",
                &e(j),
                EdgeImage::Edge {
                    to: EdgeId::new(e(j + i)),
                    rev: false,
                },
            );
        }
        b = b.mark("s", "s", &v(i));
    }
    b.build()
}

/// The interchange fixture: the 6-cycle endomorphism category with the
/// rotation tensor. Objects tensor trivially, vertices add, and whiskering an
/// edge by a vertex rotates it.
pub fn interchange_default() -> crate::interchange::MonoidalEnrichedCat {
    let n = 6usize;
    let cat = interchange_cycle();
    let v = |i: usize| VertexId::new(format!("v{}", i % n));
    let e = |i: usize| EdgeId::new(format!("E{}", i % n));
    let s = ObjId::from("s");
    let mut m = crate::interchange::MonoidalEnrichedCat {
        cat,
        unit: Some(s.clone()),
        ..Default::default()
    };
    m.obj_tensor.insert((s.clone(), s.clone()), s);
    for i in 0..n {
        for j in 0..n {
            m.vertex_tensor.insert((v(i), v(j)), v(i + j));
            m.whisker_edge_vertex.insert(
                (e(i), v(j)),
                EdgeImage::Edge {
                    to: e(i + j),
                    rev: false,
                },
            );
            m.whisker_vertex_edge.insert(
                (v(i), e(j)),
                EdgeImage::Edge {
                    to: e(i + j),
                    rev: false,
                },
            );
        }
    }
    m
}

/// A finite monoid given by tables; fuel for the discrete-category fixtures.
pub struct Monoid {
    pub elems: Vec<String>,
    pub unit: String,
    op: BTreeMap<(String, String), String>,
}

impl Monoid {
    pub fn op(&self, a: &str, b: &str) -> &str {
        &self.op[&(a.to_string(), b.to_string())]
    }
}

pub fn monoid_trivial() -> Monoid {
    Monoid {
        elems: vec!["e".into()],
        unit: "e".into(),
        op: BTreeMap::from([(("e".into(), "e".into()), "e".into())]),
    }
}

/// The cyclic group of order n, written additively.
pub fn monoid_zn(n: usize) -> Monoid {
    let name = |i: usize| format!("{}", i % n);
    let mut op = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            op.insert((name(i), name(j)), name(i + j));
        }
    }
    Monoid {
        elems: (0..n).map(name).collect(),
        unit: name(0),
        op,
    }
}

pub fn monoid_c3() -> Monoid {
    monoid_zn(3)
}

/// The symmetric group on three letters, named by what each permutation does.
pub fn monoid_s3() -> Monoid {
    let perms: Vec<(Vec<usize>, &str)> = vec![
        (vec![0, 1, 2], "e"),
        (vec![1, 2, 0], "r"),
        (vec![2, 0, 1], "rr"),
        (vec![1, 0, 2], "s01"),
        (vec![0, 2, 1], "s12"),
        (vec![2, 1, 0], "s02"),
    ];
    let name_of = |p: &[usize]| -> String {
        perms
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, n)| n.to_string())
            .expect("permutation of 3 letters")
    };
    let mut op = BTreeMap::new();
    for (p, pn) in &perms {
        for (q, qn) in &perms {
            let composed: Vec<usize> = (0..3).map(|i| p[q[i]]).collect();
            op.insert((pn.to_string(), qn.to_string()), name_of(&composed));
        }
    }
    Monoid {
        elems: perms.iter().map(|(_, n)| n.to_string()).collect(),
        unit: "e".into(),
        op,
    }
}

/// The discrete category on the elements of a monoid.
pub fn discrete_monoid_cat(m: &Monoid) -> FinCat {
    let mut cat = FinCat {
        objects: m.elems.iter().map(|e| ObjId::new(e.clone())).collect(),
        ..Default::default()
    };
    for e in &m.elems {
        let id = MorId::new(format!("id{e}"));
        cat.morphisms
            .insert(id.clone(), (ObjId::new(e.clone()), ObjId::new(e.clone())));
        cat.identities.insert(ObjId::new(e.clone()), id.clone());
        cat.comp.insert((id.clone(), id.clone()), id);
    }
    cat
}

/// Tensor data on the discrete category of a monoid: the operation on
/// objects, identity components wherever the required equations already hold
/// on the nose. For a noncommutative monoid the symmetry table is partial —
/// exactly the observable failure.
pub fn monoid_tensor(m: &Monoid) -> TensorData {
    let ob = |e: &str| ObjId::new(e.to_string());
    let idm = |e: &str| MorId::new(format!("id{e}"));
    let mut t = TensorData {
        unit: Some(ob(&m.unit)),
        ..Default::default()
    };
    for a in &m.elems {
        for b in &m.elems {
            let ab = m.op(a, b);
            t.obj.insert((ob(a), ob(b)), ob(ab));
            t.mor.insert((idm(a), idm(b)), idm(ab));
            if m.op(a, b) == m.op(b, a) {
                t.symmetry.insert(
                    (ob(a), ob(b)),
                    IsoPair {
                        fwd: idm(ab),
                        inv: idm(ab),
                    },
                );
            }
            for c in &m.elems {
                let abc = m.op(ab, c);
                if abc == m.op(a, m.op(b, c)) {
                    t.associator.insert(
                        (ob(a), ob(b), ob(c)),
                        IsoPair {
                            fwd: idm(abc),
                            inv: idm(abc),
                        },
                    );
                }
            }
        }
    }
    t
}

pub fn cmonoid_zn(n: usize) -> (FinCat, TensorData) {
    let m = monoid_zn(n);
    (discrete_monoid_cat(&m), monoid_tensor(&m))
}

/// Commutative-monoid fixture: the cyclic group of order three, discrete.
pub fn cmonoid_c3() -> (FinCat, TensorData) {
    cmonoid_zn(3)
}

/// Noncommutative fixture: the symmetric group S3, discrete. No strict
/// symmetry can exist among identity morphisms.
pub fn ncmonoid_s3() -> (FinCat, TensorData) {
    let m = monoid_s3();
    (discrete_monoid_cat(&m), monoid_tensor(&m))
}

/// The cyclic group of order n as a one-object category, morphisms g0..g(n-1)
/// with g0 the identity.
pub fn cyclic_group_cat(n: usize) -> FinCat {
    let g = |i: usize| MorId::new(format!("g{}", i % n));
    let s = ObjId::from("s");
    let mut cat = FinCat {
        objects: vec![s.clone()],
        ..Default::default()
    };
    for i in 0..n {
        cat.morphisms.insert(g(i), (s.clone(), s.clone()));
    }
    cat.identities.insert(s.clone(), g(0));
    for i in 0..n {
        for j in 0..n {
            cat.comp.insert((g(i), g(j)), g(i + j));
        }
    }
    cat
}

/// Tensor data on the one-object cyclic group: the tensor is the group
/// operation, the associator and symmetry components are the constant group
/// elements `g^assoc_shift` and `g^sym_shift`. Shift 0 is the strict
/// structure; nonzero shifts perturb individual axioms.
pub fn cyclic_tensor(n: usize, assoc_shift: usize, sym_shift: usize) -> TensorData {
    let g = |i: usize| MorId::new(format!("g{}", i % n));
    let s = ObjId::from("s");
    let mut t = TensorData {
        unit: Some(s.clone()),
        ..Default::default()
    };
    t.obj.insert((s.clone(), s.clone()), s.clone());
    for i in 0..n {
        for j in 0..n {
            t.mor.insert((g(i), g(j)), g(i + j));
        }
    }
    t.associator.insert(
        (s.clone(), s.clone(), s.clone()),
        IsoPair {
            fwd: g(assoc_shift),
            inv: g(n - assoc_shift % n),
        },
    );
    t.symmetry.insert(
        (s.clone(), s.clone()),
        IsoPair {
            fwd: g(sym_shift),
            inv: g(n - sym_shift % n),
        },
    );
    t
}

/// Valid associator, symmetry perturbed to an order-4 element: sigma^2 != id.
pub fn perturbed_sigma_z4() -> (FinCat, TensorData) {
    (cyclic_group_cat(4), cyclic_tensor(4, 0, 1))
}

/// Valid symmetry, associator perturbed: the two rebracketing routes differ.
pub fn perturbed_alpha_z4() -> (FinCat, TensorData) {
    (cyclic_group_cat(4), cyclic_tensor(4, 1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::validate;

    #[test]
    fn interchange_cycle_validates() {
        let cat = interchange_cycle();
        let report = validate(&cat);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn s3_is_a_group() {
        let m = monoid_s3();
        assert_eq!(m.elems.len(), 6);
        assert_eq!(m.op("r", "rr"), "e");
        assert_ne!(m.op("r", "s01"), m.op("s01", "r"));
    }
}
