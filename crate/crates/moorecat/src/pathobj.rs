//! The categorical path object P(C).
//!
//! Objects of P(C) are the marked weak equivalences of C. A morphism from
//! `a: x -> y` to `b: x' -> y'` is a triple `(f, g, alpha)` with `f` a vertex
//! of hom(x, x'), `g` a vertex of hom(y, y'), and `alpha` a Moore path in
//! hom(x, y') from `g.a` to `b.f` — a homotopy filling the square. The
//! composite of `(f, g, alpha)` and `(f', g', beta)` whiskers the two
//! homotopies and concatenates them; because Moore concatenation is strictly
//! associative and the actions are strict, the composition law is strict and
//! its length is graded by addition.
//!
//! The hom-spaces of P(C) are never materialized as graphs; morphisms are
//! first-class points, with bounded enumeration where the tests need sets.

use crate::enriched::{edge_path, is_pi0_iso, CatError, EnrichedCat};
use crate::ids::{ObjId, VertexId};
use crate::rat::Rat;
use crate::space::{
    concat, endpoints, reduced_word, unit_path, GraphSpace, Letter, MoorePath, SpaceError,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathObjError {
    #[error("vertex {a} of hom({x},{y}) is not a marked weak equivalence")]
    NotMarked { x: ObjId, y: ObjId, a: VertexId },
    #[error("object mismatch: composing a morphism into ({0},{1},{2}) with one out of ({3},{4},{5})")]
    ObjectMismatch(ObjId, ObjId, VertexId, ObjId, ObjId, VertexId),
    #[error("endpoint invariant violated: path runs {found_start} -> {found_end}, required {want_start} -> {want_end}")]
    EndpointInvariant {
        want_start: VertexId,
        want_end: VertexId,
        found_start: VertexId,
        found_end: VertexId,
    },
    #[error("{0} has no homotopy inverse; cannot lift")]
    NoHomotopyInverse(VertexId),
    #[error("hom({0},{1}) is not a forest; homotopy classification refused")]
    NonForestHom(ObjId, ObjId),
    #[error(transparent)]
    Cat(#[from] CatError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// An object of P(C): a marked weak equivalence `a: x -> y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PObject {
    pub x: ObjId,
    pub y: ObjId,
    pub a: VertexId,
}

/// A morphism of P(C): a square with a Moore homotopy across it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PMorphism {
    pub src: PObject,
    pub tgt: PObject,
    pub f: VertexId,
    pub g: VertexId,
    pub path: MoorePath,
}

impl PMorphism {
    pub fn length(&self) -> Rat {
        self.path.length()
    }
}

/// Accept `a: x -> y` as an object of P(C) iff it is marked.
pub fn make_object(
    cat: &EnrichedCat,
    x: &ObjId,
    y: &ObjId,
    a: &VertexId,
) -> Result<PObject, PathObjError> {
    if !cat.hom(x, y).has_vertex(a) {
        return Err(CatError::UnknownHomVertex {
            x: x.clone(),
            y: y.clone(),
            vertex: a.clone(),
        }
        .into());
    }
    if !cat.is_marked(x, y, a) {
        return Err(PathObjError::NotMarked {
            x: x.clone(),
            y: y.clone(),
            a: a.clone(),
        });
    }
    Ok(PObject {
        x: x.clone(),
        y: y.clone(),
        a: a.clone(),
    })
}

/// All objects of P(C), in sorted order.
pub fn objects(cat: &EnrichedCat) -> Vec<PObject> {
    cat.weq
        .iter()
        .map(|(x, y, a)| PObject {
            x: x.clone(),
            y: y.clone(),
            a: a.clone(),
        })
        .collect()
}

/// Check the defining invariants of a morphism of P(C).
pub fn validate_pmorphism(cat: &EnrichedCat, m: &PMorphism) -> Result<(), PathObjError> {
    let hom = cat.hom(&m.src.x, &m.tgt.y);
    let (found_start, found_end) = endpoints(hom, &m.path)?;
    let want_start = cat.compose(&m.src.x, &m.src.y, &m.tgt.y, &m.g, &m.src.a)?;
    let want_end = cat.compose(&m.src.x, &m.tgt.x, &m.tgt.y, &m.tgt.a, &m.f)?;
    if found_start != want_start || found_end != want_end {
        return Err(PathObjError::EndpointInvariant {
            want_start,
            want_end,
            found_start,
            found_end,
        });
    }
    Ok(())
}

/// The identity on an object: identity components and a constant homotopy of
/// length 0.
pub fn p_identity(cat: &EnrichedCat, o: &PObject) -> Result<PMorphism, PathObjError> {
    let f = cat.identity(&o.x)?.clone();
    let g = cat.identity(&o.y)?.clone();
    let path = unit_path(cat.hom(&o.x, &o.y), &o.a)?;
    Ok(PMorphism {
        src: o.clone(),
        tgt: o.clone(),
        f,
        g,
        path,
    })
}

/// Strict composition: `second . first`.
///
/// Components compose in C; the homotopy is `g'.alpha` then `beta.f`, so the
/// length of the composite is exactly the sum of the two lengths. The
/// endpoint invariant holds by construction and is re-checked; a violation
/// here means the action tables of C are inconsistent.
pub fn p_compose(
    cat: &EnrichedCat,
    second: &PMorphism,
    first: &PMorphism,
) -> Result<PMorphism, PathObjError> {
    if first.tgt != second.src {
        return Err(PathObjError::ObjectMismatch(
            first.tgt.x.clone(),
            first.tgt.y.clone(),
            first.tgt.a.clone(),
            second.src.x.clone(),
            second.src.y.clone(),
            second.src.a.clone(),
        ));
    }
    let (x, mid, tgt) = (&first.src, &first.tgt, &second.tgt);
    let f = cat.compose(&x.x, &mid.x, &tgt.x, &second.f, &first.f)?;
    let g = cat.compose(&x.y, &mid.y, &tgt.y, &second.g, &first.g)?;
    // g'.alpha lives in hom(x, y''), beta.f as well; concatenate in order.
    let left = cat.act_post(&mid.y, &tgt.y, &second.g, &x.x, &first.path)?;
    let right = cat.act_pre(&x.x, &mid.x, &first.f, &tgt.y, &second.path)?;
    let path = concat(cat.hom(&x.x, &tgt.y), &left, &right)?;
    let out = PMorphism {
        src: x.clone(),
        tgt: tgt.clone(),
        f,
        g,
        path,
    };
    validate_pmorphism(cat, &out)?;
    Ok(out)
}

/// The embedding i: C -> P(C) on objects: i(x) = id_x.
pub fn i_embed(cat: &EnrichedCat, x: &ObjId) -> Result<PObject, PathObjError> {
    let id = cat.identity(x)?.clone();
    make_object(cat, x, x, &id)
}

/// The embedding on morphisms: i(u) = (u, u, constant path at u).
pub fn i_embed_mor(
    cat: &EnrichedCat,
    x: &ObjId,
    y: &ObjId,
    u: &VertexId,
) -> Result<PMorphism, PathObjError> {
    let src = i_embed(cat, x)?;
    let tgt = i_embed(cat, y)?;
    if !cat.hom(x, y).has_vertex(u) {
        return Err(CatError::UnknownHomVertex {
            x: x.clone(),
            y: y.clone(),
            vertex: u.clone(),
        }
        .into());
    }
    let path = unit_path(cat.hom(x, y), u)?;
    let out = PMorphism {
        src,
        tgt,
        f: u.clone(),
        g: u.clone(),
        path,
    };
    validate_pmorphism(cat, &out)?;
    Ok(out)
}

/// Evaluation on objects: the two endpoints of the marked morphism.
pub fn ev_object(o: &PObject) -> (ObjId, ObjId) {
    (o.x.clone(), o.y.clone())
}

/// Evaluation on morphisms: the two components of the square.
pub fn ev_mor(m: &PMorphism) -> (VertexId, VertexId) {
    (m.f.clone(), m.g.clone())
}

/// Every object `a: x -> y` of P(C) is connected to i(x) by the strictly
/// commuting square (id, a): the homotopy is constant of length 0.
pub fn essential_surjectivity_witness(
    cat: &EnrichedCat,
    o: &PObject,
) -> Result<PMorphism, PathObjError> {
    let src = i_embed(cat, &o.x)?;
    let f = cat.identity(&o.x)?.clone();
    let path = unit_path(cat.hom(&o.x, &o.y), &o.a)?;
    let out = PMorphism {
        src,
        tgt: o.clone(),
        f,
        g: o.a.clone(),
        path,
    };
    validate_pmorphism(cat, &out)?;
    Ok(out)
}

/// Lift a weak equivalence `(w1, w2)` of C x C against an object `b` of P(C):
/// build the source object `w2^{-1}.b.w1` and the connecting homotopy by
/// whiskering the edge path from `w2.w2^{-1}` to the identity.
///
/// `w1: x -> x'` and `w2: y -> y'` must be marked, `w2` must be invertible in
/// the homotopy category, and `b` must sit on `(x', y')`.
pub fn lift_weq(
    cat: &EnrichedCat,
    x: &ObjId,
    xp: &ObjId,
    w1: &VertexId,
    y: &ObjId,
    yp: &ObjId,
    w2: &VertexId,
    b: &PObject,
) -> Result<PMorphism, PathObjError> {
    for (hx, hy, v) in [(x, xp, w1), (y, yp, w2)] {
        if !cat.is_marked(hx, hy, v) {
            return Err(PathObjError::NotMarked {
                x: hx.clone(),
                y: hy.clone(),
                a: v.clone(),
            });
        }
    }
    if (&b.x, &b.y) != (xp, yp) {
        return Err(PathObjError::ObjectMismatch(
            xp.clone(),
            yp.clone(),
            b.a.clone(),
            b.x.clone(),
            b.y.clone(),
            b.a.clone(),
        ));
    }
    let witness =
        is_pi0_iso(cat, y, yp, w2)?.ok_or_else(|| PathObjError::NoHomotopyInverse(w2.clone()))?;
    // a = w2^{-1} . b . w1 : x -> y
    let inv_b = cat.compose(xp, yp, y, &witness.inverse, &b.a)?;
    let a = cat.compose(x, xp, y, &inv_b, w1)?;
    let src = make_object(cat, x, y, &a)?;
    // gamma = (b.w1)^* applied to the edge path from w2.w2^{-1} to id_{y'},
    // running from w2.w2^{-1}.b.w1 = w2.a down to b.w1.
    let bw1 = cat.compose(x, xp, yp, &b.a, w1)?;
    let gamma = cat.act_pre(x, yp, &bw1, yp, &witness.to_id_tgt)?;
    let out = PMorphism {
        src,
        tgt: b.clone(),
        f: w1.clone(),
        g: w2.clone(),
        path: gamma,
    };
    validate_pmorphism(cat, &out)?;
    Ok(out)
}

/// All reduced walks from `from` to `to` of word length at most `max_len`,
/// as unit-speed Moore paths.
pub fn reduced_walks(
    space: &GraphSpace,
    from: &VertexId,
    to: &VertexId,
    max_len: usize,
) -> Vec<MoorePath> {
    use crate::space::{Dir, Step};
    use num_traits::One;

    let mut out = Vec::new();
    // (current vertex, steps so far)
    let mut stack: Vec<(VertexId, Vec<Step>)> = vec![(from.clone(), Vec::new())];
    while let Some((at, steps)) = stack.pop() {
        if &at == to {
            out.push(MoorePath {
                start: from.clone(),
                steps: steps.clone(),
            });
        }
        if steps.len() == max_len {
            continue;
        }
        let last: Option<Letter> = steps.last().and_then(|s| match s {
            Step::Traverse { edge, dir, .. } => Some(Letter {
                edge: edge.clone(),
                dir: *dir,
            }),
            _ => None,
        });
        for e in &space.edges {
            for (dir, a, b) in [
                (Dir::Forward, &e.src, &e.tgt),
                (Dir::Backward, &e.tgt, &e.src),
            ] {
                if a != &at {
                    continue;
                }
                let letter = Letter {
                    edge: e.id.clone(),
                    dir,
                };
                // forbid immediate backtracking so every walk is reduced
                if last.as_ref().is_some_and(|l| {
                    l.edge == letter.edge && l.dir == letter.dir.flip()
                }) {
                    continue;
                }
                let mut next = steps.clone();
                next.push(Step::Traverse {
                    edge: e.id.clone(),
                    dir,
                    dur: Rat::one(),
                });
                stack.push((b.clone(), next));
            }
        }
    }
    out.sort_by_key(|p| (p.steps.len(), format!("{p:?}")));
    out
}

/// All morphisms `src -> tgt` of P(C) whose homotopy is a unit-speed reduced
/// walk of word length at most `max_word`.
pub fn enumerate_pmorphisms(
    cat: &EnrichedCat,
    src: &PObject,
    tgt: &PObject,
    max_word: usize,
) -> Result<Vec<PMorphism>, PathObjError> {
    let mut out = Vec::new();
    let hom = cat.hom(&src.x, &tgt.y);
    for f in &cat.hom(&src.x, &tgt.x).vertices {
        for g in &cat.hom(&src.y, &tgt.y).vertices {
            let from = cat.compose(&src.x, &src.y, &tgt.y, g, &src.a)?;
            let to = cat.compose(&src.x, &tgt.x, &tgt.y, &tgt.a, f)?;
            for path in reduced_walks(hom, &from, &to, max_word) {
                out.push(PMorphism {
                    src: src.clone(),
                    tgt: tgt.clone(),
                    f: f.clone(),
                    g: g.clone(),
                    path,
                });
            }
        }
    }
    Ok(out)
}

/// Whether a hom graph admits complete homotopy classification here.
fn require_forest(cat: &EnrichedCat, x: &ObjId, y: &ObjId) -> Result<(), PathObjError> {
    if cat.hom(x, y).is_forest() {
        Ok(())
    } else {
        Err(PathObjError::NonForestHom(x.clone(), y.clone()))
    }
}

/// Homotopy identification of two parallel morphisms of P(C), complete over
/// forest hom graphs: the components of the f's and g's must agree and the
/// homotopies must have equal reduced words after conjugation by the
/// connecting edge paths.
pub fn pmorphisms_homotopic(
    cat: &EnrichedCat,
    m1: &PMorphism,
    m2: &PMorphism,
) -> Result<bool, PathObjError> {
    if m1.src != m2.src || m1.tgt != m2.tgt {
        return Ok(false);
    }
    let (src, tgt) = (&m1.src, &m1.tgt);
    require_forest(cat, &src.x, &tgt.y)?;
    let hom_f = cat.hom(&src.x, &tgt.x);
    let hom_g = cat.hom(&src.y, &tgt.y);
    let hom = cat.hom(&src.x, &tgt.y);
    // connecting paths between the components of the components
    let Some(p_f) = edge_path(hom_f, &m1.f, &m2.f) else {
        return Ok(false);
    };
    let Some(p_g) = edge_path(hom_g, &m1.g, &m2.g) else {
        return Ok(false);
    };
    // Push the connecting paths into hom(src.x, tgt.y):
    //   q = (tgt.a)_* applied to p_f, from tgt.a.m1.f to tgt.a.m2.f
    //   r = (src.a)^* applied to p_g, from m1.g.src.a to m2.g.src.a
    let q = cat.act_post(&tgt.x, &tgt.y, &tgt.a, &src.x, &p_f)?;
    let r = cat.act_pre(&src.x, &src.y, &src.a, &tgt.y, &p_g)?;
    // conjugate: r^{-1} . alpha1 . q  ~  alpha2
    let w1 = reduced_word(hom, &m1.path)?;
    let w2 = reduced_word(hom, &m2.path)?;
    let wq = reduced_word(hom, &q)?;
    let wr = reduced_word(hom, &r)?;
    let conj = wr.inverse().concat(&w1).concat(&wq);
    Ok(conj == w2)
}

/// Report for the homotopy-level fully-faithfulness check between i(x) and
/// i(y).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullyFaithfulReport {
    pub components: usize,
    pub classes: usize,
    pub bijective: bool,
}

/// Compare the components of hom(x, y) with the homotopy classes of
/// morphisms i(x) -> i(y) in P(C). Complete only when hom(x, y) is a forest;
/// refuses otherwise.
pub fn pi0_fully_faithful(
    cat: &EnrichedCat,
    x: &ObjId,
    y: &ObjId,
) -> Result<FullyFaithfulReport, PathObjError> {
    require_forest(cat, x, y)?;
    require_forest(cat, x, x)?;
    require_forest(cat, y, y)?;
    let hom = cat.hom(x, y);
    let components = hom.components();
    let comp_index = |v: &VertexId| components.iter().position(|c| c.contains(v));

    let src = i_embed(cat, x)?;
    let tgt = i_embed(cat, y)?;
    let max_word = hom.vertices.len().max(1);
    let morphisms = enumerate_pmorphisms(cat, &src, &tgt, max_word)?;
    // For i(x) -> i(y) the endpoints of the homotopy are g and f themselves,
    // so each morphism determines (and is determined up to homotopy by) the
    // component its data lives in.
    let mut class_ids: Vec<usize> = Vec::new();
    for m in &morphisms {
        let cf = comp_index(&m.f).expect("vertex in some component");
        let cg = comp_index(&m.g).expect("vertex in some component");
        if cf != cg {
            // cannot happen: the homotopy connects g to f
            return Ok(FullyFaithfulReport {
                components: components.len(),
                classes: usize::MAX,
                bijective: false,
            });
        }
        if !class_ids.contains(&cf) {
            class_ids.push(cf);
        }
        // cross-check the conjugation rule against the component rule on the
        // canonical representative of this class
        let rep = i_embed_mor(cat, x, y, &components[cf][0])?;
        if !pmorphisms_homotopic(cat, &rep, m)? {
            return Ok(FullyFaithfulReport {
                components: components.len(),
                classes: usize::MAX,
                bijective: false,
            });
        }
    }
    let classes = class_ids.len();
    Ok(FullyFaithfulReport {
        components: components.len(),
        classes,
        bijective: classes == components.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::validate;
    use crate::fixtures;
    use crate::rat::rat;
    use num_traits::Zero;

    fn obj(s: &str) -> ObjId {
        ObjId::from(s)
    }

    fn vx(s: &str) -> VertexId {
        VertexId::from(s)
    }

    #[test]
    fn make_object_requires_marking() {
        let cat = fixtures::walking_weq();
        assert!(make_object(&cat, &obj("x"), &obj("x"), &vx("id_x")).is_ok());
        assert!(make_object(&cat, &obj("x"), &obj("y"), &vx("a")).is_ok());
        let err = make_object(&cat, &obj("y"), &obj("x"), &vx("b")).unwrap_err();
        assert!(matches!(err, PathObjError::NotMarked { .. }));
    }

    #[test]
    fn every_marked_generator_is_an_object() {
        let cat = fixtures::walking_weq();
        assert_eq!(objects(&cat).len(), 5);
        for o in objects(&cat) {
            assert!(make_object(&cat, &o.x, &o.y, &o.a).is_ok());
        }
    }

    #[test]
    fn identity_has_length_zero_and_is_unit() {
        let cat = fixtures::walking_weq();
        assert!(validate(&cat).is_valid());
        let o = make_object(&cat, &obj("x"), &obj("y"), &vx("a")).unwrap();
        let id = p_identity(&cat, &o).unwrap();
        assert!(id.length().is_zero());
        // a non-identity endomorphism of o in P(C)
        let m = PMorphism {
            src: o.clone(),
            tgt: o.clone(),
            f: vx("ba"),
            g: vx("ab"),
            path: MoorePath {
                start: vx("a"),
                steps: vec![crate::space::Step::Dwell {
                    at: vx("a"),
                    dur: rat(2, 3),
                }],
            },
        };
        validate_pmorphism(&cat, &m).unwrap();
        assert_eq!(p_compose(&cat, &m, &id).unwrap(), m);
        assert_eq!(p_compose(&cat, &id, &m).unwrap(), m);
    }

    #[test]
    fn compose_adds_lengths() {
        let cat = fixtures::walking_weq();
        let o = i_embed(&cat, &obj("x")).unwrap();
        let mk = |n: i64, d: i64| PMorphism {
            src: o.clone(),
            tgt: o.clone(),
            f: vx("id_x"),
            g: vx("id_x"),
            path: MoorePath {
                start: vx("id_x"),
                steps: vec![crate::space::Step::Dwell {
                    at: vx("id_x"),
                    dur: rat(n, d),
                }],
            },
        };
        let m1 = mk(1, 2);
        let m2 = mk(1, 3);
        let c = p_compose(&cat, &m2, &m1).unwrap();
        assert_eq!(c.length(), rat(5, 6));
    }

    #[test]
    fn embedding_is_functorial_and_factors_diagonal() {
        let cat = fixtures::walking_weq();
        let iu = i_embed_mor(&cat, &obj("x"), &obj("y"), &vx("a")).unwrap();
        assert!(iu.length().is_zero());
        assert_eq!(ev_mor(&iu), (vx("a"), vx("a")));
        assert_eq!(ev_object(&i_embed(&cat, &obj("x")).unwrap()), (obj("x"), obj("x")));
        // i(v.u) = i(v) . i(u) for composable vertices
        let iu = i_embed_mor(&cat, &obj("x"), &obj("y"), &vx("a")).unwrap();
        let iv = i_embed_mor(&cat, &obj("y"), &obj("x"), &vx("b")).unwrap();
        let comp = p_compose(&cat, &iv, &iu).unwrap();
        let direct = i_embed_mor(&cat, &obj("x"), &obj("x"), &vx("ba")).unwrap();
        assert_eq!(comp, direct);
    }

    #[test]
    fn es_witness_is_identity_on_embedded_objects() {
        let cat = fixtures::walking_weq();
        let ix = i_embed(&cat, &obj("x")).unwrap();
        let w = essential_surjectivity_witness(&cat, &ix).unwrap();
        assert_eq!(w, p_identity(&cat, &ix).unwrap());
    }

    #[test]
    fn es_witness_validates_for_every_object() {
        for cat in [
            fixtures::walking_weq(),
            fixtures::walking_arrow(),
            fixtures::cylinder(),
            fixtures::interchange_cycle(),
        ] {
            for o in objects(&cat) {
                let w = essential_surjectivity_witness(&cat, &o).unwrap();
                assert!(w.length().is_zero());
                assert_eq!(w.g, o.a);
                validate_pmorphism(&cat, &w).unwrap();
            }
        }
    }

    #[test]
    fn lift_weq_identity_pair_is_trivial() {
        let cat = fixtures::walking_weq();
        let b = make_object(&cat, &obj("x"), &obj("y"), &vx("a")).unwrap();
        let m = lift_weq(
            &cat,
            &obj("x"),
            &obj("x"),
            &vx("id_x"),
            &obj("y"),
            &obj("y"),
            &vx("id_y"),
            &b,
        )
        .unwrap();
        assert_eq!(m.src, b);
        assert!(m.length().is_zero());
    }

    #[test]
    fn lift_weq_across_marked_generator() {
        let cat = fixtures::walking_weq();
        let b = make_object(&cat, &obj("y"), &obj("y"), &vx("id_y")).unwrap();
        let m = lift_weq(
            &cat,
            &obj("x"),
            &obj("y"),
            &vx("a"),
            &obj("x"),
            &obj("y"),
            &vx("a"),
            &b,
        )
        .unwrap();
        // source object is w2^{-1} . id_y . w1 = ba, which is marked
        assert_eq!(m.src, make_object(&cat, &obj("x"), &obj("x"), &vx("ba")).unwrap());
        assert_eq!(m.f, vx("a"));
        assert_eq!(m.g, vx("a"));
        validate_pmorphism(&cat, &m).unwrap();
        // gamma is the collapsed homotopy edge: a dwell of length 1 at a
        assert_eq!(m.length(), rat(1, 1));
    }

    #[test]
    fn lift_weq_requires_marked_components() {
        let cat = fixtures::walking_weq();
        let b = make_object(&cat, &obj("x"), &obj("y"), &vx("a")).unwrap();
        let err = lift_weq(
            &cat,
            &obj("y"),
            &obj("x"),
            &vx("b"),
            &obj("y"),
            &obj("y"),
            &vx("id_y"),
            &b,
        )
        .unwrap_err();
        assert!(matches!(err, PathObjError::NotMarked { .. }));
    }

    #[test]
    fn ff_check_on_forest_fixtures() {
        for cat in [
            fixtures::walking_weq(),
            fixtures::walking_arrow(),
            fixtures::cylinder(),
        ] {
            for x in &cat.objects {
                for y in &cat.objects {
                    let report = pi0_fully_faithful(&cat, x, y).unwrap();
                    assert!(report.bijective, "hom({x},{y}): {report:?}");
                }
            }
        }
    }

    #[test]
    fn ff_check_refuses_non_forest() {
        let cat = fixtures::interchange_cycle();
        let err = pi0_fully_faithful(&cat, &obj("s"), &obj("s")).unwrap_err();
        assert!(matches!(err, PathObjError::NonForestHom(..)));
    }

    #[test]
    fn cylinder_morphisms_collapse_to_one_class() {
        let cat = fixtures::cylinder();
        let src = i_embed(&cat, &obj("x")).unwrap();
        let tgt = i_embed(&cat, &obj("y")).unwrap();
        let ms = enumerate_pmorphisms(&cat, &src, &tgt, 2).unwrap();
        assert!(ms.len() >= 4);
        for m in &ms {
            assert!(pmorphisms_homotopic(&cat, &ms[0], m).unwrap());
        }
    }
}
