//! The bundle file format.
//!
//! A bundle is a JSON document holding named sections: graph spaces,
//! enriched categories, finite categories, tensor data over them, monoidal
//! enrichments, and presentations. Rationals are strings `"p/q"` with a
//! positive denominator, reduced on output. Serialization is deterministic:
//! all maps are ordered and re-serializing a parsed bundle is byte-stable.

use crate::enriched::{EdgeImage, EnrichedCat};
use crate::ids::{EdgeId, MorId, ObjId, VertexId};
use crate::interchange::{validate_monoidal, MonoidalEnrichedCat};
use crate::monoidal::{
    compile_presentation, validate_fincat, FinCat, IsoPair, OperadPresentation, TensorData,
    Variant,
};
use crate::report::Report;
use crate::space::GraphSpace;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("section {0} not found")]
    MissingSection(String),
    #[error("dangling reference: {0}")]
    DanglingRef(String),
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawCategory {
    objects: Vec<ObjId>,
    /// x -> y -> hom graph
    #[serde(default)]
    homs: BTreeMap<ObjId, BTreeMap<ObjId, GraphSpace>>,
    identities: BTreeMap<ObjId, VertexId>,
    /// rows (x, y, z, g, f, g.f)
    #[serde(default)]
    comp: Vec<(ObjId, ObjId, ObjId, VertexId, VertexId, VertexId)>,
    /// rows (x, x', f, z, edge images of f^*: hom(x',z) -> hom(x,z))
    #[serde(default)]
    pre_actions: Vec<(ObjId, ObjId, VertexId, ObjId, BTreeMap<EdgeId, EdgeImage>)>,
    /// rows (y', z', g, w, edge images of g_*: hom(w,y') -> hom(w,z'))
    #[serde(default)]
    post_actions: Vec<(ObjId, ObjId, VertexId, ObjId, BTreeMap<EdgeId, EdgeImage>)>,
    #[serde(default)]
    weq: Vec<(ObjId, ObjId, VertexId)>,
}

impl From<&EnrichedCat> for RawCategory {
    fn from(cat: &EnrichedCat) -> Self {
        let mut homs: BTreeMap<ObjId, BTreeMap<ObjId, GraphSpace>> = BTreeMap::new();
        for ((x, y), h) in &cat.homs {
            homs.entry(x.clone()).or_default().insert(y.clone(), h.clone());
        }
        RawCategory {
            objects: cat.objects.clone(),
            homs,
            identities: cat.identities.clone(),
            comp: cat
                .comp
                .iter()
                .flat_map(|((x, y, z), t)| {
                    t.iter().map(move |((g, f), h)| {
                        (x.clone(), y.clone(), z.clone(), g.clone(), f.clone(), h.clone())
                    })
                })
                .collect(),
            pre_actions: cat
                .pre_edges
                .iter()
                .map(|((x, xp, f, z), edges)| {
                    (x.clone(), xp.clone(), f.clone(), z.clone(), edges.clone())
                })
                .collect(),
            post_actions: cat
                .post_edges
                .iter()
                .map(|((yp, zp, g, w), edges)| {
                    (yp.clone(), zp.clone(), g.clone(), w.clone(), edges.clone())
                })
                .collect(),
            weq: cat.weq.iter().cloned().collect(),
        }
    }
}

impl From<RawCategory> for EnrichedCat {
    fn from(raw: RawCategory) -> Self {
        let mut cat = EnrichedCat {
            objects: raw.objects,
            identities: raw.identities,
            ..Default::default()
        };
        for (x, inner) in raw.homs {
            for (y, h) in inner {
                cat.homs.insert((x.clone(), y), h);
            }
        }
        for (x, y, z, g, f, h) in raw.comp {
            cat.comp.entry((x, y, z)).or_default().insert((g, f), h);
        }
        for (x, xp, f, z, edges) in raw.pre_actions {
            cat.pre_edges.insert((x, xp, f, z), edges);
        }
        for (yp, zp, g, w, edges) in raw.post_actions {
            cat.post_edges.insert((yp, zp, g, w), edges);
        }
        cat.weq = raw.weq.into_iter().collect();
        cat
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawFinCat {
    objects: Vec<ObjId>,
    /// rows (morphism, src, tgt)
    morphisms: Vec<(MorId, ObjId, ObjId)>,
    identities: BTreeMap<ObjId, MorId>,
    /// rows (g, f, g.f)
    #[serde(default)]
    comp: Vec<(MorId, MorId, MorId)>,
}

impl From<&FinCat> for RawFinCat {
    fn from(cat: &FinCat) -> Self {
        RawFinCat {
            objects: cat.objects.clone(),
            morphisms: cat
                .morphisms
                .iter()
                .map(|(m, (s, t))| (m.clone(), s.clone(), t.clone()))
                .collect(),
            identities: cat.identities.clone(),
            comp: cat
                .comp
                .iter()
                .map(|((g, f), h)| (g.clone(), f.clone(), h.clone()))
                .collect(),
        }
    }
}

impl From<RawFinCat> for FinCat {
    fn from(raw: RawFinCat) -> Self {
        FinCat {
            objects: raw.objects,
            morphisms: raw
                .morphisms
                .into_iter()
                .map(|(m, s, t)| (m, (s, t)))
                .collect(),
            identities: raw.identities,
            comp: raw.comp.into_iter().map(|(g, f, h)| ((g, f), h)).collect(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawTensor {
    /// rows (a, b, a(x)b)
    obj: Vec<(ObjId, ObjId, ObjId)>,
    /// rows (f, g, f(x)g)
    mor: Vec<(MorId, MorId, MorId)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<ObjId>,
    /// rows (a, b, c, fwd, inv)
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    associator: Vec<(ObjId, ObjId, ObjId, MorId, MorId)>,
    /// rows (a, b, fwd, inv)
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    symmetry: Vec<(ObjId, ObjId, MorId, MorId)>,
    /// symbol -> rows (objects..., fwd, inv)
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    extra_isos: BTreeMap<String, Vec<(Vec<ObjId>, MorId, MorId)>>,
}

impl From<&TensorData> for RawTensor {
    fn from(t: &TensorData) -> Self {
        RawTensor {
            obj: t
                .obj
                .iter()
                .map(|((a, b), c)| (a.clone(), b.clone(), c.clone()))
                .collect(),
            mor: t
                .mor
                .iter()
                .map(|((f, g), h)| (f.clone(), g.clone(), h.clone()))
                .collect(),
            unit: t.unit.clone(),
            associator: t
                .associator
                .iter()
                .map(|((a, b, c), iso)| {
                    (a.clone(), b.clone(), c.clone(), iso.fwd.clone(), iso.inv.clone())
                })
                .collect(),
            symmetry: t
                .symmetry
                .iter()
                .map(|((a, b), iso)| (a.clone(), b.clone(), iso.fwd.clone(), iso.inv.clone()))
                .collect(),
            extra_isos: t
                .extra_isos
                .iter()
                .map(|(sym, m)| {
                    (
                        sym.clone(),
                        m.iter()
                            .map(|(k, iso)| (k.clone(), iso.fwd.clone(), iso.inv.clone()))
                            .collect(),
                    )
                })
                .collect(),
        }
    }
}

impl From<RawTensor> for TensorData {
    fn from(raw: RawTensor) -> Self {
        TensorData {
            obj: raw.obj.into_iter().map(|(a, b, c)| ((a, b), c)).collect(),
            mor: raw.mor.into_iter().map(|(f, g, h)| ((f, g), h)).collect(),
            unit: raw.unit,
            associator: raw
                .associator
                .into_iter()
                .map(|(a, b, c, fwd, inv)| ((a, b, c), IsoPair { fwd, inv }))
                .collect(),
            symmetry: raw
                .symmetry
                .into_iter()
                .map(|(a, b, fwd, inv)| ((a, b), IsoPair { fwd, inv }))
                .collect(),
            extra_isos: raw
                .extra_isos
                .into_iter()
                .map(|(sym, rows)| {
                    (
                        sym,
                        rows.into_iter()
                            .map(|(k, fwd, inv)| (k, IsoPair { fwd, inv }))
                            .collect(),
                    )
                })
                .collect(),
        }
    }
}

/// A finite category together with candidate tensor data and the monad
/// variant the data claims to be an algebra for.
#[derive(Debug, Clone)]
pub struct MonoidalSection {
    pub fincat: String,
    pub variant: Variant,
    pub tensor: TensorData,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawMonoidalSection {
    fincat: String,
    variant: Variant,
    tensor: RawTensor,
}

/// Monoidal enrichment of a named enriched category.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct RawEnrichedMonoidal {
    category: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<ObjId>,
    /// rows (x, y, x(x)y)
    obj_tensor: Vec<(ObjId, ObjId, ObjId)>,
    /// rows (u, v, u(x)v) over globally unique vertex names
    vertex_tensor: Vec<(VertexId, VertexId, VertexId)>,
    /// rows (edge, vertex, image)
    #[serde(default)]
    whisker_edge_vertex: Vec<(EdgeId, VertexId, EdgeImage)>,
    /// rows (vertex, edge, image)
    #[serde(default)]
    whisker_vertex_edge: Vec<(VertexId, EdgeId, EdgeImage)>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct RawBundle {
    format_version: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    spaces: BTreeMap<String, GraphSpace>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    categories: BTreeMap<String, RawCategory>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    fincats: BTreeMap<String, RawFinCat>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    monoidal: BTreeMap<String, RawMonoidalSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    enriched_monoidal: BTreeMap<String, RawEnrichedMonoidal>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    presentations: BTreeMap<String, OperadPresentation>,
}

/// A parsed bundle: named sections, cross-references unresolved until
/// [`Bundle::validate`].
#[derive(Debug, Clone, Default)]
pub struct Bundle {
    pub spaces: BTreeMap<String, GraphSpace>,
    pub categories: BTreeMap<String, EnrichedCat>,
    pub fincats: BTreeMap<String, FinCat>,
    pub monoidal: BTreeMap<String, MonoidalSection>,
    pub enriched_monoidal: BTreeMap<String, RawEnrichedMonoidal>,
    pub presentations: BTreeMap<String, OperadPresentation>,
}

impl Bundle {
    pub fn from_json(text: &str) -> Result<Bundle, BundleError> {
        let raw: RawBundle =
            serde_json::from_str(text).map_err(|e| BundleError::Parse(e.to_string()))?;
        if raw.format_version != FORMAT_VERSION {
            return Err(BundleError::Version(raw.format_version));
        }
        Ok(Bundle {
            spaces: raw.spaces,
            categories: raw
                .categories
                .into_iter()
                .map(|(k, v)| (k, v.into()))
                .collect(),
            fincats: raw.fincats.into_iter().map(|(k, v)| (k, v.into())).collect(),
            monoidal: raw
                .monoidal
                .into_iter()
                .map(|(k, v)| {
                    (
                        k,
                        MonoidalSection {
                            fincat: v.fincat,
                            variant: v.variant,
                            tensor: v.tensor.into(),
                        },
                    )
                })
                .collect(),
            enriched_monoidal: raw.enriched_monoidal,
            presentations: raw.presentations,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawBundle {
            format_version: FORMAT_VERSION,
            spaces: self.spaces.clone(),
            categories: self
                .categories
                .iter()
                .map(|(k, v)| (k.clone(), v.into()))
                .collect(),
            fincats: self.fincats.iter().map(|(k, v)| (k.clone(), v.into())).collect(),
            monoidal: self
                .monoidal
                .iter()
                .map(|(k, v)| {
                    (
                        k.clone(),
                        RawMonoidalSection {
                            fincat: v.fincat.clone(),
                            variant: v.variant,
                            tensor: (&v.tensor).into(),
                        },
                    )
                })
                .collect(),
            enriched_monoidal: self.enriched_monoidal.clone(),
            presentations: self.presentations.clone(),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("bundle serialization");
        out.push('\n');
        out
    }

    pub fn fincat(&self, name: &str) -> Result<&FinCat, BundleError> {
        self.fincats
            .get(name)
            .ok_or_else(|| BundleError::MissingSection(format!("fincats.{name}")))
    }

    pub fn category(&self, name: &str) -> Result<&EnrichedCat, BundleError> {
        self.categories
            .get(name)
            .ok_or_else(|| BundleError::MissingSection(format!("categories.{name}")))
    }

    /// Join a monoidal-enrichment section with its category.
    pub fn monoidal_enriched(&self, name: &str) -> Result<MonoidalEnrichedCat, BundleError> {
        let raw = self
            .enriched_monoidal
            .get(name)
            .ok_or_else(|| BundleError::MissingSection(format!("enriched_monoidal.{name}")))?;
        let cat = self.category(&raw.category)?.clone();
        let mut m = MonoidalEnrichedCat {
            cat,
            unit: raw.unit.clone(),
            ..Default::default()
        };
        for (a, b, c) in &raw.obj_tensor {
            m.obj_tensor.insert((a.clone(), b.clone()), c.clone());
        }
        for (u, v, w) in &raw.vertex_tensor {
            m.vertex_tensor.insert((u.clone(), v.clone()), w.clone());
        }
        for (e, v, img) in &raw.whisker_edge_vertex {
            m.whisker_edge_vertex
                .insert((e.clone(), v.clone()), img.clone());
        }
        for (v, e, img) in &raw.whisker_vertex_edge {
            m.whisker_vertex_edge
                .insert((v.clone(), e.clone()), img.clone());
        }
        Ok(m)
    }

    /// Validate every section and every cross-reference. The report contains
    /// one violation per failure, prefixed with the section path.
    pub fn validate(&self) -> Report {
        let mut report = Report::default();
        let prefix = |report: &mut Report, prefix: &str, inner: Report| {
            for v in inner.violations {
                report.push(&format!("{prefix}/{}", v.code), v.witness);
            }
            for n in inner.notes {
                report.note(format!("{prefix}: {n}"));
            }
        };
        for (name, space) in &self.spaces {
            if let Err(e) = space.validate() {
                report.push("spaces", format!("{name}: {e}"));
            }
        }
        for (name, cat) in &self.categories {
            prefix(&mut report, &format!("categories.{name}"), crate::enriched::validate(cat));
        }
        for (name, cat) in &self.fincats {
            prefix(&mut report, &format!("fincats.{name}"), validate_fincat(cat));
        }
        for (name, section) in &self.monoidal {
            match self.fincat(&section.fincat) {
                Err(e) => report.push("monoidal", format!("{name}: {e}")),
                Ok(cat) => prefix(
                    &mut report,
                    &format!("monoidal.{name}"),
                    crate::monoidal::check_tensor_tables(cat, &section.tensor),
                ),
            }
        }
        for name in self.enriched_monoidal.keys() {
            match self.monoidal_enriched(name) {
                Err(e) => report.push("enriched_monoidal", format!("{name}: {e}")),
                Ok(m) => prefix(
                    &mut report,
                    &format!("enriched_monoidal.{name}"),
                    validate_monoidal(&m),
                ),
            }
        }
        for (name, p) in &self.presentations {
            if let Err(e) = compile_presentation(p) {
                report.push("presentations", format!("{name}: {e}"));
            }
        }
        // identifier hygiene inside categories: vertex names must not repeat
        // within one hom graph (global uniqueness is only demanded by the
        // monoidal enrichment and checked there)
        for (name, cat) in &self.categories {
            for ((x, y), hom) in &cat.homs {
                let set: BTreeSet<_> = hom.vertices.iter().collect();
                if set.len() != hom.vertices.len() {
                    report.push(
                        "categories",
                        format!("{name}: duplicate vertex in hom({x},{y})"),
                    );
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn walking_weq_bundle() -> Bundle {
        Bundle {
            categories: BTreeMap::from([("walking-weq".to_string(), fixtures::walking_weq())]),
            ..Default::default()
        }
    }

    #[test]
    fn bundle_round_trips_and_is_byte_stable() {
        let bundle = walking_weq_bundle();
        let json = bundle.to_json();
        let parsed = Bundle::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        assert_eq!(
            parsed.categories["walking-weq"].weq,
            bundle.categories["walking-weq"].weq
        );
        assert!(parsed.validate().is_valid());
    }

    #[test]
    fn monoidal_section_round_trips() {
        let (cat, tensor) = fixtures::cmonoid_c3();
        let bundle = Bundle {
            fincats: BTreeMap::from([("c3".to_string(), cat)]),
            monoidal: BTreeMap::from([(
                "cmonoid-C3".to_string(),
                MonoidalSection {
                    fincat: "c3".to_string(),
                    variant: Variant::S,
                    tensor,
                },
            )]),
            ..Default::default()
        };
        let json = bundle.to_json();
        let parsed = Bundle::from_json(&json).unwrap();
        assert!(parsed.validate().is_valid(), "{}", parsed.validate());
        assert_eq!(parsed.to_json(), json);
    }

    #[test]
    fn version_mismatch_is_rejected() {
        let err = Bundle::from_json(r#"{"format_version": 99}"#).unwrap_err();
        assert!(matches!(err, BundleError::Version(99)));
    }

    #[test]
    fn dangling_fincat_reference_is_reported() {
        let (_, tensor) = fixtures::cmonoid_c3();
        let bundle = Bundle {
            monoidal: BTreeMap::from([(
                "orphan".to_string(),
                MonoidalSection {
                    fincat: "missing".to_string(),
                    variant: Variant::M,
                    tensor,
                },
            )]),
            ..Default::default()
        };
        let report = bundle.validate();
        assert!(!report.is_valid());
    }
}
