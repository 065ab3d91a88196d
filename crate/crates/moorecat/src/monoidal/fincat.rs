//! Finite categories presented by explicit tables.

use crate::ids::{MorId, ObjId};
use crate::report::Report;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FinCatError {
    #[error("unknown object {0}")]
    UnknownObject(ObjId),
    #[error("unknown morphism {0}")]
    UnknownMorphism(MorId),
    #[error("composite {g}.{f} missing from the table")]
    MissingComposite { g: MorId, f: MorId },
    #[error("morphisms {g} and {f} are not composable")]
    NotComposable { g: MorId, f: MorId },
}

/// A finite category: objects, typed morphisms, identities and a composition
/// table. Laws are checked by enumeration in [`validate_fincat`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FinCat {
    pub objects: Vec<ObjId>,
    /// morphism -> (src, tgt)
    pub morphisms: BTreeMap<MorId, (ObjId, ObjId)>,
    pub identities: BTreeMap<ObjId, MorId>,
    /// (g, f) -> g.f for tgt(f) = src(g)
    pub comp: BTreeMap<(MorId, MorId), MorId>,
}

impl FinCat {
    pub fn src(&self, f: &MorId) -> Result<&ObjId, FinCatError> {
        self.morphisms
            .get(f)
            .map(|(s, _)| s)
            .ok_or_else(|| FinCatError::UnknownMorphism(f.clone()))
    }

    pub fn tgt(&self, f: &MorId) -> Result<&ObjId, FinCatError> {
        self.morphisms
            .get(f)
            .map(|(_, t)| t)
            .ok_or_else(|| FinCatError::UnknownMorphism(f.clone()))
    }

    pub fn identity(&self, x: &ObjId) -> Result<&MorId, FinCatError> {
        self.identities
            .get(x)
            .ok_or_else(|| FinCatError::UnknownObject(x.clone()))
    }

    /// g.f for f: a -> b, g: b -> c.
    pub fn compose(&self, g: &MorId, f: &MorId) -> Result<MorId, FinCatError> {
        if self.tgt(f)? != self.src(g)? {
            return Err(FinCatError::NotComposable {
                g: g.clone(),
                f: f.clone(),
            });
        }
        self.comp
            .get(&(g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| FinCatError::MissingComposite {
                g: g.clone(),
                f: f.clone(),
            })
    }

    pub fn is_identity(&self, f: &MorId) -> bool {
        self.identities.values().any(|id| id == f)
    }

    /// Morphisms from x to y, in sorted order.
    pub fn hom(&self, x: &ObjId, y: &ObjId) -> Vec<MorId> {
        self.morphisms
            .iter()
            .filter(|(_, (s, t))| s == x && t == y)
            .map(|(m, _)| m.clone())
            .collect()
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = &MorId> {
        self.morphisms.keys()
    }

    /// Whether g.f = id on both sides for some g; returns it.
    pub fn two_sided_inverse(&self, f: &MorId) -> Option<MorId> {
        let (src, tgt) = self.morphisms.get(f)?;
        let id_src = self.identities.get(src)?;
        let id_tgt = self.identities.get(tgt)?;
        self.hom(tgt, src).into_iter().find(|g| {
            self.compose(g, f).as_ref() == Ok(id_src) && self.compose(f, g).as_ref() == Ok(id_tgt)
        })
    }
}

/// Check the category laws by enumeration, one violation per failing
/// instance.
pub fn validate_fincat(cat: &FinCat) -> Report {
    let mut report = Report::default();
    for (m, (s, t)) in &cat.morphisms {
        for o in [s, t] {
            if !cat.objects.contains(o) {
                report.push("morphism-unknown-object", format!("{m}: {s} -> {t}"));
            }
        }
    }
    for x in &cat.objects {
        match cat.identities.get(x) {
            None => report.push("missing-identity", x.to_string()),
            Some(id) => match cat.morphisms.get(id) {
                None => report.push("identity-unknown-morphism", format!("id_{x} = {id}")),
                Some((s, t)) if s != x || t != x => {
                    report.push("identity-wrong-type", format!("id_{x} = {id}: {s} -> {t}"))
                }
                Some(_) => {}
            },
        }
    }
    if !report.is_valid() {
        return report;
    }
    // totality and typing of composition
    for (g, (gs, gt)) in &cat.morphisms {
        for (f, (_, ft)) in &cat.morphisms {
            if ft != gs {
                continue;
            }
            match cat.comp.get(&(g.clone(), f.clone())) {
                None => report.push("missing-composite", format!("{g}.{f}")),
                Some(h) => match cat.morphisms.get(h) {
                    None => report.push("composite-unknown", format!("{g}.{f} = {h}")),
                    Some((hs, ht)) => {
                        let fs = &cat.morphisms[f].0;
                        if hs != fs || ht != gt {
                            report.push(
                                "composite-wrong-type",
                                format!("{g}.{f} = {h}: {hs} -> {ht}"),
                            );
                        }
                    }
                },
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // unit laws
    for (f, (s, t)) in &cat.morphisms {
        let id_s = &cat.identities[s];
        let id_t = &cat.identities[t];
        if cat.compose(f, id_s).as_ref() != Ok(f) {
            report.push("unit-law", format!("{f}.id_{s} != {f}"));
        }
        if cat.compose(id_t, f).as_ref() != Ok(f) {
            report.push("unit-law", format!("id_{t}.{f} != {f}"));
        }
    }
    // associativity
    for (f, (_, ft)) in &cat.morphisms {
        for (g, (gs, gt)) in &cat.morphisms {
            if gs != ft {
                continue;
            }
            for (h, (hs, _)) in &cat.morphisms {
                if hs != gt {
                    continue;
                }
                let gf = cat.compose(g, f).unwrap();
                let hg = cat.compose(h, g).unwrap();
                if cat.compose(h, &gf) != cat.compose(&hg, f) {
                    report.push("associativity", format!("({h}.{g}).{f}"));
                }
            }
        }
    }
    report
}

/// A functor between finite categories, given by tables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FinFunctor {
    pub obj: BTreeMap<ObjId, ObjId>,
    pub mor: BTreeMap<MorId, MorId>,
}

impl FinFunctor {
    pub fn identity(cat: &FinCat) -> FinFunctor {
        FinFunctor {
            obj: cat.objects.iter().map(|o| (o.clone(), o.clone())).collect(),
            mor: cat
                .morphism_ids()
                .map(|m| (m.clone(), m.clone()))
                .collect(),
        }
    }

    /// Check totality, typing, identity and composition preservation.
    pub fn validate(&self, src: &FinCat, tgt: &FinCat) -> Report {
        let mut report = Report::default();
        for o in &src.objects {
            match self.obj.get(o) {
                None => report.push("functor-missing-object", o.to_string()),
                Some(fo) => {
                    if !tgt.objects.contains(fo) {
                        report.push("functor-unknown-object-image", format!("{o} -> {fo}"));
                    }
                }
            }
        }
        for (m, (s, t)) in &src.morphisms {
            match self.mor.get(m) {
                None => report.push("functor-missing-morphism", m.to_string()),
                Some(fm) => match tgt.morphisms.get(fm) {
                    None => report.push("functor-unknown-morphism-image", format!("{m} -> {fm}")),
                    Some((fs, ft)) => {
                        if Some(fs) != self.obj.get(s) || Some(ft) != self.obj.get(t) {
                            report.push("functor-ill-typed", format!("{m}: {s} -> {t}"));
                        }
                    }
                },
            }
        }
        if !report.is_valid() {
            return report;
        }
        for x in &src.objects {
            let id = &src.identities[x];
            if self.mor.get(id) != tgt.identities.get(&self.obj[x]) {
                report.push("functor-identity", format!("F(id_{x})"));
            }
        }
        for (g, (gs, _)) in &src.morphisms {
            for (f, (_, ft)) in &src.morphisms {
                if ft != gs {
                    continue;
                }
                let gf = src.compose(g, f).unwrap();
                let lhs = self.mor[&gf].clone();
                let rhs = tgt.compose(&self.mor[g], &self.mor[f]);
                if rhs.as_ref() != Ok(&lhs) {
                    report.push("functor-composition", format!("F({g}.{f})"));
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

    #[test]
    fn cyclic_group_fincat_validates() {
        let c3 = fixtures::cyclic_group_cat(3);
        let report = validate_fincat(&c3);
        assert!(report.is_valid(), "{report}");
        assert_eq!(c3.objects.len(), 1);
        assert_eq!(c3.morphisms.len(), 3);
    }

    #[test]
    fn discrete_monoid_cat_validates() {
        let cat = fixtures::discrete_monoid_cat(&fixtures::monoid_c3());
        assert!(validate_fincat(&cat).is_valid());
        assert_eq!(cat.objects.len(), 3);
    }

    #[test]
    fn broken_associativity_is_reported() {
        let mut c4 = fixtures::cyclic_group_cat(4);
        c4.comp
            .insert((MorId::from("g2"), MorId::from("g2")), MorId::from("g1"));
        let report = validate_fincat(&c4);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "associativity" || v.code == "unit-law"));
    }

    #[test]
    fn identity_functor_validates() {
        let cat = fixtures::discrete_monoid_cat(&fixtures::monoid_s3());
        let f = FinFunctor::identity(&cat);
        assert!(f.validate(&cat, &cat).is_valid());
    }
}
