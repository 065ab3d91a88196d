//! Candidate algebra data on a finite category and its law checkers.
//!
//! [`TensorData`] holds a binary operation on objects and morphisms together
//! with optional unit, associator and symmetry components. The checkers
//! enumerate every instance of each law and report one violation per failing
//! instance, in lexicographic order.

use super::fincat::{FinCat, FinFunctor};
use super::free::{free_mors, free_mors2, lists, mu_mor, mu_obj, nestings2, FreeMor, Variant};
use crate::ids::{MorId, ObjId};
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An isomorphism with its recorded inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoPair {
    pub fwd: MorId,
    pub inv: MorId,
}

/// Tensor tables and coherence data on a finite category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorData {
    /// (a, b) -> a (x) b
    pub obj: BTreeMap<(ObjId, ObjId), ObjId>,
    /// (f, g) -> f (x) g
    pub mor: BTreeMap<(MorId, MorId), MorId>,
    pub unit: Option<ObjId>,
    /// (a, b, c) -> components of (a(x)b)(x)c ~ a(x)(b(x)c)
    pub associator: BTreeMap<(ObjId, ObjId, ObjId), IsoPair>,
    /// (a, b) -> components of a(x)b ~ b(x)a
    pub symmetry: BTreeMap<(ObjId, ObjId), IsoPair>,
    /// Additional named isomorphism families for presentations, keyed by
    /// symbol and then by object tuple.
    pub extra_isos: BTreeMap<String, BTreeMap<Vec<ObjId>, IsoPair>>,
}

impl TensorData {
    pub fn obj_tensor(&self, a: &ObjId, b: &ObjId) -> Option<&ObjId> {
        self.obj.get(&(a.clone(), b.clone()))
    }

    pub fn mor_tensor(&self, f: &MorId, g: &MorId) -> Option<&MorId> {
        self.mor.get(&(f.clone(), g.clone()))
    }

    /// Left fold of the tensor over a nonempty list (or the unit for the
    /// empty list, when present).
    pub fn fold_obj(&self, list: &[ObjId]) -> Option<ObjId> {
        match list.split_first() {
            None => self.unit.clone(),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for o in rest {
                    acc = self.obj_tensor(&acc, o)?.clone();
                }
                Some(acc)
            }
        }
    }

    pub fn fold_mor(&self, cat: &FinCat, list: &[MorId]) -> Option<MorId> {
        match list.split_first() {
            None => {
                let unit = self.unit.as_ref()?;
                cat.identities.get(unit).cloned()
            }
            Some((first, rest)) => {
                let mut acc = first.clone();
                for m in rest {
                    acc = self.mor_tensor(&acc, m)?.clone();
                }
                Some(acc)
            }
        }
    }
}

pub(crate) fn iso_pair_is_valid(
    cat: &FinCat,
    iso: &IsoPair,
    src: &ObjId,
    tgt: &ObjId,
) -> Result<(), String> {
    let (fs, ft) = cat
        .morphisms
        .get(&iso.fwd)
        .ok_or_else(|| format!("unknown morphism {}", iso.fwd))?;
    if (fs, ft) != (src, tgt) {
        return Err(format!("{}: {fs} -> {ft}, expected {src} -> {tgt}", iso.fwd));
    }
    let (is_, it) = cat
        .morphisms
        .get(&iso.inv)
        .ok_or_else(|| format!("unknown morphism {}", iso.inv))?;
    if (is_, it) != (tgt, src) {
        return Err(format!("{}: {is_} -> {it}, expected {tgt} -> {src}", iso.inv));
    }
    let id_src = &cat.identities[src];
    let id_tgt = &cat.identities[tgt];
    if cat.compose(&iso.inv, &iso.fwd).as_ref() != Ok(id_src) {
        return Err(format!("{}.{} != id", iso.inv, iso.fwd));
    }
    if cat.compose(&iso.fwd, &iso.inv).as_ref() != Ok(id_tgt) {
        return Err(format!("{}.{} != id", iso.fwd, iso.inv));
    }
    Ok(())
}

/// Totality and bifunctoriality of the tensor tables. Run first by every
/// other checker.
pub fn check_tensor_tables(cat: &FinCat, t: &TensorData) -> Report {
    let mut report = Report::default();
    for a in &cat.objects {
        for b in &cat.objects {
            match t.obj_tensor(a, b) {
                None => report.push("tensor-obj-missing", format!("({a},{b})")),
                Some(ab) => {
                    if !cat.objects.contains(ab) {
                        report.push("tensor-obj-unknown", format!("({a},{b}) -> {ab}"));
                    }
                }
            }
        }
    }
    for (f, (fs, ft)) in &cat.morphisms {
        for (g, (gs, gt)) in &cat.morphisms {
            match t.mor_tensor(f, g) {
                None => report.push("tensor-mor-missing", format!("({f},{g})")),
                Some(fg) => match cat.morphisms.get(fg) {
                    None => report.push("tensor-mor-unknown", format!("({f},{g}) -> {fg}")),
                    Some((s, t2)) => {
                        let want_s = t.obj_tensor(fs, gs);
                        let want_t = t.obj_tensor(ft, gt);
                        if Some(s) != want_s || Some(t2) != want_t {
                            report.push("tensor-mor-ill-typed", format!("({f},{g}) -> {fg}"));
                        }
                    }
                },
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    for a in &cat.objects {
        for b in &cat.objects {
            let ida = &cat.identities[a];
            let idb = &cat.identities[b];
            let ab = t.obj_tensor(a, b).unwrap();
            if t.mor_tensor(ida, idb) != cat.identities.get(ab) {
                report.push("tensor-identity", format!("id_{a} (x) id_{b}"));
            }
        }
    }
    // interchange with composition
    for (f1, (_, f1t)) in &cat.morphisms {
        for (f2, (f2s, _)) in &cat.morphisms {
            if f2s != f1t {
                continue;
            }
            for (g1, (_, g1t)) in &cat.morphisms {
                for (g2, (g2s, _)) in &cat.morphisms {
                    if g2s != g1t {
                        continue;
                    }
                    let lhs = {
                        let a = t.mor_tensor(f1, g1).unwrap();
                        let b = t.mor_tensor(f2, g2).unwrap();
                        cat.compose(b, a).ok()
                    };
                    let rhs = {
                        let a = cat.compose(f2, f1).unwrap();
                        let b = cat.compose(g2, g1).unwrap();
                        t.mor_tensor(&a, &b).cloned()
                    };
                    if lhs != rhs {
                        report.push(
                            "tensor-interchange",
                            format!("({f2}.{f1}) (x) ({g2}.{g1})"),
                        );
                    }
                }
            }
        }
    }
    report
}

/// The strict T-algebra laws for the induced functor h: TC -> C that folds
/// lists with the tensor. Checks the unit square, the multiplication square
/// on nested instances, functoriality of h, and (in the symmetric variant)
/// that permutation morphisms can be interpreted strictly.
pub fn check_algebra(cat: &FinCat, t: &TensorData, variant: Variant, max_leaves: usize) -> Report {
    let mut report = check_tensor_tables(cat, t);
    if !report.is_valid() {
        return report;
    }
    for ((a, b, c), iso) in &t.associator {
        if !cat.is_identity(&iso.fwd) {
            report.push(
                "strict-mode-nonidentity-associator",
                format!("alpha_({a},{b},{c}) = {}", iso.fwd),
            );
        }
    }
    for ((a, b), iso) in &t.symmetry {
        if !cat.is_identity(&iso.fwd) {
            report.push(
                "strict-mode-nonidentity-symmetry",
                format!("sigma_({a},{b}) = {}", iso.fwd),
            );
        }
    }
    // h . eta = id on objects and morphisms
    for a in &cat.objects {
        if t.fold_obj(&[a.clone()]).as_ref() != Some(a) {
            report.push("unit-square-object", a.to_string());
        }
    }
    for f in cat.morphism_ids() {
        if t.fold_mor(cat, &[f.clone()]).as_ref() != Some(f) {
            report.push("unit-square-morphism", f.to_string());
        }
    }
    // h . mu = h . Th on nested objects
    for nest in nestings2(&cat.objects, false, max_leaves) {
        let via_mu = t.fold_obj(&mu_obj(&nest));
        let folded: Option<Vec<ObjId>> = nest.iter().map(|b| t.fold_obj(b)).collect();
        let via_th = folded.and_then(|l| t.fold_obj(&l));
        if via_mu != via_th || via_mu.is_none() {
            report.push("mu-square-object", format!("{nest:?}"));
        }
    }

    // h on free morphisms; strict interpretation of permutations
    let apply_h = |m: &FreeMor<MorId>| -> Result<MorId, String> {
        let folded = t
            .fold_mor(cat, &m.comps)
            .ok_or_else(|| format!("tensor undefined on {:?}", m.comps))?;
        // target must be the fold of the target list in target order
        let mut tgt_list = vec![ObjId::new(""); m.comps.len()];
        for (i, c) in m.comps.iter().enumerate() {
            tgt_list[m.perm[i]] = cat.tgt(c).map_err(|e| e.to_string())?.clone();
        }
        let want_tgt = t
            .fold_obj(&tgt_list)
            .ok_or_else(|| format!("tensor undefined on {tgt_list:?}"))?;
        let found_tgt = cat.tgt(&folded).map_err(|e| e.to_string())?;
        if *found_tgt != want_tgt {
            return Err(format!(
                "fold of {:?} lands at {found_tgt}, strict target is {want_tgt}",
                m.comps
            ));
        }
        Ok(folded)
    };

    let tobjs = lists(&cat.objects, 1, max_leaves.min(3));
    for x in &tobjs {
        for y in &tobjs {
            for m in free_mors(cat, variant, x, y) {
                if let Err(e) = apply_h(&m) {
                    report.push("strict-interpretation", e);
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // functoriality of h on composable pairs
    for x in &tobjs {
        for y in &tobjs {
            for m1 in free_mors(cat, variant, x, y) {
                for z in &tobjs {
                    for m2 in free_mors(cat, variant, y, z) {
                        let comp = super::free::compose_free(cat, &m2, &m1).unwrap();
                        let lhs = apply_h(&comp).unwrap();
                        let rhs = cat.compose(&apply_h(&m2).unwrap(), &apply_h(&m1).unwrap());
                        if rhs.as_ref() != Ok(&lhs) {
                            report.push(
                                "h-functoriality",
                                format!("h({m2:?} . {m1:?})"),
                            );
                        }
                    }
                }
            }
        }
    }
    // h . mu = h . Th on nested morphisms
    let nests = nestings2(&cat.objects, false, max_leaves.min(3));
    for x in &nests {
        for y in &nests {
            for m in free_mors2(cat, variant, x, y) {
                let via_mu = apply_h(&mu_mor(&m));
                let th = FreeMor {
                    perm: m.perm.clone(),
                    comps: m
                        .comps
                        .iter()
                        .map(apply_h)
                        .collect::<Result<Vec<_>, _>>()
                        .expect("inner folds checked above"),
                };
                let via_th = apply_h(&th);
                if via_mu != via_th {
                    report.push("mu-square-morphism", format!("{m:?}"));
                }
            }
        }
    }
    report
}

/// The T-algebra morphism square g . TF = F . h for a functor F between two
/// algebras.
pub fn check_algebra_morphism(
    src_cat: &FinCat,
    src_tensor: &TensorData,
    tgt_cat: &FinCat,
    tgt_tensor: &TensorData,
    functor: &FinFunctor,
    max_leaves: usize,
) -> Report {
    let mut report = functor.validate(src_cat, tgt_cat);
    if !report.is_valid() {
        return report;
    }
    for list in lists(&src_cat.objects, 1, max_leaves) {
        let via_h = src_tensor
            .fold_obj(&list)
            .map(|o| functor.obj.get(&o).cloned());
        let mapped: Vec<ObjId> = list.iter().map(|o| functor.obj[o].clone()).collect();
        let via_tf = tgt_tensor.fold_obj(&mapped).map(Some);
        if via_h != via_tf || via_h.is_none() {
            report.push("algebra-morphism-object", format!("{list:?}"));
        }
    }
    let mors: Vec<MorId> = src_cat.morphism_ids().cloned().collect();
    for f in &mors {
        for g in &mors {
            let via_h = src_tensor
                .mor_tensor(f, g)
                .map(|m| functor.mor.get(m).cloned());
            let via_tf = tgt_tensor
                .mor_tensor(&functor.mor[f], &functor.mor[g])
                .map(|m| Some(m.clone()));
            if via_h != via_tf || via_h.is_none() {
                report.push("algebra-morphism-mor", format!("({f},{g})"));
            }
        }
    }
    report
}

/// Naturality and isomorphy of the associator, then equality of the two
/// canonical rebracketing composites on every object quadruple.
pub fn check_associator_coherence(cat: &FinCat, t: &TensorData) -> Report {
    let mut report = check_tensor_tables(cat, t);
    if !report.is_valid() {
        return report;
    }
    for a in &cat.objects {
        for b in &cat.objects {
            for c in &cat.objects {
                let key = (a.clone(), b.clone(), c.clone());
                let src = t
                    .obj_tensor(t.obj_tensor(a, b).unwrap(), c)
                    .unwrap()
                    .clone();
                let tgt = t
                    .obj_tensor(a, t.obj_tensor(b, c).unwrap())
                    .unwrap()
                    .clone();
                match t.associator.get(&key) {
                    None => report.push("associator-missing", format!("({a},{b},{c})")),
                    Some(iso) => {
                        if let Err(e) = iso_pair_is_valid(cat, iso, &src, &tgt) {
                            report.push("associator-not-iso", format!("({a},{b},{c}): {e}"));
                        }
                    }
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let alpha = |a: &ObjId, b: &ObjId, c: &ObjId| -> MorId {
        t.associator[&(a.clone(), b.clone(), c.clone())].fwd.clone()
    };
    // naturality in all three variables
    for (f, (fa, fb)) in &cat.morphisms {
        for (g, (ga, gb)) in &cat.morphisms {
            for (h, (ha, hb)) in &cat.morphisms {
                let fg = t.mor_tensor(f, g).unwrap().clone();
                let lhs_mor = t.mor_tensor(&fg, h).unwrap().clone();
                let gh = t.mor_tensor(g, h).unwrap().clone();
                let rhs_mor = t.mor_tensor(f, &gh).unwrap().clone();
                let lhs = cat.compose(&alpha(fb, gb, hb), &lhs_mor).unwrap();
                let rhs = cat.compose(&rhs_mor, &alpha(fa, ga, ha)).unwrap();
                if lhs != rhs {
                    report.push("associator-naturality", format!("({f},{g},{h})"));
                }
            }
        }
    }
    // the two derived rebracketings ((a b) c) d -> a (b (c d)) agree
    for a in &cat.objects {
        for b in &cat.objects {
            for c in &cat.objects {
                for d in &cat.objects {
                    let ab = t.obj_tensor(a, b).unwrap().clone();
                    let bc = t.obj_tensor(b, c).unwrap().clone();
                    let cd = t.obj_tensor(c, d).unwrap().clone();
                    let id_a = cat.identities[a].clone();
                    let id_d = cat.identities[d].clone();
                    // route one: alpha on the left pair, alpha across, then
                    // whiskered alpha on the right
                    let step1 = t.mor_tensor(&alpha(a, b, c), &id_d).unwrap().clone();
                    let step2 = alpha(a, &bc, d);
                    let step3 = t.mor_tensor(&id_a, &alpha(b, c, d)).unwrap().clone();
                    let route1 = cat
                        .compose(&step3, &cat.compose(&step2, &step1).unwrap())
                        .unwrap();
                    // route two: two alphas
                    let route2 = cat
                        .compose(&alpha(a, b, &cd), &alpha(&ab, c, d))
                        .unwrap();
                    if route1 != route2 {
                        report.push("rebracketing-coequation", format!("({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }
    report
}

/// Naturality, isomorphy and the involution law for the symmetry.
pub fn check_symmetry(cat: &FinCat, t: &TensorData) -> Report {
    let mut report = check_tensor_tables(cat, t);
    if !report.is_valid() {
        return report;
    }
    for a in &cat.objects {
        for b in &cat.objects {
            let key = (a.clone(), b.clone());
            let src = t.obj_tensor(a, b).unwrap().clone();
            let tgt = t.obj_tensor(b, a).unwrap().clone();
            match t.symmetry.get(&key) {
                None => report.push("symmetry-missing", format!("({a},{b})")),
                Some(iso) => {
                    if let Err(e) = iso_pair_is_valid(cat, iso, &src, &tgt) {
                        report.push("symmetry-not-iso", format!("({a},{b}): {e}"));
                    }
                }
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let sigma = |a: &ObjId, b: &ObjId| -> MorId { t.symmetry[&(a.clone(), b.clone())].fwd.clone() };
    for (f, (fa, fb)) in &cat.morphisms {
        for (g, (ga, gb)) in &cat.morphisms {
            let fg = t.mor_tensor(f, g).unwrap().clone();
            let gf = t.mor_tensor(g, f).unwrap().clone();
            let lhs = cat.compose(&sigma(fb, gb), &fg).unwrap();
            let rhs = cat.compose(&gf, &sigma(fa, ga)).unwrap();
            if lhs != rhs {
                report.push("symmetry-naturality", format!("({f},{g})"));
            }
        }
    }
    for a in &cat.objects {
        for b in &cat.objects {
            let ab = t.obj_tensor(a, b).unwrap().clone();
            let id_ab = cat.identities[&ab].clone();
            let twice = cat.compose(&sigma(b, a), &sigma(a, b)).unwrap();
            if twice != id_ab {
                report.push("symmetry-involution", format!("sigma^2 at ({a},{b}) = {twice}"));
            }
        }
    }
    report
}

/// The compatibility hexagon between the associator and the symmetry.
pub fn check_hexagon(cat: &FinCat, t: &TensorData) -> Report {
    let mut report = check_tensor_tables(cat, t);
    if !report.is_valid() {
        return report;
    }
    for a in &cat.objects {
        for b in &cat.objects {
            for c in &cat.objects {
                let ab_ok = t
                    .associator
                    .contains_key(&(a.clone(), b.clone(), c.clone()));
                if !ab_ok {
                    report.push("hexagon-missing-associator", format!("({a},{b},{c})"));
                }
            }
            if !t.symmetry.contains_key(&(a.clone(), b.clone())) {
                report.push("hexagon-missing-symmetry", format!("({a},{b})"));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let alpha = |a: &ObjId, b: &ObjId, c: &ObjId| -> MorId {
        t.associator[&(a.clone(), b.clone(), c.clone())].fwd.clone()
    };
    let sigma = |a: &ObjId, b: &ObjId| -> MorId { t.symmetry[&(a.clone(), b.clone())].fwd.clone() };
    for a in &cat.objects {
        for b in &cat.objects {
            for c in &cat.objects {
                let bc = t.obj_tensor(b, c).unwrap().clone();
                let id_b = cat.identities[b].clone();
                let id_c = cat.identities[c].clone();
                // top route: alpha, swap a across b(x)c, alpha
                let top = cat
                    .compose(
                        &alpha(b, c, a),
                        &cat.compose(&sigma(a, &bc), &alpha(a, b, c)).unwrap(),
                    )
                    .unwrap();
                // bottom route: swap inside, alpha, swap inside
                let s1 = t.mor_tensor(&sigma(a, b), &id_c).unwrap().clone();
                let s2 = alpha(b, a, c);
                let s3 = t.mor_tensor(&id_b, &sigma(a, c)).unwrap().clone();
                let bottom = cat.compose(&s3, &cat.compose(&s2, &s1).unwrap()).unwrap();
                if top != bottom {
                    report.push("hexagon", format!("({a},{b},{c})"));
                }
            }
        }
    }
    report
}

/// Left/right unitor existence and naturality in unital mode. The unit
/// axioms are only sketched in the source material; this check is the
/// standard extrapolation and says so in its report.
pub fn check_unitors(cat: &FinCat, t: &TensorData) -> Report {
    let mut report = check_tensor_tables(cat, t);
    report.note("unit-object laws are an extrapolation beyond the presented axioms");
    if !report.is_valid() {
        return report;
    }
    let Some(unit) = t.unit.clone() else {
        report.push("unit-missing", "no unit object in tensor data");
        return report;
    };
    for a in &cat.objects {
        for (name, src) in [
            ("left-unitor", t.obj_tensor(&unit, a).unwrap().clone()),
            ("right-unitor", t.obj_tensor(a, &unit).unwrap().clone()),
        ] {
            let provided = t
                .extra_isos
                .get(name)
                .and_then(|m| m.get(&vec![a.clone()]));
            match provided {
                Some(iso) => {
                    if let Err(e) = iso_pair_is_valid(cat, iso, &src, a) {
                        report.push("unitor-not-iso", format!("{name}({a}): {e}"));
                    }
                }
                None => {
                    // strict reading: unit (x) a must literally equal a
                    if &src != a {
                        report.push("unitor-missing", format!("{name}({a}): {src} != {a}"));
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn commutative_monoid_passes_all_checkers() {
        let (cat, t) = fixtures::cmonoid_c3();
        assert!(check_tensor_tables(&cat, &t).is_valid());
        assert!(check_associator_coherence(&cat, &t).is_valid());
        assert!(check_symmetry(&cat, &t).is_valid());
        assert!(check_hexagon(&cat, &t).is_valid());
        assert!(check_algebra(&cat, &t, Variant::S, 4).is_valid());
        assert!(check_algebra(&cat, &t, Variant::M, 4).is_valid());
        assert!(check_unitors(&cat, &t).is_valid());
    }

    #[test]
    fn noncommutative_monoid_fails_symmetry_with_witness() {
        let (cat, t) = fixtures::ncmonoid_s3();
        let report = check_symmetry(&cat, &t);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "symmetry-missing"));
        // associativity is fine
        assert!(check_associator_coherence(&cat, &t).is_valid());
        // the strict algebra exists in M mode but not S mode
        assert!(check_algebra(&cat, &t, Variant::M, 3).is_valid());
        let s_mode = check_algebra(&cat, &t, Variant::S, 3);
        assert!(s_mode
            .violations
            .iter()
            .any(|v| v.code == "strict-interpretation"));
    }

    #[test]
    fn perturbed_symmetry_fails_involution() {
        let (cat, t) = fixtures::perturbed_sigma_z4();
        let report = check_symmetry(&cat, &t);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "symmetry-involution"));
        assert!(check_associator_coherence(&cat, &t).is_valid());
        assert!(!check_hexagon(&cat, &t).is_valid());
    }

    #[test]
    fn perturbed_associator_fails_rebracketing_with_named_quadruple() {
        let (cat, t) = fixtures::perturbed_alpha_z4();
        let report = check_associator_coherence(&cat, &t);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "rebracketing-coequation" && v.witness.contains("(s,s,s,s)")));
    }

    #[test]
    fn noncommutative_monoid_morphism_instance_names_the_swap() {
        let (cat, t) = fixtures::ncmonoid_s3();
        let report = check_algebra(&cat, &t, Variant::S, 2);
        let hit = report
            .violations
            .iter()
            .find(|v| v.code == "strict-interpretation")
            .expect("swap instance fails");
        assert!(hit.witness.contains("strict target"));
    }

    #[test]
    fn monoid_hom_is_an_algebra_morphism() {
        // fold Z4 onto Z2: 0,2 -> 0 and 1,3 -> 1
        let (c4, t4) = fixtures::cmonoid_zn(4);
        let (c2, t2) = fixtures::cmonoid_zn(2);
        let functor = FinFunctor {
            obj: (0..4)
                .map(|i| (ObjId::new(format!("{i}")), ObjId::new(format!("{}", i % 2))))
                .collect(),
            mor: (0..4)
                .map(|i| {
                    (
                        MorId::new(format!("id{i}")),
                        MorId::new(format!("id{}", i % 2)),
                    )
                })
                .collect(),
        };
        let report = check_algebra_morphism(&c4, &t4, &c2, &t2, &functor, 3);
        assert!(report.is_valid(), "{report}");
        // a non-multiplicative map fails with a witness
        let bad = FinFunctor {
            obj: (0..4)
                .map(|i| {
                    (
                        ObjId::new(format!("{i}")),
                        ObjId::new(format!("{}", usize::from(i == 3))),
                    )
                })
                .collect(),
            mor: (0..4)
                .map(|i| {
                    (
                        MorId::new(format!("id{i}")),
                        MorId::new(format!("id{}", usize::from(i == 3))),
                    )
                })
                .collect(),
        };
        let report = check_algebra_morphism(&c4, &t4, &c2, &t2, &bad, 3);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code.starts_with("algebra-morphism")));
    }
}
