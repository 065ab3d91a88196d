//! The free (symmetric) strict monoidal category monad on finite categories,
//! truncated to bounded list length, together with its monad structure.
//!
//! Objects of the free construction are lists of base objects; a morphism
//! between two lists of equal length is a permutation together with a
//! componentwise choice of base morphisms. In the non-symmetric variant the
//! permutation is forced to be the identity. The monad multiplication is
//! list flattening; on morphisms it flattens a permutation of blocks with
//! inner permutations into one permutation of the flattened list.

use super::fincat::{FinCat, FinCatError};
use crate::ids::{MorId, ObjId};
use crate::report::Report;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Which monad: plain monoidal (M) or symmetric monoidal (S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    M,
    S,
}

impl Variant {
    fn perms(&self, n: usize) -> Vec<Vec<usize>> {
        match self {
            Variant::M => vec![(0..n).collect()],
            Variant::S => {
                if n == 0 {
                    vec![Vec::new()]
                } else {
                    (0..n).permutations(n).collect()
                }
            }
        }
    }
}

/// A morphism of the free construction over component morphisms of type `M`:
/// position `i` of the source maps to slot `perm[i]` of the target via
/// `comps[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FreeMor<M> {
    pub perm: Vec<usize>,
    pub comps: Vec<M>,
}

/// Monad unit on objects: a singleton list.
pub fn eta_obj<T: Clone>(x: &T) -> Vec<T> {
    vec![x.clone()]
}

/// Monad multiplication on objects: flatten.
pub fn mu_obj<T: Clone>(x: &[Vec<T>]) -> Vec<T> {
    x.iter().flatten().cloned().collect()
}

/// Monad unit on morphisms.
pub fn eta_mor<M: Clone>(m: &M) -> FreeMor<M> {
    FreeMor {
        perm: vec![0],
        comps: vec![m.clone()],
    }
}

/// Monad multiplication on morphisms: flatten a permutation of blocks with
/// inner permutations into one permutation of the flattened list.
pub fn mu_mor<M: Clone>(m: &FreeMor<FreeMor<M>>) -> FreeMor<M> {
    let src_sizes: Vec<usize> = m.comps.iter().map(|c| c.comps.len()).collect();
    let mut tgt_sizes = vec![0usize; m.perm.len()];
    for (i, &p) in m.perm.iter().enumerate() {
        tgt_sizes[p] = src_sizes[i];
    }
    let tgt_offsets: Vec<usize> = tgt_sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total: usize = src_sizes.iter().sum();
    let mut perm = vec![0usize; total];
    let mut comps = Vec::with_capacity(total);
    let mut src_pos = 0;
    for (i, inner) in m.comps.iter().enumerate() {
        let off = tgt_offsets[m.perm[i]];
        for (j, c) in inner.comps.iter().enumerate() {
            perm[src_pos + j] = off + inner.perm[j];
            comps.push(c.clone());
        }
        src_pos += inner.comps.len();
    }
    FreeMor { perm, comps }
}

fn obj_name(list: &[ObjId]) -> ObjId {
    ObjId::new(format!("[{}]", list.iter().map(|o| o.as_str()).join(",")))
}

fn mor_name(m: &FreeMor<MorId>) -> MorId {
    MorId::new(format!(
        "({})[{}]",
        m.perm.iter().join(","),
        m.comps.iter().map(|c| c.as_str()).join(",")
    ))
}

/// All lists of base objects with lengths in the given range.
pub fn lists(base: &[ObjId], min_len: usize, max_len: usize) -> Vec<Vec<ObjId>> {
    let mut out = Vec::new();
    for n in min_len..=max_len {
        if n == 0 {
            out.push(Vec::new());
            continue;
        }
        out.extend(
            std::iter::repeat(base.iter().cloned())
                .take(n)
                .multi_cartesian_product(),
        );
    }
    out
}

/// All free morphisms from `x` to `y` over the base category.
pub fn free_mors(
    base: &FinCat,
    variant: Variant,
    x: &[ObjId],
    y: &[ObjId],
) -> Vec<FreeMor<MorId>> {
    if x.len() != y.len() {
        return Vec::new();
    }
    let n = x.len();
    let mut out = Vec::new();
    for perm in variant.perms(n) {
        let choices: Vec<Vec<MorId>> = (0..n).map(|i| base.hom(&x[i], &y[perm[i]])).collect();
        if choices.iter().any(|c| c.is_empty()) && n > 0 {
            continue;
        }
        if n == 0 {
            out.push(FreeMor {
                perm: Vec::new(),
                comps: Vec::new(),
            });
            continue;
        }
        for comps in choices.into_iter().multi_cartesian_product() {
            out.push(FreeMor {
                perm: perm.clone(),
                comps,
            });
        }
    }
    out
}

/// Compose free morphisms: `second . first`.
pub fn compose_free(
    base: &FinCat,
    second: &FreeMor<MorId>,
    first: &FreeMor<MorId>,
) -> Result<FreeMor<MorId>, FinCatError> {
    assert_eq!(first.perm.len(), second.perm.len());
    let n = first.perm.len();
    let mut perm = vec![0usize; n];
    let mut comps = Vec::with_capacity(n);
    for i in 0..n {
        perm[i] = second.perm[first.perm[i]];
        comps.push(base.compose(&second.comps[first.perm[i]], &first.comps[i])?);
    }
    Ok(FreeMor { perm, comps })
}

/// Materialize the truncation of the free (symmetric) strict monoidal
/// category on `base` to lists of length at most `k` (length 0 allowed in
/// unital mode) as a finite category.
pub fn free_monoidal(
    base: &FinCat,
    variant: Variant,
    unital: bool,
    k: usize,
) -> Result<FinCat, FinCatError> {
    assert!(k >= 1, "truncation must allow length-1 lists");
    let min_len = if unital { 0 } else { 1 };
    let all_lists = lists(&base.objects, min_len, k);

    let mut cat = FinCat::default();
    let mut mor_values: BTreeMap<MorId, (Vec<ObjId>, Vec<ObjId>, FreeMor<MorId>)> = BTreeMap::new();

    for x in &all_lists {
        cat.objects.push(obj_name(x));
    }
    for x in &all_lists {
        for y in &all_lists {
            for m in free_mors(base, variant, x, y) {
                let name = mor_name(&m);
                cat.morphisms
                    .insert(name.clone(), (obj_name(x), obj_name(y)));
                mor_values.insert(name, (x.clone(), y.clone(), m));
            }
        }
    }
    for x in &all_lists {
        let id = FreeMor {
            perm: (0..x.len()).collect(),
            comps: x
                .iter()
                .map(|o| base.identity(o).cloned())
                .collect::<Result<_, _>>()?,
        };
        cat.identities.insert(obj_name(x), mor_name(&id));
    }
    let entries: Vec<_> = mor_values.iter().collect();
    for (gname, (gx, _, g)) in &entries {
        for (fname, (_, fy, f)) in &entries {
            if fy != gx {
                continue;
            }
            let h = compose_free(base, g, f)?;
            cat.comp
                .insert(((*gname).clone(), (*fname).clone()), mor_name(&h));
        }
    }
    Ok(cat)
}

/// All depth-2 nestings over the base objects with at most `max_leaves`
/// leaves in total (and at most `max_leaves` blocks).
pub fn nestings2(base: &[ObjId], unital: bool, max_leaves: usize) -> Vec<Vec<Vec<ObjId>>> {
    let min = usize::from(!unital);
    let mut out = Vec::new();
    let max_blocks = max_leaves.max(1);
    for blocks in min..=max_blocks {
        // block sizes
        let sizes: Vec<Vec<usize>> = std::iter::repeat(min..=max_leaves)
            .take(blocks)
            .multi_cartesian_product()
            .filter(|s| s.iter().sum::<usize>() <= max_leaves)
            .collect();
        for shape in sizes {
            let block_choices: Vec<Vec<Vec<ObjId>>> =
                shape.iter().map(|&n| lists(base, n, n)).collect();
            if blocks == 0 {
                out.push(Vec::new());
                continue;
            }
            for combo in block_choices.into_iter().multi_cartesian_product() {
                out.push(combo);
            }
        }
    }
    out
}

/// All depth-3 nestings with at most `max_leaves` leaves.
pub fn nestings3(base: &[ObjId], unital: bool, max_leaves: usize) -> Vec<Vec<Vec<Vec<ObjId>>>> {
    let min = usize::from(!unital);
    let mut out = Vec::new();
    let max_blocks = max_leaves.max(1);
    for blocks in min..=max_blocks {
        let sizes: Vec<Vec<usize>> = std::iter::repeat(min..=max_leaves)
            .take(blocks)
            .multi_cartesian_product()
            .filter(|s| s.iter().sum::<usize>() <= max_leaves)
            .collect();
        for shape in sizes {
            let block_choices: Vec<Vec<Vec<Vec<ObjId>>>> = shape
                .iter()
                .map(|&n| {
                    nestings2(base, unital, n)
                        .into_iter()
                        .filter(|b| b.iter().map(Vec::len).sum::<usize>() == n)
                        .collect()
                })
                .collect();
            if blocks == 0 {
                out.push(Vec::new());
                continue;
            }
            for combo in block_choices.into_iter().multi_cartesian_product() {
                out.push(combo);
            }
        }
    }
    out
}

/// Free morphisms one level up: between depth-2 nestings.
pub fn free_mors2(
    base: &FinCat,
    variant: Variant,
    x: &[Vec<ObjId>],
    y: &[Vec<ObjId>],
) -> Vec<FreeMor<FreeMor<MorId>>> {
    if x.len() != y.len() {
        return Vec::new();
    }
    let n = x.len();
    let mut out = Vec::new();
    for perm in variant.perms(n) {
        let choices: Vec<Vec<FreeMor<MorId>>> = (0..n)
            .map(|i| free_mors(base, variant, &x[i], &y[perm[i]]))
            .collect();
        if n == 0 {
            out.push(FreeMor {
                perm: Vec::new(),
                comps: Vec::new(),
            });
            continue;
        }
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        for comps in choices.into_iter().multi_cartesian_product() {
            out.push(FreeMor {
                perm: perm.clone(),
                comps,
            });
        }
    }
    out
}

/// Free morphisms between depth-3 nestings.
pub fn free_mors3(
    base: &FinCat,
    variant: Variant,
    x: &[Vec<Vec<ObjId>>],
    y: &[Vec<Vec<ObjId>>],
) -> Vec<FreeMor<FreeMor<FreeMor<MorId>>>> {
    if x.len() != y.len() {
        return Vec::new();
    }
    let n = x.len();
    let mut out = Vec::new();
    for perm in variant.perms(n) {
        let choices: Vec<Vec<FreeMor<FreeMor<MorId>>>> = (0..n)
            .map(|i| free_mors2(base, variant, &x[i], &y[perm[i]]))
            .collect();
        if n == 0 {
            out.push(FreeMor {
                perm: Vec::new(),
                comps: Vec::new(),
            });
            continue;
        }
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        for comps in choices.into_iter().multi_cartesian_product() {
            out.push(FreeMor {
                perm: perm.clone(),
                comps,
            });
        }
    }
    out
}

/// Verify the monad laws on every instance inside the truncation: the unit
/// laws on free objects and morphisms of length at most `k`, and the
/// associativity square on triply nested instances with at most `k` leaves.
pub fn check_monad_laws(base: &FinCat, variant: Variant, unital: bool, k: usize) -> Report {
    let mut report = Report::default();
    let min = usize::from(!unital);
    let tobjs = lists(&base.objects, min.max(1).min(k), k);
    let tobjs = if unital {
        let mut v = vec![Vec::new()];
        v.extend(tobjs);
        v
    } else {
        tobjs
    };

    // unit laws on objects
    for x in &tobjs {
        let eta_t: Vec<Vec<ObjId>> = vec![x.clone()];
        if mu_obj(&eta_t) != *x {
            report.push("mu-etaT-object", format!("{x:?}"));
        }
        let t_eta: Vec<Vec<ObjId>> = x.iter().map(eta_obj).collect();
        if mu_obj(&t_eta) != *x {
            report.push("mu-Teta-object", format!("{x:?}"));
        }
    }
    // unit laws on morphisms
    for x in &tobjs {
        for y in &tobjs {
            for m in free_mors(base, variant, x, y) {
                let eta_t = FreeMor {
                    perm: vec![0],
                    comps: vec![m.clone()],
                };
                if mu_mor(&eta_t) != m {
                    report.push("mu-etaT-morphism", format!("{m:?}"));
                }
                let t_eta = FreeMor {
                    perm: m.perm.clone(),
                    comps: m.comps.iter().map(eta_mor).collect(),
                };
                if mu_mor(&t_eta) != m {
                    report.push("mu-Teta-morphism", format!("{m:?}"));
                }
            }
        }
    }
    // associativity on objects
    for xx in nestings3(&base.objects, unital, k) {
        let t_mu: Vec<Vec<ObjId>> = xx.iter().map(|b| mu_obj(b)).collect();
        let mu_t: Vec<Vec<ObjId>> = mu_obj(&xx);
        if mu_obj(&t_mu) != mu_obj(&mu_t) {
            report.push("mu-square-object", format!("{xx:?}"));
        }
    }
    // associativity on morphisms
    let n3 = nestings3(&base.objects, unital, k);
    for x in &n3 {
        for y in &n3 {
            for m in free_mors3(base, variant, x, y) {
                let t_mu = FreeMor {
                    perm: m.perm.clone(),
                    comps: m.comps.iter().map(mu_mor).collect(),
                };
                let via_t_mu = mu_mor(&t_mu);
                let via_mu_t = mu_mor(&mu_mor(&m));
                if via_t_mu != via_mu_t {
                    report.push("mu-square-morphism", format!("{m:?}"));
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
    use crate::monoidal::fincat::validate_fincat;

    fn one_object_discrete() -> FinCat {
        fixtures::discrete_monoid_cat(&fixtures::monoid_trivial())
    }

    #[test]
    fn free_m_on_one_object_has_singleton_homs() {
        let base = one_object_discrete();
        let free = free_monoidal(&base, Variant::M, false, 3).unwrap();
        assert_eq!(free.objects.len(), 3);
        for x in &free.objects {
            for y in &free.objects {
                let h = free.hom(x, y);
                assert_eq!(h.len(), usize::from(x == y));
            }
        }
        assert!(validate_fincat(&free).is_valid());
    }

    #[test]
    fn free_s_hom_counts_are_factorials() {
        let base = one_object_discrete();
        let free = free_monoidal(&base, Variant::S, false, 4).unwrap();
        let obj = |n: usize| {
            ObjId::new(format!(
                "[{}]",
                std::iter::repeat("e").take(n).collect::<Vec<_>>().join(",")
            ))
        };
        for (n, expect) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            assert_eq!(free.hom(&obj(n), &obj(n)).len(), expect, "n = {n}");
        }
        assert!(validate_fincat(&free).is_valid());
    }

    #[test]
    fn flatten_is_associative_by_hand() {
        let a = ObjId::from("a");
        let b = ObjId::from("b");
        let c = ObjId::from("c");
        let nested = vec![vec![a.clone()], vec![b.clone(), c.clone()]];
        assert_eq!(mu_obj(&nested), vec![a, b, c]);
    }

    #[test]
    fn mu_mor_flattens_block_permutations() {
        // two blocks swapped, inner permutations nontrivial
        let f = |s: &str| MorId::from(s);
        let inner1 = FreeMor {
            perm: vec![1, 0],
            comps: vec![f("p"), f("q")],
        };
        let inner2 = FreeMor {
            perm: vec![0],
            comps: vec![f("r")],
        };
        let outer = FreeMor {
            perm: vec![1, 0],
            comps: vec![inner1, inner2],
        };
        let flat = mu_mor(&outer);
        // block 0 (size 2) lands at target block 1 (offset 1), block 1 at 0
        assert_eq!(flat.perm, vec![2, 1, 0]);
        assert_eq!(flat.comps, vec![f("p"), f("q"), f("r")]);
    }

    #[test]
    fn monad_laws_hold_on_small_bases() {
        for variant in [Variant::M, Variant::S] {
            for base in [
                one_object_discrete(),
                fixtures::discrete_monoid_cat(&fixtures::monoid_c3()),
                fixtures::cyclic_group_cat(2),
            ] {
                let report = check_monad_laws(&base, variant, false, 3);
                assert!(report.is_valid(), "{variant:?}: {report}");
            }
        }
    }

    #[test]
    fn monad_laws_hold_in_unital_mode() {
        let base = one_object_discrete();
        for variant in [Variant::M, Variant::S] {
            let report = check_monad_laws(&base, variant, true, 2);
            assert!(report.is_valid(), "{report}");
        }
    }
}
