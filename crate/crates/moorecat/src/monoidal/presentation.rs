//! Symbolic presentations of tensor-law checkers.
//!
//! A presentation starts from generating operation symbols with arities and
//! adjoins, in order: further generators (coproducts), invertible 2-cells
//! between two derived operations (coinserters), and equations between two
//! parallel derived 2-cells (coequifiers). Compiling a presentation checks
//! its symbols and boundaries; running the compiled checker against a finite
//! category with tensor data evaluates every step over all argument tuples.
//!
//! The universal-property side — that the presented monad exists — is taken
//! as given; what is executable is whether a candidate algebra satisfies the
//! presented laws.

use super::fincat::FinCat;
use super::tensor::{check_tensor_tables, IsoPair, TensorData};
use crate::ids::{MorId, ObjId};
use crate::report::Report;
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("duplicate symbol {0}")]
    DuplicateSymbol(String),
    #[error("symbol {0} is not declared at its point of use")]
    UnknownSymbol(String),
    #[error("symbol {sym} used with {found} arguments, declared with {declared}")]
    ArityMismatch {
        sym: String,
        declared: usize,
        found: usize,
    },
    #[error("term {0} is not linear in variables 1..{1}")]
    NonLinear(String, usize),
    #[error("cell boundaries do not chain in {0}")]
    BoundaryMismatch(String),
    #[error("empty cell sequence in {0}")]
    EmptySeq(String),
    #[error("coequifier {0}: the two cells are not parallel")]
    NotParallel(String),
}

/// A derived operation: a tree over the operation symbols with variables
/// numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Var(usize),
    Op {
        op: String,
        #[serde(default)]
        args: Vec<Term>,
    },
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn op(sym: &str, args: Vec<Term>) -> Term {
        Term::Op {
            op: sym.to_string(),
            args,
        }
    }

    fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(i) => out.push(*i),
            Term::Op { args, .. } => args.iter().for_each(|a| a.vars(out)),
        }
    }

    fn subst(&self, args: &[Term]) -> Term {
        match self {
            Term::Var(i) => args[*i - 1].clone(),
            Term::Op { op, args: inner } => Term::Op {
                op: op.clone(),
                args: inner.iter().map(|t| t.subst(args)).collect(),
            },
        }
    }

    fn render(&self) -> String {
        match self {
            Term::Var(i) => i.to_string(),
            Term::Op { op, args } => {
                format!("{op}({})", args.iter().map(Term::render).join(","))
            }
        }
    }
}

/// A formal 2-cell built from coinserter isomorphisms, identities,
/// whiskering through operations, and vertical composition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellExpr {
    Id(Term),
    Iso {
        sym: String,
        #[serde(default)]
        rev: bool,
        args: Vec<Term>,
    },
    Seq(Vec<CellExpr>),
    Op { sym: String, args: Vec<CellExpr> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub sym: String,
    pub arity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationStep {
    /// Adjoin a further generating operation.
    Coproduct { sym: String, arity: usize },
    /// Adjoin an invertible 2-cell between two derived operations.
    Coinserter { sym: String, lhs: Term, rhs: Term },
    /// Force two parallel derived 2-cells to be equal.
    Coequifier {
        name: String,
        lhs: CellExpr,
        rhs: CellExpr,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadPresentation {
    pub name: String,
    pub generators: Vec<Generator>,
    pub steps: Vec<PresentationStep>,
}

#[derive(Debug, Clone)]
struct IsoDecl {
    lhs: Term,
    rhs: Term,
    nvars: usize,
}

/// A validated presentation, ready to run against candidate algebra data.
#[derive(Debug, Clone)]
pub struct CompiledChecker {
    pub name: String,
    ops: BTreeMap<String, usize>,
    coinserters: Vec<(String, IsoDecl)>,
    coequifiers: Vec<(String, CellExpr, CellExpr, usize)>,
}

fn check_linear(term: &Term, nvars: usize, err_ctx: &str) -> Result<(), PresentationError> {
    let mut vars = Vec::new();
    term.vars(&mut vars);
    let mut sorted = vars.clone();
    sorted.sort_unstable();
    if sorted != (1..=nvars).collect::<Vec<_>>() {
        return Err(PresentationError::NonLinear(err_ctx.to_string(), nvars));
    }
    Ok(())
}

fn check_term_ops(term: &Term, ops: &BTreeMap<String, usize>) -> Result<(), PresentationError> {
    if let Term::Op { op, args } = term {
        let declared = *ops
            .get(op)
            .ok_or_else(|| PresentationError::UnknownSymbol(op.clone()))?;
        if declared != args.len() {
            return Err(PresentationError::ArityMismatch {
                sym: op.clone(),
                declared,
                found: args.len(),
            });
        }
        for a in args {
            check_term_ops(a, ops)?;
        }
    }
    Ok(())
}

fn cell_boundary(
    cell: &CellExpr,
    ops: &BTreeMap<String, usize>,
    isos: &BTreeMap<String, IsoDecl>,
    ctx: &str,
) -> Result<(Term, Term), PresentationError> {
    match cell {
        CellExpr::Id(t) => {
            check_term_ops(t, ops)?;
            Ok((t.clone(), t.clone()))
        }
        CellExpr::Iso { sym, rev, args } => {
            let decl = isos
                .get(sym)
                .ok_or_else(|| PresentationError::UnknownSymbol(sym.clone()))?;
            if args.len() != decl.nvars {
                return Err(PresentationError::ArityMismatch {
                    sym: sym.clone(),
                    declared: decl.nvars,
                    found: args.len(),
                });
            }
            for a in args {
                check_term_ops(a, ops)?;
            }
            let src = decl.lhs.subst(args);
            let tgt = decl.rhs.subst(args);
            Ok(if *rev { (tgt, src) } else { (src, tgt) })
        }
        CellExpr::Seq(cells) => {
            let mut iter = cells.iter();
            let first = iter
                .next()
                .ok_or_else(|| PresentationError::EmptySeq(ctx.to_string()))?;
            let (src, mut tgt) = cell_boundary(first, ops, isos, ctx)?;
            for c in iter {
                let (s, t) = cell_boundary(c, ops, isos, ctx)?;
                if s != tgt {
                    return Err(PresentationError::BoundaryMismatch(format!(
                        "{ctx}: {} then {}",
                        tgt.render(),
                        s.render()
                    )));
                }
                tgt = t;
            }
            Ok((src, tgt))
        }
        CellExpr::Op { sym, args } => {
            let declared = *ops
                .get(sym)
                .ok_or_else(|| PresentationError::UnknownSymbol(sym.clone()))?;
            if declared != args.len() {
                return Err(PresentationError::ArityMismatch {
                    sym: sym.clone(),
                    declared,
                    found: args.len(),
                });
            }
            let mut srcs = Vec::new();
            let mut tgts = Vec::new();
            for a in args {
                let (s, t) = cell_boundary(a, ops, isos, ctx)?;
                srcs.push(s);
                tgts.push(t);
            }
            Ok((Term::op(sym, srcs), Term::op(sym, tgts)))
        }
    }
}

/// Validate symbols, arities, linearity and boundaries; produce a runnable
/// checker.
pub fn compile_presentation(
    p: &OperadPresentation,
) -> Result<CompiledChecker, PresentationError> {
    let mut ops: BTreeMap<String, usize> = BTreeMap::new();
    let mut isos: BTreeMap<String, IsoDecl> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let mut coinserters = Vec::new();
    let mut coequifiers = Vec::new();

    let declare = |sym: &str, seen: &mut BTreeSet<String>| {
        if !seen.insert(sym.to_string()) {
            Err(PresentationError::DuplicateSymbol(sym.to_string()))
        } else {
            Ok(())
        }
    };

    for g in &p.generators {
        declare(&g.sym, &mut seen)?;
        ops.insert(g.sym.clone(), g.arity);
    }
    for step in &p.steps {
        match step {
            PresentationStep::Coproduct { sym, arity } => {
                declare(sym, &mut seen)?;
                ops.insert(sym.clone(), *arity);
            }
            PresentationStep::Coinserter { sym, lhs, rhs } => {
                declare(sym, &mut seen)?;
                check_term_ops(lhs, &ops)?;
                check_term_ops(rhs, &ops)?;
                let mut vars = Vec::new();
                lhs.vars(&mut vars);
                let nvars = vars.len();
                check_linear(lhs, nvars, &lhs.render())?;
                check_linear(rhs, nvars, &rhs.render())?;
                let decl = IsoDecl {
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    nvars,
                };
                isos.insert(sym.clone(), decl.clone());
                coinserters.push((sym.clone(), decl));
            }
            PresentationStep::Coequifier { name, lhs, rhs } => {
                let (ls, lt) = cell_boundary(lhs, &ops, &isos, name)?;
                let (rs, rt) = cell_boundary(rhs, &ops, &isos, name)?;
                if ls != rs || lt != rt {
                    return Err(PresentationError::NotParallel(name.clone()));
                }
                let mut vars = Vec::new();
                ls.vars(&mut vars);
                lt.vars(&mut vars);
                let nvars = vars.iter().copied().max().unwrap_or(0);
                coequifiers.push((name.clone(), lhs.clone(), rhs.clone(), nvars));
            }
        }
    }
    Ok(CompiledChecker {
        name: p.name.clone(),
        ops,
        coinserters,
        coequifiers,
    })
}

/// Bind operation symbols to concrete tables: the (single) arity-2 symbol to
/// the tensor, an arity-0 symbol to the unit object.
struct OpBinding<'a> {
    cat: &'a FinCat,
    t: &'a TensorData,
    binary: Option<String>,
    nullary: Option<String>,
}

impl<'a> OpBinding<'a> {
    fn new(
        cat: &'a FinCat,
        t: &'a TensorData,
        ops: &BTreeMap<String, usize>,
    ) -> Result<Self, String> {
        let mut binary = None;
        let mut nullary = None;
        for (sym, arity) in ops {
            match arity {
                2 => {
                    if binary.replace(sym.clone()).is_some() {
                        return Err("more than one binary operation symbol".into());
                    }
                }
                0 => {
                    if nullary.replace(sym.clone()).is_some() {
                        return Err("more than one nullary operation symbol".into());
                    }
                }
                n => return Err(format!("no operation table for {sym} of arity {n}")),
            }
        }
        Ok(OpBinding {
            cat,
            t,
            binary,
            nullary,
        })
    }

    fn obj(&self, term: &Term, args: &[ObjId]) -> Result<ObjId, String> {
        match term {
            Term::Var(i) => Ok(args[*i - 1].clone()),
            Term::Op { op, args: inner } => {
                if Some(op) == self.binary.as_ref() {
                    let a = self.obj(&inner[0], args)?;
                    let b = self.obj(&inner[1], args)?;
                    self.t
                        .obj_tensor(&a, &b)
                        .cloned()
                        .ok_or_else(|| format!("tensor undefined on ({a},{b})"))
                } else if Some(op) == self.nullary.as_ref() {
                    self.t.unit.clone().ok_or_else(|| "no unit object".into())
                } else {
                    Err(format!("unbound operation symbol {op}"))
                }
            }
        }
    }

    fn mor(&self, term: &Term, args: &[MorId]) -> Result<MorId, String> {
        match term {
            Term::Var(i) => Ok(args[*i - 1].clone()),
            Term::Op { op, args: inner } => {
                if Some(op) == self.binary.as_ref() {
                    let a = self.mor(&inner[0], args)?;
                    let b = self.mor(&inner[1], args)?;
                    self.t
                        .mor_tensor(&a, &b)
                        .cloned()
                        .ok_or_else(|| format!("tensor undefined on ({a},{b})"))
                } else if Some(op) == self.nullary.as_ref() {
                    let unit = self.t.unit.as_ref().ok_or("no unit object")?;
                    self.cat
                        .identities
                        .get(unit)
                        .cloned()
                        .ok_or_else(|| format!("no identity at {unit}"))
                } else {
                    Err(format!("unbound operation symbol {op}"))
                }
            }
        }
    }

    fn iso(&self, sym: &str, key: &[ObjId]) -> Result<&'a IsoPair, String> {
        match sym {
            "assoc" => {
                let k = (key[0].clone(), key[1].clone(), key[2].clone());
                self.t
                    .associator
                    .get(&k)
                    .ok_or_else(|| format!("assoc component missing at ({},{},{})", key[0], key[1], key[2]))
            }
            "sym" => {
                let k = (key[0].clone(), key[1].clone());
                self.t
                    .symmetry
                    .get(&k)
                    .ok_or_else(|| format!("sym component missing at ({},{})", key[0], key[1]))
            }
            other => self
                .t
                .extra_isos
                .get(other)
                .and_then(|m| m.get(&key.to_vec()))
                .ok_or_else(|| format!("{other} component missing at {key:?}")),
        }
    }

    fn cell(&self, cell: &CellExpr, args: &[ObjId]) -> Result<MorId, String> {
        match cell {
            CellExpr::Id(t) => {
                let o = self.obj(t, args)?;
                self.cat
                    .identities
                    .get(&o)
                    .cloned()
                    .ok_or_else(|| format!("no identity at {o}"))
            }
            CellExpr::Iso { sym, rev, args: isoargs } => {
                let key: Vec<ObjId> = isoargs
                    .iter()
                    .map(|t| self.obj(t, args))
                    .collect::<Result<_, _>>()?;
                let pair = self.iso(sym, &key)?;
                Ok(if *rev { pair.inv.clone() } else { pair.fwd.clone() })
            }
            CellExpr::Seq(cells) => {
                let mut acc: Option<MorId> = None;
                for c in cells {
                    let m = self.cell(c, args)?;
                    acc = Some(match acc {
                        None => m,
                        Some(prev) => self
                            .cat
                            .compose(&m, &prev)
                            .map_err(|e| format!("cell composition: {e}"))?,
                    });
                }
                acc.ok_or_else(|| "empty cell sequence".into())
            }
            CellExpr::Op { sym, args: cells } => {
                if Some(sym) != self.binary.as_ref() {
                    return Err(format!("unbound operation symbol {sym} in cell"));
                }
                let a = self.cell(&cells[0], args)?;
                let b = self.cell(&cells[1], args)?;
                self.t
                    .mor_tensor(&a, &b)
                    .cloned()
                    .ok_or_else(|| format!("tensor undefined on ({a},{b})"))
            }
        }
    }
}

impl CompiledChecker {
    /// Run every step of the presentation against candidate algebra data:
    /// generator totality, coinserter existence + isomorphy + naturality,
    /// and coequifier equality over all argument tuples.
    pub fn run(&self, cat: &FinCat, t: &TensorData) -> Report {
        let mut report = Report::default();
        let binding = match OpBinding::new(cat, t, &self.ops) {
            Ok(b) => b,
            Err(e) => {
                report.push("unsupported-presentation", e);
                return report;
            }
        };
        if binding.binary.is_some() {
            report.merge(check_tensor_tables(cat, t));
        }
        if binding.nullary.is_some() && t.unit.is_none() {
            report.push("unit-missing", "presentation uses a nullary operation");
        }
        if !report.is_valid() {
            return report;
        }

        let tuples = |n: usize| -> Vec<Vec<ObjId>> {
            std::iter::repeat(cat.objects.iter().cloned())
                .take(n)
                .multi_cartesian_product()
                .collect()
        };

        for (sym, decl) in &self.coinserters {
            // existence and isomorphy of each component
            for objs in tuples(decl.nvars) {
                let src = match binding.obj(&decl.lhs, &objs) {
                    Ok(o) => o,
                    Err(e) => {
                        report.push("coinserter-eval", format!("{sym} at {objs:?}: {e}"));
                        continue;
                    }
                };
                let tgt = match binding.obj(&decl.rhs, &objs) {
                    Ok(o) => o,
                    Err(e) => {
                        report.push("coinserter-eval", format!("{sym} at {objs:?}: {e}"));
                        continue;
                    }
                };
                match binding.iso(sym, &objs) {
                    Err(e) => report.push("coinserter-missing", e),
                    Ok(pair) => {
                        if let Err(e) = super::tensor::iso_pair_is_valid(cat, pair, &src, &tgt) {
                            report.push("coinserter-not-iso", format!("{sym} at {objs:?}: {e}"));
                        }
                    }
                }
            }
            if !report.is_valid() {
                continue;
            }
            // naturality over all morphism tuples
            let all_mors: Vec<MorId> = cat.morphism_ids().cloned().collect();
            let mor_tuples: Vec<Vec<MorId>> = std::iter::repeat(all_mors.iter().cloned())
                .take(decl.nvars)
                .multi_cartesian_product()
                .collect();
            for mors in mor_tuples {
                let src_objs: Vec<ObjId> = mors
                    .iter()
                    .map(|m| cat.src(m).unwrap().clone())
                    .collect();
                let tgt_objs: Vec<ObjId> = mors
                    .iter()
                    .map(|m| cat.tgt(m).unwrap().clone())
                    .collect();
                let lhs_mor = binding.mor(&decl.lhs, &mors).unwrap();
                let rhs_mor = binding.mor(&decl.rhs, &mors).unwrap();
                let comp_src = binding.iso(sym, &src_objs).unwrap().fwd.clone();
                let comp_tgt = binding.iso(sym, &tgt_objs).unwrap().fwd.clone();
                let left = cat.compose(&comp_tgt, &lhs_mor).ok();
                let right = cat.compose(&rhs_mor, &comp_src).ok();
                if left != right || left.is_none() {
                    report.push("coinserter-naturality", format!("{sym} at {mors:?}"));
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        for (name, lhs, rhs, nvars) in &self.coequifiers {
            for objs in tuples(*nvars) {
                let l = binding.cell(lhs, &objs);
                let r = binding.cell(rhs, &objs);
                match (l, r) {
                    (Ok(l), Ok(r)) => {
                        if l != r {
                            report.push(
                                "coequifier",
                                format!("{name} at {objs:?}: {l} != {r}"),
                            );
                        }
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        report.push("coequifier-eval", format!("{name} at {objs:?}: {e}"))
                    }
                }
            }
        }
        report
    }
}

/// Evaluate a derived operation on objects via the tensor tables.
pub fn eval_term_obj(
    cat: &FinCat,
    t: &TensorData,
    term: &Term,
    args: &[ObjId],
) -> Result<ObjId, String> {
    let ops = ops_for_eval(term);
    OpBinding::new(cat, t, &ops)?.obj(term, args)
}

/// Evaluate a derived operation on morphisms via the tensor tables.
pub fn eval_term_mor(
    cat: &FinCat,
    t: &TensorData,
    term: &Term,
    args: &[MorId],
) -> Result<MorId, String> {
    let ops = ops_for_eval(term);
    OpBinding::new(cat, t, &ops)?.mor(term, args)
}

fn ops_for_eval(term: &Term) -> BTreeMap<String, usize> {
    let mut ops = BTreeMap::new();
    fn walk(t: &Term, ops: &mut BTreeMap<String, usize>) {
        if let Term::Op { op, args } = t {
            ops.insert(op.clone(), args.len());
            args.iter().for_each(|a| walk(a, ops));
        }
    }
    walk(term, &mut ops);
    ops
}

fn v(i: usize) -> Term {
    Term::var(i)
}

fn tens(a: Term, b: Term) -> Term {
    Term::op("tensor", vec![a, b])
}

/// The presentation whose algebras are monoidal categories (no unit): a
/// binary generator, a rebracketing coinserter, and the coequifier forcing
/// the two derived rebracketings on four arguments to agree.
pub fn builtin_m() -> OperadPresentation {
    OperadPresentation {
        name: "M".into(),
        generators: vec![Generator {
            sym: "tensor".into(),
            arity: 2,
        }],
        steps: vec![
            PresentationStep::Coinserter {
                sym: "assoc".into(),
                lhs: tens(tens(v(1), v(2)), v(3)),
                rhs: tens(v(1), tens(v(2), v(3))),
            },
            PresentationStep::Coequifier {
                name: "rebracketing".into(),
                lhs: CellExpr::Seq(vec![
                    CellExpr::Op {
                        sym: "tensor".into(),
                        args: vec![
                            CellExpr::Iso {
                                sym: "assoc".into(),
                                rev: false,
                                args: vec![v(1), v(2), v(3)],
                            },
                            CellExpr::Id(v(4)),
                        ],
                    },
                    CellExpr::Iso {
                        sym: "assoc".into(),
                        rev: false,
                        args: vec![v(1), tens(v(2), v(3)), v(4)],
                    },
                    CellExpr::Op {
                        sym: "tensor".into(),
                        args: vec![
                            CellExpr::Id(v(1)),
                            CellExpr::Iso {
                                sym: "assoc".into(),
                                rev: false,
                                args: vec![v(2), v(3), v(4)],
                            },
                        ],
                    },
                ]),
                rhs: CellExpr::Seq(vec![
                    CellExpr::Iso {
                        sym: "assoc".into(),
                        rev: false,
                        args: vec![tens(v(1), v(2)), v(3), v(4)],
                    },
                    CellExpr::Iso {
                        sym: "assoc".into(),
                        rev: false,
                        args: vec![v(1), v(2), tens(v(3), v(4))],
                    },
                ]),
            },
        ],
    }
}

/// The presentation whose algebras are symmetric monoidal categories (no
/// unit): the monoidal steps, a twist coinserter, the coequifier forcing the
/// twist to be an involution, and the compatibility hexagon.
pub fn builtin_s() -> OperadPresentation {
    let mut p = builtin_m();
    p.name = "S".into();
    p.steps.push(PresentationStep::Coinserter {
        sym: "sym".into(),
        lhs: tens(v(1), v(2)),
        rhs: tens(v(2), v(1)),
    });
    p.steps.push(PresentationStep::Coequifier {
        name: "involution".into(),
        lhs: CellExpr::Seq(vec![
            CellExpr::Iso {
                sym: "sym".into(),
                rev: false,
                args: vec![v(1), v(2)],
            },
            CellExpr::Iso {
                sym: "sym".into(),
                rev: false,
                args: vec![v(2), v(1)],
            },
        ]),
        rhs: CellExpr::Id(tens(v(1), v(2))),
    });
    p.steps.push(PresentationStep::Coequifier {
        name: "hexagon".into(),
        lhs: CellExpr::Seq(vec![
            CellExpr::Iso {
                sym: "assoc".into(),
                rev: false,
                args: vec![v(1), v(2), v(3)],
            },
            CellExpr::Iso {
                sym: "sym".into(),
                rev: false,
                args: vec![v(1), tens(v(2), v(3))],
            },
            CellExpr::Iso {
                sym: "assoc".into(),
                rev: false,
                args: vec![v(2), v(3), v(1)],
            },
        ]),
        rhs: CellExpr::Seq(vec![
            CellExpr::Op {
                sym: "tensor".into(),
                args: vec![
                    CellExpr::Iso {
                        sym: "sym".into(),
                        rev: false,
                        args: vec![v(1), v(2)],
                    },
                    CellExpr::Id(v(3)),
                ],
            },
            CellExpr::Iso {
                sym: "assoc".into(),
                rev: false,
                args: vec![v(2), v(1), v(3)],
            },
            CellExpr::Op {
                sym: "tensor".into(),
                args: vec![
                    CellExpr::Id(v(2)),
                    CellExpr::Iso {
                        sym: "sym".into(),
                        rev: false,
                        args: vec![v(1), v(3)],
                    },
                ],
            },
        ]),
    });
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn builtins_compile() {
        assert!(compile_presentation(&builtin_m()).is_ok());
        assert!(compile_presentation(&builtin_s()).is_ok());
    }

    #[test]
    fn undeclared_iso_symbol_is_a_compile_error() {
        let p = OperadPresentation {
            name: "bad".into(),
            generators: vec![Generator {
                sym: "tensor".into(),
                arity: 2,
            }],
            steps: vec![PresentationStep::Coequifier {
                name: "dangling".into(),
                lhs: CellExpr::Iso {
                    sym: "ghost".into(),
                    rev: false,
                    args: vec![v(1), v(2)],
                },
                rhs: CellExpr::Id(tens(v(1), v(2))),
            }],
        };
        assert_eq!(
            compile_presentation(&p).unwrap_err(),
            PresentationError::UnknownSymbol("ghost".into())
        );
    }

    #[test]
    fn non_parallel_coequifier_is_rejected() {
        let p = OperadPresentation {
            name: "bad".into(),
            generators: vec![Generator {
                sym: "tensor".into(),
                arity: 2,
            }],
            steps: vec![
                PresentationStep::Coinserter {
                    sym: "sym".into(),
                    lhs: tens(v(1), v(2)),
                    rhs: tens(v(2), v(1)),
                },
                PresentationStep::Coequifier {
                    name: "skew".into(),
                    lhs: CellExpr::Iso {
                        sym: "sym".into(),
                        rev: false,
                        args: vec![v(1), v(2)],
                    },
                    rhs: CellExpr::Id(tens(v(1), v(2))),
                },
            ],
        };
        assert!(matches!(
            compile_presentation(&p).unwrap_err(),
            PresentationError::NotParallel(_)
        ));
    }

    #[test]
    fn builtin_m_accepts_strict_monoid() {
        let (cat, t) = fixtures::cmonoid_c3();
        let checker = compile_presentation(&builtin_m()).unwrap();
        let report = checker.run(&cat, &t);
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn builtin_s_rejects_noncommutative_monoid() {
        let (cat, t) = fixtures::ncmonoid_s3();
        let checker = compile_presentation(&builtin_s()).unwrap();
        let report = checker.run(&cat, &t);
        assert!(report
            .violations
            .iter()
            .any(|v| v.code == "coinserter-missing"));
    }

    #[test]
    fn eval_term_folds_objects_and_morphisms() {
        let (cat, t) = fixtures::cmonoid_c3();
        let term = tens(tens(v(1), v(2)), v(3));
        let got = eval_term_obj(
            &cat,
            &t,
            &term,
            &[ObjId::from("1"), ObjId::from("2"), ObjId::from("1")],
        )
        .unwrap();
        assert_eq!(got, ObjId::from("1"));
        let gotm = eval_term_mor(
            &cat,
            &t,
            &term,
            &[
                MorId::from("id1"),
                MorId::from("id2"),
                MorId::from("id1"),
            ],
        )
        .unwrap();
        assert_eq!(gotm, MorId::from("id1"));
        // a variable term is its argument
        assert_eq!(
            eval_term_obj(&cat, &t, &v(1), &[ObjId::from("2")]).unwrap(),
            ObjId::from("2")
        );
    }

    #[test]
    fn substitution_commutes_with_evaluation() {
        let (cat, t) = fixtures::cmonoid_c3();
        let inner = tens(v(1), v(2));
        let outer = tens(v(1), v(2));
        let substituted = outer.subst(&[inner.clone(), v(3)]);
        let args = [ObjId::from("1"), ObjId::from("1"), ObjId::from("2")];
        let lhs = eval_term_obj(&cat, &t, &substituted, &args).unwrap();
        let inner_val = eval_term_obj(&cat, &t, &inner, &args[..2]).unwrap();
        let rhs = eval_term_obj(&cat, &t, &outer, &[inner_val, args[2].clone()]).unwrap();
        assert_eq!(lhs, rhs);
    }
}
