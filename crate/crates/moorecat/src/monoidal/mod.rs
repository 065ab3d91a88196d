//! Finite categories, the free (symmetric) monoidal monad on them, checkers
//! for the laws a candidate tensor must satisfy, and an interpreter for
//! symbolic presentations of those laws.
//!
//! The genuine monads act on enriched categories; everything here is
//! instantiated on finite ordinary categories, where each axiom is an
//! equation between finitely many composites and therefore decidable by
//! enumeration.

pub mod fincat;
pub mod free;
pub mod presentation;
pub mod tensor;

pub use fincat::{validate_fincat, FinCat, FinCatError, FinFunctor};
pub use free::{
    check_monad_laws, compose_free, eta_mor, eta_obj, free_monoidal, free_mors, lists, mu_mor,
    mu_obj, FreeMor, Variant,
};
pub use presentation::{
    builtin_m, builtin_s, compile_presentation, eval_term_mor, eval_term_obj, CellExpr,
    CompiledChecker, OperadPresentation, PresentationError, PresentationStep, Term,
};
pub use tensor::{
    check_algebra, check_algebra_morphism, check_associator_coherence, check_hexagon,
    check_symmetry, check_tensor_tables, check_unitors, IsoPair, TensorData,
};
