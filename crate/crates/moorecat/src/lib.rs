//! Exact combinatorial models for path spaces of metric graphs, finitely
//! presented enriched categories, the categorical path object built from
//! Moore paths, and coherence checkers for (symmetric) monoidal structure on
//! finite categories.
//!
//! Everything is exact: durations are rationals, all comparisons are
//! structural equalities, and every check is a finite enumeration. See the
//! README for the bundle file format and the `moorecat` CLI.

pub mod bundle;
pub mod enriched;
pub mod pathobj;
pub mod fixtures;
pub mod ids;
pub mod interchange;
pub mod monoidal;
pub mod rat;
pub mod report;
pub mod space;
