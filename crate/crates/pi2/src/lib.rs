//! A reversible combinator language over finite types, together with the
//! proof theory and model of its boolean core.
//!
//! The pieces, bottom up:
//!
//! - [`syntax`], [`parse`], [`pretty`], [`infer`]: the extended fragment —
//!   abstract syntax, concrete grammar, minimal-parenthesis printing, and
//!   unification-based type inference.
//! - [`semantics`]: carriers, the bidirectional evaluator, permutation
//!   extraction, and decidable extensional equality.
//! - [`library`]: the builtin programs (`not`, `cnot`, `toffoli`, the
//!   controlled-`f` schema, and the six reference programs).
//! - [`rewrite`]: rule application at positions and replay-checking of
//!   derivation files, including the bundled 11-step optimisation of
//!   `not3` to `not`.
//! - [`theory`]: the boolean sub-language, its level-2 proof terms, the
//!   `canonical` decision procedure with proof witnesses, and level-1
//!   completeness.
//! - [`model`]: the two-element automorphism group and its trivial
//!   2-cells.
//! - [`correspond`]: interpretation and quotation between syntax and
//!   model, with executable soundness/completeness round trips.
//! - [`enumerate`], [`generate`], [`suite`]: exhaustive and seeded-random
//!   term populations and the parallel verification sweeps over them.

pub mod correspond;
pub mod enumerate;
pub mod generate;
pub mod infer;
pub mod library;
pub mod model;
pub mod parse;
pub mod pretty;
pub mod rewrite;
pub mod semantics;
pub mod sexpr;
pub mod suite;
pub mod syntax;
pub mod theory;

pub use syntax::{Comb, FinType};
pub use theory::{Comb1, Comb2, Comb3, Which};
