//! Exact decategorified invariants of Deligne and 2-Deligne tensor products.
//!
//! Everything is finite data: fusion rings given by structure constants,
//! simple module categories over `Vect_G` as subgroups with classes in
//! `H²(H, k*)`, Frobenius–Perron dimensions, component lists of compact
//! semisimple 2-categories, and Wedderburn factors of tensor products of
//! semisimple algebras over algebraically closed fields or ℝ.
//!
//! Module map:
//!
//! - [`groups`]: finite abelian groups, subgroup lattices, `H²(H, k*)`.
//! - [`fusion`]: based rings, their validation, products and FP dimensions.
//! - [`modules`]: simple objects of `Mod(Vect_G)` and module fusion tables.
//! - [`algebra`]: Wedderburn calculus over perfect fields.
//! - [`two_cat`]: component-level models of compact semisimple 2-categories.
//! - [`fixtures`]: the worked examples shipped with the crate.

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod fusion;
pub mod groups;
pub mod intmat;
pub mod modules;
pub mod two_cat;

pub use error::{Error, Result};
