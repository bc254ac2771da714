//! Finite skew trusses.
//!
//! A skew (left) truss is a set carrying a group operation `◇` and an
//! associative operation `∘` tied together by
//!
//! ```text
//! a ∘ (b ◇ c) = (a ∘ b) ◇ σ(a)⁻¹ ◇ (a ∘ c)
//! ```
//!
//! for a map `σ`, the cocycle. Rings (σ ≡ 1◇) and skew braces (σ = id) are
//! the two extreme cases. This crate stores every structure as a dense
//! Cayley table over `0..n` and checks each law by exhaustive scan, so every
//! failed check comes with a concrete counterexample.
//!
//! Module map:
//!
//! * [`algebra`]: magmas, groups, heaps and group isomorphisms.
//! * [`truss`]: the truss type, its actions, equivalent forms, families and porting.
//! * [`morphism`]: truss morphisms and piths.
//! * [`ybe`]: cocycle invertibility, brace extraction and Yang–Baxter solutions.
//! * [`ring`]: two-sided trusses and their rings.
//! * [`hopf`]: exact-rational linearisation into Hopf trusses.
//! * [`enumerate`]: exhaustive search and isomorphism classification.
//! * [`io`]: the JSON file formats shared with the command-line tool.

pub mod algebra;
pub mod enumerate;
mod error;
pub mod hopf;
pub mod io;
pub mod morphism;
pub mod report;
pub mod ring;
pub mod scan;
pub mod truss;
pub mod ybe;

pub use algebra::{GroupTable, HeapView, MagmaTable};
pub use error::{AlgebraError, Error, GroupError, Result};
pub use report::{Check, Report, Status, Violation};
pub use truss::{build_truss, Side, SkewTruss};
