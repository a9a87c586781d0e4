//! Exact GF(2) combinatorics for framed vertex operator algebras.
//!
//! The crate computes, with exact integer arithmetic throughout:
//!
//! - binary linear code algebra (duals, intersections, punctures, weight
//!   enumerators, MacWilliams transforms) — [`gf2`];
//! - the epsilon-cocycle and quadratic-form bookkeeping (radicals, maximal
//!   self-orthogonal subcodes, kappa vectors) — [`quadratic`];
//! - existence/construction of (doubly even) self-dual subcodes with respect
//!   to a support word — [`selfdual`];
//! - structure-code pair validation and F-admissibility — [`structcheck`];
//! - the calculus of code-VOA module labels and their fusion rules —
//!   [`modules`];
//! - pointwise frame-stabilizer data (the code P, lift orders, commutator
//!   pairing, graded splits) — [`stabilizer`];
//! - exact truncated q-series for characters and McKay-Thompson series —
//!   [`qseries`];
//! - the length-48 moonshine-frame worked example as an assertion-checked
//!   pipeline — [`moonshine`].
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to call concurrently.  With the
//! default `parallel` feature the heavy enumeration kernels use rayon; without
//! it they fall back to equivalent sequential loops.

pub mod budget;
pub mod error;
pub mod gf2;
pub mod modules;
pub mod moonshine;
pub mod qseries;
pub mod quadratic;
pub mod selfdual;
pub mod stabilizer;
pub mod structcheck;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use gf2::{Codeword, LinearCode, WeightEnumerator};
