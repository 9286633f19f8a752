//! Exact combinatorics behind the Satake correspondence for `GL_n`.
//!
//! * [`rootdata`]: weights, dominance, `⟨2ρ, μ⟩`, duals.
//! * [`symfunc`]: `Z[v, v^-1]`, symmetric polynomials, Schur and
//!   Hall–Littlewood bases.
//! * [`repring`]: the graded representation ring of `GL_n`.
//! * [`hecke`]: the spherical Hecke algebra and the Satake transform.
//! * [`trace_k`]: S-operators and the unit endomorphisms of the trace.
//! * [`tate`]: Tate weight lattices and the unitary Hecke element `h`.
//! * [`plattice`]: `p`-adic lattices, relative position, and brute-force
//!   counts that cross-check the Hecke structure constants.

pub mod checks;
pub mod error;
pub mod exec;
pub mod hecke;
pub mod json;
mod linalg;
pub mod plattice;
pub mod repring;
pub mod rootdata;
pub mod symfunc;
pub mod tate;
pub mod trace_k;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rootdata::Weight;
pub use symfunc::{LaurentScalar, SymPoly};
