//! Symmetric Laurent polynomials over `Z[v, v^-1]` in the monomial, Schur and
//! Hall–Littlewood bases.

mod hall_littlewood;
mod laurent;
mod schur;
mod sympoly;

pub use hall_littlewood::{hall_littlewood, hall_littlewood_t, hall_littlewood_t_with, stabilizer_factor};
pub use laurent::LaurentScalar;
pub use schur::{expand_in_schur, from_schur_expansion, kostka, schur};
pub use sympoly::SymPoly;
