//! Arbitrary-precision evaluation of Hurwitz zeta values `zeta(2, a)` and
//! `zeta(3, a)`, the constants `zeta(2)` and `zeta(3)` via continued
//! fractions, and Dirichlet L-values `L(chi_d, 2)` / `L(chi_d, 3)` for a
//! small family of real characters.
//!
//! The fast evaluation schemes all come from one mechanism: a pair of
//! hypergeometric-style terms `(F, G)` satisfying the telescoping identity
//! `F(n+1, k) - F(n, k) = G(n, k+1) - G(n, k)`, certified by a rational
//! function. Summing the identity trades a slowly convergent row sum for a
//! geometrically convergent column sum. The [`wz`] module works with these
//! pairs exactly (over rationals); [`series`] turns them into numeric
//! evaluations with controlled rounding; [`hurwitz`], [`contfrac`], and
//! [`dirichlet`] package the specific schemes.

pub mod contfrac;
pub mod dirichlet;
pub mod error;
pub mod hurwitz;
pub mod numeric;
pub mod series;
pub mod wz;

pub use error::{Error, Result};
pub use num;
pub use numeric::{BigReal, Poly2, PrecisionContext, RationalFunction2};
pub use series::{SeriesResult, SeriesSpec};
