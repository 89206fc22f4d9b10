//! Numeric substrate: precision contexts, exact rationals, a decimal
//! big-float, shared constants, and the polynomial/rational-function types
//! the rest of the crate builds on.

pub mod consts;
pub mod context;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod real;

pub use consts::{const_pi, const_sqrt};
pub use context::PrecisionContext;
pub use poly::Poly2;
pub use ratfun::RationalFunction2;
pub use rational::{format_rational, parse_rational, pochhammer};
pub use real::BigReal;
