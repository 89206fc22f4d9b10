//! Rational functions in two variables, as numerator/denominator pairs.
//!
//! No gcd normalization is attempted — these are evaluated, multiplied, and
//! substituted into, and the polynomial degrees stay small enough that
//! common factors cost nothing. Evaluation reports a pole rather than
//! panicking when the denominator vanishes.

use num::rational::BigRational;
use num::{One, Zero};

use super::poly::Poly2;
use super::real::BigReal;
use crate::error::{Error, Result};

/// `num / den` with both parts in Q[n, k].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction2 {
    pub num: Poly2,
    pub den: Poly2,
}

impl RationalFunction2 {
    /// Builds `num / den`; the denominator must not be identically zero.
    pub fn new(num: Poly2, den: Poly2) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFunction2 { num, den }
    }

    /// The constant function `c`.
    pub fn constant(c: BigRational) -> Self {
        Self::new(Poly2::constant(c), Poly2::constant(BigRational::one()))
    }

    /// The constant function `1`.
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// Exact evaluation; `Pole` if the denominator vanishes at the point.
    pub fn eval(&self, n: &BigRational, k: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(n, k);
        if d.is_zero() {
            return Err(Error::Pole(format!(
                "denominator vanishes at n = {}, k = {}",
                crate::numeric::rational::format_rational(n),
                crate::numeric::rational::format_rational(k)
            )));
        }
        Ok(self.num.eval(n, k) / d)
    }

    /// Evaluation at integer `n` and real `k`. The denominator is tested for
    /// an exact zero mantissa; genuinely tiny (but nonzero) denominators are
    /// legitimate and divide through.
    pub fn eval_real(&self, n: &BigRational, k: &BigReal, prec: usize) -> Result<BigReal> {
        let d = self.den.eval_real(n, k, prec);
        if d.is_zero() {
            return Err(Error::Pole(format!(
                "denominator vanishes at n = {}",
                crate::numeric::rational::format_rational(n)
            )));
        }
        self.num.eval_real(n, k, prec).div(&d)
    }

    /// Product of two rational functions.
    pub fn mul(&self, rhs: &RationalFunction2) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    /// `r(n, k+n)`.
    pub fn subst_k_plus_n(&self) -> Self {
        Self::new(self.num.subst_k_plus_n(), self.den.subst_k_plus_n())
    }

    /// `r(n, x)` for a fixed rational `x`, as a function of `n` alone.
    /// Panics if the denominator collapses to the zero polynomial.
    pub fn subst_k_const(&self, x: &BigRational) -> Self {
        Self::new(self.num.subst_k_const(x), self.den.subst_k_const(x))
    }
}
