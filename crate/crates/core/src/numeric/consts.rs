//! Shared mathematical constants at arbitrary precision.

use num::{BigInt, Signed, Zero};

use super::context::PrecisionContext;
use super::real::{pow10, BigReal};
use crate::error::Result;

/// π to the context's working precision, via Machin's formula
/// `π = 16·arctan(1/5) − 4·arctan(1/239)`.
///
/// The arctangents are evaluated in fixed point (integers scaled by a power
/// of ten) with ten extra digits absorbing the truncation of each series.
pub fn const_pi(ctx: &PrecisionContext) -> BigReal {
    let w = ctx.working();
    let scale_digits = w + 10;
    let scale = pow10(scale_digits);

    // arctan(1/m) * 10^scale_digits, truncated.
    let arctan_inv = |m: i64| -> BigInt {
        let m2 = BigInt::from(m) * BigInt::from(m);
        let mut term = &scale / BigInt::from(m); // x^1 / 1 numerator stream
        let mut sum = BigInt::zero();
        let mut k: i64 = 0;
        while !term.is_zero() {
            let contrib = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += contrib;
            } else {
                sum -= contrib;
            }
            term /= &m2;
            k += 1;
        }
        sum
    };

    let fixed: BigInt = arctan_inv(5) * 16 - arctan_inv(239) * 4;
    debug_assert!(fixed.is_positive());
    BigReal::from_bigint(fixed, w).mul_rational(
        &num::BigRational::new(BigInt::from(1), pow10(scale_digits)),
        w,
    )
}

/// `sqrt(m)` for a machine integer `m >= 0`, at working precision.
pub fn const_sqrt(m: u64, ctx: &PrecisionContext) -> Result<BigReal> {
    BigReal::from_bigint(BigInt::from(m), ctx.working()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.1415926535897932384626433832795028841971693993751";

    #[test]
    fn pi_matches_reference_digits() {
        let ctx = PrecisionContext::with_guard(50, 10);
        let pi = const_pi(&ctx);
        assert_eq!(pi.to_sig_string(50), PI_50);
        assert_eq!(pi.to_sig_string(10), "3.141592654");
        assert_eq!(pi.to_sig_string(2), "3.1");
    }

    #[test]
    fn pi_is_guard_invariant() {
        let a = const_pi(&PrecisionContext::with_guard(60, 10));
        let b = const_pi(&PrecisionContext::with_guard(60, 40));
        assert_eq!(a.to_sig_string(55), b.to_sig_string(55));
    }

    #[test]
    fn sqrt_two_squares_back() {
        let ctx = PrecisionContext::new(80);
        let s = const_sqrt(2, &ctx).unwrap();
        let err = s.mul(&s).sub(&BigReal::from_i64(2, ctx.working()));
        assert!(err.below_pow10(-(ctx.working() as i64 - 2)));
        assert_eq!(s.to_sig_string(20), "1.4142135623730950488");
    }

    #[test]
    fn sqrt_of_zero_and_squares() {
        let ctx = PrecisionContext::new(30);
        assert!(const_sqrt(0, &ctx).unwrap().is_zero());
        assert_eq!(
            const_sqrt(144, &ctx).unwrap(),
            BigReal::from_i64(12, ctx.working())
        );
    }
}
