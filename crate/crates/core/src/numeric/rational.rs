//! Exact rational helpers: rising factorials, literal parsing, formatting.
//!
//! `BigRational` (re-exported from the `num` crate) is the only substrate on
//! which the WZ identities are checked — they are exact statements, and
//! approximate arithmetic is never allowed to stand in for them.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Rising factorial (Pochhammer symbol): `(a)_0 = 1`,
/// `(a)_n = a (a+1) ... (a+n-1)`, computed exactly.
pub fn pochhammer(a: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = a.clone();
    for _ in 0..n {
        acc *= &base;
        base += BigRational::one();
    }
    acc
}

/// Parses a rational literal of the form `p` or `p/q` (optional leading
/// minus on `p`). Rejects zero denominators and malformed input.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Domain(format!("invalid rational literal {s:?}"));
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match den_str {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::Domain(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats a rational as `p` (denominator one) or `p/q`. Used for the
/// certificate fixture files, where the format must round-trip bit-exactly.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for small integers as rationals.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// True if the rational is an integer.
pub fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// |r| as a rational.
pub fn rat_abs(r: &BigRational) -> BigRational {
    r.abs()
}

/// `r^e` by binary exponentiation.
pub fn pow_rational(r: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}
