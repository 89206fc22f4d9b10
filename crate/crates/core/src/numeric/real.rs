//! Decimal arbitrary-precision floating point.
//!
//! A [`BigReal`] stores `mantissa * 10^exponent` with the mantissa held to a
//! fixed number of significant *decimal* digits (`prec`). Working in base 10
//! keeps the printed-digit contract trivial: the value's decimal digits are
//! literally the mantissa's digits, so "exactly `digits` significant digits"
//! never involves a binary-to-decimal conversion step.
//!
//! Rounding contract:
//! * multiplication, division, `from_rational`, and `mul_rational` are
//!   correctly rounded (round-half-even) — the rounding decision sees the
//!   full exact remainder;
//! * addition aligns both operands to a common exponent four digits below
//!   the result's last kept digit, so it is exact whenever the operands are
//!   within four orders of magnitude of each other (the cancellation regime)
//!   and within one unit in the last place otherwise;
//! * square root is within one unit in the last place, with ties broken by
//!   the exact integer remainder.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision decimal float: `mant * 10^exp`, with `mant` held to
/// exactly `prec` significant digits (or zero).
#[derive(Debug, Clone)]
pub struct BigReal {
    mant: BigInt,
    exp: i64,
    prec: usize,
}

// ── Powers of ten ───────────────────────────────────────────────────────────

thread_local! {
    // Tiny move-to-front cache: series loops divide by the same few powers
    // of ten over and over.
    static POW10_CACHE: RefCell<Vec<(usize, BigInt)>> = const { RefCell::new(Vec::new()) };
}

/// `10^k` with a small thread-local cache.
pub(crate) fn pow10(k: usize) -> BigInt {
    POW10_CACHE.with(|c| {
        let mut cache = c.borrow_mut();
        if let Some(pos) = cache.iter().position(|(e, _)| *e == k) {
            let entry = cache.remove(pos);
            let val = entry.1.clone();
            cache.insert(0, entry);
            return val;
        }
        let val = BigInt::from(10u32).pow(k as u32);
        cache.insert(0, (k, val.clone()));
        cache.truncate(8);
        val
    })
}

/// Number of decimal digits of `|m|`; `m` must be nonzero.
pub(crate) fn digit_len(m: &BigInt) -> usize {
    debug_assert!(!m.is_zero());
    // Estimate from the bit length, then correct by direct comparison. The
    // f64 estimate is exact to well under one digit for any size we reach.
    let bits = m.bits();
    let mut d = ((bits as f64) * std::f64::consts::LOG10_2) as usize;
    d = d.max(1);
    let a = m.abs();
    while a >= pow10(d) {
        d += 1;
    }
    while d > 1 && a < pow10(d - 1) {
        d -= 1;
    }
    d
}

/// `round(v / 10^k)` with round-half-even. Exact remainder comparison.
fn round_div_pow10(v: &BigInt, k: usize) -> BigInt {
    if k == 0 {
        return v.clone();
    }
    let p = pow10(k);
    let a = v.abs();
    let (q, r) = num::Integer::div_rem(&a, &p);
    let twice = &r * 2u32;
    let round_up = match twice.cmp(&p) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => num::Integer::is_odd(&q),
    };
    let q = if round_up { q + 1 } else { q };
    if v.sign() == Sign::Minus {
        -q
    } else {
        q
    }
}

/// Correctly rounds `(q + rem/den) / 10^drop` for `q, rem >= 0`, `0 <= rem < den`.
/// The fractional part `rem/den` participates in the tie decision exactly.
fn round_at(q: &BigInt, rem: &BigInt, den: &BigInt, drop: usize) -> BigInt {
    if drop == 0 {
        // Round q + rem/den to an integer.
        let twice = rem * 2u32;
        return match twice.cmp(den) {
            Ordering::Greater => q + 1,
            Ordering::Less => q.clone(),
            Ordering::Equal => {
                if num::Integer::is_odd(q) {
                    q + 1
                } else {
                    q.clone()
                }
            }
        };
    }
    let p = pow10(drop);
    let (base, cut) = num::Integer::div_rem(q, &p);
    // Exact comparison of (cut + rem/den) against p/2:
    //   2*(cut*den + rem)  vs  p*den
    let lhs = (&cut * den + rem) * 2u32;
    let rhs = &p * den;
    match lhs.cmp(&rhs) {
        Ordering::Greater => base + 1,
        Ordering::Less => base,
        Ordering::Equal => {
            if num::Integer::is_odd(&base) {
                base + 1
            } else {
                base
            }
        }
    }
}

impl BigReal {
    // ── Construction ────────────────────────────────────────────────────────

    /// Exact zero at the given precision.
    pub fn zero(prec: usize) -> Self {
        assert!(prec >= 1);
        BigReal {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    fn normalized(mut mant: BigInt, mut exp: i64, prec: usize) -> Self {
        assert!(prec >= 1);
        if mant.is_zero() {
            return Self::zero(prec);
        }
        let mut len = digit_len(&mant);
        if len > prec {
            let drop = len - prec;
            mant = round_div_pow10(&mant, drop);
            exp += drop as i64;
            len = digit_len(&mant);
            if len > prec {
                // A carry widened the mantissa (e.g. 999.. -> 1000..); the
                // extra division is exact because the mantissa is now 10^prec.
                mant /= BigInt::from(10u32);
                exp += 1;
                len = prec;
            }
        }
        if len < prec {
            let pad = prec - len;
            mant *= pow10(pad);
            exp -= pad as i64;
        }
        BigReal { mant, exp, prec }
    }

    /// From an integer, rounded to `prec` digits if necessary.
    pub fn from_bigint(v: BigInt, prec: usize) -> Self {
        Self::normalized(v, 0, prec)
    }

    /// From a machine integer.
    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::from_bigint(BigInt::from(v), prec)
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &BigRational, prec: usize) -> Self {
        if r.is_zero() {
            return Self::zero(prec);
        }
        Self::div_big(r.numer().clone(), r.denom(), 0, prec)
    }

    /// Parses a plain decimal literal: optional sign, digits, optional
    /// fractional part, optional `e`/`E` exponent. Rounds to `prec` digits.
    pub fn parse_decimal(s: &str, prec: usize) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Domain(format!("invalid decimal literal {s:?}"));
        let (body, e10) = match s.split_once(['e', 'E']) {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let (sign, body) = match body.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        if digits.chars().any(|c| !c.is_ascii_digit()) {
            return Err(bad());
        }
        let mant: BigInt = digits.parse().map_err(|_| bad())?;
        let exp = e10 - frac_part.len() as i64;
        Ok(Self::normalized(mant * sign, exp, prec))
    }

    // ── Introspection ───────────────────────────────────────────────────────

    /// True iff the value is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// Sign: -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Stored precision in significant digits.
    pub fn prec(&self) -> usize {
        self.prec
    }

    /// Decimal order of magnitude: the unique `e` with
    /// `10^(e-1) <= |value| < 10^e`. `None` for zero.
    pub fn order_of_magnitude(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.prec as i64)
        }
    }

    /// True iff `|value| < 10^p`. Exact.
    pub fn below_pow10(&self, p: i64) -> bool {
        match self.order_of_magnitude() {
            None => true,
            Some(ord) => ord <= p,
        }
    }

    /// The exact rational value `mant * 10^exp`.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant * pow10(self.exp as usize))
        } else {
            BigRational::new(self.mant.clone(), pow10((-self.exp) as usize))
        }
    }

    // ── Arithmetic ──────────────────────────────────────────────────────────

    /// Negation (exact).
    pub fn neg(&self) -> Self {
        BigReal {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Absolute value (exact).
    pub fn abs(&self) -> Self {
        BigReal {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    /// Re-rounds to a different precision.
    pub fn with_prec(&self, prec: usize) -> Self {
        Self::normalized(self.mant.clone(), self.exp, prec)
    }

    /// Sum at `max(self.prec, rhs.prec)` digits. Exact when the operands are
    /// within four orders of magnitude of each other; otherwise within one
    /// unit in the last place.
    pub fn add(&self, rhs: &BigReal) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return rhs.with_prec(prec);
        }
        if rhs.is_zero() {
            return self.with_prec(prec);
        }
        let ord_a = self.exp + self.prec as i64;
        let ord_b = rhs.exp + rhs.prec as i64;
        let e_common = ord_a.max(ord_b) - (prec as i64 + 4);
        let scale = |v: &BigReal| -> BigInt {
            let shift = v.exp - e_common;
            if shift >= 0 {
                &v.mant * pow10(shift as usize)
            } else {
                round_div_pow10(&v.mant, (-shift) as usize)
            }
        };
        let sum = scale(self) + scale(rhs);
        Self::normalized(sum, e_common, prec)
    }

    /// Difference: `self + (-rhs)`.
    pub fn sub(&self, rhs: &BigReal) -> Self {
        self.add(&rhs.neg())
    }

    /// Product, correctly rounded to `max(self.prec, rhs.prec)` digits.
    pub fn mul(&self, rhs: &BigReal) -> Self {
        let prec = self.prec.max(rhs.prec);
        Self::normalized(&self.mant * &rhs.mant, self.exp + rhs.exp, prec)
    }

    /// Small integer power by repeated multiplication.
    pub fn powi(&self, e: u32) -> Self {
        let mut acc = BigReal::from_i64(1, self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    // Correctly rounded num/den * 10^exp at `prec` digits; den != 0.
    fn div_big(num: BigInt, den: &BigInt, exp: i64, prec: usize) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero(prec);
        }
        let sign = if (num.sign() == Sign::Minus) != (den.sign() == Sign::Minus) {
            -1
        } else {
            1
        };
        let a = num.abs();
        let b = den.abs();
        let la = digit_len(&a) as i64;
        let lb = digit_len(&b) as i64;
        // Scale so the integer quotient carries prec+2 .. prec+3 digits.
        let t = (prec as i64 + 2) - (la - lb);
        let (a, b, exp_shift) = if t >= 0 {
            (a * pow10(t as usize), b, -t)
        } else {
            (a, b * pow10((-t) as usize), -t)
        };
        let (q, r) = num::Integer::div_rem(&a, &b);
        let lq = digit_len(&q);
        let (mant, drop) = if lq > prec {
            (round_at(&q, &r, &b, lq - prec), lq - prec)
        } else {
            (round_at(&q, &r, &b, 0), 0)
        };
        let out = Self::normalized(mant * sign, exp + exp_shift + drop as i64, prec);
        debug_assert!(out.prec == prec);
        out
    }

    /// Quotient, correctly rounded to `max(self.prec, rhs.prec)` digits.
    pub fn div(&self, rhs: &BigReal) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let prec = self.prec.max(rhs.prec);
        Ok(Self::div_big(
            self.mant.clone(),
            &rhs.mant,
            self.exp - rhs.exp,
            prec,
        ))
    }

    /// `self * r` for exact rational `r`, as a single correctly rounded
    /// operation at `prec` digits. This is the hot path of the series
    /// engine's running product.
    pub fn mul_rational(&self, r: &BigRational, prec: usize) -> Self {
        if self.is_zero() || r.is_zero() {
            return Self::zero(prec);
        }
        Self::div_big(&self.mant * r.numer(), r.denom(), self.exp, prec)
    }

    /// Square root, within one unit in the last place (ties resolved by the
    /// exact remainder). Errors on negative input.
    pub fn sqrt(&self) -> Result<Self> {
        if self.signum() < 0 {
            return Err(Error::Domain("square root of a negative value".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let prec = self.prec;
        let mut m = self.mant.clone();
        let mut e = self.exp;
        if e % 2 != 0 {
            m *= BigInt::from(10u32);
            e -= 1;
        }
        // Scale so sqrt(m * 10^{2t}) carries at least prec+2 digits.
        let lm = digit_len(&m);
        let t = (prec + 2).saturating_sub(lm / 2);
        let scaled = &m * pow10(2 * t);
        let mag = scaled.magnitude().sqrt();
        let s = BigInt::from(mag);
        let rem = &scaled - &s * &s;
        let ls = digit_len(&s);
        let drop = ls.saturating_sub(prec);
        let mant = if drop == 0 {
            s
        } else {
            // Round s + phi (phi in [0,1), phi > 0 iff rem > 0) at `drop`.
            let p = pow10(drop);
            let (base, cut) = num::Integer::div_rem(&s, &p);
            let twice_cut = &cut * 2u32;
            let round_up = match twice_cut.cmp(&p) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => rem.is_positive() || num::Integer::is_odd(&base),
            };
            if round_up {
                base + 1
            } else {
                base
            }
        };
        Ok(Self::normalized(
            mant,
            e / 2 - t as i64 + drop as i64,
            prec,
        ))
    }

    // ── Printing ────────────────────────────────────────────────────────────

    /// Renders exactly `digits` significant digits.
    ///
    /// Values whose leading digit falls within the printed window use plain
    /// decimal notation (`26.267…`, `0.00915…`); everything else uses
    /// scientific notation (`1.76e-495`). Zero prints as `"0"`.
    pub fn to_sig_string(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut mant = self.mant.abs();
        let mut ord = self.exp + self.prec as i64;
        if digits < self.prec {
            mant = round_div_pow10(&mant, self.prec - digits);
            if digit_len(&mant) > digits {
                mant /= BigInt::from(10u32);
                ord += 1;
            }
        } else if digits > self.prec {
            mant *= pow10(digits - self.prec);
        }
        let ds = mant.to_string();
        debug_assert_eq!(ds.len(), digits);
        let sign = if self.signum() < 0 { "-" } else { "" };
        if ord >= 1 && ord <= digits as i64 {
            let (int_part, frac_part) = ds.split_at(ord as usize);
            if frac_part.is_empty() {
                format!("{sign}{int_part}")
            } else {
                format!("{sign}{int_part}.{frac_part}")
            }
        } else if ord <= 0 && ord > -6 {
            let zeros = "0".repeat((-ord) as usize);
            format!("{sign}0.{zeros}{ds}")
        } else {
            let (head, tail) = ds.split_at(1);
            if tail.is_empty() {
                format!("{sign}{head}e{}", ord - 1)
            } else {
                format!("{sign}{head}.{tail}e{}", ord - 1)
            }
        }
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigReal {}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigReal {
    /// Exact comparison of the stored values.
    fn cmp(&self, other: &Self) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let ord_a = self.exp + self.prec as i64;
        let ord_b = other.exp + other.prec as i64;
        if ord_a != ord_b {
            let by_mag = ord_a.cmp(&ord_b);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        // Same order of magnitude: align exponents exactly and compare.
        let common = self.exp.min(other.exp);
        let a = &self.mant * pow10((self.exp - common) as usize);
        let b = &other.mant * pow10((other.exp - common) as usize);
        a.cmp(&b)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sig_string(self.prec))
    }
}
