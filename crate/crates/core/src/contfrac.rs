//! Continued fractions with polynomial coefficients.
//!
//! Any series whose term ratio `T(n+1)/T(n) = P(n)/Q(n)` is a rational
//! function folds into a continued fraction by the classical Euler
//! transform: with `A(n) = P(n) + Q(n)` and `B(n) = Q(n) P(n+1)`,
//!
//! ```text
//!                 T(0)    -P(0)    -B(0)    -B(1)
//! sum_n T(n)  =  ------  -------  -------  -------  ...
//!                  1   +  A(0)  +  A(1)  +  A(2)  +
//! ```
//!
//! and the depth-`d` convergent equals the partial sum through `T(d-1)`
//! *exactly* — the fraction is a re-encoding of the series, not an
//! acceleration of it. The two hand-polished fractions for `zeta(2)` and
//! `zeta(3)` exposed here are equivalence-scaled versions of the transforms
//! of the base-64 and base-1024 diagonal series, with all-integer
//! coefficients from degree-4 / degree-7 polynomials.

use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::rat_int;
use crate::numeric::{BigReal, Poly2, PrecisionContext};

// ── Fraction specification ─────────────────────────────────────────────

/// A continued fraction `head + K_{j>=1} (num(j) / den(j))`.
///
/// Levels are indexed from 1; the closures must be pure so that forward
/// and backward evaluation see the same fraction.
pub struct CfSpec {
    /// Additive constant in front of the fraction.
    pub head: BigRational,
    /// Partial numerator at level `j >= 1`.
    pub num: Box<dyn Fn(u64) -> BigRational>,
    /// Partial denominator at level `j >= 1`.
    pub den: Box<dyn Fn(u64) -> BigRational>,
}

// ── Coefficient polynomials for the printed fractions ──────────────────

fn affine_n(c0: i64, c1: i64) -> Poly2 {
    Poly2::affine(rat_int(c0), rat_int(c1), rat_int(0))
}

fn quadratic_n(c0: i64, c1: i64, c2: i64) -> Poly2 {
    Poly2::from_terms(vec![
        ((0, 0), rat_int(c0)),
        ((1, 0), rat_int(c1)),
        ((2, 0), rat_int(c2)),
    ])
}

/// Denominator / numerator polynomials `(a, b)` of the `zeta(2)` fraction:
/// `den(j) = a(j-2)`, `num(j) = -b(j-2)` for `j >= 2`.
pub fn zeta2_cf_polys() -> (Poly2, Poly2) {
    // Ratio polynomials of the base-64 series: T(n+1)/T(n) = p/q.
    let p = affine_n(1, 1).pow(3).mul(&affine_n(34, 21));
    let q = affine_n(3, 2).pow(3).mul(&affine_n(13, 21)).scale(&rat_int(8));
    let a = p.add(&q).neg();
    let q_back = affine_n(1, 2).pow(3).mul(&affine_n(-8, 21)).scale(&rat_int(8));
    let b = p.mul(&q_back);
    (a, b)
}

/// Denominator / numerator polynomials `(a, b)` of the `zeta(3)` fraction:
/// `den(j) = -a(j-2)`, `num(j) = b(j-2)` for `j >= 2`.
pub fn zeta3_cf_polys() -> (Poly2, Poly2) {
    let p = affine_n(1, 1).pow(5).mul(&quadratic_n(532, 660, 205));
    let q = affine_n(3, 2)
        .pow(5)
        .mul(&quadratic_n(77, 250, 205))
        .scale(&rat_int(32));
    let a = p.sub(&q);
    let q_back = affine_n(1, 2)
        .pow(5)
        .mul(&quadratic_n(32, -160, 205))
        .scale(&rat_int(32));
    let b = p.mul(&q_back);
    (a, b)
}

fn eval_at(poly: &Poly2, n: i64) -> BigRational {
    poly.eval(&rat_int(n), &BigRational::zero())
}

/// The integer-coefficient fraction for `zeta(2)`:
/// `zeta(2) = 104 / (64 - b(0)/(a(0) - b(1)/(a(1) - ...)))` — one level
/// gains about 1.8 digits.
pub fn zeta2_cf_spec() -> CfSpec {
    let (a, b) = zeta2_cf_polys();
    CfSpec {
        head: BigRational::zero(),
        num: Box::new(move |j| {
            if j == 1 {
                rat_int(104) // 64 * 13/8, the scaled leading term
            } else {
                -eval_at(&b, j as i64 - 2)
            }
        }),
        den: Box::new(move |j| eval_at(&a, j as i64 - 2)),
    }
}

/// The integer-coefficient fraction for `zeta(3)`:
/// `zeta(3) = 1232 / (1024 + b(0)/(-a(0) + b(1)/(-a(1) + ...)))` — one
/// level gains about 3.0 digits.
pub fn zeta3_cf_spec() -> CfSpec {
    let (a, b) = zeta3_cf_polys();
    CfSpec {
        head: BigRational::zero(),
        num: Box::new(move |j| {
            if j == 1 {
                rat_int(1232) // 1024 * 77/64
            } else {
                eval_at(&b, j as i64 - 2)
            }
        }),
        den: Box::new(move |j| -eval_at(&a, j as i64 - 2)),
    }
}

// ── Euler transform ─────────────────────────────────────────────────────

fn horner(coeffs: &[BigRational], n: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * n + c;
    }
    acc
}

/// Folds the series with term ratio `T(n+1)/T(n) = P(n)/Q(n)` and leading
/// term `g0 = T(0)` into a continued fraction whose depth-`d` convergent is
/// exactly the partial sum `T(0) + ... + T(d-1)`.
///
/// `p` and `q` are coefficient slices, constant term first. The ratio is
/// signed: an alternating series passes the sign inside `P` (or `Q`).
pub fn euler_transform(p: &[BigRational], q: &[BigRational], g0: &BigRational) -> CfSpec {
    let (pn, qn) = (p.to_vec(), q.to_vec());
    let g0 = g0.clone();
    let (pd, qd) = (pn.clone(), qn.clone());
    CfSpec {
        head: BigRational::zero(),
        num: Box::new(move |j| match j {
            1 => g0.clone(),
            2 => -horner(&pn, &BigRational::zero()),
            _ => {
                // -B(j-3) with B(n) = Q(n) P(n+1)
                let n = rat_int(j as i64 - 3);
                -horner(&qn, &n) * horner(&pn, &(n + BigRational::one()))
            }
        }),
        den: Box::new(move |j| {
            if j == 1 {
                BigRational::one()
            } else {
                let n = rat_int(j as i64 - 2);
                horner(&pd, &n) + horner(&qd, &n)
            }
        }),
    }
}

// ── Evaluation ───────────────────────────────────────────────────────────

/// Backward (tail-first) evaluation of the depth-`depth` convergent.
///
/// Truncating the fraction at `depth` and recursing upward is exact apart
/// from one rounding per level; rounding noise introduced deep in the tail
/// is damped on the way up, so this is the preferred evaluator.
pub fn eval_cf_backward(spec: &CfSpec, depth: u64, ctx: &PrecisionContext) -> Result<BigReal> {
    let w = ctx.working();
    let mut tail = BigReal::zero(w);
    for j in (1..=depth).rev() {
        let d = BigReal::from_rational(&(spec.den)(j), w).add(&tail);
        if d.is_zero() {
            return Err(Error::ZeroDenominator(j as usize));
        }
        tail = BigReal::from_rational(&(spec.num)(j), w).div(&d)?;
    }
    Ok(BigReal::from_rational(&spec.head, w).add(&tail))
}

/// Forward evaluation of the same convergent by the three-term (Wallis)
/// recurrence `A_j = den(j) A_{j-1} + num(j) A_{j-2}`.
///
/// The continuants grow fast — polynomially-growing coefficients compound
/// factorially — but only their ratio is needed, and floating evaluation
/// keeps the growth in the exponent.
pub fn eval_cf_forward(spec: &CfSpec, depth: u64, ctx: &PrecisionContext) -> Result<BigReal> {
    let w = ctx.working();
    let mut a_prev = BigReal::from_i64(1, w); // A_{-1}
    let mut b_prev = BigReal::zero(w); // B_{-1}
    let mut a = BigReal::from_rational(&spec.head, w); // A_0
    let mut b = BigReal::from_i64(1, w); // B_0
    for j in 1..=depth {
        let dj = BigReal::from_rational(&(spec.den)(j), w);
        let nj = BigReal::from_rational(&(spec.num)(j), w);
        let a_next = dj.mul(&a).add(&nj.mul(&a_prev));
        let b_next = dj.mul(&b).add(&nj.mul(&b_prev));
        a_prev = a;
        b_prev = b;
        a = a_next;
        b = b_next;
    }
    if b.is_zero() {
        return Err(Error::ZeroDenominator(depth as usize));
    }
    a.div(&b)
}

/// The first `depth` convergents as exact rationals.
///
/// Exact continuant growth makes this expensive past a few dozen levels;
/// it exists to pin the fraction against partial sums, not to compute with.
pub fn convergents_exact(spec: &CfSpec, depth: u64) -> Result<Vec<BigRational>> {
    let mut out = Vec::with_capacity(depth as usize);
    let mut a_prev = BigRational::one();
    let mut b_prev = BigRational::zero();
    let mut a = spec.head.clone();
    let mut b = BigRational::one();
    for j in 1..=depth {
        let dj = (spec.den)(j);
        let nj = (spec.num)(j);
        let a_next = &dj * &a + &nj * &a_prev;
        let b_next = &dj * &b + &nj * &b_prev;
        a_prev = std::mem::replace(&mut a, a_next);
        b_prev = std::mem::replace(&mut b, b_next);
        if b.is_zero() {
            return Err(Error::ZeroDenominator(j as usize));
        }
        out.push(&a / &b);
    }
    Ok(out)
}
