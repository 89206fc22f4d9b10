//! Geometric-tail series engine.
//!
//! Every fast scheme in this crate produces a series whose consecutive-term
//! ratio is an explicit rational function of the index with
//! `|T(n+1)/T(n)| -> 1/b` for a fixed base `b > 1`. The engine exploits
//! that: it plans the term count from `b` up front, carries the running
//! term as a product of exact rational step ratios (one rounding per step),
//! and lowers the term's carried precision as the term decays — digits that
//! sit below the final rounding threshold of the *sum* never need to be
//! computed.

use num::rational::BigRational;
use num::traits::ToPrimitive;
use num::Zero;

use crate::error::{Error, Result};
use crate::numeric::{BigReal, PrecisionContext, RationalFunction2};

/// A series `sum_n T(n)` described by its first term and step ratio.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    /// `T(0)`, exactly.
    pub first_term: BigRational,
    /// `T(n+1) / T(n)` as an exact rational function of `n` (the second
    /// variable is unused).
    pub ratio: RationalFunction2,
    /// The asymptotic decay base `b > 1`: `|T(n+1)/T(n)| -> 1/b`.
    pub base_magnitude: f64,
}

/// What an evaluation did, alongside the value it produced.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    /// The accumulated sum at working precision.
    pub value: BigReal,
    /// Number of terms actually summed.
    pub terms_used: usize,
    /// Decimal order of magnitude of the last summed term (`None` when the
    /// series terminated with an exact zero term).
    pub last_term_magnitude: Option<i64>,
    /// Upper bound on the discarded tail: `|T(N)| * r/(1-r)` with
    /// `r = min(observed ratio, 2/b)`.
    pub tail_bound: BigReal,
}

/// Terms needed for `digits` correct digits at decay base `b`:
/// `ceil(digits / log10(b)) + 5`.
pub fn plan_terms(digits: usize, base_magnitude: f64) -> usize {
    assert!(base_magnitude > 1.0, "decay base must exceed 1");
    (digits as f64 / base_magnitude.log10()).ceil() as usize + 5
}

/// Evaluates a series with an exact rational first term and step ratio.
pub fn eval_series(spec: &SeriesSpec, ctx: &PrecisionContext) -> Result<SeriesResult> {
    let w = ctx.working();
    let x0 = BigRational::zero();
    let first = BigReal::from_rational(&spec.first_term, w);
    run_engine(
        ctx,
        spec.base_magnitude,
        first,
        |n, prec, h| {
            let r = spec.ratio.eval(&BigRational::from_integer(n.into()), &x0)?;
            Ok(h.mul_rational(&r, prec))
        },
        |n| {
            let r = spec.ratio.eval(&BigRational::from_integer(n.into()), &x0)?;
            Ok(r.to_f64().unwrap_or(0.0).abs())
        },
    )
}

/// Evaluates a series whose offset `x` is known only as a rounded real.
///
/// `ratio` is a rational function of `(n, x)`; `first_term` is `T(0)`
/// already evaluated at `x`. Used for the real-argument front ends; the
/// rational-offset path should prefer [`eval_series`].
pub fn eval_series_real(
    first_term: &BigReal,
    ratio: &RationalFunction2,
    x: &BigReal,
    base_magnitude: f64,
    ctx: &PrecisionContext,
) -> Result<SeriesResult> {
    let w = ctx.working();
    run_engine(
        ctx,
        base_magnitude,
        first_term.with_prec(w),
        |n, prec, h| {
            let r = ratio.eval_real(&BigRational::from_integer(n.into()), x, prec + 8)?;
            Ok(h.mul(&r).with_prec(prec))
        },
        |n| {
            let r = ratio.eval_real(&BigRational::from_integer(n.into()), x, 20)?;
            Ok(r.to_rational().to_f64().unwrap_or(0.0).abs())
        },
    )
}

fn run_engine(
    ctx: &PrecisionContext,
    base_magnitude: f64,
    first: BigReal,
    mut step: impl FnMut(u64, usize, &BigReal) -> Result<BigReal>,
    mut ratio_mag: impl FnMut(u64) -> Result<f64>,
) -> Result<SeriesResult> {
    let w = ctx.working();
    let digits = ctx.digits();
    let planned = plan_terms(digits, base_magnitude);
    let cap = planned.saturating_mul(3) + 60;

    let ord0 = first.order_of_magnitude();
    let mut sum = BigReal::zero(w);
    let mut h = first;
    let mut last;
    let mut terms_used;
    let mut zero_tail = false;
    // Rolling window of term magnitudes for the divergence check.
    let mut ords: Vec<Option<i64>> = Vec::new();

    let mut n: u64 = 0;
    loop {
        sum = sum.add(&h);
        last = h.clone();
        terms_used = n as usize + 1;
        ords.push(h.order_of_magnitude());

        let small_enough = h.below_pow10(-(digits as i64));
        if terms_used >= planned && small_enough {
            break;
        }
        if terms_used >= cap {
            if small_enough {
                break;
            }
            return Err(Error::Precision(format!(
                "series term magnitude failed to reach 10^-{digits} within {cap} terms"
            )));
        }
        if ords.len() > 50 {
            let now = ords[ords.len() - 1];
            let then = ords[ords.len() - 51];
            if let (Some(a), Some(b)) = (now, then) {
                if a >= b {
                    return Err(Error::Divergent(terms_used));
                }
            }
        }

        // Precision staircase: once the term has decayed by `d` digits,
        // only its top `w + 6 - d` digits can influence the rounded sum.
        let decayed = match (ord0, h.order_of_magnitude()) {
            (Some(o0), Some(oh)) if o0 > oh => (o0 - oh) as usize,
            _ => 0,
        };
        let prec_h = (w + 6).saturating_sub(decayed).clamp(12, w.max(12));

        h = step(n, prec_h, &h)?;
        if h.is_zero() {
            zero_tail = true;
            break;
        }
        n += 1;
    }

    let tail_bound = if zero_tail || last.is_zero() {
        BigReal::zero(w)
    } else {
        let r_obs = ratio_mag(n)?;
        let r = r_obs.min(2.0 / base_magnitude).clamp(0.0, 0.9);
        let factor = BigRational::from_float(r / (1.0 - r))
            .unwrap_or_else(|| BigRational::from_integer(9.into()));
        last.abs().mul_rational(&factor, 10)
    };

    Ok(SeriesResult {
        value: sum,
        terms_used,
        last_term_magnitude: if zero_tail {
            None
        } else {
            last.order_of_magnitude()
        },
        tail_bound,
    })
}
