//! Exact laboratory for telescoping term pairs.
//!
//! A *pair* is two terms `F(n, k)` and `G(n, k)` satisfying
//!
//! ```text
//! F(n+1, k) - F(n, k) = G(n, k+1) - G(n, k)
//! ```
//!
//! at every point. Summing the identity over `k` (with `F` decaying along
//! the `k` boundary) and then over `n` trades the slowly convergent row sum
//! `sum_k F(0, k+x)` for the geometrically convergent column sum
//! `sum_n G(n, x)` — this is where every fast series in the crate comes
//! from. Both terms share a hypergeometric skeleton (a product of rising
//! factorials, a geometric factor `z^n`, optional alternating signs) and
//! differ only in a rational-function multiplier; the multiplier of `G` is
//! the pair's *certificate*, and verifying the identity reduces to exact
//! rational arithmetic at a handful of points.
//!
//! This module evaluates terms exactly, checks the identity point-wise,
//! extracts consecutive-term ratios for the series engine, applies the
//! diagonal index shift `k -> k + n` (the step that accelerates a scheme),
//! and — when a certificate is not known in advance — derives one by
//! solving an exact linear system over a rational sample grid.

pub mod fixtures;
pub mod pairs;

use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::{pochhammer, pow_rational, rat};
use crate::numeric::{Poly2, RationalFunction2};
use crate::series::SeriesSpec;

// ── Terms ───────────────────────────────────────────────────────────────────

/// One rising-factorial factor `(c + b*k)_n ^ power` (negative powers
/// denote division).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PochFactor {
    pub base_const: BigRational,
    pub base_k: BigRational,
    pub power: i32,
}

impl PochFactor {
    pub fn new(base_const: BigRational, base_k: BigRational, power: i32) -> Self {
        PochFactor {
            base_const,
            base_k,
            power,
        }
    }

    /// The base `c + b*k` evaluated at `k`.
    fn base_at(&self, k: &BigRational) -> BigRational {
        &self.base_const + &self.base_k * k
    }
}

/// A hypergeometric-style term
///
/// ```text
/// T(n, k) = prod_i (c_i + b_i k)_n^{p_i} * S(n, k) * z^n
///           * (-1)^n [sign_n] * (-1)^k [sign_k]
/// ```
#[derive(Debug, Clone)]
pub struct TermSpec {
    pub factors: Vec<PochFactor>,
    pub multiplier: RationalFunction2,
    pub z: BigRational,
    pub sign_n: bool,
    pub sign_k: bool,
}

impl TermSpec {
    /// Factor list sorted by base with equal bases merged — two terms whose
    /// canonical lists agree describe the same product.
    pub fn canonical_factors(&self) -> Vec<PochFactor> {
        let mut sorted = self.factors.clone();
        sorted.sort_by(|a, b| {
            (&a.base_const, &a.base_k).cmp(&(&b.base_const, &b.base_k))
        });
        let mut merged: Vec<PochFactor> = Vec::new();
        for f in sorted {
            match merged.last_mut() {
                Some(last)
                    if last.base_const == f.base_const && last.base_k == f.base_k =>
                {
                    last.power += f.power;
                }
                _ => merged.push(f),
            }
        }
        merged.retain(|f| f.power != 0);
        merged
    }

    /// Structural equality up to factor ordering/merging and multiplier
    /// cross-multiplication.
    pub fn equivalent(&self, other: &TermSpec) -> bool {
        self.z == other.z
            && self.sign_n == other.sign_n
            && self.sign_k == other.sign_k
            && self.canonical_factors() == other.canonical_factors()
            && self
                .multiplier
                .num
                .mul(&other.multiplier.den)
                .sub(&other.multiplier.num.mul(&self.multiplier.den))
                .is_zero()
    }

    /// The geometric decay base of `sum_n T(n, x)`: `1 / |z|`.
    pub fn base_magnitude(&self) -> f64 {
        use num::traits::ToPrimitive;
        let z = self.z.abs();
        if z.is_zero() {
            return f64::INFINITY;
        }
        z.recip().to_f64().unwrap_or(1.0)
    }
}

/// Exact value of `T(n, k)` treating the alternating `(-1)^k` factor as
/// `(-1)^k_parity` — the caller fixes the parity convention, which is what
/// makes the telescoping identity checkable at non-integer `k`.
pub fn eval_term_with_parity(
    t: &TermSpec,
    n: u64,
    k: &BigRational,
    k_parity: u64,
) -> Result<BigRational> {
    let n_rat = BigRational::from_integer(n.into());
    let mut v = t.multiplier.eval(&n_rat, k)?;
    for f in &t.factors {
        let p = pochhammer(&f.base_at(k), n);
        if f.power >= 0 {
            v *= pow_rational(&p, f.power as u64);
        } else {
            if p.is_zero() {
                return Err(Error::Pole(format!(
                    "rising factorial ({} + {}k)_{n} vanishes at k = {}",
                    crate::numeric::rational::format_rational(&f.base_const),
                    crate::numeric::rational::format_rational(&f.base_k),
                    crate::numeric::rational::format_rational(k),
                )));
            }
            v /= pow_rational(&p, (-f.power) as u64);
        }
    }
    v *= pow_rational(&t.z, n);
    if t.sign_n && n % 2 == 1 {
        v = -v;
    }
    if t.sign_k && k_parity % 2 == 1 {
        v = -v;
    }
    Ok(v)
}

/// Exact value of `T(n, k)`. When the term carries an alternating
/// `(-1)^k` factor, `k` must be an integer for the sign to be meaningful.
pub fn eval_term(t: &TermSpec, n: u64, k: &BigRational) -> Result<BigRational> {
    let parity = if t.sign_k {
        if !k.is_integer() {
            return Err(Error::NonIntegerSignedK(format!(
                "term carries (-1)^k but k = {} is not an integer",
                crate::numeric::rational::format_rational(k)
            )));
        }
        let two = BigRational::from_integer(2.into());
        let m = k - (k / &two).floor() * &two; // k mod 2 in {0, 1}
        if m.is_zero() {
            0
        } else {
            1
        }
    } else {
        0
    };
    eval_term_with_parity(t, n, k, parity)
}

// ── Pair checking ───────────────────────────────────────────────────────────

/// A point where the telescoping identity failed, with both sides.
#[derive(Debug, Clone)]
pub struct Witness {
    pub n: u64,
    pub k: BigRational,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// Outcome of a pointwise identity check.
#[derive(Debug, Clone)]
pub struct WzCheck {
    pub points_checked: usize,
    pub witness: Option<Witness>,
}

impl WzCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Verifies `F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k)` exactly for
/// `n = 0..=n_max` and every `k` in `k_points`. The shared `(-1)^k` factor
/// is handled by parity: the base point uses parity 0, the shifted point
/// `k+1` parity 1. Stops at the first failing point and reports it.
pub fn check_wz(
    f: &TermSpec,
    g: &TermSpec,
    n_max: u64,
    k_points: &[BigRational],
) -> Result<WzCheck> {
    let one = BigRational::one();
    let mut checked = 0;
    for n in 0..=n_max {
        for k in k_points {
            let lhs =
                eval_term_with_parity(f, n + 1, k, 0)? - eval_term_with_parity(f, n, k, 0)?;
            let rhs = eval_term_with_parity(g, n, &(k + &one), 1)?
                - eval_term_with_parity(g, n, k, 0)?;
            checked += 1;
            if lhs != rhs {
                return Ok(WzCheck {
                    points_checked: checked,
                    witness: Some(Witness {
                        n,
                        k: k.clone(),
                        lhs,
                        rhs,
                    }),
                });
            }
        }
    }
    Ok(WzCheck {
        points_checked: checked,
        witness: None,
    })
}

// ── Series extraction ───────────────────────────────────────────────────────

/// The consecutive-index ratio `T(n+1, k) / T(n, k)` as an exact rational
/// function of `(n, k)`.
///
/// Each factor `(c + bk)_n^p` contributes `(c + bk + n)^p`; the multiplier
/// contributes `S(n+1, k) / S(n, k)`; the geometric part contributes the
/// constant `z` (and `-1` when the term alternates in `n`).
pub fn term_ratio(t: &TermSpec) -> RationalFunction2 {
    let mut num = Poly2::constant(if t.sign_n { -t.z.clone() } else { t.z.clone() });
    let mut den = Poly2::constant(BigRational::one());
    for f in &t.factors {
        let base = Poly2::affine(f.base_const.clone(), BigRational::one(), f.base_k.clone());
        if f.power >= 0 {
            num = num.mul(&base.pow(f.power as u32));
        } else {
            den = den.mul(&base.pow((-f.power) as u32));
        }
    }
    num = num
        .mul(&t.multiplier.num.subst_n_plus_one())
        .mul(&t.multiplier.den);
    den = den
        .mul(&t.multiplier.den.subst_n_plus_one())
        .mul(&t.multiplier.num);
    RationalFunction2::new(num, den)
}

/// Packages `sum_n T(n, x)` for the series engine at a fixed rational
/// offset `x`: first term `T(0, x)`, univariate step ratio, decay base.
pub fn series_spec(t: &TermSpec, x: &BigRational) -> Result<SeriesSpec> {
    let first = eval_term_with_parity(t, 0, x, 0)?;
    let ratio = term_ratio(t).subst_k_const(x);
    Ok(SeriesSpec {
        first_term: first,
        ratio,
        base_magnitude: t.base_magnitude(),
    })
}

// ── Diagonal shift ──────────────────────────────────────────────────────────

/// Applies the index change `k -> k + n` to a term, re-expressing the
/// result in the same factor language.
///
/// A factor `(c + k)_n` picks up `(c + k + n)_n = (c+k)_{2n} / (c+k)_n`,
/// which the rising-factorial duplication identity splits as
/// `4^n (c/2 + k/2)_n ((c+1)/2 + k/2)_n / (c + k)_n` — so the factor list
/// gains two half-step factors and an inverse, and `z` gains a factor of
/// `4^p`. Factors independent of `k` pass through; any other `k` slope has
/// no such closed form and is reported as not representable. The
/// alternating `(-1)^k` becomes `(-1)^{k+n}`, folding a sign into the `n`
/// direction.
pub fn shift_transform(t: &TermSpec) -> Result<TermSpec> {
    let mut factors = Vec::new();
    let mut z = t.z.clone();
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    for f in &t.factors {
        if f.base_k.is_zero() {
            factors.push(f.clone());
        } else if f.base_k.is_one() {
            let c = &f.base_const;
            let half = rat(1, 2);
            factors.push(PochFactor::new(c / &two, half.clone(), f.power));
            factors.push(PochFactor::new(
                (c + BigRational::one()) / &two,
                half,
                f.power,
            ));
            factors.push(PochFactor::new(c.clone(), BigRational::one(), -f.power));
            if f.power >= 0 {
                z *= pow_rational(&four, f.power as u64);
            } else {
                z /= pow_rational(&four, (-f.power) as u64);
            }
        } else {
            return Err(Error::NotRepresentable(format!(
                "factor with k-slope {} cannot be re-expressed after k -> k+n",
                crate::numeric::rational::format_rational(&f.base_k)
            )));
        }
    }
    Ok(TermSpec {
        factors,
        multiplier: t.multiplier.subst_k_plus_n(),
        z,
        sign_n: t.sign_n ^ t.sign_k,
        sign_k: t.sign_k,
    })
}

// ── Certificate derivation ──────────────────────────────────────────────────

/// A telescoping certificate: the `G`-multiplier `numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub numerator: Poly2,
    pub denominator: Poly2,
}

impl Certificate {
    pub fn rational(&self) -> RationalFunction2 {
        RationalFunction2::new(self.numerator.clone(), self.denominator.clone())
    }
}

/// Rational sample abscissas for the derivation grid: proper fractions
/// with small odd denominators, away from every pole and half-integer the
/// pair shapes can produce.
fn k_samples() -> Vec<BigRational> {
    let mut v = Vec::new();
    for q in [3i64, 5, 7, 11] {
        for p in 1..q {
            if 2 * p != q {
                v.push(rat(p, q));
            }
        }
    }
    v
}

/// Solves for a certificate numerator of the given ansatz degrees, with the
/// denominator shape fixed.
///
/// The telescoping identity, restricted to `G = U * (N / D) * z^n * signs`
/// with unknown `N`, is linear in the coefficients of `N`; sampling it on a
/// rational grid of `(deg_n + 3)(deg_k + 4)` points gives an exact linear
/// system. An inconsistent system means no certificate of this shape exists;
/// a rank-deficient one means the ansatz cannot pin the certificate down.
/// The solved certificate is re-verified on a fresh grid before being
/// returned.
pub fn derive_certificate(
    f: &TermSpec,
    den_shape: &Poly2,
    deg_n: u32,
    deg_k: u32,
) -> Result<Certificate> {
    let monomials: Vec<(u32, u32)> = (0..=deg_n)
        .flat_map(|i| (0..=deg_k).map(move |j| (i, j)))
        .collect();
    let unknowns = monomials.len();

    // The weight term: G's skeleton with multiplier 1/D, so that
    // G(n, k) = weight(n, k) * N(n, k).
    let weight = TermSpec {
        factors: f.factors.clone(),
        multiplier: RationalFunction2::new(
            Poly2::constant(BigRational::one()),
            den_shape.clone(),
        ),
        z: f.z.clone(),
        sign_n: f.sign_n,
        sign_k: f.sign_k,
    };

    let samples = k_samples();
    let one = BigRational::one();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for n in 0..(deg_n as u64 + 3) {
        let n_rat = BigRational::from_integer(n.into());
        for k in samples.iter().take(deg_k as usize + 4) {
            let k1 = k + &one;
            let w0 = eval_term_with_parity(&weight, n, k, 0)?;
            let w1 = eval_term_with_parity(&weight, n, &k1, 1)?;
            let rhs =
                eval_term_with_parity(f, n + 1, k, 0)? - eval_term_with_parity(f, n, k, 0)?;
            let mut row = Vec::with_capacity(unknowns + 1);
            for &(i, j) in &monomials {
                let mono = |nn: &BigRational, kk: &BigRational| {
                    pow_rational(nn, i as u64) * pow_rational(kk, j as u64)
                };
                row.push(&w1 * mono(&n_rat, &k1) - &w0 * mono(&n_rat, k));
            }
            row.push(rhs);
            rows.push(row);
        }
    }

    let coeffs = match solve_exact(rows, unknowns) {
        LinearOutcome::Unique(c) => c,
        LinearOutcome::Inconsistent => {
            return Err(Error::NoCertificate(deg_n as usize, deg_k as usize))
        }
        LinearOutcome::Underdetermined { rank } => {
            return Err(Error::Underdetermined { rank, unknowns })
        }
    };

    let numerator = Poly2::from_terms(
        monomials
            .iter()
            .cloned()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero()),
    );
    let cert = Certificate {
        numerator,
        denominator: den_shape.clone(),
    };

    // Fresh-grid verification: the sample equations are necessary, not
    // sufficient, so confirm the identity away from the solving grid.
    let g = TermSpec {
        factors: f.factors.clone(),
        multiplier: cert.rational(),
        z: f.z.clone(),
        sign_n: f.sign_n,
        sign_k: f.sign_k,
    };
    let fresh = [rat(4, 5), rat(5, 7), rat(6, 11)];
    for n in 7..=11u64 {
        for k in &fresh {
            let lhs =
                eval_term_with_parity(f, n + 1, k, 0)? - eval_term_with_parity(f, n, k, 0)?;
            let rhs = eval_term_with_parity(&g, n, &(k + &one), 1)?
                - eval_term_with_parity(&g, n, k, 0)?;
            if lhs != rhs {
                return Err(Error::NoCertificate(deg_n as usize, deg_k as usize));
            }
        }
    }
    Ok(cert)
}

enum LinearOutcome {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined { rank: usize },
}

/// Exact Gaussian elimination on an augmented system (last column is the
/// right-hand side).
fn solve_exact(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> LinearOutcome {
    let m = rows.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
    let mut pivot_row = 0usize;
    for col in 0..unknowns {
        let Some(r) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].clone().recip();
        for c in col..=unknowns {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for r in 0..m {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=unknowns {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - delta;
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    let rank = pivot_row;
    for row in rows.iter().skip(rank) {
        if !row[unknowns].is_zero() {
            return LinearOutcome::Inconsistent;
        }
    }
    if pivot_of_col.iter().any(Option::is_none) {
        return LinearOutcome::Underdetermined { rank };
    }
    let mut solution = vec![BigRational::zero(); unknowns];
    for (col, pivot) in pivot_of_col.into_iter().enumerate() {
        solution[col] = rows[pivot.expect("checked above")][unknowns].clone();
    }
    LinearOutcome::Unique(solution)
}

// ── Boundary decay ──────────────────────────────────────────────────────────

/// Which index runs in a boundary report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    N,
    K,
}

/// Magnitude profile of a term along one boundary.
#[derive(Debug, Clone)]
pub struct DecayReport {
    pub axis: Axis,
    /// Decimal order of each sampled value (`None` for exact zero).
    pub magnitudes: Vec<Option<i64>>,
    /// Earliest index from which the orders are non-increasing to the end,
    /// when that stretch covers at least the last two samples.
    pub monotone_from: Option<usize>,
    pub final_magnitude: Option<i64>,
    /// True when the profile is eventually monotone from its first half and
    /// finishes strictly below where the monotone stretch began — the
    /// numeric signature of a vanishing boundary term.
    pub decays: bool,
}

/// Tabulates `|T|` along one axis with the other index held fixed.
///
/// For [`Axis::N`] the report samples `T(i, fixed)` for `i = 0..=max_index`;
/// for [`Axis::K`] it samples `T(fixed, j)` (so `fixed` must be a
/// non-negative integer). Telescoping a pair in `k` is only valid when the
/// `F` boundary vanishes; this report is the crate's standing evidence.
pub fn boundary_decay_report(
    t: &TermSpec,
    axis: Axis,
    fixed: &BigRational,
    max_index: u64,
) -> Result<DecayReport> {
    let mut magnitudes = Vec::with_capacity(max_index as usize + 1);
    match axis {
        Axis::N => {
            for i in 0..=max_index {
                let v = eval_term_with_parity(t, i, fixed, 0)?;
                magnitudes.push(rational_magnitude(&v));
            }
        }
        Axis::K => {
            if !fixed.is_integer() || fixed.is_negative() {
                return Err(Error::Domain(
                    "k-axis reports need a fixed non-negative integer n".into(),
                ));
            }
            let n = fixed.to_integer();
            let n: u64 = n.try_into().map_err(|_| {
                Error::Domain("fixed n is too large for a boundary report".into())
            })?;
            for j in 0..=max_index {
                let v = eval_term(t, n, &BigRational::from_integer(j.into()))?;
                magnitudes.push(rational_magnitude(&v));
            }
        }
    }

    let len = magnitudes.len();
    let key = |o: &Option<i64>| o.unwrap_or(i64::MIN);
    let mut monotone_from = len.saturating_sub(1);
    while monotone_from > 0 && key(&magnitudes[monotone_from - 1]) >= key(&magnitudes[monotone_from])
    {
        monotone_from -= 1;
    }
    let monotone_from = if len >= 2 && monotone_from <= len - 2 {
        Some(monotone_from)
    } else {
        None
    };
    let final_magnitude = magnitudes.last().cloned().flatten();
    let decays = monotone_from.is_some_and(|m| {
        m <= len / 2 && key(&magnitudes[len - 1]) < key(&magnitudes[m])
    });
    Ok(DecayReport {
        axis,
        magnitudes,
        monotone_from,
        final_magnitude,
        decays,
    })
}

/// Exact decimal order of a rational: the `e` with `10^(e-1) <= |r| < 10^e`.
fn rational_magnitude(r: &BigRational) -> Option<i64> {
    use crate::numeric::real::digit_len;
    if r.is_zero() {
        return None;
    }
    let n = r.numer().abs();
    let d = r.denom().clone();
    let mut e = digit_len(&n) as i64 - digit_len(&d) as i64 + 1;
    let cmp_pow = |e: i64| -> std::cmp::Ordering {
        // compare |r| with 10^e exactly: numer vs denom * 10^e (shift to
        // whichever side keeps exponents non-negative)
        if e >= 0 {
            n.cmp(&(&d * crate::numeric::real::pow10(e as usize)))
        } else {
            (&n * crate::numeric::real::pow10((-e) as usize)).cmp(&d)
        }
    };
    while cmp_pow(e) != std::cmp::Ordering::Less {
        e += 1;
    }
    while cmp_pow(e - 1) == std::cmp::Ordering::Less {
        e -= 1;
    }
    Some(e)
}
