//! Bivariate polynomials over exact rationals.
//!
//! [`Poly2`] represents an element of Q[n, k] as a sparse map from exponent
//! pairs `(i, j)` (the monomial `n^i * k^j`) to rational coefficients. These
//! polynomials appear as certificate numerators and denominators, as term
//! multipliers, and — with the `k` variable unused — as the univariate
//! polynomials driving the continued-fraction recurrences.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use super::real::BigReal;

/// Sparse bivariate polynomial in the variables `n` and `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), BigRational>,
}

fn binom(n: u32, k: u32) -> BigInt {
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

impl Poly2 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly2 {
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero();
        p.insert(0, 0, c);
        p
    }

    /// `c0 + cn*n + ck*k`.
    pub fn affine(c0: BigRational, cn: BigRational, ck: BigRational) -> Self {
        let mut p = Self::zero();
        p.insert(0, 0, c0);
        p.insert(1, 0, cn);
        p.insert(0, 1, ck);
        p
    }

    /// Builds a polynomial from `(i, j, coeff)` monomials.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in it {
            p.insert(i, j, c);
        }
        p
    }

    fn insert(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials in lexicographic `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    /// `(deg_n, deg_k)`; `(0, 0)` for the zero polynomial.
    pub fn degrees(&self) -> (u32, u32) {
        let mut dn = 0;
        let mut dk = 0;
        for (i, j) in self.terms.keys() {
            dn = dn.max(*i);
            dk = dk.max(*j);
        }
        (dn, dk)
    }

    /// Pointwise sum.
    pub fn add(&self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms.iter() {
            out.insert(*i, *j, c.clone());
        }
        out
    }

    /// Pointwise difference.
    pub fn sub(&self, rhs: &Poly2) -> Poly2 {
        self.add(&rhs.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Poly2 {
        Poly2 {
            terms: self
                .terms
                .iter()
                .map(|(ij, c)| (*ij, -c.clone()))
                .collect(),
        }
    }

    /// Product.
    pub fn mul(&self, rhs: &Poly2) -> Poly2 {
        let mut out = Self::zero();
        for ((i1, j1), c1) in self.terms.iter() {
            for ((i2, j2), c2) in rhs.terms.iter() {
                out.insert(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Poly2 {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(ij, v)| (*ij, v * c)).collect(),
        }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Poly2 {
        let mut out = Self::constant(BigRational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at rational `(n, k)`.
    pub fn eval(&self, n: &BigRational, k: &BigRational) -> BigRational {
        // Horner in n over coefficient polynomials in k.
        let coeffs = self.coeffs_in_n();
        let mut acc = BigRational::zero();
        for row in coeffs.iter().rev() {
            acc = acc * n + eval_univariate(row, k);
        }
        acc
    }

    /// Evaluation at integer `n` and real `k`, for series arguments that are
    /// not rational. The rational coefficient arithmetic stays exact; each
    /// Horner step performs one rounded multiply-add at `prec` digits.
    pub fn eval_real(&self, n: &BigRational, k: &BigReal, prec: usize) -> BigReal {
        let row = self.eval_partial_n(n);
        let mut acc = BigReal::zero(prec);
        for c in row.iter().rev() {
            acc = acc.mul(k).add(&BigReal::from_rational(c, prec));
        }
        acc
    }

    /// Substitutes the given rational for `n`, returning the dense
    /// coefficient vector of the remaining univariate polynomial in `k`
    /// (constant term first).
    pub fn eval_partial_n(&self, n: &BigRational) -> Vec<BigRational> {
        let (_, dk) = self.degrees();
        let mut row = vec![BigRational::zero(); dk as usize + 1];
        for ((i, j), c) in self.terms.iter() {
            let mut p = BigRational::one();
            for _ in 0..*i {
                p *= n;
            }
            row[*j as usize] += c * p;
        }
        row
    }

    /// Dense coefficient grid indexed by `n`-power, each entry the dense
    /// `k`-coefficient vector.
    fn coeffs_in_n(&self) -> Vec<Vec<BigRational>> {
        let (dn, dk) = self.degrees();
        let mut grid = vec![vec![BigRational::zero(); dk as usize + 1]; dn as usize + 1];
        for ((i, j), c) in self.terms.iter() {
            grid[*i as usize][*j as usize] = c.clone();
        }
        grid
    }

    /// `p(n+1, k)`.
    pub fn subst_n_plus_one(&self) -> Poly2 {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms.iter() {
            for m in 0..=*i {
                out.insert(m, *j, c * BigRational::from_integer(binom(*i, m)));
            }
        }
        out
    }

    /// `p(n, k+n)` — the index change that turns a row-by-row summation
    /// scheme into its diagonal variant.
    pub fn subst_k_plus_n(&self) -> Poly2 {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms.iter() {
            for m in 0..=*j {
                // k^j -> sum_m C(j,m) k^m n^(j-m)
                out.insert(
                    i + (j - m),
                    m,
                    c * BigRational::from_integer(binom(*j, m)),
                );
            }
        }
        out
    }

    /// `p(n, x)` for a fixed rational `x` — collapses to a polynomial in
    /// `n` alone.
    pub fn subst_k_const(&self, x: &BigRational) -> Poly2 {
        let mut out = Self::zero();
        for ((i, j), c) in self.terms.iter() {
            let mut p = BigRational::one();
            for _ in 0..*j {
                p *= x;
            }
            out.insert(*i, 0, c * p);
        }
        out
    }

    /// The dense coefficient vector (constant term first) when the
    /// polynomial does not involve `k`; `None` otherwise.
    pub fn univariate_in_n(&self) -> Option<Vec<BigRational>> {
        let (dn, dk) = self.degrees();
        if dk != 0 && !self.is_zero() {
            return None;
        }
        let mut row = vec![BigRational::zero(); dn as usize + 1];
        for ((i, _), c) in self.terms.iter() {
            row[*i as usize] = c.clone();
        }
        Some(row)
    }
}

/// Horner evaluation of a dense univariate coefficient vector.
fn eval_univariate(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", crate::numeric::rational::format_rational(c))?;
            if *i > 0 {
                write!(f, "*n^{i}")?;
            }
            if *j > 0 {
                write!(f, "*k^{j}")?;
            }
        }
        Ok(())
    }
}
