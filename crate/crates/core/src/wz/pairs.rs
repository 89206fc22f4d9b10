//! The telescoping pairs this crate ships.
//!
//! Six pairs, three families:
//!
//! * `zeta2-simple` / `zeta3-simple` — row sums reproducing
//!   `zeta(s, x+1)`, geometric base 4.
//! * `zeta2-accel` / `zeta3-accel` — the diagonal (`k -> k+n`) images of
//!   the simple pairs, bases 64 and 1024. The `zeta3-accel` certificate is
//!   not printed anywhere; it is derived by [`super::derive_certificate`]
//!   and stored as a fixture.
//! * `alt-odd` / `alt-odd-shifted` — an alternating scheme over odd
//!   denominators and its diagonal image, which yields the fast series for
//!   the conductor -8 L-value at argument 2.
//!
//! Each pair records its `F` term, its certificate (the `G` multiplier),
//! and ansatz degrees at which [`super::derive_certificate`] re-derives the
//! certificate from scratch.

use num::rational::BigRational;

use super::fixtures;
use super::{Certificate, PochFactor, TermSpec};
use crate::numeric::rational::{rat, rat_int};
use crate::numeric::{Poly2, RationalFunction2};

/// A named telescoping pair: the summand `F`, the certificate defining `G`,
/// and the ansatz degrees that recover the certificate by derivation.
#[derive(Debug, Clone)]
pub struct WzPair {
    pub name: &'static str,
    pub f: TermSpec,
    pub certificate: Certificate,
    pub ansatz: (u32, u32),
}

impl WzPair {
    /// The companion term `G`: same skeleton as `F`, multiplier swapped for
    /// the certificate.
    pub fn g(&self) -> TermSpec {
        TermSpec {
            factors: self.f.factors.clone(),
            multiplier: self.certificate.rational(),
            z: self.f.z.clone(),
            sign_n: self.f.sign_n,
            sign_k: self.f.sign_k,
        }
    }
}

fn pf(c: BigRational, b: BigRational, power: i32) -> PochFactor {
    PochFactor::new(c, b, power)
}

/// `c0 + cn*n + ck*k` with integer coefficients.
fn aff(c0: i64, cn: i64, ck: i64) -> Poly2 {
    Poly2::affine(rat_int(c0), rat_int(cn), rat_int(ck))
}

fn poly_terms(terms: &[(u32, u32, i64)]) -> Poly2 {
    Poly2::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), rat_int(c))))
}

fn fixture_numerator(text: &str, expect_name: &str) -> Poly2 {
    let (name, poly) =
        fixtures::parse_numerator(text).expect("embedded certificate fixture is well-formed");
    assert_eq!(name, expect_name, "fixture names its pair");
    poly
}

/// Row scheme for `zeta(2, x+1)`:
/// `F = (1)_n^3 / ((1/2)_n (1+k)_n^2) * (1/4)^n / (n+k+1)^2`.
pub fn zeta2_simple() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 3),
            pf(rat(1, 2), rat_int(0), -1),
            pf(rat_int(1), rat_int(1), -2),
        ],
        multiplier: RationalFunction2::new(Poly2::constant(rat_int(1)), aff(1, 1, 1).pow(2)),
        z: rat(1, 4),
        sign_n: false,
        sign_k: false,
    };
    let certificate = Certificate {
        numerator: poly_terms(&[(0, 0, 3), (0, 1, 2), (1, 0, 3)]),
        denominator: Poly2::constant(rat_int(2))
            .mul(&aff(1, 2, 0))
            .mul(&aff(1, 1, 1).pow(2)),
    };
    WzPair {
        name: "zeta2-simple",
        f,
        certificate,
        ansatz: (1, 1),
    }
}

/// Row scheme for `zeta(3, x+1)`:
/// `F = (1)_n^5 / ((1/2)_n (1+k)_n^4) * (-1/4)^n (n+2k+2) / (2(n+k+1)^4)`.
pub fn zeta3_simple() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 5),
            pf(rat(1, 2), rat_int(0), -1),
            pf(rat_int(1), rat_int(1), -4),
        ],
        multiplier: RationalFunction2::new(
            aff(2, 1, 2),
            Poly2::constant(rat_int(2)).mul(&aff(1, 1, 1).pow(4)),
        ),
        z: rat(-1, 4),
        sign_n: false,
        sign_k: false,
    };
    let certificate = Certificate {
        numerator: poly_terms(&[
            (0, 0, 5),
            (0, 1, 6),
            (0, 2, 2),
            (1, 0, 10),
            (1, 1, 6),
            (2, 0, 5),
        ]),
        denominator: Poly2::constant(rat_int(4))
            .mul(&aff(1, 2, 0))
            .mul(&aff(1, 1, 1).pow(4)),
    };
    WzPair {
        name: "zeta3-simple",
        f,
        certificate,
        ansatz: (2, 2),
    }
}

/// Diagonal image of [`zeta2_simple`]; geometric base 64.
pub fn zeta2_accel() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 3),
            pf(rat_int(1), rat_int(1), 2),
            pf(rat(1, 2), rat_int(0), -1),
            pf(rat(1, 2), rat(1, 2), -2),
            pf(rat_int(1), rat(1, 2), -2),
        ],
        multiplier: RationalFunction2::new(Poly2::constant(rat_int(1)), aff(1, 2, 1).pow(2)),
        z: rat(1, 64),
        sign_n: false,
        sign_k: false,
    };
    let certificate = Certificate {
        numerator: poly_terms(&[
            (0, 0, 13),
            (0, 1, 20),
            (0, 2, 11),
            (0, 3, 2),
            (1, 0, 47),
            (1, 1, 48),
            (1, 2, 13),
            (2, 0, 55),
            (2, 1, 28),
            (3, 0, 21),
        ]),
        denominator: Poly2::constant(rat_int(2))
            .mul(&aff(1, 2, 0))
            .mul(&aff(1, 2, 1).pow(2))
            .mul(&aff(2, 2, 1).pow(2)),
    };
    WzPair {
        name: "zeta2-accel",
        f,
        certificate,
        ansatz: (3, 3),
    }
}

/// Diagonal image of [`zeta3_simple`]; geometric base 1024. The certificate
/// numerator (28 monomials) comes from the derivation fixture.
pub fn zeta3_accel() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 5),
            pf(rat_int(1), rat_int(1), 4),
            pf(rat(1, 2), rat_int(0), -1),
            pf(rat(1, 2), rat(1, 2), -4),
            pf(rat_int(1), rat(1, 2), -4),
        ],
        multiplier: RationalFunction2::new(
            aff(2, 3, 2),
            Poly2::constant(rat_int(2)).mul(&aff(1, 2, 1).pow(4)),
        ),
        z: rat(-1, 1024),
        sign_n: false,
        sign_k: false,
    };
    let certificate = Certificate {
        numerator: fixture_numerator(fixtures::ZETA3_ACCEL, "zeta3-accel"),
        denominator: Poly2::constant(rat_int(4))
            .mul(&aff(1, 2, 0))
            .mul(&aff(1, 2, 1).pow(4))
            .mul(&aff(2, 2, 1).pow(4)),
    };
    WzPair {
        name: "zeta3-accel",
        f,
        certificate,
        ansatz: (8, 6),
    }
}

/// Alternating scheme over odd reciprocals:
/// `F = (-1)^{n+k} (1)_n^3 / (1/2 + k)_n^3 * (n+2k+1) / (2n+2k+1)^3`.
pub fn alt_odd() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 3),
            pf(rat(1, 2), rat_int(1), -3),
        ],
        multiplier: RationalFunction2::new(aff(1, 1, 2), aff(1, 2, 2).pow(3)),
        z: rat_int(1),
        sign_n: true,
        sign_k: true,
    };
    let certificate = Certificate {
        numerator: fixture_numerator(fixtures::ALT_ODD, "alt-odd"),
        denominator: Poly2::constant(rat_int(2)).mul(&aff(1, 2, 2).pow(3)),
    };
    WzPair {
        name: "alt-odd",
        f,
        certificate,
        ansatz: (1, 1),
    }
}

/// Diagonal image of [`alt_odd`]; geometric base 64 with a residual
/// `(-1)^k`. Evaluated at `x = 1/4` (parity 0) it generates the fast series
/// for the conductor -8 L-value at argument 2.
pub fn alt_odd_shifted() -> WzPair {
    let f = TermSpec {
        factors: vec![
            pf(rat_int(1), rat_int(0), 3),
            pf(rat(1, 2), rat_int(1), 3),
            pf(rat(1, 4), rat(1, 2), -3),
            pf(rat(3, 4), rat(1, 2), -3),
        ],
        multiplier: RationalFunction2::new(aff(1, 3, 2), aff(1, 4, 2).pow(3)),
        z: rat(1, 64),
        sign_n: false,
        sign_k: true,
    };
    let certificate = Certificate {
        numerator: fixture_numerator(fixtures::ALT_ODD_SHIFTED, "alt-odd-shifted"),
        denominator: Poly2::constant(rat_int(2))
            .mul(&aff(1, 4, 2).pow(3))
            .mul(&aff(3, 4, 2).pow(3)),
    };
    WzPair {
        name: "alt-odd-shifted",
        f,
        certificate,
        ansatz: (4, 4),
    }
}

/// Every pair the crate ships, in a stable order.
pub fn all_pairs() -> Vec<WzPair> {
    vec![
        zeta2_simple(),
        zeta3_simple(),
        zeta2_accel(),
        zeta3_accel(),
        alt_odd(),
        alt_odd_shifted(),
    ]
}

/// Looks a pair up by its registry name.
pub fn by_name(name: &str) -> Option<WzPair> {
    all_pairs().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wz::{check_wz, derive_certificate, eval_term_with_parity, shift_transform};

    fn k_grid() -> Vec<BigRational> {
        vec![rat(1, 3), rat(2, 5), rat(5, 7), rat(9, 11)]
    }

    #[test]
    fn every_pair_satisfies_the_telescoping_identity() {
        for pair in all_pairs() {
            let check = check_wz(&pair.f, &pair.g(), 6, &k_grid()).unwrap();
            assert!(
                check.holds(),
                "{}: witness {:?}",
                pair.name,
                check.witness
            );
            assert_eq!(check.points_checked, 28);
        }
    }

    #[test]
    fn mutated_certificates_produce_witnesses() {
        for pair in all_pairs() {
            let mut broken = pair.certificate.clone();
            broken.numerator = broken
                .numerator
                .add(&Poly2::constant(rat(1, 7)));
            let g = TermSpec {
                multiplier: broken.rational(),
                ..pair.g()
            };
            let check = check_wz(&pair.f, &g, 6, &k_grid()).unwrap();
            let w = check.witness.unwrap_or_else(|| {
                panic!("{}: perturbed certificate still passed", pair.name)
            });
            assert_ne!(w.lhs, w.rhs);
        }
    }

    #[test]
    fn leading_column_values_match_the_recorded_constants() {
        // G(0, 0) is the first summand of each derived series.
        let expect = [
            ("zeta2-simple", rat(3, 2)),
            ("zeta3-simple", rat(5, 4)),
            ("zeta2-accel", rat(13, 8)),
            ("zeta3-accel", rat(77, 64)),
        ];
        for (name, value) in expect {
            let pair = by_name(name).unwrap();
            let g0 = eval_term_with_parity(&pair.g(), 0, &rat_int(0), 0).unwrap();
            assert_eq!(g0, value, "{name}");
        }
        // The alternating chain is anchored at x = 1/4 instead.
        let pair = by_name("alt-odd-shifted").unwrap();
        let g0 = eval_term_with_parity(&pair.g(), 0, &rat(1, 4), 0).unwrap();
        assert_eq!(g0 / rat_int(2), rat(1761, 9261));
    }

    #[test]
    fn diagonal_shift_maps_each_row_scheme_to_its_fast_form() {
        for (src, dst) in [
            ("zeta2-simple", "zeta2-accel"),
            ("zeta3-simple", "zeta3-accel"),
            ("alt-odd", "alt-odd-shifted"),
        ] {
            let shifted = shift_transform(&by_name(src).unwrap().f).unwrap();
            let target = by_name(dst).unwrap().f;
            assert!(
                shifted.equivalent(&target),
                "{src} -> {dst}: shifted term diverges from the registered one"
            );
        }
    }

    #[test]
    fn small_certificates_rederive_exactly() {
        for name in ["zeta2-simple", "zeta3-simple", "alt-odd"] {
            let pair = by_name(name).unwrap();
            let derived = derive_certificate(
                &pair.f,
                &pair.certificate.denominator,
                pair.ansatz.0,
                pair.ansatz.1,
            )
            .unwrap();
            assert_eq!(
                derived.numerator, pair.certificate.numerator,
                "{name}: derived numerator differs"
            );
        }
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(all_pairs().len(), 6);
        assert!(by_name("zeta2-accel").is_some());
        assert!(by_name("no-such-pair").is_none());
    }
}
