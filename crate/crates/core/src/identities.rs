//! Special values and relations between the four diagonal families.
//!
//! Every relation is exposed as an [`IdentityReport`] so that callers (the
//! CLI, the acceptance suite) can tabulate left side, right side and residual.
//! Exact reports pass only on ring equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    bernoulli, binomial, euler_number, factorial, int, pow2, sign_pow, to_f64, Rational,
};
use crate::bell::{complete_bell, partitions_of};
use crate::diagonal::{
    closed_form, exact_bases, numeric_bases, numeric_rounding_bound, numeric_value, oracle_report,
    Argument, Family, Method, OracleConfig,
    Value,
};
use crate::error::{Error, Result};
use crate::pi::PiValue;
use crate::ring::Ring;
use crate::zeta::{zeta_exact_even, zeta_exact_nonpositive, zeta_numeric};

/// Relative residual allowed on numeric identity checks.
pub const NUMERIC_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Int(i64),
    Real(f64),
    Bool(bool),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, Param>,
    pub lhs: Value,
    pub rhs: Value,
    /// `|lhs − rhs|` (exactly zero for passing exact checks).
    pub residual: f64,
    /// Residual threshold the verdict was judged against (0 for exact).
    pub tolerance: f64,
    pub pass: bool,
    /// Reported for information only; never counted as a failure.
    pub informational: bool,
}

impl IdentityReport {
    fn exact(id: &str, parameters: BTreeMap<String, Param>, lhs: PiValue, rhs: PiValue) -> Self {
        let pass = lhs == rhs;
        let residual = if pass { 0.0 } else { (&lhs - &rhs).to_f64().abs() };
        Self {
            identity_id: id.into(),
            parameters,
            lhs: Value::Exact(lhs),
            rhs: Value::Exact(rhs),
            residual,
            tolerance: 0.0,
            pass,
            informational: false,
        }
    }

    fn numeric(id: &str, parameters: BTreeMap<String, Param>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let residual = (lhs - rhs).abs();
        let tolerance = tol * lhs.abs().max(1.0);
        Self {
            identity_id: id.into(),
            parameters,
            lhs: Value::Real(lhs),
            rhs: Value::Real(rhs),
            residual,
            tolerance,
            pass: residual <= tolerance,
            informational: false,
        }
    }

    /// Counts as a failure: not passing and not informational.
    pub fn failed(&self) -> bool {
        !self.pass && !self.informational
    }
}

fn params<const N: usize>(items: [(&str, Param); N]) -> BTreeMap<String, Param> {
    items.into_iter().map(|(k, v)| (String::from(k), v)).collect()
}

fn rational(n: BigInt, d: BigInt) -> Rational {
    Rational::new(n, d)
}

/// Closed-form values at `s = 2`:
///
/// * `ζ_r(2) = π^{2r} / (2r+1)!`
/// * `t_r(2) = π^{2r} / (2^{2r} (2r)!)`
/// * `ζ*_r(2) = (−1)^{r+1} (2^{2r} − 2) B_{2r} π^{2r} / (2r)!`
/// * `t*_r(2) = (−1)^r E_{2r} π^{2r} / (2^{2r} (2r)!)` with secant numbers `E`.
pub fn value_at_two(family: Family, r: u32) -> PiValue {
    let two_r = 2 * r;
    let coeff = match family {
        Family::Zeta => rational(BigInt::one(), factorial(two_r + 1)),
        Family::T => rational(BigInt::one(), factorial(two_r) << two_r as usize),
        Family::ZetaStar => {
            let factor = (BigInt::one() << two_r as usize) - 2;
            bernoulli(two_r as usize)
                * rational(factor * sign_pow(r as i64 + 1), factorial(two_r))
        }
        Family::TStar => rational(
            euler_number(two_r as usize) * sign_pow(r as i64),
            factorial(two_r) << two_r as usize,
        ),
    };
    PiValue::monomial(coeff, two_r)
}

/// `ζ_r(2k)` or `ζ*_r(2k)` through the Bell polynomial in Bernoulli numbers,
/// `(±1)/r! · (2π)^{2rk} · Y_r(±0!·B_{2k}/(2(2k)!), ±1!·B_{4k}/(2(4k)!), …)`.
pub fn value_at_even(family: Family, r: u32, k: u32) -> Result<PiValue> {
    if family.is_t() {
        return Err(Error::Domain("value_at_even covers the zeta families only".into()));
    }
    if r == 0 || k == 0 {
        return Err(Error::Domain("value_at_even needs r, k >= 1".into()));
    }
    let star = family.is_star();
    let xs: Vec<Rational> = (1..=r)
        .map(|j| {
            let m = 2 * j * k;
            let y = int(factorial(j - 1)) * bernoulli(m as usize)
                / int(factorial(m) * 2);
            if star {
                -y
            } else {
                y
            }
        })
        .collect();
    let y = complete_bell(r as usize, &xs)?;
    let sign = if star {
        sign_pow(r as i64 * k as i64)
    } else {
        sign_pow(r as i64 * (k as i64 + 1))
    };
    let two_rk = 2 * r * k;
    let coeff = y * pow2(two_rk as i64) * rational(BigInt::from(sign), factorial(r));
    Ok(PiValue::monomial(coeff, two_rk))
}

/// Values at `s = 0`: `ζ_r(0) = (−1)^r C(2r, r) / 4^r`,
/// `ζ*_r(0) = −C(2r−2, r−1) / (r·2^{2r−1})`, and `t_r(0) = t*_r(0) = 0`.
pub fn value_at_zero(family: Family, r: u32) -> Rational {
    assert!(r >= 1, "value_at_zero needs r >= 1");
    match family {
        Family::Zeta => {
            int(binomial(2 * r, r) * sign_pow(r as i64)) * pow2(-2 * r as i64)
        }
        Family::ZetaStar => {
            -int(binomial(2 * r - 2, r - 1)) * pow2(1 - 2 * r as i64) / int(r)
        }
        Family::T | Family::TStar => <Rational as Zero>::zero(),
    }
}

/// `∏_{k=0}^{r−1} (k + shift)`.
pub fn shifted_product(r: u32, shift: &Rational) -> Rational {
    (0..r).fold(<Rational as One>::one(), |acc, k| acc * (int(k) + shift))
}

/// `f_r(−2k) = 0` checked on the exact backend.
pub fn vanishing_at_negative_even(family: Family, r: u32, k: u32) -> Result<IdentityReport> {
    let bases = exact_bases(family, r as usize, -2 * k as i64)?;
    let value = closed_form(family, &bases);
    Ok(IdentityReport::exact(
        "vanishing-negative-even",
        params([
            ("family", Param::Text(family.name().into())),
            ("r", Param::Int(r as i64)),
            ("k", Param::Int(k as i64)),
        ]),
        value,
        PiValue::zero(),
    ))
}

/// Right side of the functional relation over a ring, from the prefixes of
/// the zeta base values. `weight` is `2^{−s}` in that ring.
fn relation_rhs<R: Ring>(r: usize, zeta_bases: &[R], weight: &R, star: bool) -> R {
    let mut acc = R::zero();
    for j in 0..=r {
        let (a, b) = if star {
            (closed_form(Family::ZetaStar, &zeta_bases[..j]), closed_form(Family::Zeta, &zeta_bases[..r - j]))
        } else {
            (closed_form(Family::Zeta, &zeta_bases[..j]), closed_form(Family::ZetaStar, &zeta_bases[..r - j]))
        };
        let mut term = a.mul(&b).mul(&weight.pow((r - j) as u32));
        if (r - j) % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    acc
}

/// The right side as printed with `ζ_{r−j}(s)·ζ*_r(s)` in every term.
fn printed_star_rhs<R: Ring>(r: usize, zeta_bases: &[R], weight: &R) -> R {
    let star_r = closed_form(Family::ZetaStar, &zeta_bases[..r]);
    let mut acc = R::zero();
    for j in 0..=r {
        let mut term = closed_form(Family::Zeta, &zeta_bases[..r - j])
            .mul(&star_r)
            .mul(&weight.pow((r - j) as u32));
        if (r - j) % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    acc
}

fn relation_report(r: u32, argument: Argument, star: bool, printed: bool) -> Result<IdentityReport> {
    let family = if star { Family::TStar } else { Family::T };
    let id = match (star, printed) {
        (false, _) => "functional-relation-t",
        (true, false) => "functional-relation-tstar",
        (true, true) => "functional-relation-tstar-printed",
    };
    let r_us = r as usize;
    let mut report = match argument {
        Argument::Integer(m) => {
            if m <= 0 || m % 2 == 1 {
                return Err(Error::Domain(alloc::format!(
                    "exact functional relation needs an even positive s, got {m}"
                )));
            }
            let t_bases = exact_bases(family, r_us, m)?;
            let z_bases = exact_bases(Family::Zeta, r_us, m)?;
            let lhs = closed_form(family, &t_bases);
            let weight = PiValue::from_rational(pow2(-m));
            let rhs = if printed {
                printed_star_rhs(r_us, &z_bases, &weight)
            } else {
                relation_rhs(r_us, &z_bases, &weight, star)
            };
            IdentityReport::exact(id, BTreeMap::new(), lhs, rhs)
        }
        Argument::Real(s) => {
            if !(s > 1.0) {
                return Err(Error::Divergent(s));
            }
            let t_bases = numeric_bases(family, r_us, s)?;
            let z_bases = numeric_bases(Family::Zeta, r_us, s)?;
            let lhs = closed_form(family, &t_bases);
            let weight = libm::exp2(-s);
            let rhs = if printed {
                printed_star_rhs(r_us, &z_bases, &weight)
            } else {
                relation_rhs(r_us, &z_bases, &weight, star)
            };
            IdentityReport::numeric(id, BTreeMap::new(), lhs, rhs, NUMERIC_TOLERANCE)
        }
    };
    report.parameters = params([
        ("r", Param::Int(r as i64)),
        ("s", arg_param(argument)),
        ("star", Param::Bool(star)),
    ]);
    report.informational = printed;
    Ok(report)
}

fn arg_param(argument: Argument) -> Param {
    match argument {
        Argument::Real(s) => Param::Real(s),
        Argument::Integer(m) => Param::Int(m),
    }
}

/// `t_r(s) = Σ_j (−1)^{r−j} 2^{−(r−j)s} ζ_j(s) ζ*_{r−j}(s)` and, for
/// `star`, `t*_r(s) = Σ_j (−1)^{r−j} 2^{−(r−j)s} ζ*_j(s) ζ_{r−j}(s)`.
pub fn functional_relation(r: u32, argument: Argument, star: bool) -> Result<IdentityReport> {
    relation_report(r, argument, star, false)
}

/// The star relation with `ζ_{r−j}(s) ζ*_r(s)` in place of
/// `ζ*_j(s) ζ_{r−j}(s)`. It does not hold in general (it already fails at
/// `r = 2, s = 2`); the report is marked informational.
pub fn functional_relation_printed_star(r: u32, argument: Argument) -> Result<IdentityReport> {
    relation_report(r, argument, true, true)
}

/// Depth-two harmonic products on the diagonal:
/// `ζ(s)² = 2ζ_2(s) + ζ(2s)` and `ζ(s)² = 2ζ*_2(s) − ζ(2s)`.
pub fn harmonic_product(s: f64, star: bool) -> Result<IdentityReport> {
    let z1 = zeta_numeric(s)?;
    let z2 = zeta_numeric(2.0 * s)?;
    let family = if star { Family::ZetaStar } else { Family::Zeta };
    let depth_two = closed_form(family, &numeric_bases(family, 2, s)?);
    let rhs = if star { 2.0 * depth_two - z2 } else { 2.0 * depth_two + z2 };
    let id = if star { "harmonic-product-star" } else { "harmonic-product" };
    Ok(IdentityReport::numeric(
        id,
        params([("s", Param::Real(s))]),
        z1 * z1,
        rhs,
        NUMERIC_TOLERANCE,
    ))
}

/// The two partition sums for `ζ(2k)` in odd factorials:
///
/// * `k π^{2k} Σ (−1)^{k+|c|} (|c|−1)! / ∏ (2i+1)!^{c_i} c_i!`
/// * `(2π)^{2k} / (2(2^{2k}−2)) · Σ (−1)^{k+|c|} |c|! / ∏ (2i+1)!^{c_i} c_i!`
///
/// where `|c| = c_1 + ⋯ + c_k`.
pub fn merca_even_zeta(k: u32) -> (PiValue, PiValue) {
    assert!(k >= 1, "merca_even_zeta needs k >= 1");
    let mut first = <Rational as Zero>::zero();
    let mut second = <Rational as Zero>::zero();
    for p in partitions_of(k as usize) {
        let parts = p.len();
        let denom = p.parts().fold(BigInt::one(), |acc, (i, c)| {
            acc * factorial(2 * i + 1).pow(c) * factorial(c)
        });
        let sign = sign_pow(k as i64 + parts as i64);
        first += rational(factorial(parts - 1) * sign, denom.clone());
        second += rational(factorial(parts) * sign, denom);
    }
    let two_k = 2 * k;
    let first = first * int(k);
    let second = second * pow2(two_k as i64)
        / int((BigInt::one() << two_k as usize) * 2 - 4);
    (PiValue::monomial(first, two_k), PiValue::monomial(second, two_k))
}

/// Both partition sums compared with `(−1)^{k+1} B_{2k} (2π)^{2k} / (2(2k)!)`.
pub fn merca_report(k: u32) -> [IdentityReport; 2] {
    let (a, b) = merca_even_zeta(k);
    let reference = zeta_exact_even(k);
    let p = || params([("k", Param::Int(k as i64))]);
    [
        IdentityReport::exact("merca-first-form", p(), a, reference.clone()),
        IdentityReport::exact("merca-second-form", p(), b, reference),
    ]
}

/// Ratios of the exact values at zero to their large-`r` predictors
/// `(−1)^r / √(πr)` and `−1 / (2√(πr³))`, as `(zeta, zeta_star)`.
pub fn zero_value_asymptotics(r: u32) -> (f64, f64) {
    let rf = r as f64;
    let zeta = to_f64(&value_at_zero(Family::Zeta, r)) * f64::from(sign_pow(r as i64) as i32)
        * libm::sqrt(PI * rf);
    let star = to_f64(&value_at_zero(Family::ZetaStar, r)) * -2.0 * libm::sqrt(PI * rf * rf * rf);
    (zeta, star)
}

/// `value_at_zero` against the closed form evaluated formally at
/// `ζ(0) = −1/2` (and `t(0) = 0`).
pub fn value_at_zero_report(family: Family, r: u32) -> Result<IdentityReport> {
    // Every base value at 0 is rational; the closed form runs over ℚ.
    let bases: Vec<Rational> = exact_bases(family, r as usize, 0)?
        .iter()
        .map(|b| b.as_rational().expect("base values at 0 are rational"))
        .collect();
    Ok(IdentityReport::exact(
        "value-at-zero",
        params([
            ("family", Param::Text(family.name().into())),
            ("r", Param::Int(r as i64)),
        ]),
        PiValue::from_rational(closed_form(family, &bases)),
        PiValue::from_rational(value_at_zero(family, r)),
    ))
}

/// `value_at_two` against the closed form on the exact backend.
pub fn value_at_two_report(family: Family, r: u32) -> Result<IdentityReport> {
    let bases = exact_bases(family, r as usize, 2)?;
    Ok(IdentityReport::exact(
        "value-at-two",
        params([
            ("family", Param::Text(family.name().into())),
            ("r", Param::Int(r as i64)),
        ]),
        closed_form(family, &bases),
        value_at_two(family, r),
    ))
}

/// `value_at_even` against the closed form on the exact backend.
pub fn value_at_even_report(family: Family, r: u32, k: u32) -> Result<IdentityReport> {
    let bases = exact_bases(family, r as usize, 2 * k as i64)?;
    Ok(IdentityReport::exact(
        "value-at-even",
        params([
            ("family", Param::Text(family.name().into())),
            ("r", Param::Int(r as i64)),
            ("k", Param::Int(k as i64)),
        ]),
        closed_form(family, &bases),
        value_at_even(family, r, k)?,
    ))
}

/// Closed form vs recurrence (to `1e-12` absolute) and vs the series
/// oracle (within its tail bound) at real `s > 1`.
pub fn three_way_agreement(
    family: Family,
    r: u32,
    s: f64,
    config: OracleConfig,
) -> Result<[IdentityReport; 2]> {
    let closed = numeric_value(family, r as usize, s, Method::ClosedForm)?;
    let recur = numeric_value(family, r as usize, s, Method::Recurrence)?;
    let rounding = numeric_rounding_bound(family, r as usize, s)?;
    let oracle = oracle_report(family, r as usize, s, config)?;
    let p = || {
        params([
            ("family", Param::Text(family.name().into())),
            ("r", Param::Int(r as i64)),
            ("s", Param::Real(s)),
        ])
    };
    let mut vs_recurrence = IdentityReport::numeric("closed-form-vs-recurrence", p(), closed, recur, 0.0);
    vs_recurrence.tolerance = 1e-12;
    vs_recurrence.pass = vs_recurrence.residual <= 1e-12;
    let mut vs_oracle = IdentityReport::numeric("closed-form-vs-oracle", p(), closed, oracle.value(), 0.0);
    vs_oracle.tolerance = (oracle.tail_bound + rounding).max(1e-6);
    vs_oracle.pass = vs_oracle.residual <= vs_oracle.tolerance;
    vs_oracle.parameters.insert("truncation".into(), Param::Int(config.truncation as i64));
    Ok([vs_recurrence, vs_oracle])
}

/// `ζ(0)` as used by the formal evaluation at zero.
pub fn zeta_at_zero() -> Rational {
    zeta_exact_nonpositive(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::diagonal::exact_value;

    #[test]
    fn values_at_two_examples() {
        assert_eq!(value_at_two(Family::Zeta, 2), PiValue::monomial(rat(1, 120), 4));
        assert_eq!(value_at_two(Family::ZetaStar, 1), PiValue::monomial(rat(1, 6), 2));
        assert_eq!(value_at_two(Family::TStar, 1), PiValue::monomial(rat(1, 8), 2));
        assert_eq!(value_at_two(Family::T, 2), PiValue::monomial(rat(1, 384), 4));
        for family in Family::ALL {
            for r in 1..=8 {
                assert!(value_at_two_report(family, r).unwrap().pass, "{family} r={r}");
            }
        }
    }

    #[test]
    fn values_at_even_examples() {
        assert_eq!(value_at_even(Family::Zeta, 1, 2).unwrap(), PiValue::monomial(rat(1, 90), 4));
        assert_eq!(value_at_even(Family::ZetaStar, 2, 1).unwrap(), PiValue::monomial(rat(7, 360), 4));
        let z4 = rat(1, 90);
        let z8 = rat(1, 9450);
        let expected = (&z4 * &z4 - z8) / rat(2, 1);
        assert_eq!(value_at_even(Family::Zeta, 2, 2).unwrap(), PiValue::monomial(expected, 8));
        assert!(value_at_even(Family::T, 1, 1).is_err());
        for family in [Family::Zeta, Family::ZetaStar] {
            for r in 1..=6 {
                for k in 1..=3 {
                    assert!(value_at_even_report(family, r, k).unwrap().pass);
                }
            }
        }
    }

    #[test]
    fn values_at_zero() {
        assert_eq!(value_at_zero(Family::Zeta, 1), rat(-1, 2));
        assert_eq!(value_at_zero(Family::Zeta, 2), rat(3, 8));
        assert_eq!(value_at_zero(Family::ZetaStar, 2), rat(-1, 8));
        assert_eq!(value_at_zero(Family::T, 5), rat(0, 1));
        for r in 1..=20 {
            for family in Family::ALL {
                assert!(value_at_zero_report(family, r).unwrap().pass);
            }
            let z = value_at_zero(Family::Zeta, r);
            assert_eq!(crate::arith::signum(&z), sign_pow(r as i64) as i32);
            assert_eq!(crate::arith::signum(&value_at_zero(Family::ZetaStar, r)), -1);
        }
    }

    #[test]
    fn zero_values_through_half_integer_products() {
        for r in 1..=20u32 {
            let xs: Vec<Rational> = (0..r).map(|k| int(factorial(k)) / rat(2, 1)).collect();
            let y = complete_bell(r as usize, &xs).unwrap();
            assert_eq!(y, shifted_product(r, &rat(1, 2)));
            let neg: Vec<Rational> = xs.iter().map(|x| -x).collect();
            let y = complete_bell(r as usize, &neg).unwrap();
            assert_eq!(y, shifted_product(r, &rat(-1, 2)));
        }
    }

    #[test]
    fn vanishing() {
        for family in Family::ALL {
            assert!(vanishing_at_negative_even(family, 3, 1).unwrap().pass);
            assert!(vanishing_at_negative_even(family, 2, 2).unwrap().pass);
        }
    }

    #[test]
    fn relation_examples() {
        let r1 = functional_relation(1, Argument::Real(2.7), false).unwrap();
        assert!(r1.pass);
        let expected = (1.0 - 2f64.powf(-2.7)) * zeta_numeric(2.7).unwrap();
        assert!((r1.lhs.to_f64() - expected).abs() < 1e-14);
        let r2 = functional_relation(2, Argument::Integer(2), false).unwrap();
        assert!(r2.pass);
        assert_eq!(r2.lhs, Value::Exact(PiValue::monomial(rat(1, 384), 4)));
        assert!(functional_relation(3, Argument::Integer(2), true).unwrap().pass);
        assert!(functional_relation(3, Argument::Real(2.0), true).unwrap().pass);
        let printed = functional_relation_printed_star(2, Argument::Integer(2)).unwrap();
        assert!(!printed.pass);
        assert!(printed.informational);
        assert!(!printed.failed());
        assert!(functional_relation(2, Argument::Integer(3), false).is_err());
    }

    #[test]
    fn harmonic_products() {
        for s in [2.0, 2.7, 3.0] {
            assert!(harmonic_product(s, false).unwrap().pass);
            assert!(harmonic_product(s, true).unwrap().pass);
        }
    }

    #[test]
    fn merca_examples() {
        let (a, b) = merca_even_zeta(1);
        assert_eq!(a, PiValue::monomial(rat(1, 6), 2));
        assert_eq!(b, a);
        let (a, b) = merca_even_zeta(2);
        assert_eq!(a, PiValue::monomial(rat(1, 90), 4));
        assert_eq!(b, a);
        for k in 1..=10 {
            assert!(merca_report(k).iter().all(|r| r.pass), "k = {k}");
        }
    }

    #[test]
    fn asymptotic_ratios() {
        let (z, _) = zero_value_asymptotics(1);
        assert!((z - libm::sqrt(PI) / 2.0).abs() < 1e-15);
        let (z, s) = zero_value_asymptotics(100);
        assert!((z - 1.0).abs() < 0.01);
        assert!((s - 1.0).abs() < 0.01);
    }

    #[test]
    fn three_way_small() {
        let [a, b] = three_way_agreement(Family::TStar, 4, 2.5, OracleConfig::default()).unwrap();
        assert!(a.pass && b.pass, "{a:?} {b:?}");
    }

    #[test]
    fn closed_form_zero_matches_formula_value() {
        let v = exact_value(Family::ZetaStar, 2, 0, Method::ClosedForm).unwrap();
        assert_eq!(v.as_rational().unwrap(), rat(-1, 8));
        assert_eq!(zeta_at_zero(), rat(-1, 2));
    }
}
