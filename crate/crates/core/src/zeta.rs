//! The Riemann zeta function and `t(s) = (1 − 2^{−s}) ζ(s)` on the real
//! axis: numeric values for `s > 0, s ≠ 1` and exact values at even
//! positive and non-positive integers.
//!
//! Numeric error budget: absolute error at most `1e-13` for `ζ(s) = O(1)`,
//! and relative error of a few ulps times the pole factor near `s = 1`.

use libm::{exp, expm1, log, pow};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{bernoulli, factorial, int, pow2, sign_pow, Rational};
use crate::error::{Error, Result};
use crate::pi::PiValue;

/// Absolute error budget of [`zeta_numeric`] and [`t_numeric`] for
/// arguments bounded away from the pole.
pub const NUMERIC_ERROR_BUDGET: f64 = 1e-13;

/// Number of terms in the accelerated alternating sum. Each term gains
/// `log10(3 + √8) ≈ 0.77` digits; 22 terms reach 1e-16 relative to the first
/// term, past the 1e-14 target.
const ALTERNATING_TERMS: usize = 22;

/// Euler–Maclaurin cut-off and number of correction terms for `s > 1`.
const EM_CUTOFF: u32 = 10;

/// `B_{2j} / (2j)!` for `j = 1..=10`.
const EM_COEFFS: [f64; 10] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
];

fn check_domain(s: f64) -> Result<()> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain(alloc::format!(
            "numeric zeta needs s > 0, got s = {s}"
        )));
    }
    if s == 1.0 {
        return Err(Error::Pole { multiple: 1, argument: s });
    }
    Ok(())
}

/// Dirichlet eta `η(s) = Σ_{n≥1} (−1)^{n−1} n^{−s}` for `s > 0`, by the
/// Cohen–Rodriguez Villegas–Zagier acceleration of the alternating series.
pub fn eta_numeric(s: f64) -> Result<f64> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain(alloc::format!("eta needs s > 0, got s = {s}")));
    }
    let n = ALTERNATING_TERMS;
    let nf = n as f64;
    let mut d = pow(3.0 + libm::sqrt(8.0), nf);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = 0.0;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        sum += c * pow(kf + 1.0, -s);
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    Ok(sum / d)
}

/// `ζ(s)` for real `s > 0`, `s ≠ 1`.
///
/// On `(0, 1)` this is `η(s) / (1 − 2^{1−s})`; for `s > 1` a direct sum with
/// an Euler–Maclaurin tail.
pub fn zeta_numeric(s: f64) -> Result<f64> {
    check_domain(s)?;
    if s < 1.0 {
        // 1 − 2^{1−s} = −expm1((1−s) ln 2), accurate near s = 1.
        let denom = -expm1((1.0 - s) * core::f64::consts::LN_2);
        return Ok(eta_numeric(s)? / denom);
    }
    zeta_tail(s, 1)
}

/// `Σ_{n ≥ start} n^{−s}` for real `s > 1` and `start ≥ 1`: a direct sum up
/// to the cut-off plus an Euler–Maclaurin tail. No term below `start` is
/// ever formed, so `ζ(s) − 1` keeps full relative accuracy for large `s`.
pub fn zeta_tail(s: f64, start: u32) -> Result<f64> {
    check_domain(s)?;
    if s < 1.0 {
        return Err(Error::Divergent(s));
    }
    let start = start.max(1);
    let cutoff = EM_CUTOFF.max(start);
    let n = cutoff as f64;
    let mut sum = 0.0;
    for k in (start..cutoff).rev() {
        sum += pow(k as f64, -s);
    }
    let ln_n = log(n);
    let n_pow = exp(-s * ln_n);
    sum += exp((1.0 - s) * ln_n) / (s - 1.0);
    sum += n_pow / 2.0;
    // Rising factorial s(s+1)…(s+2j−2) times N^{−s−2j+1}.
    let mut rising = s;
    let mut power = n_pow / n;
    for (j, coeff) in EM_COEFFS.iter().enumerate() {
        if j > 0 {
            let m = (2 * j) as f64;
            rising *= (s + m - 1.0) * (s + m);
            power /= n * n;
        }
        sum += coeff * rising * power;
    }
    Ok(sum)
}

/// `ζ(s) − 1` for `s > 1`.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    zeta_tail(s, 2)
}

/// `t(s) − 1 = Σ_{n≥2} (2n−1)^{−s}` for `s > 1`, as
/// `(1 − 2^{−s}) Σ_{n≥3} n^{−s} − 4^{−s}`; the subtraction only removes the
/// even term `4^{−s}`, which is smaller than the leading `3^{−s}`.
pub fn t_minus_one(s: f64) -> Result<f64> {
    let rest = zeta_tail(s, 3)?;
    Ok(-expm1(-s * core::f64::consts::LN_2) * rest - libm::exp2(-2.0 * s))
}

/// `t(s) = Σ_{n≥1} (2n−1)^{−s} = (1 − 2^{−s}) ζ(s)`.
pub fn t_numeric(s: f64) -> Result<f64> {
    let z = zeta_numeric(s)?;
    Ok(-expm1(-s * core::f64::consts::LN_2) * z)
}

/// `ζ(2k) = (−1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!)` for `k ≥ 1`.
pub fn zeta_exact_even(k: u32) -> PiValue {
    assert!(k >= 1, "zeta_exact_even needs k >= 1");
    let two_k = 2 * k;
    let coeff = bernoulli(two_k as usize)
        * pow2(two_k as i64)
        * Rational::new(BigInt::from(sign_pow(k as i64 + 1)), factorial(two_k) * 2);
    PiValue::monomial(coeff, two_k)
}

/// `ζ(−n)` for `n ≥ 0`: `ζ(0) = −1/2`, `ζ(−n) = −B_{n+1}/(n+1)` otherwise.
pub fn zeta_exact_nonpositive(n: u32) -> Rational {
    if n == 0 {
        return Rational::new(BigInt::from(-1), BigInt::from(2));
    }
    -bernoulli(n as usize + 1) / int(n + 1)
}

/// Exact `ζ(m)` at an integer `m` that has a closed form (even positive or
/// non-positive).
pub fn zeta_exact(m: i64) -> Result<PiValue> {
    if m <= 0 {
        Ok(PiValue::from_rational(zeta_exact_nonpositive((-m) as u32)))
    } else if m % 2 == 0 {
        Ok(zeta_exact_even((m / 2) as u32))
    } else {
        Err(Error::NoClosedForm(m))
    }
}

/// Exact `t(m) = (1 − 2^{−m}) ζ(m)`; in particular `t(0) = 0`.
pub fn t_exact(m: i64) -> Result<PiValue> {
    let z = zeta_exact(m)?;
    Ok(z.scale(&(Rational::one() - pow2(-m))))
}

/// `1 − 2^{−m}` as an exact rational (zero at `m = 0`).
pub fn t_factor(m: i64) -> Rational {
    let f = Rational::one() - pow2(-m);
    debug_assert!(m != 0 || f.is_zero());
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use core::f64::consts::PI;

    #[test]
    fn known_values() {
        assert!((zeta_numeric(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta_numeric(0.5).unwrap() + 1.460_354_508_809_586_8).abs() < 1e-13);
        assert!((zeta_numeric(3.0).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-14);
        assert!((zeta_numeric(1.5).unwrap() - 2.612_375_348_685_488_3).abs() < 1e-13);
        assert!((zeta_numeric(1.0 / 3.0).unwrap() + 0.973_360_248_350_782_7).abs() < 1e-13);
        assert!((zeta_numeric(0.9).unwrap() + 9.430_114_019_402_254_6).abs() < 1e-12);
    }

    #[test]
    fn near_pole_relative_accuracy() {
        // ζ(1 ± ε) = ±1/ε + γ + O(ε)
        let gamma = 0.577_215_664_901_532_9;
        for eps in [1e-4, -1e-4, 1e-6] {
            let z = zeta_numeric(1.0 + eps).unwrap();
            assert!((z - 1.0 / eps - gamma).abs() < 1e-3, "eps = {eps}: {z}");
        }
    }

    #[test]
    fn large_arguments_tend_to_one() {
        let z = zeta_numeric(60.0).unwrap();
        assert!((z - 1.0 - pow(2.0, -60.0)).abs() < 1e-17);
        assert!((zeta_numeric(400.0).unwrap() - 1.0).abs() == 0.0);
    }

    #[test]
    fn domain_errors() {
        assert_eq!(zeta_numeric(1.0), Err(Error::Pole { multiple: 1, argument: 1.0 }));
        assert!(matches!(zeta_numeric(0.0), Err(Error::Domain(_))));
        assert!(matches!(zeta_numeric(-2.0), Err(Error::Domain(_))));
        assert!(matches!(t_numeric(1.0), Err(Error::Pole { .. })));
    }

    #[test]
    fn t_values() {
        assert!((t_numeric(2.0).unwrap() - PI * PI / 8.0).abs() < 1e-14);
        let expected = 15.0 / 16.0 * PI.powi(4) / 90.0;
        assert!((t_numeric(4.0).unwrap() - expected).abs() < 1e-14);
        let half = (1.0 - 2f64.powf(-0.5)) * zeta_numeric(0.5).unwrap();
        assert!((t_numeric(0.5).unwrap() - half).abs() < 1e-15);
        for s in [0.3, 1.7, 2.5, 6.0] {
            let ratio = t_numeric(s).unwrap() / zeta_numeric(s).unwrap();
            assert!((ratio - (1.0 - 2f64.powf(-s))).abs() < 1e-15);
        }
    }

    #[test]
    fn exact_even_values() {
        assert_eq!(zeta_exact_even(1), PiValue::monomial(rat(1, 6), 2));
        assert_eq!(zeta_exact_even(2), PiValue::monomial(rat(1, 90), 4));
        assert_eq!(zeta_exact_even(3), PiValue::monomial(rat(1, 945), 6));
        for k in 1..=6 {
            let exact = zeta_exact_even(k).to_f64();
            assert!((zeta_numeric(2.0 * k as f64).unwrap() - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_nonpositive_values() {
        assert_eq!(zeta_exact_nonpositive(0), rat(-1, 2));
        assert_eq!(zeta_exact_nonpositive(1), rat(-1, 12));
        assert!(zeta_exact_nonpositive(2).is_zero());
        assert_eq!(zeta_exact_nonpositive(3), rat(1, 120));
        assert!(t_exact(0).unwrap().is_zero());
        assert_eq!(zeta_exact(3), Err(Error::NoClosedForm(3)));
        assert_eq!(t_exact(2).unwrap(), PiValue::monomial(rat(1, 8), 2));
    }

    #[test]
    fn eta_matches_zeta_relation() {
        for s in [1.5, 2.0, 3.0] {
            let lhs = (1.0 - 2f64.powf(1.0 - s)) * zeta_numeric(s).unwrap();
            assert!((lhs - eta_numeric(s).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn tails_keep_relative_accuracy() {
        let z = zeta_minus_one(40.0).unwrap();
        let expected = pow(2.0, -40.0) + pow(3.0, -40.0) + pow(4.0, -40.0);
        assert!((z / expected - 1.0).abs() < 1e-14);
        let t = t_minus_one(40.0).unwrap();
        let expected = pow(3.0, -40.0) + pow(5.0, -40.0) + pow(7.0, -40.0);
        assert!((t / expected - 1.0).abs() < 1e-14);
        for s in [1.5, 2.0, 3.0, 7.5] {
            assert!((zeta_minus_one(s).unwrap() + 1.0 - zeta_numeric(s).unwrap()).abs() < 1e-14);
            assert!((t_minus_one(s).unwrap() + 1.0 - t_numeric(s).unwrap()).abs() < 1e-14);
        }
        assert!(zeta_tail(0.5, 2).is_err());
    }

    #[test]
    fn negative_on_critical_segment() {
        for s in [0.1, 0.25, 0.5, 0.75, 0.9] {
            assert!(zeta_numeric(s).unwrap() < 0.0);
        }
    }
}
