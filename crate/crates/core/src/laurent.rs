//! Poles of `ζ_r(s)` on the positive real axis.
//!
//! `ζ_r` is singular only at `s = 1/k`, `1 ≤ k ≤ r`, where the base value
//! `ζ(ks)` blows up. Writing `r = kl + m` with `0 ≤ m < k`, the pole has
//! order `l` and
//!
//! `ζ_r(s) ~ (−1)^{(k+1)l} / (k^l l!) · ζ_m(1/k) · (ks − 1)^{−l}`.
//!
//! Since `ζ < 0` on `(0, 1)`, `ζ_m(1/k)` has sign `(−1)^m`, so the order is
//! exact.

use alloc::vec::Vec;

use crate::diagonal::{closed_form, numeric_bases, Family};
use crate::error::{Error, Result};
use crate::zeta::NUMERIC_ERROR_BUDGET;

/// Default ε-ladder for [`laurent_numeric_check`].
pub const DEFAULT_EPSILONS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Relative gaps below this are treated as converged regardless of the
/// shape of the ladder.
pub const NOISE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PoleSpec {
    pub r: u32,
    pub k: u32,
    pub order: u32,
    pub remainder: u32,
}

impl PoleSpec {
    pub fn new(r: u32, k: u32) -> Result<Self> {
        if k == 0 || k > r {
            return Err(Error::Domain(alloc::format!(
                "pole index k = {k} outside 1..={r}"
            )));
        }
        Ok(Self { r, k, order: r / k, remainder: r % k })
    }

    pub fn location(&self) -> f64 {
        1.0 / self.k as f64
    }
}

/// One estimate on the ε-ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentSample {
    pub epsilon: f64,
    pub estimate: f64,
    /// `|estimate − leading| / max(1, |leading|)`.
    pub gap: f64,
    pub two_sided: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentReport {
    pub pole: PoleSpec,
    pub leading_closed_form: f64,
    pub samples: Vec<LaurentSample>,
    /// Final-gap threshold for this pole order.
    pub tolerance: f64,
    /// Gaps shrink along the ladder (or sit below [`NOISE_FLOOR`]).
    pub contracting: bool,
    pub pass: bool,
}

impl LaurentReport {
    pub fn numeric_estimates(&self) -> Vec<(f64, f64)> {
        self.samples.iter().map(|s| (s.epsilon, s.estimate)).collect()
    }

    pub fn final_gap(&self) -> Option<f64> {
        self.samples.last().map(|s| s.gap)
    }
}

/// Relative tolerance on the final gap for a pole of order `l`. Rounding
/// in `ζ_r` near the pole grows like `(kε)^{−l}` ulps, so higher orders get
/// more room; every entry stays at or below `1e-2`.
pub fn order_tolerance(order: u32) -> f64 {
    match order {
        0..=2 => 1e-4,
        3 => 1e-3,
        _ => 1e-2,
    }
}

/// All poles of `ζ_r`, `k = 1..=r`.
pub fn pole_set(r: u32) -> Vec<PoleSpec> {
    (1..=r).map(|k| PoleSpec { r, k, order: r / k, remainder: r % k }).collect()
}

/// `ζ_m(1/k)`, the depth-`m` value at the pole, with `ζ_0 = 1`.
pub fn residual_factor(pole: &PoleSpec) -> Result<f64> {
    if pole.remainder == 0 {
        return Ok(1.0);
    }
    let bases = numeric_bases(Family::Zeta, pole.remainder as usize, pole.location())?;
    Ok(closed_form(Family::Zeta, &bases))
}

/// Coefficient of `(ks − 1)^{−l}` in `ζ_r(s)` at `s = 1/k`.
pub fn leading_coefficient(r: u32, k: u32) -> Result<f64> {
    let pole = PoleSpec::new(r, k)?;
    let l = pole.order;
    let sign = if (k + 1) * l % 2 == 0 { 1.0 } else { -1.0 };
    let mut denom = 1.0;
    for i in 1..=l {
        denom *= k as f64 * i as f64;
    }
    Ok(sign / denom * residual_factor(&pole)?)
}

fn scaled_value(pole: &PoleSpec, epsilon: f64) -> Result<f64> {
    let s = pole.location() + epsilon;
    for other in 1..=pole.r {
        if other != pole.k && (s - 1.0 / other as f64).abs() <= 4.0 * f64::EPSILON {
            return Err(Error::PoleCollision { point: s, other_k: other });
        }
    }
    let bases = numeric_bases(Family::Zeta, pole.r as usize, s)?;
    let value = closed_form(Family::Zeta, &bases);
    Ok(value * libm::pow(pole.k as f64 * epsilon, pole.order as f64))
}

/// Estimates `ζ_r(1/k + ε)(kε)^l` along the ladder and compares with
/// [`leading_coefficient`]. Where `1/k − ε` is still positive the
/// estimate is the mean of both sides, which cancels the `O(ε)` term.
pub fn laurent_numeric_check(r: u32, k: u32, epsilons: &[f64]) -> Result<LaurentReport> {
    let pole = PoleSpec::new(r, k)?;
    if epsilons.is_empty() {
        return Err(Error::Domain("empty epsilon ladder".into()));
    }
    let leading = leading_coefficient(r, k)?;
    let scale = leading.abs().max(1.0);
    let mut samples = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::Domain(alloc::format!("epsilon must be positive, got {eps}")));
        }
        let right = scaled_value(&pole, eps)?;
        let two_sided = pole.location() - eps > 0.0;
        let estimate = if two_sided {
            (right + scaled_value(&pole, -eps)?) / 2.0
        } else {
            right
        };
        if !estimate.is_finite() {
            return Err(Error::Domain(alloc::format!(
                "non-finite estimate at epsilon = {eps}"
            )));
        }
        samples.push(LaurentSample {
            epsilon: eps,
            estimate,
            gap: (estimate - leading).abs() / scale,
            two_sided,
        });
    }
    let contracting = samples
        .windows(2)
        .all(|w| w[1].gap <= w[0].gap || w[1].gap <= NOISE_FLOOR);
    let tolerance = order_tolerance(pole.order);
    let final_gap = samples.last().map_or(f64::INFINITY, |s| s.gap);
    Ok(LaurentReport {
        pole,
        leading_closed_form: leading,
        samples,
        tolerance,
        contracting,
        pass: contracting && final_gap <= tolerance,
    })
}

/// Certifies `sign ζ_m(1/k) = (−1)^m`, i.e. that the pole at `1/k` has
/// order exactly `⌊r/k⌋`.
pub fn nonvanishing_certificate(r: u32, k: u32) -> Result<bool> {
    let pole = PoleSpec::new(r, k)?;
    let value = residual_factor(&pole)?;
    let margin = 10.0 * NUMERIC_ERROR_BUDGET * (pole.remainder as f64 + 1.0);
    if value.abs() <= margin {
        return Err(Error::Inconclusive { value, budget: margin });
    }
    let expected_positive = pole.remainder % 2 == 0;
    Ok((value > 0.0) == expected_positive)
}
