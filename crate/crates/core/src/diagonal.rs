//! The four diagonal families `ζ_r(s)`, `ζ*_r(s)`, `t_r(s)`, `t*_r(s)`.
//!
//! Each family is a polynomial in its base values `b_j = base(j·s)` where
//! `base` is `ζ` for the zeta families and `t` for the `t` families. Three
//! independent evaluators are provided:
//!
//! * [`closed_form`]: the sum over partitions `(c_1, …, c_r)` of `r` of
//!   `±∏ b_j^{c_j} / (j^{c_j} c_j!)`, with sign `(−1)^{r + Σc_j}` for the
//!   non-star families and `+1` for the star families. This is the
//!   authoritative route.
//! * [`bell_form`]: `((−1)^r / r!)·Y_r(−0!b_1, −1!b_2, …)` for the non-star
//!   families and `(1/r!)·Y_r(0!b_1, 1!b_2, …)` for the star families.
//! * [`recurrence`]: the Newton-identity recurrences
//!   `r f_r = Σ_j (∓1)^{j−1} f_{r−j} b_j`, bottom-up from `f_0 = 1`.
//!
//! A fourth route, [`diagonal_oracle`], sums the defining series directly for
//! `s > 1` and is independent of all three.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{factorial, int, sign_pow, to_f64, Rational};
use crate::bell::{complete_bell, partitions_of};
use crate::error::{Error, Result};
use crate::pi::PiValue;
use crate::ring::Ring;
use crate::zeta::{t_exact, t_minus_one, t_numeric, zeta_exact, zeta_minus_one, zeta_numeric};

/// Default depth cap for the exact backend.
pub const MAX_EXACT_DEPTH: usize = 32;
/// Default depth cap for the series oracle.
pub const MAX_ORACLE_DEPTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Zeta,
    ZetaStar,
    T,
    TStar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Zeta, Family::ZetaStar, Family::T, Family::TStar];

    /// Weak inequalities in the defining sum (complete rather than
    /// elementary symmetric functions).
    pub fn is_star(self) -> bool {
        matches!(self, Family::ZetaStar | Family::TStar)
    }

    /// Base function is `t` (odd denominators) rather than `ζ`.
    pub fn is_t(self) -> bool {
        matches!(self, Family::T | Family::TStar)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Zeta => "zeta",
            Family::ZetaStar => "zetastar",
            Family::T => "t",
            Family::TStar => "tstar",
        }
    }

    /// Scalar base value at a real argument.
    pub fn base_numeric(self, s: f64) -> Result<f64> {
        if self.is_t() {
            t_numeric(s)
        } else {
            zeta_numeric(s)
        }
    }

    /// Scalar base value at an integer argument with a closed form.
    pub fn base_exact(self, m: i64) -> Result<PiValue> {
        if self.is_t() {
            t_exact(m)
        } else {
            zeta_exact(m)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zeta" => Ok(Family::Zeta),
            "zetastar" | "zeta-star" | "zeta*" => Ok(Family::ZetaStar),
            "t" => Ok(Family::T),
            "tstar" | "t-star" | "t*" => Ok(Family::TStar),
            other => Err(Error::Domain(alloc::format!("unknown family {other:?}"))),
        }
    }
}

/// The argument `s`. Integer arguments select the exact backend.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Argument {
    Real(f64),
    Integer(i64),
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Argument::Real(s) => write!(f, "{s}"),
            Argument::Integer(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Exact(PiValue),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Real(x) => *x,
            Value::Exact(v) => v.to_f64(),
        }
    }

    pub fn as_exact(&self) -> Option<&PiValue> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Real(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Real(x) => write!(f, "{x:.17e}"),
            Value::Exact(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    BellForm,
    Recurrence,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::BellForm => "bell-form",
            Method::Recurrence => "recurrence",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalValue {
    pub family: Family,
    pub depth: usize,
    pub argument: Argument,
    pub value: Value,
    pub method: Method,
    /// Heuristic bound on the truncation error (oracle only).
    pub error_bound: Option<f64>,
}

/// Base values `base(s), base(2s), …, base(rs)` on the numeric backend.
///
/// Any `j·s = 1` is reported as a pole naming `j`.
pub fn numeric_bases(family: Family, r: usize, s: f64) -> Result<Vec<f64>> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::Domain(alloc::format!(
            "numeric evaluation needs real s > 0, got s = {s}"
        )));
    }
    (1..=r)
        .map(|j| {
            let js = j as f64 * s;
            if (js - 1.0).abs() <= 4.0 * f64::EPSILON {
                return Err(Error::Pole { multiple: j as u32, argument: s });
            }
            family.base_numeric(js)
        })
        .collect()
}

/// Base values `base(s), …, base(rs)` on the exact backend. `s` must be an
/// even positive integer, zero, or negative.
pub fn exact_bases(family: Family, r: usize, s: i64) -> Result<Vec<PiValue>> {
    if r > 0 && s > 0 && s % 2 == 1 {
        return Err(Error::NoClosedForm(s));
    }
    (1..=r as i64).map(|j| family.base_exact(j * s)).collect()
}

/// Partition-sum closed form over any ring; `r = bases.len()`.
pub fn closed_form<R: Ring>(family: Family, bases: &[R]) -> R {
    let r = bases.len();
    let mut acc = R::zero();
    for p in partitions_of(r) {
        let mut coeff = p.cycle_weight();
        if !family.is_star() && sign_pow(r as i64 + p.len() as i64) < 0 {
            coeff = -coeff;
        }
        acc = acc.add(&p.monomial(bases).scale(&coeff));
    }
    acc
}

/// Rounding bound for [`closed_form`] on floats: `4r·ε` times the sum of the
/// absolute values of its terms. The terms alternate in sign for the
/// non-star families, so this can dwarf `ulp(result)`.
pub fn closed_form_rounding(bases: &[f64]) -> f64 {
    let r = bases.len();
    let magnitude: f64 = partitions_of(r)
        .map(|p| (p.monomial(bases) * to_f64(&p.cycle_weight())).abs())
        .sum();
    4.0 * (r.max(1)) as f64 * f64::EPSILON * magnitude
}

/// Complete-Bell-polynomial form over any ring; `r = bases.len()`.
pub fn bell_form<R: Ring>(family: Family, bases: &[R]) -> R {
    let r = bases.len();
    let star = family.is_star();
    let xs: Vec<R> = bases
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let f = int(factorial(i as u32));
            b.scale(&if star { f } else { -f })
        })
        .collect();
    let y = complete_bell(r, &xs).expect("inputs sized to depth");
    let mut prefactor = Rational::new(BigInt::one(), factorial(r as u32));
    if !star && r % 2 == 1 {
        prefactor = -prefactor;
    }
    y.scale(&prefactor)
}

/// All depths `f_0, …, f_r` by the Newton-identity recurrence.
pub fn recurrence<R: Ring>(family: Family, bases: &[R]) -> Vec<R> {
    let r = bases.len();
    let mut values = Vec::with_capacity(r + 1);
    values.push(R::one());
    for depth in 1..=r {
        let mut acc = R::zero();
        for j in 1..=depth {
            let term = values[depth - j].mul(&bases[j - 1]);
            acc = if family.is_star() || j % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        values.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(depth))));
    }
    values
}

fn evaluate_with<R: Ring>(family: Family, bases: &[R], method: Method) -> Result<R> {
    match method {
        Method::ClosedForm => Ok(closed_form(family, bases)),
        Method::BellForm => Ok(bell_form(family, bases)),
        Method::Recurrence => Ok(recurrence(family, bases).pop().expect("depth 0 present")),
        Method::Oracle => Err(Error::Domain(
            "the oracle is only available through diagonal_oracle".into(),
        )),
    }
}

/// `base(js) − 1` for `j = 1..=r`, real `s > 1`: the base values of the
/// series with its `n = 1` term removed.
pub fn numeric_tail_bases(family: Family, r: usize, s: f64) -> Result<Vec<f64>> {
    if !(s > 1.0) {
        return Err(Error::Divergent(s));
    }
    (1..=r)
        .map(|j| {
            let js = j as f64 * s;
            if family.is_t() {
                t_minus_one(js)
            } else {
                zeta_minus_one(js)
            }
        })
        .collect()
}

/// Reassembles `f_r` from the tail values `g_i`, `i = 0..=r`, using that the
/// removed term equals 1: `e_r = g_r + g_{r−1}` and `h_r = g_0 + ⋯ + g_r`.
fn from_tail(family: Family, tail_values: &[f64]) -> f64 {
    let r = tail_values.len() - 1;
    if family.is_star() {
        tail_values.iter().rev().sum()
    } else if r == 0 {
        tail_values[0]
    } else {
        tail_values[r] + tail_values[r - 1]
    }
}

/// `f_r(s)` for real `s > 0` by one of the algebraic methods.
///
/// For `s > 1` the polynomial is evaluated on [`numeric_tail_bases`] and the
/// unit first term is restored afterwards. The base values `ζ(js)` all
/// approach 1 and the non-star sums cancel heavily in them; the tail bases
/// are small and do not.
pub fn numeric_value(family: Family, r: usize, s: f64, method: Method) -> Result<f64> {
    if s > 1.0 {
        let tail = numeric_tail_bases(family, r, s)?;
        let values = match method {
            Method::Recurrence => recurrence(family, &tail),
            _ => (0..=r)
                .map(|i| evaluate_with(family, &tail[..i], method))
                .collect::<Result<Vec<_>>>()?,
        };
        return Ok(from_tail(family, &values));
    }
    let bases = numeric_bases(family, r, s)?;
    evaluate_with(family, &bases, method)
}

/// Rounding bound for `numeric_value(family, r, s, Method::ClosedForm)`.
pub fn numeric_rounding_bound(family: Family, r: usize, s: f64) -> Result<f64> {
    if s > 1.0 {
        let tail = numeric_tail_bases(family, r, s)?;
        let lo = if family.is_star() { 0 } else { r.saturating_sub(1) };
        Ok((lo..=r).map(|i| closed_form_rounding(&tail[..i])).sum::<f64>()
            + 4.0 * f64::EPSILON * numeric_value(family, r, s, Method::ClosedForm)?.abs())
    } else {
        Ok(closed_form_rounding(&numeric_bases(family, r, s)?))
    }
}

/// `f_r(s)` exactly, at an even positive, zero, or negative integer `s`.
pub fn exact_value(family: Family, r: usize, s: i64, method: Method) -> Result<PiValue> {
    if r > MAX_EXACT_DEPTH {
        return Err(Error::Domain(alloc::format!(
            "exact depth {r} exceeds the cap {MAX_EXACT_DEPTH}"
        )));
    }
    let bases = exact_bases(family, r, s)?;
    evaluate_with(family, &bases, method)
}

fn evaluate(family: Family, r: usize, argument: Argument, method: Method) -> Result<DiagonalValue> {
    let value = match argument {
        Argument::Real(s) => Value::Real(numeric_value(family, r, s, method)?),
        Argument::Integer(m) => Value::Exact(exact_value(family, r, m, method)?),
    };
    Ok(DiagonalValue {
        family,
        depth: r,
        argument,
        value,
        method,
        error_bound: None,
    })
}

pub fn diagonal_closed_form(family: Family, r: usize, argument: Argument) -> Result<DiagonalValue> {
    evaluate(family, r, argument, Method::ClosedForm)
}

pub fn diagonal_bell_form(family: Family, r: usize, argument: Argument) -> Result<DiagonalValue> {
    evaluate(family, r, argument, Method::BellForm)
}

pub fn diagonal_recurrence(family: Family, r: usize, argument: Argument) -> Result<DiagonalValue> {
    evaluate(family, r, argument, Method::Recurrence)
}

/// Truncated-series oracle settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Number of series terms `N` summed.
    pub truncation: usize,
    /// Combine the sums at `N/2` and `N` to cancel the leading `N^{1−s}`
    /// truncation error.
    pub extrapolate: bool,
}

impl OracleConfig {
    pub fn new(truncation: usize) -> Self {
        Self { truncation, extrapolate: true }
    }

    pub fn raw(truncation: usize) -> Self {
        Self { truncation, extrapolate: false }
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self::new(5000)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    /// `e_r` or `h_r` of the first `N` terms.
    pub truncated: f64,
    /// Extrapolated value, if requested.
    pub extrapolated: Option<f64>,
    /// Upper bound on `|f_r(s) − truncated|` from the integral comparison
    /// `Σ_{n>N} x_n ≤ ∫_N^∞`, plus a rounding allowance.
    pub tail_bound: f64,
}

impl OracleReport {
    pub fn value(&self) -> f64 {
        self.extrapolated.unwrap_or(self.truncated)
    }
}

/// Sums `e_r` (non-star) or `h_r` (star) of `x_n = n^{−s}` (zeta families)
/// or `x_n = (2n−1)^{−s}` (t families), `n = 1..=N`, by the incremental
/// symmetric-function update.
pub fn oracle_report(family: Family, r: usize, s: f64, config: OracleConfig) -> Result<OracleReport> {
    if !(s > 1.0) {
        return Err(Error::Divergent(s));
    }
    let n_max = config.truncation;
    if n_max < r {
        return Err(Error::Domain(alloc::format!(
            "truncation {n_max} is below the depth {r}"
        )));
    }
    let half = n_max / 2;
    if config.extrapolate && half < r.max(1) {
        return Err(Error::Domain(alloc::format!(
            "extrapolation needs truncation >= 2 * depth, got {n_max} for depth {r}"
        )));
    }
    let mut sym = alloc::vec![0.0f64; r + 1];
    sym[0] = 1.0;
    let mut at_half = None;
    for n in 1..=n_max {
        let base = if family.is_t() { (2 * n - 1) as f64 } else { n as f64 };
        let x = libm::pow(base, -s);
        if family.is_star() {
            // h_k ← h_k + x·h_{k−1}, using the already-updated h_{k−1}
            for k in 1..=r {
                sym[k] += x * sym[k - 1];
            }
        } else {
            // e_k ← e_k + x·e_{k−1}, using the previous e_{k−1}
            for k in (1..=r).rev() {
                sym[k] += x * sym[k - 1];
            }
        }
        if n == half {
            at_half = Some(sym[r]);
        }
    }
    let truncated = sym[r];
    let tail_sum = |n: usize| {
        if family.is_t() {
            libm::pow(2.0 * n as f64 - 1.0, 1.0 - s) / (2.0 * (s - 1.0))
        } else {
            libm::pow(n as f64, 1.0 - s) / (s - 1.0)
        }
    };
    let p1 = tail_sum(n_max);
    let mut tail_bound = 0.0;
    let mut p1_pow = 1.0;
    for j in 1..=r {
        p1_pow *= p1;
        tail_bound += p1_pow * sym[r - j];
    }
    tail_bound += (n_max * (r + 1)) as f64 * f64::EPSILON * truncated.abs();

    let extrapolated = if config.extrapolate && r > 0 {
        let ratio = libm::pow(n_max as f64 / half as f64, 1.0 - s);
        let coarse = at_half.unwrap_or(truncated);
        Some((truncated - ratio * coarse) / (1.0 - ratio))
    } else if config.extrapolate {
        Some(truncated)
    } else {
        None
    };
    Ok(OracleReport { truncated, extrapolated, tail_bound })
}

pub fn diagonal_oracle(family: Family, r: usize, s: f64, config: OracleConfig) -> Result<DiagonalValue> {
    let report = oracle_report(family, r, s, config)?;
    Ok(DiagonalValue {
        family,
        depth: r,
        argument: Argument::Real(s),
        value: Value::Real(report.value()),
        method: Method::Oracle,
        error_bound: Some(report.tail_bound),
    })
}
