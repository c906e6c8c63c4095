//! Exact elements of `ℚ[π²]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::arith::{to_f64, Rational};
use crate::error::Error;

/// A finite sum `q₀ + q₁π² + q₂π⁴ + …` with exact rational coefficients.
///
/// Keys are the (even) exponents of π. Zero coefficients are never stored,
/// so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct PiValue {
    terms: BTreeMap<u32, Rational>,
}

impl PiValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::monomial(q, 0)
    }

    /// `q·π^exponent`. Panics on an odd exponent.
    pub fn monomial(q: Rational, exponent: u32) -> Self {
        assert!(exponent % 2 == 0, "odd power of pi: {exponent}");
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(exponent, q);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `π^exponent` (zero if absent).
    pub fn coefficient(&self, exponent: u32) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(e, q)| (*e, q))
    }

    /// The single `(exponent, coefficient)` pair, if this is a monomial.
    pub fn as_monomial(&self) -> Option<(u32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    /// The value as a rational if no π appears.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(e, q)| to_f64(q) * libm::pow(core::f64::consts::PI, *e as f64))
            .sum()
    }

    fn insert_add(terms: &mut BTreeMap<u32, Rational>, e: u32, q: Rational) {
        let slot = terms.entry(e).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            terms.remove(&e);
        }
    }
}

impl Add for &PiValue {
    type Output = PiValue;
    fn add(self, rhs: &PiValue) -> PiValue {
        let mut terms = self.terms.clone();
        for (e, q) in &rhs.terms {
            PiValue::insert_add(&mut terms, *e, q.clone());
        }
        PiValue { terms }
    }
}

impl Add for PiValue {
    type Output = PiValue;
    fn add(self, rhs: PiValue) -> PiValue {
        &self + &rhs
    }
}

impl Neg for &PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        PiValue {
            terms: self.terms.iter().map(|(e, q)| (*e, -q)).collect(),
        }
    }
}

impl Neg for PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        -&self
    }
}

impl Sub for &PiValue {
    type Output = PiValue;
    fn sub(self, rhs: &PiValue) -> PiValue {
        self + &(-rhs)
    }
}

impl Sub for PiValue {
    type Output = PiValue;
    fn sub(self, rhs: PiValue) -> PiValue {
        &self - &rhs
    }
}

impl Mul for &PiValue {
    type Output = PiValue;
    fn mul(self, rhs: &PiValue) -> PiValue {
        let mut terms = BTreeMap::new();
        for (ea, qa) in &self.terms {
            for (eb, qb) in &rhs.terms {
                PiValue::insert_add(&mut terms, ea + eb, qa * qb);
            }
        }
        PiValue { terms }
    }
}

impl Mul for PiValue {
    type Output = PiValue;
    fn mul(self, rhs: PiValue) -> PiValue {
        &self * &rhs
    }
}

impl From<Rational> for PiValue {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

/// Canonical form: terms in increasing exponent, joined by ` + ` / ` - `,
/// each written `a/b * pi^e` (just `a/b` when `e = 0`). Zero prints as `0`.
impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, q)) in self.terms.iter().enumerate() {
            let magnitude = q.abs();
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{magnitude}")?;
            if *e > 0 {
                write!(f, " * pi^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PiValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Domain(alloc::format!("cannot parse pi value: {s:?}"));
        let text = s.trim();
        if text == "0" {
            return Ok(Self::zero());
        }
        let mut value = Self::zero();
        let mut rest = text;
        let mut sign = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            -1
        } else {
            1
        };
        loop {
            let (term, tail, next_sign) = match (rest.find(" + "), rest.find(" - ")) {
                (None, None) => (rest, "", 0),
                (Some(p), None) => (&rest[..p], &rest[p + 3..], 1),
                (None, Some(m)) => (&rest[..m], &rest[m + 3..], -1),
                (Some(p), Some(m)) if p < m => (&rest[..p], &rest[p + 3..], 1),
                (_, Some(m)) => (&rest[..m], &rest[m + 3..], -1),
            };
            let (coef, exponent) = match term.split_once(" * pi^") {
                Some((c, e)) => (c, e.parse::<u32>().map_err(|_| bad())?),
                None => (term, 0),
            };
            if exponent % 2 == 1 {
                return Err(bad());
            }
            let q: Rational = coef.parse().map_err(|_| bad())?;
            if q.is_negative() {
                return Err(bad());
            }
            let q = if sign < 0 { -q } else { q };
            value = value + PiValue::monomial(q, exponent);
            if next_sign == 0 {
                break;
            }
            sign = next_sign;
            rest = tail;
        }
        Ok(value)
    }
}

impl PiValue {
    /// Canonical string form (see the `Display` impl).
    pub fn to_canonical(&self) -> String {
        alloc::format!("{self}")
    }
}
