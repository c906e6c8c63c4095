//! Exact integer and rational arithmetic, plus the classical number
//! sequences (Bernoulli, Euler, Stirling, binomial, factorial).
//!
//! Bernoulli and Euler numbers are memoized in process-wide tables guarded
//! by a spin lock; the tables grow on demand and are never truncated.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use spin::Mutex;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Nearest `f64` to `q`.
pub fn to_f64(q: &Rational) -> f64 {
    if let Some(x) = q.to_f64() {
        return x;
    }
    // Fallback for magnitudes the library conversion refuses.
    let (n, d) = (q.numer(), q.denom());
    let shift = n.bits() as i64 - d.bits() as i64;
    let scaled = if shift > 0 {
        Rational::new(n.clone(), d.clone() << (shift as usize))
    } else {
        Rational::new(n.clone() << ((-shift) as usize), d.clone())
    };
    scaled.to_f64().unwrap_or(f64::NAN) * libm::exp2(shift as f64)
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    if e >= 0 {
        int(BigInt::one() << (e as usize))
    } else {
        Rational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
    }
}

/// `(-1)^n` as a small integer.
pub fn sign_pow(n: i64) -> i64 {
    if n.is_even() {
        1
    } else {
        -1
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Row `r` of the unsigned Stirling numbers of the first kind:
/// coefficients of `x(x+1)⋯(x+r−1)` from `x^0` up to `x^r`.
pub fn stirling1_row(r: u32) -> Vec<BigInt> {
    let mut row = alloc::vec![BigInt::one()];
    for n in 0..r {
        // Multiply the polynomial by (x + n).
        let mut next = alloc::vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k] += c * n;
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

/// Unsigned Stirling number of the first kind `|s(r, k)|`.
pub fn stirling1_unsigned(r: u32, k: u32) -> BigInt {
    if k > r {
        return BigInt::zero();
    }
    stirling1_row(r).swap_remove(k as usize)
}

/// Bernoulli numbers `B_0, B_1, …` with `B_1 = −1/2`.
#[derive(Debug, Clone, Default)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table holding `B_0 ..= B_n`.
    pub fn up_to(n: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(n);
        table
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    /// Grows the table so that it holds `B_n`.
    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            let next = if m == 0 {
                Rational::one()
            } else if m >= 3 && m % 2 == 1 {
                Rational::zero()
            } else {
                // Σ_{j=0}^{m} C(m+1, j) B_j = 0
                let mut acc = Rational::zero();
                let mut c = BigInt::one();
                for (j, b) in self.values.iter().enumerate() {
                    if !b.is_zero() {
                        acc += b * Rational::from_integer(c.clone());
                    }
                    c = c * (m + 1 - j) / (j + 1);
                }
                -acc / int(m as u64 + 1)
            };
            self.values.push(next);
        }
    }
}

/// Euler (secant) numbers `E_0 = 1, E_2 = −1, E_4 = 5, …`; odd indices are zero.
#[derive(Debug, Clone, Default)]
pub struct EulerTable {
    values: Vec<BigInt>,
}

impl EulerTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn up_to(n: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(n);
        table
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len();
            let next = if m == 0 {
                BigInt::one()
            } else if m % 2 == 1 {
                BigInt::zero()
            } else {
                // Σ_{j even ≤ m} C(m, j) E_j = 0
                let mut acc = BigInt::zero();
                let mut c = BigInt::one();
                for (j, e) in self.values.iter().enumerate() {
                    if j % 2 == 0 {
                        acc += &c * e;
                    }
                    c = c * (m - j) / (j + 1);
                }
                -acc
            };
            self.values.push(next);
        }
    }
}

static BERNOULLI: Mutex<BernoulliTable> = Mutex::new(BernoulliTable { values: Vec::new() });
static EULER: Mutex<EulerTable> = Mutex::new(EulerTable { values: Vec::new() });

/// `B_n` under the `B_1 = −1/2` convention.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = BERNOULLI.lock();
    table.extend_to(n);
    table.values[n].clone()
}

/// Euler (secant) number `E_n`.
pub fn euler_number(n: usize) -> BigInt {
    let mut table = EULER.lock();
    table.extend_to(n);
    table.values[n].clone()
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        assert!(bernoulli(7).is_zero());
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        let table = BernoulliTable::up_to(30);
        for n in 1..30u32 {
            let sum: Rational = (0..=n)
                .map(|j| table.values()[j as usize].clone() * int(binomial(n + 1, j)))
                .sum();
            assert!(sum.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn bernoulli_even_signs_alternate() {
        for k in 1..=20 {
            let expected = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(signum(&bernoulli(2 * k)), expected, "k = {k}");
        }
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), BigInt::from(1));
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        assert_eq!(euler_number(8), BigInt::from(1385));
        assert!(euler_number(5).is_zero());
        let table = EulerTable::up_to(20);
        for n in (2..=20u32).step_by(2) {
            let sum: BigInt = (0..=n)
                .step_by(2)
                .map(|j| binomial(n, j) * &table.values()[j as usize])
                .sum();
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_unsigned(5, 5), BigInt::from(1));
        assert_eq!(stirling1_unsigned(5, 0), BigInt::from(0));
        assert_eq!(stirling1_unsigned(0, 0), BigInt::from(1));
        assert_eq!(stirling1_unsigned(3, 4), BigInt::from(0));
    }

    #[test]
    fn stirling_rows_reproduce_rising_factorial() {
        for r in 0..=10u32 {
            let row = stirling1_row(r);
            for x in 1..=5i64 {
                let rising: BigInt = (0..r as i64).map(|i| BigInt::from(x + i)).product();
                let poly: BigInt = row
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * BigInt::from(x).pow(k as u32))
                    .sum();
                assert_eq!(poly, rising);
            }
            let total: BigInt = row.iter().sum();
            assert_eq!(total, factorial(r));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
    }

    #[test]
    fn huge_rationals_convert() {
        let q = Rational::new(BigInt::from(1) << 2000usize, (BigInt::from(1) << 1999usize) * 3);
        assert!((to_f64(&q) - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(to_f64(&pow2(-3)), 0.125);
    }
}
