//! Integer partitions in multiplicity form and the partial / complete Bell
//! polynomials evaluated over any [`Ring`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{factorial, int, Rational};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A partition of `r` written as multiplicities `(c_1, …, c_r)` with
/// `Σ i·c_i = r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    counts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from its multiplicities, checking the weight
    /// constraint against `counts.len()`.
    pub fn from_counts(counts: Vec<u32>) -> Result<Self> {
        let weight: usize = counts
            .iter()
            .enumerate()
            .map(|(i, c)| (i + 1) * *c as usize)
            .sum();
        if weight != counts.len() {
            return Err(Error::Domain(alloc::format!(
                "multiplicities {counts:?} have weight {weight}, expected {}",
                counts.len()
            )));
        }
        Ok(Self { counts })
    }

    /// `c_1, …, c_r`.
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Multiplicity of part size `i` (1-based); zero outside `1..=r`.
    pub fn count(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.counts.get(i - 1).copied().unwrap_or(0)
    }

    /// The `r` this partitions.
    pub fn weight(&self) -> usize {
        self.counts.len()
    }

    /// Number of parts `c_1 + ⋯ + c_r`.
    pub fn len(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(i, c_i)` for every part size that occurs.
    pub fn parts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| **c > 0)
            .map(|(i, c)| (i as u32 + 1, *c))
    }

    /// Cycle-index weight `1 / ∏ i^{c_i} c_i!`.
    pub fn cycle_weight(&self) -> Rational {
        let denom = self.parts().fold(BigInt::one(), |acc, (i, c)| {
            acc * BigInt::from(i).pow(c) * factorial(c)
        });
        Rational::new(BigInt::one(), denom)
    }

    /// `n! / ∏ (i!)^{c_i} c_i!`, the coefficient of this partition in the
    /// Bell polynomials. Always an integer.
    pub fn bell_coefficient(&self) -> BigInt {
        let denom = self.parts().fold(BigInt::one(), |acc, (i, c)| {
            acc * factorial(i).pow(c) * factorial(c)
        });
        let (q, rem) = factorial(self.weight() as u32).div_rem(&denom);
        assert!(rem.is_zero(), "non-integral Bell coefficient for {:?}", self.counts);
        q
    }

    /// `∏ x_i^{c_i}` with `xs[i-1] = x_i`.
    pub fn monomial<R: Ring>(&self, xs: &[R]) -> R {
        self.parts()
            .fold(R::one(), |acc, (i, c)| acc.mul(&xs[i as usize - 1].pow(c)))
    }
}

/// Iterator over all partitions of `r`, in reverse-lexicographic order of
/// the multiplicity vector `(c_1, …, c_r)`: `(r, 0, …)` first, `(0, …, 1)`
/// last.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

/// Every partition of `r` exactly once. `r = 0` yields the empty partition.
pub fn partitions_of(r: usize) -> Partitions {
    let mut first = alloc::vec![0u32; r];
    if r > 0 {
        first[0] = r as u32;
    }
    Partitions { current: Some(first) }
}

/// Writes the lexicographically largest multiplicities of weight `w` into
/// positions `from..` (1-based part sizes `from + 1 ..`).
fn fill_largest(counts: &mut [u32], from: usize, mut w: usize) {
    for (pos, slot) in counts.iter_mut().enumerate().skip(from) {
        if w == 0 {
            break;
        }
        let size = pos + 1;
        let mut c = w / size;
        // The remainder must be zero or expressible with parts > size.
        while c > 0 && w - c * size != 0 && w - c * size <= size {
            c -= 1;
        }
        *slot = c as u32;
        w -= c * size;
    }
    debug_assert_eq!(w, 0);
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let r = out.len();
        let mut next = out.clone();
        let mut tail = out.last().map_or(0, |c| *c as usize * r);
        for pos in (0..r.saturating_sub(1)).rev() {
            let size = pos + 1;
            let c = next[pos] as usize;
            if c > 0 && c * size + tail > size {
                // Smallest decrement that frees enough weight for larger parts.
                let d = (size + 1 - tail.min(size + 1)).div_ceil(size).max(1);
                next[pos] -= d as u32;
                for slot in next.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                fill_largest(&mut next, pos + 1, d * size + tail);
                self.current = Some(next);
                break;
            }
            tail += c * size;
        }
        Some(Partition { counts: out })
    }
}

/// Partial Bell polynomial `B_{n,k}(x_1, …, x_{n-k+1})`.
///
/// `B_{0,0} = 1`; `k > n` is a domain error.
pub fn partial_bell<R: Ring>(n: usize, k: usize, xs: &[R]) -> Result<R> {
    if k > n {
        return Err(Error::Domain(alloc::format!("B_{{{n},{k}}} needs k <= n")));
    }
    if n == 0 {
        return Ok(R::one());
    }
    if k == 0 {
        return Ok(R::zero());
    }
    let needed = n - k + 1;
    if xs.len() < needed {
        return Err(Error::ShortInput { needed, got: xs.len() });
    }
    let mut acc = R::zero();
    for p in partitions_of(n).filter(|p| p.len() as usize == k) {
        acc = acc.add(&p.monomial(xs).scale(&int(p.bell_coefficient())));
    }
    Ok(acc)
}

/// Complete Bell polynomial `Y_n(x_1, …, x_n)` as a direct sum over all
/// partitions of `n`. `Y_0 = 1`.
pub fn complete_bell<R: Ring>(n: usize, xs: &[R]) -> Result<R> {
    if xs.len() < n {
        return Err(Error::ShortInput { needed: n, got: xs.len() });
    }
    let mut acc = R::zero();
    for p in partitions_of(n) {
        acc = acc.add(&p.monomial(xs).scale(&int(p.bell_coefficient())));
    }
    Ok(acc)
}

/// Default truncation order for [`complete_bell_series_check`].
pub const DEFAULT_SERIES_ORDER: usize = 20;

/// The `n!`-scaled coefficients `1, a_1, …, a_{n_max}` of
/// `exp(Σ_{m≥1} x_m t^m / m!) = Σ a_n t^n / n!`, computed by summing the
/// truncated powers of the exponent as formal power series.
pub fn exp_series_coefficients<R: Ring>(n_max: usize, xs: &[R]) -> Result<Vec<R>> {
    if xs.len() < n_max {
        return Err(Error::ShortInput { needed: n_max, got: xs.len() });
    }
    // Plain power-series coefficients of the exponent f(t), f_0 = 0.
    let mut f = alloc::vec![R::zero(); n_max + 1];
    for m in 1..=n_max {
        f[m] = xs[m - 1].scale(&Rational::new(BigInt::one(), factorial(m as u32)));
    }
    let mut total = alloc::vec![R::zero(); n_max + 1];
    total[0] = R::one();
    // power holds f^j / j!
    let mut power = total.clone();
    for j in 1..=n_max {
        let mut next = alloc::vec![R::zero(); n_max + 1];
        for (a, pa) in power.iter().enumerate() {
            for (b, fb) in f.iter().enumerate().skip(1) {
                if a + b > n_max {
                    break;
                }
                next[a + b] = next[a + b].add(&pa.mul(fb));
            }
        }
        let inv_j = Rational::new(BigInt::one(), BigInt::from(j));
        power = next.iter().map(|v| v.scale(&inv_j)).collect();
        for (t, p) in total.iter_mut().zip(&power) {
            *t = t.add(p);
        }
    }
    Ok(total
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.scale(&int(factorial(n as u32))))
        .collect())
}

/// Checks that the generating function `exp(Σ x_m t^m/m!)`, expanded to
/// order `n_max`, has `Y_n(xs)` as the coefficient of `t^n/n!` for every
/// `n ≤ n_max`.
pub fn complete_bell_series_check<R: Ring + PartialEq>(n_max: usize, xs: &[R]) -> Result<bool> {
    let series = exp_series_coefficients(n_max, xs)?;
    for (n, coefficient) in series.iter().enumerate() {
        if *coefficient != complete_bell(n, xs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
