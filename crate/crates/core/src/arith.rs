//! Integer square roots, perfect-square tests and divisor enumeration.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest bit length accepted by [`divisors`].
pub const DIVISOR_BIT_LIMIT: u64 = 127;

/// `⌊√x⌋` by Newton iteration.
///
/// The starting guess `2^⌈bits/2⌉` is never below the root, so the iterates
/// decrease monotonically until they stop.
pub fn isqrt(x: &BigInt) -> Result<BigInt> {
    match x.sign() {
        Sign::Minus => Err(Error::Domain(format!("isqrt of negative value {x}"))),
        Sign::NoSign => Ok(BigInt::zero()),
        Sign::Plus => {
            let bits = x.bits();
            let mut guess = BigInt::one() << bits.div_ceil(2);
            loop {
                let next = (&guess + x / &guess) >> 1;
                if next >= guess {
                    return Ok(guess);
                }
                guess = next;
            }
        }
    }
}

/// Returns `√x` when `x` is a non-negative perfect square.
pub fn perfect_square(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    // squares are 0, 1, 4 or 9 mod 16
    let low = (x & BigInt::from(15u8)).to_u8().unwrap_or(0);
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let root = isqrt(x).ok()?;
    (&root * &root == *x).then_some(root)
}

/// A complete ascending list of the positive divisors of `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    delta: BigInt,
    divisors: Vec<BigInt>,
}

impl DivisorList {
    /// Wraps a caller-supplied list, checking that every entry divides
    /// `delta` and that the list is strictly ascending. Completeness is the
    /// caller's responsibility; this is how values beyond
    /// [`DIVISOR_BIT_LIMIT`] reach the solvers.
    pub fn from_parts(delta: BigInt, mut divisors: Vec<BigInt>) -> Result<Self> {
        if !delta.is_positive() {
            return Err(Error::Domain(format!("delta must be positive, got {delta}")));
        }
        divisors.sort();
        divisors.dedup();
        for r in &divisors {
            if !r.is_positive() || !(&delta % r).is_zero() {
                return Err(Error::InadmissibleDivisor {
                    delta: delta.clone(),
                    r: r.clone(),
                    reason: "does not divide delta",
                });
            }
        }
        Ok(Self { delta, divisors })
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.divisors.iter()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a BigInt;
    type IntoIter = std::slice::Iter<'a, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

/// Enumerates all divisors of `delta` by trial division up to `⌊√delta⌋`.
pub fn divisors(delta: &BigInt) -> Result<DivisorList> {
    if !delta.is_positive() {
        return Err(Error::Domain(format!("delta must be positive, got {delta}")));
    }
    if delta.bits() > DIVISOR_BIT_LIMIT {
        return Err(Error::Capacity(format!(
            "delta has {} bits; trial division is limited to {DIVISOR_BIT_LIMIT} bits, \
             supply the divisor list explicitly",
            delta.bits()
        )));
    }
    let n = delta.to_u128().expect("bit length checked");
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d: u128 = 1;
    while d <= n / d {
        let (q, rem) = n.div_rem(&d);
        if rem == 0 {
            low.push(d);
            if q != d {
                high.push(q);
            }
        }
        d += 1;
    }
    let divisors = low
        .into_iter()
        .chain(high.into_iter().rev())
        .map(BigInt::from)
        .collect();
    Ok(DivisorList {
        delta: delta.clone(),
        divisors,
    })
}
