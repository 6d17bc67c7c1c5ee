//! Arithmetic in the ring ℤ[√3].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `a + b·√3` with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    /// Rational part.
    pub a: BigInt,
    /// Coefficient of √3.
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// `a − b·√3`.
    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// `a² − 3b²`, i.e. `x·conj(x)`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(3u8) * &self.b * &self.b
    }

    /// Real value as a float; only for growth estimates, never for solutions.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 3f64.sqrt()
    }

    /// Binary exponentiation; `x^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < BigInt::zero() {
            write!(f, "{} - {}√3", self.a, -&self.b)
        } else {
            write!(f, "{} + {}√3", self.a, self.b)
        }
    }
}

impl Mul for &QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a * &rhs.a + BigInt::from(3u8) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;

    fn mul(self, rhs: QuadInt) -> QuadInt {
        &self * &rhs
    }
}

impl Add for &QuadInt {
    type Output = QuadInt;

    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;

    fn add(self, rhs: QuadInt) -> QuadInt {
        &self + &rhs
    }
}

impl Sub for &QuadInt {
    type Output = QuadInt;

    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;

    fn neg(self) -> QuadInt {
        QuadInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl One for QuadInt {
    fn one() -> Self {
        QuadInt::one()
    }
}

/// `base^e`.
pub fn quad_pow(base: &QuadInt, e: u64) -> QuadInt {
    base.pow(e)
}

/// `coeff·base^e + conj(coeff)·conj(base)^e`, which always lies in ℤ.
///
/// Both halves are computed independently; the √3 parts must cancel exactly.
pub fn conjugate_pair_value(coeff: &QuadInt, base: &QuadInt, e: u64) -> Result<BigInt> {
    let plus = coeff * &base.pow(e);
    let minus = &coeff.conj() * &base.conj().pow(e);
    let sum = plus + minus;
    if !sum.b.is_zero() {
        return Err(Error::Consistency(format!(
            "conjugate sum of ({coeff})·({base})^{e} has irrational part {}",
            sum.b
        )));
    }
    Ok(sum.a)
}
