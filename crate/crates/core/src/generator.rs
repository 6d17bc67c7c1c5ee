//! Closed-form family of cube identities built from powers of the unit
//! `7 + 4√3` of ℤ[√3].
//!
//! With `s(k) = x·β^k + conj(x)·conj(β)^k`:
//!
//! ```text
//! C(k) = (s_C(k) − 6) / 4      A(k) = C(k) + 3
//! B(k) = (s_B(k) − 18) / 4     D(k) = B(k) + 9
//! ```
//!
//! where `x = 15 + 7√3` for `C` and `x = 7 + 5√3` for `B`. Since `β` is a
//! root of `t² − 14t + 1`, both sequences also obey a three-term recurrence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::quad::{conjugate_pair_value, QuadInt};
use crate::quadruple::{Exponent, Provenance, Quadruple};

/// Constants of the generator family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConstants {
    pub base: QuadInt,
    pub coeff_c: QuadInt,
    pub coeff_b: QuadInt,
    pub offset_c: i64,
    pub offset_b: i64,
    pub denom: i64,
    pub shift_a: i64,
    pub shift_d: i64,
}

impl Default for GeneratorConstants {
    fn default() -> Self {
        Self {
            base: QuadInt::new(7, 4),
            coeff_c: QuadInt::new(15, 7),
            coeff_b: QuadInt::new(7, 5),
            offset_c: -6,
            offset_b: -18,
            denom: 4,
            shift_a: 3,
            shift_d: 9,
        }
    }
}

/// Which of the two generated sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    C,
    B,
}

impl Series {
    fn parts(self, k: &GeneratorConstants) -> (&QuadInt, i64) {
        match self {
            Series::C => (&k.coeff_c, k.offset_c),
            Series::B => (&k.coeff_b, k.offset_b),
        }
    }

    /// Constant term of `x(k+1) = 14·x(k) − x(k−1) + κ`.
    ///
    /// Substituting `x = (s + offset)/denom` into `s(k+1) = 14s(k) − s(k−1)`
    /// leaves `κ = −12·offset/denom`.
    pub fn recurrence_constant(self) -> i64 {
        match self {
            Series::C => 18,
            Series::B => 54,
        }
    }
}

fn closed_form(series: Series, c1: u64) -> Result<BigInt> {
    let k = GeneratorConstants::default();
    let (coeff, offset) = series.parts(&k);
    let numerator = conjugate_pair_value(coeff, &k.base, c1)? + offset;
    let (q, rem) = numerator.div_rem(&BigInt::from(k.denom));
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "{series:?}({c1}) numerator {numerator} is not divisible by {}",
            k.denom
        )));
    }
    Ok(q)
}

/// `C(c1)` evaluated exactly in ℤ[√3].
pub fn gen_c(c1: u64) -> Result<BigInt> {
    closed_form(Series::C, c1)
}

/// `B(c1)` evaluated exactly in ℤ[√3].
pub fn gen_b(c1: u64) -> Result<BigInt> {
    closed_form(Series::B, c1)
}

fn assemble(c1: u64, c: BigInt, b: BigInt) -> Result<Quadruple> {
    let k = GeneratorConstants::default();
    let a = &c + k.shift_a;
    let d = &b + k.shift_d;
    Quadruple::new(Exponent::Cube, a, b, c, d, Provenance::Generator { c1 })
}

/// The identity `A³ + B³ = C³ + D³` at parameter `c1`, checked exactly.
pub fn gen_quadruple(c1: u64) -> Result<Quadruple> {
    assemble(c1, gen_c(c1)?, gen_b(c1)?)
}

/// `14·curr − prev + κ`, the next term of either sequence.
pub fn recurrence_step(prev: &BigInt, curr: &BigInt, series: Series) -> BigInt {
    curr * 14u8 - prev + series.recurrence_constant()
}

/// `A³ − C³`, cross-checked against `D³ − B³` and `9C² + 27C + 27`.
pub fn delta_of(c1: u64) -> Result<BigInt> {
    let q = gen_quadruple(c1)?;
    let cube = |x: &BigInt| x * x * x;
    let delta = cube(&q.a) - cube(&q.c);
    let other = cube(&q.d) - cube(&q.b);
    let expanded = &q.c * &q.c * 9u8 + &q.c * 27u8 + 27u8;
    if delta != other || delta != expanded {
        return Err(Error::Consistency(format!(
            "delta mismatch at c1 = {c1}: {delta}, {other}, {expanded}"
        )));
    }
    Ok(delta)
}

/// Sequential generator that switches to the recurrence after two seeds.
#[derive(Debug, Clone)]
pub struct Generator {
    next_c1: u64,
    end: u64,
    seeds: Option<[(BigInt, BigInt); 2]>,
}

impl Generator {
    /// Yields the quadruples for `c1` in `from..=to`.
    pub fn new(from: u64, to: u64) -> Self {
        Self {
            next_c1: from,
            end: to,
            seeds: None,
        }
    }

    fn advance(&mut self) -> Result<(BigInt, BigInt)> {
        let c1 = self.next_c1;
        let current = match self.seeds.take() {
            Some([prev, last]) => {
                let current = (
                    recurrence_step(&prev.0, &last.0, Series::C),
                    recurrence_step(&prev.1, &last.1, Series::B),
                );
                self.seeds = Some([last, current.clone()]);
                current
            }
            None => {
                let current = (gen_c(c1)?, gen_b(c1)?);
                if c1 > 0 {
                    let prev = (gen_c(c1 - 1)?, gen_b(c1 - 1)?);
                    self.seeds = Some([prev, current.clone()]);
                }
                current
            }
        };
        Ok(current)
    }
}

impl Iterator for Generator {
    type Item = Result<Quadruple>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_c1 > self.end {
            return None;
        }
        let c1 = self.next_c1;
        let item = self.advance().and_then(|(c, b)| assemble(c1, c, b));
        self.next_c1 += 1;
        if item.is_err() {
            self.next_c1 = self.end + 1;
        }
        Some(item)
    }
}

/// `A(c)³ + B(c)³` for each `c` in `from..=to`.
pub fn sum_sequence(from: u64, to: u64) -> Result<Vec<BigInt>> {
    if from > to {
        return Err(Error::Domain(format!("empty range {from}..={to}")));
    }
    Generator::new(from, to).map(|q| q.map(|q| q.sum)).collect()
}

/// `log₁₀ A(c1) ≈ intercept + slope·c1`, from the dominant term
/// `(15 + 7√3)·β^c1 / 4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthModel {
    pub slope: f64,
    pub intercept: f64,
}

impl GrowthModel {
    pub fn from_constants(k: &GeneratorConstants) -> Self {
        Self {
            slope: k.base.to_f64().log10(),
            intercept: (k.coeff_c.to_f64() / k.denom as f64).log10(),
        }
    }

    pub fn predicted_digits(&self, c1: u64) -> f64 {
        self.intercept + self.slope * c1 as f64
    }
}

impl Default for GrowthModel {
    fn default() -> Self {
        Self::from_constants(&GeneratorConstants::default())
    }
}

pub fn predicted_digits(c1: u64) -> f64 {
    GrowthModel::default().predicted_digits(c1)
}

/// Number of decimal digits of `|x|` (1 for zero).
pub fn decimal_digits(x: &BigInt) -> usize {
    x.magnitude().to_str_radix(10).len()
}

/// `log₁₀ |x|` from the leading digits; `-inf` for zero.
pub fn log10_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let digits = x.abs().to_str_radix(10);
    let lead = &digits[..digits.len().min(17)];
    let mantissa = lead.parse::<u64>().expect("decimal digits").to_f64().unwrap_or(0.0);
    mantissa.log10() + (digits.len() - lead.len()) as f64
}

/// Ordinary least-squares slope of `y` against `x`.
pub fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
