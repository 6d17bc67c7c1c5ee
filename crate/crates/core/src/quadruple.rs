//! Solution records shared by the solvers, the generator and the oracle.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::error::{Error, Result};

/// The power `n` in `Aⁿ + Bⁿ = Cⁿ + Dⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Square,
    Cube,
}

impl Exponent {
    pub fn value(self) -> u32 {
        match self {
            Exponent::Square => 2,
            Exponent::Cube => 3,
        }
    }

    pub fn pow(self, x: &BigInt) -> BigInt {
        Pow::pow(x, self.value())
    }

    pub fn pow_i128(self, x: i64) -> i128 {
        (x as i128).pow(self.value())
    }
}

impl TryFrom<u32> for Exponent {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        match n {
            2 => Ok(Exponent::Square),
            3 => Ok(Exponent::Cube),
            _ => Err(Error::Domain(format!("exponent must be 2 or 3, got {n}"))),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Sign choice in the quadratic formula for the cube solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a quadruple came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Two divisor witnesses of the same `delta`.
    Divisor {
        delta: BigInt,
        r1: BigInt,
        r2: BigInt,
        /// `None` for squares, which have a single formula.
        branch: Option<Branch>,
    },
    /// The closed-form cube generator at parameter `c1`.
    Generator { c1: u64 },
    /// Found by exhaustive search.
    Oracle,
}

/// A verified solution of `Aⁿ + Bⁿ = Cⁿ + Dⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub n: Exponent,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub sum: BigInt,
    pub provenance: Provenance,
}

impl Quadruple {
    /// Builds the record, checking the identity by direct exponentiation.
    pub fn new(
        n: Exponent,
        a: BigInt,
        b: BigInt,
        c: BigInt,
        d: BigInt,
        provenance: Provenance,
    ) -> Result<Self> {
        let lhs = n.pow(&a) + n.pow(&b);
        let rhs = n.pow(&c) + n.pow(&d);
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "{a}^{n} + {b}^{n} = {lhs} but {c}^{n} + {d}^{n} = {rhs}"
            )));
        }
        Ok(Self {
            n,
            a,
            b,
            c,
            d,
            sum: lhs,
            provenance,
        })
    }

    /// `{A, B} = {C, D}` as unordered pairs.
    pub fn is_trivial(&self) -> bool {
        same_unordered(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn components(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Canonical key: the sum plus both sides as sorted pairs, sides sorted.
    pub fn canonical_key(&self) -> (BigInt, [BigInt; 4]) {
        let left = sorted_pair(&self.a, &self.b);
        let right = sorted_pair(&self.c, &self.d);
        let (first, second) = if left <= right { (left, right) } else { (right, left) };
        (self.sum.clone(), [first.0, first.1, second.0, second.1])
    }
}

fn sorted_pair(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    if x <= y {
        (x.clone(), y.clone())
    } else {
        (y.clone(), x.clone())
    }
}

fn same_unordered(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> bool {
    (a == c && b == d) || (a == d && b == c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ValidNontrivial,
    ValidTrivial,
    Invalid,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ValidNontrivial => "valid_nontrivial",
            Verdict::ValidTrivial => "valid_trivial",
            Verdict::Invalid => "invalid",
        }
    }
}

/// Checks `Aⁿ + Bⁿ = Cⁿ + Dⁿ` exactly and classifies the result.
pub fn verify_quadruple(n: Exponent, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Verdict {
    if n.pow(a) + n.pow(b) != n.pow(c) + n.pow(d) {
        Verdict::Invalid
    } else if same_unordered(a, b, c, d) {
        Verdict::ValidTrivial
    } else {
        Verdict::ValidNontrivial
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: Exponent, q: [i64; 4]) -> Verdict {
        let [a, b, c, d] = q.map(BigInt::from);
        verify_quadruple(n, &a, &b, &c, &d)
    }

    #[test]
    fn verdicts() {
        assert_eq!(v(Exponent::Cube, [12, 1, 9, 10]), Verdict::ValidNontrivial);
        assert_eq!(v(Exponent::Cube, [5, 7, 7, 5]), Verdict::ValidTrivial);
        assert_eq!(v(Exponent::Cube, [5, 5, 5, 5]), Verdict::ValidTrivial);
        assert_eq!(v(Exponent::Cube, [1, 2, 3, 4]), Verdict::Invalid);
        assert_eq!(v(Exponent::Square, [1, 1, 1, 2]), Verdict::Invalid);
        assert_eq!(v(Exponent::Cube, [-9, -10, -12, -1]), Verdict::ValidNontrivial);
    }

    #[test]
    fn new_rejects_non_identity() {
        let [a, b, c, d] = [1, 2, 3, 4].map(BigInt::from);
        assert!(matches!(
            Quadruple::new(Exponent::Cube, a, b, c, d, Provenance::Oracle),
            Err(Error::Consistency(_))
        ));
    }

    #[test]
    fn canonical_key_ignores_side_and_order() {
        let q1 = Quadruple::new(
            Exponent::Cube,
            12.into(),
            1.into(),
            9.into(),
            10.into(),
            Provenance::Oracle,
        )
        .unwrap();
        let q2 = Quadruple::new(
            Exponent::Cube,
            10.into(),
            9.into(),
            1.into(),
            12.into(),
            Provenance::Oracle,
        )
        .unwrap();
        assert_eq!(q1.canonical_key(), q2.canonical_key());
        assert_eq!(q1.sum, BigInt::from(1729));
    }

    #[test]
    fn exponent_parsing() {
        assert_eq!(Exponent::try_from(2).unwrap(), Exponent::Square);
        assert_eq!(Exponent::try_from(3).unwrap(), Exponent::Cube);
        assert!(Exponent::try_from(4).is_err());
    }
}
