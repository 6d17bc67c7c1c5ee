//! Divisor parametrizations of `Aⁿ − Cⁿ = Dⁿ − Bⁿ = Δ`.
//!
//! Every divisor `r` of `Δ` is tried as the gap `large − small`. For squares
//! the pair is linear in `r`; for cubes `small` is a root of
//! `3r·s² + 3r²·s + r³ − Δ = 0`, whose discriminant is `12Δr − 3r⁴`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{divisors, perfect_square, DivisorList};
use crate::error::{Error, Result};
use crate::quadruple::{Branch, Exponent, Provenance, Quadruple};

/// One `(small, small + r)` pair with `largeⁿ − smallⁿ = Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorWitness {
    pub n: Exponent,
    pub delta: BigInt,
    pub r: BigInt,
    /// Always `None` for squares.
    pub branch: Option<Branch>,
    pub small: BigInt,
    pub large: BigInt,
}

impl DivisorWitness {
    /// `(small + r)ⁿ = Δ + smallⁿ`.
    pub fn satisfies_shift_identity(&self) -> bool {
        self.n.pow(&(&self.small + &self.r)) == &self.delta + self.n.pow(&self.small)
    }
}

/// Which witnesses the enumeration keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Keep only strictly nonzero solutions: `small > 0` on the plus branch
    /// and `large < 0` on the minus branch.
    pub positive_only: bool,
    /// Keep minus-branch cube witnesses. Ignored for squares.
    pub include_negative_branch: bool,
}

impl SolveOptions {
    /// Positive-only mode drops the minus branch, otherwise everything is kept.
    pub fn new(positive_only: bool) -> Self {
        Self {
            positive_only,
            include_negative_branch: !positive_only,
        }
    }

    fn keeps(&self, w: &DivisorWitness) -> bool {
        match w.branch {
            None | Some(Branch::Plus) => !self.positive_only || w.small.is_positive(),
            Some(Branch::Minus) => {
                self.include_negative_branch && (!self.positive_only || w.large.is_negative())
            }
        }
    }
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self::new(true)
    }
}

fn check_divides(delta: &BigInt, r: &BigInt) -> Result<()> {
    if !delta.is_positive() {
        return Err(Error::Domain(format!("delta must be positive, got {delta}")));
    }
    if !r.is_positive() || !delta.is_multiple_of(r) {
        return Err(Error::InadmissibleDivisor {
            delta: delta.clone(),
            r: r.clone(),
            reason: "does not divide delta",
        });
    }
    Ok(())
}

/// `small = (Δ − r²)/(2r)`, `large = (Δ + r²)/(2r)`.
pub fn solve_pair2(delta: &BigInt, r: &BigInt) -> Result<DivisorWitness> {
    check_divides(delta, r)?;
    let r_sq = r * r;
    let two_r: BigInt = r * 2;
    let (small, rem) = (delta - &r_sq).div_rem(&two_r);
    if !rem.is_zero() {
        return Err(Error::InadmissibleDivisor {
            delta: delta.clone(),
            r: r.clone(),
            reason: "delta - r^2 is not divisible by 2r",
        });
    }
    let large = &small + r;
    let w = DivisorWitness {
        n: Exponent::Square,
        delta: delta.clone(),
        r: r.clone(),
        branch: None,
        small,
        large,
    };
    debug_assert_eq!(&w.large * &w.large - &w.small * &w.small, *delta);
    Ok(w)
}

/// Returns the witness together with the square root of the radicand.
fn solve_pair3_with_root(
    delta: &BigInt,
    r: &BigInt,
    branch: Branch,
) -> Result<Option<(DivisorWitness, BigInt)>> {
    check_divides(delta, r)?;
    let r_sq = r * r;
    let radicand = BigInt::from(12u8) * delta * r - BigInt::from(3u8) * &r_sq * &r_sq;
    let Some(t) = perfect_square(&radicand) else {
        return Ok(None);
    };
    let base = -(&r_sq * 3u8);
    let numerator = match branch {
        Branch::Plus => base + &t,
        Branch::Minus => base - &t,
    };
    let (small, rem) = numerator.div_rem(&(r * 6u8));
    if !rem.is_zero() {
        return Ok(None);
    }
    let large = &small + r;
    let cube = |x: &BigInt| x * x * x;
    if cube(&large) - cube(&small) != *delta {
        return Err(Error::Consistency(format!(
            "cube witness r = {r} for delta = {delta} gives {large}^3 - {small}^3 != delta"
        )));
    }
    let w = DivisorWitness {
        n: Exponent::Cube,
        delta: delta.clone(),
        r: r.clone(),
        branch: Some(branch),
        small,
        large,
    };
    Ok(Some((w, t)))
}

/// Solves `(s + r)³ − s³ = Δ` for integer `s` on the chosen branch.
///
/// `Ok(None)` when the radicand `12Δr − 3r⁴` is negative or not a square, or
/// when the root is not an integer.
pub fn solve_pair3(delta: &BigInt, r: &BigInt, branch: Branch) -> Result<Option<DivisorWitness>> {
    Ok(solve_pair3_with_root(delta, r, branch)?.map(|(w, _)| w))
}

/// All witnesses admitted by `opts`, grouped plus-branch first, each group
/// ascending in `r`.
pub fn admissible_witnesses(
    n: Exponent,
    divisors: &DivisorList,
    opts: &SolveOptions,
) -> Result<Vec<DivisorWitness>> {
    let delta = divisors.delta();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for r in divisors {
        match n {
            Exponent::Square => {
                let two_r: BigInt = r * 2;
                if (delta - r * r).is_multiple_of(&two_r) {
                    plus.push(solve_pair2(delta, r)?);
                }
            }
            Exponent::Cube => {
                if let Some((w, t)) = solve_pair3_with_root(delta, r, Branch::Plus)? {
                    plus.push(w);
                    // a zero radicand makes both roots coincide
                    if t.is_zero() {
                        continue;
                    }
                }
                if let Some((w, _)) = solve_pair3_with_root(delta, r, Branch::Minus)? {
                    minus.push(w);
                }
            }
        }
    }
    plus.append(&mut minus);
    plus.retain(|w| opts.keeps(w));
    Ok(plus)
}

/// Divisors `r` of `delta` that yield an integer pair, with their branch.
pub fn admissible_divisors(
    n: Exponent,
    delta: &BigInt,
    positive_only: bool,
) -> Result<Vec<(BigInt, Option<Branch>)>> {
    let list = divisors(delta)?;
    Ok(admissible_witnesses(n, &list, &SolveOptions::new(positive_only))?
        .into_iter()
        .map(|w| (w.r, w.branch))
        .collect())
}

/// Pairs every two distinct witnesses of the same branch into an identity.
///
/// The smaller divisor supplies `(A, C)` and the larger `(D, B)`.
pub fn identities_from_witnesses(witnesses: &[DivisorWitness]) -> Result<Vec<Quadruple>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, w1) in witnesses.iter().enumerate() {
        for w2 in &witnesses[i + 1..] {
            if w1.branch != w2.branch || w1.r == w2.r || w1.delta != w2.delta {
                continue;
            }
            let (w1, w2) = if w1.r < w2.r { (w1, w2) } else { (w2, w1) };
            let q = Quadruple::new(
                w1.n,
                w1.large.clone(),
                w2.small.clone(),
                w1.small.clone(),
                w2.large.clone(),
                Provenance::Divisor {
                    delta: w1.delta.clone(),
                    r1: w1.r.clone(),
                    r2: w2.r.clone(),
                    branch: w1.branch,
                },
            )?;
            if seen.insert(q.canonical_key()) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// Enumerates identities for `delta` using an explicit divisor list.
pub fn enumerate_identities_with(
    n: Exponent,
    divisors: &DivisorList,
    opts: &SolveOptions,
) -> Result<Vec<Quadruple>> {
    identities_from_witnesses(&admissible_witnesses(n, divisors, opts)?)
}

/// Enumerates identities for `delta`, computing its divisors by trial division.
pub fn enumerate_identities(n: Exponent, delta: &BigInt, positive_only: bool) -> Result<Vec<Quadruple>> {
    enumerate_identities_with(n, &divisors(delta)?, &SolveOptions::new(positive_only))
}
