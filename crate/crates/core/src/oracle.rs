//! Exhaustive ground truth: every `xⁿ + yⁿ` with `x ≤ y` in a bounded range,
//! indexed by sum so that quadruple search reduces to pair enumeration.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadruple::{Exponent, Quadruple};

pub use crate::quadruple::{verify_quadruple, Verdict};

/// An unordered pair stored as `(x, y)` with `x ≤ y`.
pub type Pair = (i64, i64);

/// Default bound on the number of pairs an index may hold.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000;

/// Largest limit accepted by the quadratic-in-pairs baseline search.
pub const NAIVE_LIMIT_MAX: u32 = 200;

/// Largest limit representable without overflowing `i128` sums.
const LIMIT_MAX: u32 = u32::MAX >> 1;

/// Range of each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentRange {
    /// `1 ≤ x ≤ y ≤ N`
    Positive,
    /// `0 ≤ x ≤ y ≤ N`
    NonNegative,
    /// `−N ≤ x ≤ y ≤ N`, cubes only
    Signed,
}

impl ComponentRange {
    pub fn from_positive_only(positive_only: bool) -> Self {
        if positive_only {
            Self::Positive
        } else {
            Self::NonNegative
        }
    }

    pub fn lower(self, limit: u32) -> i64 {
        match self {
            Self::Positive => 1,
            Self::NonNegative => 0,
            Self::Signed => -i64::from(limit),
        }
    }

    /// Number of unordered pairs: `m(m+1)/2` for `m` admissible values.
    pub fn pair_count(self, limit: u32) -> u64 {
        let m = (i64::from(limit) - self.lower(limit) + 1).max(0) as u64;
        m * (m + 1) / 2
    }

    pub fn contains(self, limit: u32, x: i64) -> bool {
        (self.lower(limit)..=i64::from(limit)).contains(&x)
    }

    pub fn code(self) -> u16 {
        match self {
            Self::Positive => 0,
            Self::NonNegative => 1,
            Self::Signed => 2,
        }
    }

    pub fn from_code(code: u16) -> Option<Self> {
        match code {
            0 => Some(Self::Positive),
            1 => Some(Self::NonNegative),
            2 => Some(Self::Signed),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Positive => "positive",
            Self::NonNegative => "nonnegative",
            Self::Signed => "signed",
        }
    }
}

/// Map from sum to every pair attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumIndex {
    n: Exponent,
    limit: u32,
    range: ComponentRange,
    table: BTreeMap<i128, Vec<Pair>>,
}

impl SumIndex {
    pub(crate) fn from_parts(
        n: Exponent,
        limit: u32,
        range: ComponentRange,
        table: BTreeMap<i128, Vec<Pair>>,
    ) -> Self {
        Self {
            n,
            limit,
            range,
            table,
        }
    }

    pub fn n(&self) -> Exponent {
        self.n
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    pub fn range(&self) -> ComponentRange {
        self.range
    }

    /// Number of distinct sums.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn pair_count(&self) -> u64 {
        self.table.values().map(|p| p.len() as u64).sum()
    }

    pub fn get(&self, sum: i128) -> Option<&[Pair]> {
        self.table.get(&sum).map(Vec::as_slice)
    }

    pub fn get_big(&self, sum: &BigInt) -> Option<&[Pair]> {
        self.get(sum.to_i128()?)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i128, &[Pair])> + '_ {
        self.table.iter().map(|(s, p)| (*s, p.as_slice()))
    }

    /// Whether `(x, y)` in either order is recorded.
    pub fn contains_pair(&self, x: i64, y: i64) -> bool {
        let pair = if x <= y { (x, y) } else { (y, x) };
        let sum = self.n.pow_i128(x) + self.n.pow_i128(y);
        self.get(sum).is_some_and(|p| p.binary_search(&pair).is_ok())
    }

    /// Whether all four components lie within this index's range.
    pub fn covers(&self, q: &Quadruple) -> bool {
        q.n == self.n
            && q.components().iter().all(|x| {
                x.to_i64().is_some_and(|x| self.range.contains(self.limit, x))
            })
    }

    /// Both sides of `q` appear under the same sum.
    pub fn contains_quadruple(&self, q: &Quadruple) -> bool {
        if q.n != self.n {
            return false;
        }
        let [a, b, c, d] = q.components().map(|x| x.to_i64());
        let (Some(a), Some(b), Some(c), Some(d)) = (a, b, c, d) else {
            return false;
        };
        let Some(sum) = q.sum.to_i128() else {
            return false;
        };
        self.n.pow_i128(a) + self.n.pow_i128(b) == sum
            && self.contains_pair(a, b)
            && self.contains_pair(c, d)
    }
}

fn check_request(n: Exponent, limit: u32, range: ComponentRange, budget: u64) -> Result<()> {
    if limit == 0 {
        return Err(Error::Domain("limit must be at least 1".into()));
    }
    if limit > LIMIT_MAX {
        return Err(Error::Capacity(format!("limit {limit} exceeds {LIMIT_MAX}")));
    }
    if range == ComponentRange::Signed && n == Exponent::Square {
        return Err(Error::Domain(
            "signed components are only meaningful for cubes".into(),
        ));
    }
    let pairs = range.pair_count(limit);
    if pairs > budget {
        return Err(Error::Capacity(format!(
            "limit {limit} needs {pairs} pairs, budget is {budget}"
        )));
    }
    Ok(())
}

fn pairs_from(n: Exponent, x: i64, limit: u32) -> impl Iterator<Item = (i128, Pair)> {
    let xn = n.pow_i128(x);
    (x..=i64::from(limit)).map(move |y| (xn + n.pow_i128(y), (x, y)))
}

/// Builds the complete index with the default pair budget.
pub fn build_index(n: Exponent, limit: u32, positive_only: bool) -> Result<SumIndex> {
    build_index_with(
        n,
        limit,
        ComponentRange::from_positive_only(positive_only),
        DEFAULT_PAIR_BUDGET,
    )
}

/// Builds the complete index for `range`, refusing more than `budget` pairs.
///
/// Rows of the `x` range are generated in parallel and merged in `x` order,
/// so pair lists come out sorted and the result does not depend on the
/// number of worker threads.
pub fn build_index_with(
    n: Exponent,
    limit: u32,
    range: ComponentRange,
    budget: u64,
) -> Result<SumIndex> {
    check_request(n, limit, range, budget)?;
    let rows: Vec<Vec<(i128, Pair)>> = (range.lower(limit)..=i64::from(limit))
        .into_par_iter()
        .map(|x| pairs_from(n, x, limit).collect())
        .collect();
    let mut table: BTreeMap<i128, Vec<Pair>> = BTreeMap::new();
    for (sum, pair) in rows.into_iter().flatten() {
        table.entry(sum).or_default().push(pair);
    }
    Ok(SumIndex::from_parts(n, limit, range, table))
}

/// A sum together with all of its representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub sum: i128,
    pub pairs: Vec<Pair>,
}

fn check_ways(min_ways: usize) -> Result<()> {
    if min_ways < 2 {
        return Err(Error::Domain(format!("min_ways must be at least 2, got {min_ways}")));
    }
    Ok(())
}

/// Sums with at least `min_ways` representations, ascending.
pub fn multi_representations(index: &SumIndex, min_ways: usize) -> Result<Vec<Representation>> {
    check_ways(min_ways)?;
    Ok(index
        .iter()
        .filter(|(_, p)| p.len() >= min_ways)
        .map(|(sum, pairs)| Representation {
            sum,
            pairs: pairs.to_vec(),
        })
        .collect())
}

/// Baseline that compares every pair against every other pair.
pub fn naive_multi_representations(
    n: Exponent,
    limit: u32,
    range: ComponentRange,
    min_ways: usize,
) -> Result<Vec<Representation>> {
    check_ways(min_ways)?;
    if limit > NAIVE_LIMIT_MAX {
        return Err(Error::Capacity(format!(
            "naive search is limited to N <= {NAIVE_LIMIT_MAX}, got {limit}"
        )));
    }
    check_request(n, limit, range, u64::MAX)?;
    let pairs: Vec<(i128, Pair)> = (range.lower(limit)..=i64::from(limit))
        .flat_map(|x| pairs_from(n, x, limit))
        .collect();
    let mut found: BTreeMap<i128, BTreeSet<Pair>> = BTreeMap::new();
    for (i, (s1, p1)) in pairs.iter().enumerate() {
        for (s2, p2) in &pairs[i + 1..] {
            if s1 == s2 {
                let entry = found.entry(*s1).or_default();
                entry.insert(*p1);
                entry.insert(*p2);
            }
        }
    }
    Ok(found
        .into_iter()
        .filter(|(_, p)| p.len() >= min_ways)
        .map(|(sum, pairs)| Representation {
            sum,
            pairs: pairs.into_iter().collect(),
        })
        .collect())
}
