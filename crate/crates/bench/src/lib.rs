//! Fixed workloads shared by the criterion benches.

use num_bigint::BigInt;

/// Generator parameters, from the smallest identity to 100+ digit terms.
pub const GENERATOR_C1: &[u64] = &[1, 5, 8, 32, 100];

/// Oracle limits small enough for the quadratic-in-pairs baseline.
pub const ORACLE_LIMITS: &[u32] = &[50, 100, 200];

/// Differences with several admissible divisors.
pub fn solver_deltas() -> Vec<(u32, BigInt)> {
    vec![
        (2, BigInt::from(24)),
        (2, BigInt::from(1000)),
        (3, BigInt::from(999)),
        (3, BigInt::from(80379)),
        (2, BigInt::from(720720)),
    ]
}
