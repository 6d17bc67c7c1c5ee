//! Exact construction, enumeration and verification of integer quadruples
//! with `Aⁿ + Bⁿ = Cⁿ + Dⁿ` for `n ∈ {2, 3}`.
//!
//! * [`solver`] derives identities from the divisors of a common difference
//!   `Δ = Aⁿ − Cⁿ = Dⁿ − Bⁿ`.
//! * [`generator`] evaluates an infinite closed-form family of cube
//!   identities in ℤ[√3].
//! * [`oracle`] is an independent exhaustive search used to cross-check both.

pub mod arith;
pub mod error;
pub mod generator;
pub mod index_file;
pub mod oracle;
pub mod quad;
pub mod quadruple;
pub mod solver;

pub use arith::{divisors, isqrt, perfect_square, DivisorList};
pub use error::{Error, Result};
pub use generator::{
    delta_of, gen_b, gen_c, gen_quadruple, predicted_digits, recurrence_step, sum_sequence,
    Generator, GeneratorConstants, GrowthModel, Series,
};
pub use oracle::{
    build_index, build_index_with, multi_representations, naive_multi_representations,
    ComponentRange, Representation, SumIndex,
};
pub use quad::{conjugate_pair_value, quad_pow, QuadInt};
pub use quadruple::{verify_quadruple, Branch, Exponent, Provenance, Quadruple, Verdict};
pub use solver::{
    admissible_divisors, enumerate_identities, enumerate_identities_with, solve_pair2,
    solve_pair3, DivisorWitness, SolveOptions,
};

pub use num_bigint::BigInt;
