//! Exact arithmetic: big integers, rationals, cyclotomic numbers and the
//! integer-lattice normal forms the rest of the crate is built on.

mod cyclotomic;
mod euclid;
mod matrix;
mod rational;
mod snf;

pub use cyclotomic::{euler_phi, Cyclotomic, CyclotomicOp, ParseCyclotomicError};
pub use euclid::{extended_euclid_set, lcm, p_free_part, prime_divisors};
pub use matrix::{solve_triangular_integer, IntMatrix};
pub use rational::{rational_rank, solve_rational};
pub use snf::{smith_normal_form, SmithForm};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("values have gcd {gcd}, not 1")]
    GcdNotOne { gcd: BigInt },
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u32, right: u32 },
    #[error("pivot {pivot} leaves remainder {remainder}, no integral solution")]
    NotIntegral { pivot: usize, remainder: BigInt },
    #[error("matrix is not triangular under the supplied order (entry {row},{col})")]
    NotTriangular { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
