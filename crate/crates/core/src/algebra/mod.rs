//! Exact arithmetic over Q and F_p and univariate polynomial tools.

pub mod bipoly;
pub mod field;
pub mod poly;
pub mod ratfunc;
pub mod resultant;
pub mod roots;

pub use bipoly::{binomials, BiPoly};
pub use field::{is_prime, Field, FieldElement, Scalar, DEFAULT_PRIME_LIMIT};
pub use poly::{KPoly, UniPoly};
pub use ratfunc::RatFunc;
pub use resultant::{critical_value_poly, resultant_z};
pub use roots::{distinct_root_count, rational_roots, squarefree_part, RootSplit};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} exceeds the configured limit {limit}")]
    PrimeTooLarge { p: u64, limit: u64 },
    #[error("denominator of {value} vanishes modulo {p}")]
    DenominatorVanishes { value: String, p: u64 },
    #[error("derivative vanishes identically; critical values are not determined")]
    Inseparable,
}
