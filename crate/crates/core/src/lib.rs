//! Splitting of degree-one primes `(t - a)` in the mod-`ell` Heisenberg
//! extension `R = F_p(t)(t^{1/ell}, (1-t)^{1/ell}, eps(t)^{1/ell})`.
//!
//! The crate has two independent sides:
//!
//! * [`formula`]: residue symbols, the polynomial `A_ell`, and the predicted
//!   Frobenius class and prime count for each `a`;
//! * [`oracle`]: the ground-truth count, obtained by factoring the residue
//!   algebras over explicitly built finite fields.
//!
//! [`verify`] runs them against each other, along with the block determinant
//! identity and the discriminant of the explicit integral basis.

pub mod arith;
pub mod error;
pub mod field;
pub mod formula;
pub mod heisenberg;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use field::{build_extension, Context, ExtElem, ExtField, FiniteField, PrimeField};
pub use formula::{A2Case, FrobPrediction};
pub use heisenberg::{ClassLabel, HeisElem};
pub use oracle::{Level, SplitReport};
pub use poly::{Factorization, Poly, PolyRing};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_230_917;
