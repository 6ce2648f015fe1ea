//! Exact linear algebra over `Q` and `F_p`: echelon forms, kernels,
//! determinants and Pfaffians, subspaces and their enumeration over finite
//! fields.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{is_prime, next_prime, parse_rational, Field, PrimeField, Rationals, Residue};
pub use matrix::{Matrix, Rref};
pub use subspace::{enumerate_subspaces, gaussian_binomial, kernel_basis, Subspace, DEFAULT_ENUM_CAP};
