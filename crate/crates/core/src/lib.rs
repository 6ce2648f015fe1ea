//! Exact computations with 2-step nilpotent Lie algebras and torsion-free
//! nilpotent groups of class 2.
//!
//! Such an algebra is `L(Φ) = V ⊕ S` where `Φ = (φ_1, ..., φ_t)` is a tuple
//! of alternating bilinear forms on `V` and `[x, y] = Σ φ_i(x̄, ȳ) z_i`.
//! The crate provides the linear algebra underneath ([`linalg`]), form
//! tuples ([`forms`]), the algebras themselves ([`lie`]), common isotropic
//! subspaces ([`isotropy`]), Grassmannian bookkeeping ([`grassmann`]), the
//! group side ([`group`]) and seeded Monte Carlo experiments
//! ([`experiments`]).
//!
//! Arithmetic is exact everywhere: rationals are arbitrary precision and
//! finite fields are prime fields `F_p`.

pub mod error;
pub mod experiments;
pub mod forms;
pub mod grassmann;
pub mod group;
pub mod isotropy;
pub mod lie;
pub mod linalg;
pub mod rng;

pub use error::{Error, Result};
