//! Symmetric multiqubit mixed states as real trivariate polynomials.
//!
//! An n-qubit Hermitian operator expands uniquely over tensor products of
//! Pauli matrices with real coefficients; when the operator is invariant
//! under qubit permutations, the expansion collapses onto index orbits and
//! corresponds to a polynomial of degree at most n in x, y, z. This crate
//! implements that correspondence and the structure it exposes:
//!
//! - [`pauli`]: sparse Pauli decompositions, dense operators, permutation
//!   action, symmetrization, tensor products, partial traces, and the
//!   `.pauli` text format;
//! - [`poly`]: polynomial arithmetic, the maps between symmetric
//!   decompositions and polynomials, rotation of variables, radial-part
//!   extraction, and SO(3) representation checks on polynomial spaces;
//! - [`rotation`]: SU(2) elements, the adjoint homomorphism onto SO(3),
//!   Haar sampling, and collective or per-qubit unitary actions;
//! - [`states`]: constructors for the named symmetric states, the two-qubit
//!   family `rho(a)`, and symmetric Werner states from radial coefficients;
//! - [`werner`]: the two-sided Werner test, spectra, characteristic
//!   invariants, local-unitary comparison, and positivity scans.
//!
//! Mixing states adds their polynomials, the symmetrized tensor product
//! multiplies them, and a state is a symmetric Werner state exactly when its
//! polynomial is a combination of powers of `x^2 + y^2 + z^2`; the radial
//! coefficients classify such states up to local unitaries.

pub mod error;
pub mod pauli;
pub mod poly;
pub mod render;
pub mod rotation;
pub mod states;
pub mod werner;

pub use error::{Error, Result};
