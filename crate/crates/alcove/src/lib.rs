//! Exact-arithmetic combinatorics of alcoves and galleries in affine Coxeter
//! complexes, with the associated crystal operators, preprojective-algebra
//! module polytopes, and lattice-polytope arithmetic, cross-validated against
//! independent Lie-theoretic counting formulas.

// Index loops mirror the row/column arithmetic of the elimination and
// tableau kernels.
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

pub mod affine;
pub mod crystal;
pub mod error;
pub mod gallery;
mod linalg;
pub mod polytope;
pub mod quiver;
pub mod root_data;

pub use error::{AlcoveError, Result};
pub use root_data::{Basis, LatticeVector, Rat, RationalPoint, RootSystem};
