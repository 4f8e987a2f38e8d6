//! Exact construction of the 56-variable polynomial representation of the
//! rank-7 exceptional Lie algebra, as first-order differential operators
//! generated from a root-lattice cocycle.
//!
//! On top of the representation the crate recovers the generating singular
//! vectors by exact nullspace solving (the quadratic of weight lambda_1, the
//! cubic of weight lambda_7, the quartic of weight lambda_6 and the quartic
//! invariant of weight 0), verifies the dimension identities
//! (1-q)^55 * sum dim V(...) q^(...) = 1 + q + q^2 + q^3 and
//! sum dim = C(d+55, 55), and checks that the constant-coefficient operator
//! dual to the invariant annihilates the generator products.
//!
//! Everything is computed over exact rationals; there is no floating point
//! and no tolerance anywhere.

pub mod dims;
pub mod exactalg;
pub mod pde;
pub mod poly;
pub mod rep;
pub mod report;
pub mod rootsys;
pub mod singular;
pub mod verify;

pub use exactalg::{exact_nullspace, exact_rank, Rational, SparseMatrix};
pub use poly::{ConstDiffOp, LinDiffOp, Monomial, Polynomial};
pub use rootsys::{RootSystem, RootVec, WeightVec};
