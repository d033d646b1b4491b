//! Exact computational algebra for nodal projective hypersurfaces.
//!
//! Everything here is exact arithmetic over the Gaussian rationals Q(i):
//! homogeneous polynomial rings, graded pieces of Jacobian ideals and
//! symbolic/ordinary powers of node ideals, rank tests for jet-evaluation
//! and Veronese matrices, and the graded Hodge-type dimension formulas
//! built on top of them.
//!
//! Module layout mirrors the data flow:
//!
//! * [`exactnum`] — rationals and Gaussian rationals.
//! * [`polyring`] — homogeneous polynomials, derivatives, evaluation.
//! * [`linalg`] — exact rank / kernel / subspace arithmetic.
//! * [`ideals`] — graded pieces of J, I, I^i, I^(i), I^(i)J.
//! * [`hodge`] — dimension formulas, rank conditions, bounds, witnesses.
//! * [`catalog`] — node verification and the built-in example surfaces.
//! * [`report`] — machine-readable analysis reports.

pub mod catalog;
pub mod exactnum;
pub mod hodge;
pub mod ideals;
pub mod linalg;
pub mod polyring;
pub mod report;

pub use exactnum::{BigRat, GaussRat};
pub use polyring::{ExpVec, HomoPoly, ProjPoint};
pub use linalg::{ExactMat, Subspace};
pub use ideals::{GradedPiece, NodeSet};
pub use hodge::Hypersurface;
