//! Skew shaped positroid varieties inside the Grassmannian `Gr(k, n)`.
//!
//! The crate computes the combinatorics attached to a skew diagram `λ/μ`
//! (lattice path labels, Grassmann necklace, bounded affine permutation,
//! braid word, cluster quiver, plabic trips), samples exact rational points
//! of the variety, and implements the splicing map that cuts a diagram along
//! a column.
//!
//! Conventions: diagrams are drawn in French notation, box `(a, i)` is the
//! `i`-th box from the bottom of the `a`-th column counted from the right.
//! All indices exposed by the API are 1-based unless stated otherwise.

pub mod braid;
pub mod cluster;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod permutations;
pub mod plabic;
pub mod splicing;
pub mod variety;

pub use diagram::{BoxRef, Partition, SkewDiagram};
pub use error::{Error, Result};
pub use linalg::{Rat, RatMatrix, Subspace};
pub use variety::PointV;
