//! Distance-regular graph machinery without the standard library.
//!
//! The crate covers the whole arithmetic and combinatorial side of working
//! with intersection arrays:
//!
//! - [`arrays`]: the [`IntersectionArray`] value type, its derived
//!   parameters and the elementary feasibility conditions.
//! - [`spectral`]: eigenvalues of the tridiagonal intersection matrix and its
//!   leading truncations, standard sequences, Biggs multiplicities and the
//!   second-eigenvalue lower bound with its antipodal equality case.
//! - [`bounds`]: diameter, valency and multiplicity caps packaged as named
//!   rules producing re-checkable verdicts.
//! - [`enumerate`]: the pruned, resumable depth-first search over arrays.
//! - [`graphcheck`]: explicit graphs, generators and certification.
//! - [`catalog`]: named fixture arrays, every one backed by a certified graph
//!   or a parametric family.
//!
//! Everything here is a pure function over immutable values. IO, JSON files,
//! the CLI and the worker pool live in the `drg` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arrays;
pub mod bounds;
pub mod catalog;
pub mod enumerate;
pub mod graphcheck;
pub mod rational;
pub mod report;
pub mod spectral;

pub use arrays::{DerivedParameters, IntersectionArray, OrderParams};
pub use rational::Rational;
pub use report::{FeasibilityReport, RuleName, RuleVerdict, Status};
pub use spectral::{Spectrum, StandardSequence, Tolerances, TridiagonalMatrix};
