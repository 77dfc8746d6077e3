//! Exact computation of `HF+(-M)` for `M = S^3_{-p/q}(K)`, `K` an algebraic knot.
//!
//! The crate is `no_std` (it needs `alloc`). Every quantity on the computation
//! path is an integer or an arbitrary-precision rational; there is no floating
//! point anywhere.
//!
//! The pipeline is:
//!
//! * [`knot`]: Newton pairs to linking pairs, semigroup, Alexander polynomial,
//!   `delta`, `mu`, and the coefficients `alpha_i` of `Q`.
//! * [`hfcore`]: for every spin^c structure `a`, the integers `t_a`, the rational
//!   shift `r_a`, the function `tau_a`, its graded root and the associated
//!   `Z[U]`-module.
//! * [`root`]: abstract graded roots, module extraction and renderers.
//! * [`plumbing`]: the lattice side. It rebuilds everything from the plumbing
//!   graph of `M` and is used as an independent oracle for [`hfcore`].
//! * [`numtheory`]: continued fractions, Dedekind sums, modular inverses.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod hfcore;
pub mod knot;
pub mod numtheory;
pub mod plumbing;
pub mod poly;
pub mod root;

pub use error::{Error, Result};
pub use hfcore::{SpincResult, SurgerySpec};
pub use knot::AlgebraicKnot;
pub use numtheory::{NegContinuedFraction, Rational};
pub use root::{GradedRoot, TauFunction, UModuleDecomposition};
