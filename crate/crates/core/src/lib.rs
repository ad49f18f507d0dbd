//! Square-lattice zeta sums and the geometry of their critical-line zeros.
//!
//! The crate evaluates the basic double sum over the rectangular lattice
//! `S0(s; lambda) = sum' (p1^2 + p2^2 lambda^2)^{-s}`, the MacDonald-function
//! double sums `K(n,m;s;lambda)` attached to it, and the derived ratio
//! functions `U`, `V`, `U_K`, `V_K`, `F`, `G`. On top of the evaluators sit
//! critical-line zero scans with argument-principle cross-checks, off-axis
//! zero location, classification of the critical line into extended / island /
//! inner-island regions, and aggregate statistics over zero catalogs.
//!
//! All arithmetic runs at the working precision of an [`ctx::EvalContext`];
//! every operation is a pure, deterministic function of its inputs and the
//! context.

pub mod ctx;
pub mod error;
pub mod mp;

pub mod cplx;

pub mod bernoulli;
pub mod diff;
pub mod quad;

pub mod specfun;

pub mod lattice;

pub mod zeros;

pub mod regions;

pub mod stats;

pub mod cache;
pub mod grid;
pub mod verify;

pub use ctx::EvalContext;
pub use cplx::{Cx, SpecialValue};
pub use error::{Error, Result};
