//! Random-cluster machinery on regular planar tessellations.
//!
//! The crate is organized around four pieces:
//!
//! * [`tessellation`] — finite patches of the `{d, d̂}` tessellation (degree
//!   `d`, faces with `d̂` sides), their planar duals, balls, edge-set calculus
//!   and the face/vertex closure operators used by the iteration in
//!   [`isoperimetry`].
//! * [`isoperimetry`] — exact isoperimetric constants for these graphs,
//!   a brute-force minimizer over anchored connected sets, bond-animal
//!   enumeration, and the alternating primal/dual closure iteration whose
//!   boundary ratios converge to the isoperimetric constant.
//! * [`bounds`] — closed-form duality transforms and the critical-value
//!   threshold formulas (separation, coexistence, robust-interval).
//! * [`sim`] — finite-volume random-cluster measures with free/wired
//!   boundary conditions: exact enumeration, heat-bath dynamics, exact
//!   sampling by monotone coupling from the past, the Potts coloring
//!   coupling, and the weakened-boundary harness.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod error;
pub mod isoperimetry;
pub mod sim;
pub mod tessellation;

pub use error::{Error, Result};
