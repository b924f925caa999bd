//! Exact combinatorics of clutters: blockers and covering invariants,
//! indecomposable b-covers, Hilbert bases of the associated lattice cones,
//! monomial edge ideals with their symbolic powers, and graph-theoretic
//! analysis (odd holes, perfection, max-flow-min-cut checks).
//!
//! `no_std` + `alloc`; all arithmetic is exact and checked.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod clutter;
pub mod cone;
pub mod covers;
pub mod enumerate;
pub mod error;
pub mod ideal;

pub use clutter::{Clutter, VertexId, MAX_VERTICES};
pub use error::{Error, Result};
