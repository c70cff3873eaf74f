//! Exact integer-grid realizations of many distinct planar order types.
//!
//! The crate builds point sets on a `3n^4 x 3n^4` integer grid from four
//! stretched copies of a mod-`p` parabola, places the remaining points in
//! almost-square regions, and checks every step with exact arithmetic.
//!
//! * [`geom`]: exact orientation, line intersection, lattice points.
//! * [`chirotope`]: labeled chirotopes and their packed signatures.
//! * [`construction`]: parameters, frame, regions, and the placement engine.
//! * [`verify`]: invariant checks, statistics, witnesses, rounding experiment.
//! * [`io`], [`svg`], [`cli`]: file formats, drawing, and the `otg` front end.

pub mod chirotope;
pub mod cli;
pub mod construction;
pub mod geom;
pub mod io;
pub mod rng;
pub mod svg;
pub mod verify;

pub use chirotope::{compute_chirotope, first_difference, Chirotope, ChirotopeError, LabeledPointSet};
pub use construction::{Construction, ConstructionError, ConstructionParams, PlacementVector, RegionKey};
pub use geom::{orient, Orientation, Point, Rational, RationalPoint};
