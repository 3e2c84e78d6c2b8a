//! Mutual witness β-proximity drawings of tree pairs.
//!
//! Modules:
//! - [`geometry`]: points, β-regions, wedges, winged parallelograms.
//! - [`tree_model`]: trees, rooted isomorphism, caterpillars, sparse leaf sets.
//! - [`proximity`]: the brute-force witness oracle and the drawing verifier.
//! - [`construct`]: the star, caterpillar, isomorphic-tree and pruned-tree
//!   constructions.
//! - [`io`] and [`svg`]: JSON documents and SVG rendering.

pub mod construct;
pub mod geometry;
pub mod io;
pub mod par;
pub mod proximity;
pub mod svg;
pub mod tree_model;

pub use geometry::{Beta, BetaRegion, Point, TAU};
pub use proximity::{DrawingPair, Mode, VerificationReport};
