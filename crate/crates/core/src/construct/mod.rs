//! The constructions: winged-parallelogram stars, caterpillars, isomorphic
//! trees and pruned trees.

mod caterpillar;
mod perturb;
mod prune;
mod star;
mod strip;
mod trace;
mod tree;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::proximity::ProximityError;
use crate::tree_model::TreeError;

pub use caterpillar::draw_caterpillar_pair;
pub use perturb::{compute_safe_perturbation, Block};
pub use prune::draw_pruned_tree_pair;
pub use star::{draw_contained_star_pair, draw_star_pair, redraw_pruned_stars, WpDrawing};
pub use strip::lower_strip_ratio;
pub use trace::{ConstructionTrace, TraceEntry};
pub use tree::draw_tree_pair;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Proximity(#[from] ProximityError),
    #[error("keep set is empty")]
    EmptyKeepSet,
    #[error("keep sets do not match: {0}")]
    KeepSetMismatch(String),
    #[error("no safe perturbation above {0:e}")]
    NoSafeEps(f64),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("invalid eps {0}: must be positive")]
    InvalidEps(f64),
    #[error("tree height {0} is too small: need at least 2")]
    HeightTooSmall(usize),
}

pub type Result<T> = std::result::Result<T, ConstructError>;
