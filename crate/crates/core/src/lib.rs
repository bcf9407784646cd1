//! Deciding word-representability and 3-colourability of near-triangulations
//! and polyomino triangulations.
//!
//! The decision surface has two routes that cross-validate each other:
//! a structural one — a near-triangulation without K4 is word-representable
//! exactly when every inner vertex has even degree, certified by a
//! constructive 3-colouring — and a generic one, exhaustive search for a
//! semi-transitive orientation. Brute-force oracles (backtracking colouring,
//! perfectness, witness words) keep both honest at desk scale.

pub mod config;
pub mod error;
mod geom;
pub mod graph;
pub mod orientation;
pub mod planar;
pub mod polyomino;
pub mod words;

pub use config::Config;
pub use error::{Error, Result};
