//! Supermesh construction and conservative field transfer for simplicial
//! meshes in 2D and 3D.
//!
//! A supermesh of two meshes `A` and `B` is a common refinement: every one of
//! its cells lies inside exactly one cell of each parent, so integrals of
//! piecewise-polynomial fields can be transferred between the parents without
//! conservation error. This crate provides
//!
//! - geometric kernels for simplices (measures, enclosing/inscribed balls),
//! - per-mesh uniformity constants `h` and `rho`,
//! - a jittered-lattice generator for non-nested mesh hierarchies,
//! - exact simplex-simplex clipping with a grid broad phase,
//! - supermesh assembly with parent provenance, validation, and a
//!   piecewise-constant conservative projection,
//! - the cell-count and intersection-count bounds that make supermesh size
//!   linear in the parent sizes, plus a hierarchy benchmark that measures the
//!   observed ratio.
//!
//! The `smesh` binary exposes all of it as subcommands; see the README.

pub mod bounds;
pub mod clip;
pub mod error;
pub mod experiment;
pub mod generate;
pub mod geometry;
pub mod index;
pub mod io;
pub mod mesh;
pub mod pairs;
pub mod supermesh;

pub use error::{Error, Result};
pub use geometry::{Ball, Point, SimplexPoints};
pub use mesh::{quasi_uniformity_constants, Mesh, QuasiUniformityReport};
