//! Exact computation of stringy Hodge invariants of toric and quotient
//! singularities, toric Fano varieties, Calabi-Yau hypersurfaces in
//! reflexive polytopes, and orbifolds.

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod io;
pub mod lattice;
pub mod orbifold;
pub mod polytope;
pub mod quotient;
pub mod stringy;
pub mod triangulation;

pub use error::{Error, Result};
pub use exactpoly::{BivariateLaurent, Rational, UnivariateInt};
pub use polytope::{BoxPoint, BoxPoints, Face, FacetForm, LatticePolytope};
