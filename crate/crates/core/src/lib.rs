//! Executable combinatorics for three families of trialgebras.
//!
//! * associative trialgebras, whose free object on one generator has the
//!   cells of the standard simplices as a basis ([`freetrias`]);
//! * dendriform trialgebras, based on planar trees, i.e. the cells of the
//!   associahedra ([`freetridend`]);
//! * cubical trialgebras, based on the cells of the hypercubes
//!   ([`freetricub`]).
//!
//! On top of the free algebras the crate computes Koszul duals of the
//! relation spaces ([`koszul`]), the chain complexes of the free algebras
//! together with their exact rational homology ([`homology`]) and the
//! generating series of the three polytope families ([`series`]).
//!
//! All arithmetic is exact.

pub mod acceptance;
pub mod combinatorics;
pub mod error;
pub mod freetrias;
pub mod freetricub;
pub mod freetridend;
pub mod homology;
pub mod koszul;
pub mod linalg;
pub mod lincomb;
pub mod relations;
pub mod sampling;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
pub use lincomb::{Coeff, LinComb};
