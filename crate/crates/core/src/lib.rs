//! Face rings of simplicial complexes, their Artinian reductions over exact
//! fields, and randomized checks of Lefschetz-type properties.

pub mod artinian;
pub mod catalog;
pub mod decompose;
pub mod io;
pub mod lefschetz;
pub mod linalg;
pub mod rng;
pub mod scalar;
pub mod simplicial;
