//! Algebras attached to layered graphs.
//!
//! A layered graph with a unique minimal vertex `*` determines a graded
//! algebra `A` generated by its vertices of positive level, together with an
//! associated graded algebra `gr A`. This crate builds both presentations,
//! counts their graded dimensions combinatorially and by linear algebra, and
//! checks Koszulity at bounded degree, all over exact fields.

pub mod basis;
pub mod error;
pub mod field;
pub mod graph;
pub mod koszul;
pub mod relations;
pub mod tensor;

pub use error::{Error, Result};

/// Resource bounds shared by the computations that can blow up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest tensor component (number of coordinates) that may be built.
    pub ambient: usize,
    /// Largest number of paths enumerated between two vertices.
    pub paths: usize,
    /// Largest subspace lattice closure.
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            ambient: tensor::DEFAULT_AMBIENT_CAP,
            paths: graph::DEFAULT_PATH_CAP,
            lattice: koszul::DEFAULT_LATTICE_CAP,
        }
    }
}
