use thiserror::Error;

use crate::graph::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance too large: {what} needs {needed} coordinates, ambient cap is {cap}")]
    AmbientCap {
        what: String,
        needed: u128,
        cap: usize,
    },
    #[error("path cap exceeded: more than {cap} paths from {from} to {to}")]
    PathCap {
        cap: usize,
        from: String,
        to: String,
    },
    #[error("lattice cap exceeded: closure has more than {cap} elements")]
    LatticeCap { cap: usize },
    #[error("graph is not uniform: children {u} and {w} of {vertex} are not linked by shared grandchildren")]
    NonUniform {
        vertex: String,
        u: String,
        w: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid layered graph: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidGraph(Vec<Violation>),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}
