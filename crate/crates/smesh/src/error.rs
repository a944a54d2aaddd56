use std::path::PathBuf;

/// Errors produced by mesh loading, generation and supermesh construction.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at {path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("cell {cell} is invalid: {reason}")]
    InvalidCell { cell: usize, reason: String },

    #[error("dimension mismatch: {0}D vs {1}D")]
    DimensionMismatch(usize, usize),

    #[error("field has {got} values but the mesh has {expected} cells")]
    FieldLength { expected: usize, got: usize },

    #[error(
        "unsupported configuration: cell {cell} of mesh {side} overlaps the other domain \
         partially ({covered:.3e} of {measure:.3e}); only coinciding or disjoint domains \
         are supported"
    )]
    PartialOverlap {
        side: char,
        cell: usize,
        covered: f64,
        measure: f64,
    },

    #[error("degenerate polytope cannot be triangulated")]
    DegeneratePolytope,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
