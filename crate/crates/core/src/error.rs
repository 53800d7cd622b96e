use thiserror::Error;

/// Errors from the exact representation-theory layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("rank mismatch: weight has length {got}, algebra has rank {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("weight {0:?} is not dominant for the given algebra")]
    NotDominant(Vec<i64>),
    #[error("algebras differ between operands")]
    AlgebraMismatch,
    #[error("weight multiset is not Weyl-invariant (signals an upstream bug)")]
    NotWeylInvariant,
    #[error("multiset is not the character of a representation (negative multiplicity during extraction)")]
    NotACharacter,
    #[error("{0} is not supported (no root data shipped for this family)")]
    Unsupported(String),
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },
}

/// Errors from catalog loading and schema validation.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("schema check failed for {file}: {detail}")]
    Schema { file: String, detail: String },
    #[error("i/o error reading {file}: {source}")]
    Io {
        file: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed catalog file {file}: {source}")]
    Parse {
        file: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("not in catalog: {0}")]
    UnknownGroup(String),
    #[error("unknown representation {rep} for embedding {embedding}")]
    UnknownRep { rep: String, embedding: String },
    #[error("catalog record {record} failed validation: {detail}")]
    Invalid { record: String, detail: String },
}

/// Errors from the numerical geometry layer.
#[derive(Debug, Error)]
pub enum GeomError {
    #[error("unknown model {0}")]
    UnknownModel(String),
    #[error("orbit tangent frame is rank-deficient at the requested point (rank {got}, declared {declared})")]
    RankDeficientFrame { got: usize, declared: usize },
    #[error("constraint violation |C(x)| = {0:.3e} exceeds budget during differencing")]
    ConstraintViolation(f64),
    #[error("module basis blocks are not pairwise orthogonal (max cross product {0:.3e})")]
    NonOrthogonalBasis(f64),
    #[error("geodesic residual {0:.3e} exceeds tolerance")]
    GeodesicResidual(f64),
    #[error("point is not on the model manifold: |C(x)| = {0:.3e}")]
    OffManifold(f64),
}
