use thiserror::Error;

use crate::builders::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which axis of a Cayley table a Latin-square failure was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("table entry {value} at row {row}, column {col} is outside 0..{n}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, n: usize },

    #[error("element 0 is not the identity: product with {index} gives {found}")]
    WrongIdentity { index: usize, found: usize },

    #[error("not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("not a Latin square: value {value} repeats in {axis} {index}")]
    NotLatinSquare { axis: Axis, index: usize, value: usize },

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("elements do not form a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup of order {order} is not normal")]
    NotNormal { order: usize },

    #[error("image of element {h} is not an automorphism")]
    NotAnAutomorphism { h: usize },

    #[error("action is not a homomorphism at ({h1}, {h2})")]
    NotAnAction { h1: usize, h2: usize },

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("invalid tuple: {}", join_violations(.0))]
    InvalidTuple(Vec<Violation>),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("tuple field `{field}`: {msg}")]
    TupleParse { field: String, msg: String },

    #[error("residue list: {0}")]
    UnitParse(String),

    #[error("no automorphism found: {0}")]
    NotFound(String),

    #[error("Sylow {p}-subgroup is not cyclic")]
    NonCyclicSylow { p: usize },

    #[error("quaternion products do not close: {0}")]
    ClosureFailed(String),

    #[error("unexpected prime-generated core: {0}")]
    UnexpectedShape(String),

    #[error("bad transversal: {0}")]
    BadTransversal(String),

    #[error("representation check failed: {0}")]
    BadRepresentation(String),

    #[error("inconsistent presentation: ({x}*{y})*{z} != {x}*({y}*{z})")]
    InconsistentPresentation { x: usize, y: usize, z: usize },
}

impl Error {
    /// Stable machine-readable name, used by the CLI and the C ABI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::WrongIdentity { .. } => "WrongIdentity",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::NotLatinSquare { .. } => "NotLatinSquare",
            Error::Parse { .. } => "ParseError",
            Error::NotASubgroup(_) => "NotASubgroup",
            Error::NotNormal { .. } => "NotNormal",
            Error::NotAnAutomorphism { .. } => "NotAnAutomorphism",
            Error::NotAnAction { .. } => "NotAnAction",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::TooLarge { .. } => "TooLarge",
            Error::BadParameter(_) => "BadParameter",
            Error::InvalidTuple(_) => "InvalidTuple",
            Error::InternalConsistency(_) => "InternalConsistency",
            Error::TupleParse { .. } => "TupleParse",
            Error::UnitParse(_) => "UnitParse",
            Error::NotFound(_) => "NotFound",
            Error::NonCyclicSylow { .. } => "NonCyclicSylow",
            Error::ClosureFailed(_) => "ClosureFailed",
            Error::UnexpectedShape(_) => "UnexpectedShape",
            Error::BadTransversal(_) => "BadTransversal",
            Error::BadRepresentation(_) => "BadRepresentation",
            Error::InconsistentPresentation { .. } => "InconsistentPresentation",
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
