use thiserror::Error;

use crate::vset::VertexSet;

#[derive(Debug, Error)]
pub enum Error {
    // --- input / validation errors (CLI exit code 2) ---
    #[error("vertex {vertex} out of range (labels must be in 1..=64)")]
    VertexOutOfRange { vertex: u32 },
    #[error("vertex {vertex} is not in the ground set {ground}")]
    NotInGround { vertex: u32, ground: VertexSet },
    #[error("ground set must be non-empty")]
    EmptyGround,
    #[error("empty subset not allowed")]
    EmptySubset,
    #[error("loop edge [{v},{v}] not allowed")]
    LoopEdge { v: u32 },
    #[error("duplicate edge [{a},{b}]")]
    DuplicateEdge { a: u32, b: u32 },
    #[error("duplicate block {0}")]
    DuplicateBlock(VertexSet),
    #[error("missing singleton block for vertex {0}")]
    MissingSingleton(u32),
    #[error("blocks {a} and {b} intersect but their union {union} is not a block")]
    UnionClosureViolated {
        a: VertexSet,
        b: VertexSet,
        union: VertexSet,
    },
    #[error("{0} is not a tube of the graph")]
    InvalidTube(VertexSet),
    #[error("{0} is not a block of the building set")]
    NotABlock(VertexSet),
    #[error("not a nested set: {reason}")]
    NotNested { reason: String },
    #[error("nested set is not maximal ({got} blocks, expected {expected})")]
    NotMaximal { got: usize, expected: usize },
    #[error("nested sets are not adjacent")]
    NotAdjacent,
    #[error("invalid exchange frame: {reason}")]
    InvalidFrame { reason: String },
    #[error("identical blocks given where two distinct blocks are required")]
    BlocksNotDistinct,
    #[error("height vector does not match the building set: {reason}")]
    HeightMismatch { reason: String },
    #[error("cone descriptions refer to different building sets")]
    BuildingMismatch,
    #[error("kinematic input must be strictly positive (entry {index} is not)")]
    NonPositiveInput { index: usize },
    #[error("expected {expected} kinematic entries, got {got}")]
    KinematicLength { expected: usize, got: usize },
    #[error("bad block key {0:?} (expected e.g. \"[1,4]\")")]
    BadBlockKey(String),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
    #[error("{0}")]
    BadInput(String),

    // --- domain errors: mathematically inapplicable (CLI exit code 1) ---
    #[error("block {0} is not an integer interval")]
    NotInterval(VertexSet),
    #[error("type cone is not simplicial")]
    NotSimplicial,
    #[error("height vector is not interior to the type cone")]
    NotInterior,

    // --- should never happen on valid inputs ---
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// CLI exit code: 1 for domain inapplicability, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotInterval(_) | Error::NotSimplicial | Error::NotInterior => 1,
            Error::InvariantViolation(_) => 1,
            _ => 2,
        }
    }
}
