use thiserror::Error;

use crate::graph::{EdgeId, VertexId, Weight};

/// Why a step budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exhaustion {
    /// The operation counter passed its limit.
    Steps { used: u64, limit: u64 },
    /// ElimNeg kept changing labels after |V| + 1 rounds. Without a negative
    /// cycle every label is final after |V| rounds, so this certifies one.
    Rounds { rounds: u64, vertices: usize },
}

impl Exhaustion {
    pub fn certifies_negative_cycle(&self) -> bool {
        matches!(self, Exhaustion::Rounds { .. })
    }
}

impl std::fmt::Display for Exhaustion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exhaustion::Steps { used, limit } => write!(f, "{used} steps used, limit {limit}"),
            Exhaustion::Rounds { rounds, vertices } => {
                write!(f, "labels still changing after {rounds} rounds on {vertices} vertices")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge} has weight {weight}, outside the supported range")]
    WeightOutOfRange { edge: EdgeId, weight: Weight },
    #[error("edge id {0} does not exist")]
    InvalidEdge(EdgeId),
    #[error("arithmetic overflow in weight transform")]
    Overflow,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {edge} has negative weight {weight}")]
    NegativeWeightPresent { edge: EdgeId, weight: Weight },
    #[error("edge {edge} has weight {weight} below the allowed minimum {min}")]
    WeightBelowMinimum { edge: EdgeId, weight: Weight, min: Weight },
    #[error("step budget exhausted: {0}")]
    BudgetExhausted(Exhaustion),
    #[error("source {from} cannot reach vertex {vertex}")]
    Unreachable { from: VertexId, vertex: VertexId },
    #[error("contracted partition contains a cycle")]
    PartitionNotDag,
    #[error("edge {edge} inside a part has negative weight")]
    NegativeIntraPartEdge { edge: EdgeId },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("all {attempts} Monte-Carlo attempts failed")]
    MonteCarloFailure { attempts: u64 },
    #[error("restart limit of {0} reached")]
    RestartLimit(u32),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
