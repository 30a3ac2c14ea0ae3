//! Crate-wide error type.

use crate::classes::Coupling;

/// Errors produced by plan generation, decoding, simulation and the harness.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid device: need at least 2 qubits, got {0}")]
    InvalidDevice(usize),

    #[error("invalid class label: bit position {position} out of range for n={n}")]
    InvalidLabel { position: u32, n: u32 },

    #[error("pair {0} is not bit-complementary for n={1}")]
    NotComplementary(Coupling, u32),

    #[error("syndrome conflicts (both values of bit {0} failed); single-fault decoding does not apply")]
    MultiFault(u32),

    #[error("results do not cover the plan: missing outcome for test {0}")]
    IncompletePlan(String),

    #[error("unsupported repetition count {0}: single-output tests need an even number of gates")]
    UnsupportedRepetition(u32),

    #[error("circuit is not XX-only; the diagonal backend cannot evaluate it")]
    UnsupportedBackend,

    #[error("test involves {qubits} qubits, above the backend cap of {cap}")]
    TooManyQubits { qubits: usize, cap: usize },

    #[error("qubit {0} is not part of this register")]
    QubitNotInvolved(u32),

    #[error("no shots recorded; fidelity is undefined")]
    UndefinedFidelity,

    #[error("contrast scan is degenerate: all sin(2*phi) regressors vanish")]
    UnfittableScan,

    #[error("mode-coupling model is missing entries for ion {0}")]
    IncompleteModel(u32),

    #[error("no single coupling is consistent with the observed results")]
    DecodeFailure,

    #[error("repetition ladder exhausted with a conflicting syndrome; more faults than the flow can separate")]
    TooManyFaults,

    #[error("swap spare qubit {0} overlaps the targeted coupling")]
    InvalidSpare(u32),

    #[error("replay records do not cover requested tests: {missing:?}")]
    MissingRecord { missing: Vec<String> },

    #[error("replay record for {id} has counts summing to {got}, expected {expected} shots")]
    BadRecord { id: String, got: u64, expected: u64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
