use thiserror::Error;

/// Errors raised by the partition engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition `{text}`: {reason}")]
    Malformed { text: String, reason: String },

    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("parts must be positive integers")]
    NonPositivePart,

    #[error("p must be an odd prime, got {0}")]
    OddPrimeRequired(u32),

    #[error("partition {partition} is not {p}-regular")]
    NotRegular { partition: String, p: u32 },

    #[error("operation requires a nonempty partition")]
    EmptyPartition,

    #[error("Mullineux recursion got stuck at {partition}: no conormal node of residue {residue}")]
    RecursionStuck { partition: String, residue: u32 },

    #[error("no {p}-regular partition matches symbol layer (a={size}, r={rows}) over {inner}")]
    Reconstruction {
        inner: String,
        size: usize,
        rows: usize,
        p: u32,
    },

    #[error("a sign is only meaningful for a Mullineux-fixed partition; {0} is not fixed")]
    SignOnNonFixed(String),

    #[error("{0} is Mullineux-fixed, so its label needs a sign")]
    SignRequired(String),

    #[error("labels live over different groups: (n={n1}, p={p1}) vs (n={n2}, p={p2})")]
    LabelMismatch {
        n1: usize,
        p1: u32,
        n2: usize,
        p2: u32,
    },

    #[error("tensor classification is implemented for p = 5 only, got p = {0}")]
    UnsupportedCharacteristic(u32),

    #[error("label {0} is 1-dimensional; the classification needs both factors of dimension > 1")]
    DimensionOneFactor(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("sweep bound n_max = {n_max} exceeds the ceiling {ceiling}")]
    SweepTooLarge { n_max: usize, ceiling: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
