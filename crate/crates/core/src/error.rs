use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("generator s{index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("band generator A[{i},{j}] out of range for {strands} strands")]
    BandOutOfRange { i: usize, j: usize, strands: usize },
    #[error("braid is not pure: {0}")]
    NotPure(String),
    #[error("depth {depth} is smaller than the strand count {strands}")]
    DepthTooSmall { depth: usize, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("alphabet violation: {0}")]
    AlphabetViolation(String),
    #[error("kernel violation at level {0}")]
    KernelViolation(usize),
    #[error("incoherent limit element at level {0}")]
    Incoherent(usize),
    #[error("settle bound violated: {0}")]
    SettleViolation(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid block ({n},{m}): need 1 <= n <= m")]
    InvalidBlock { n: usize, m: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl BraidError {
    /// Whether the error comes from malformed text rather than a violated contract.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, BraidError::Syntax(_))
    }
}

pub type Result<T> = std::result::Result<T, BraidError>;
