use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("guard exceeded: {what} needs n <= {limit}, got {n}")]
    GuardExceeded { what: &'static str, limit: usize, n: usize },
    #[error("work budget of {0} units exhausted")]
    Budget(u64),
    #[error("scope must contain at least two vertices")]
    ScopeTooSmall,
    #[error("scope is not a mesh")]
    NotAMesh,
    #[error("quasi-orders leave a pair incomparable")]
    ComparabilityViolated,
    #[error("p and q must lie in distinct adjacent modules of the component")]
    BadPqChoice,
    #[error("covering failed; the graph contains an induced P6")]
    NotP6Free,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("separators cross each other")]
    CrossingSeparators,
    #[error("set is not a minimal separator")]
    NotASeparator,
    #[error("no witness found: {0}")]
    WitnessNotFound(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("lifting step found {0} PMC alternatives instead of one")]
    AlternativeAmbiguity(usize),
    #[error("structural claim violated: {0}")]
    ClaimViolated(String),
    #[error("completion does not respect the segment")]
    NotRespecting,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}
