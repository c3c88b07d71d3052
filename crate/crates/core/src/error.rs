use alloc::string::String;

/// Errors raised by the core library.
///
/// Index-carrying variants use 0-based internal positions (matrix rows,
/// vertex indices, or positions in a root list).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("diagonal entry ({0},{0}) is not 2")]
    BadDiagonal(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entry ({0},{1}) is zero but ({1},{0}) is not")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("rank {0} is outside the supported range")]
    RankOutOfRange(usize),
    #[error("diagram is not connected")]
    NotConnected,
    #[error("diagram is not of indefinite type")]
    NotIndefinite,
    #[error("diagram is not of affine type")]
    NotAffine,
    #[error("labels do not match the vertex count or are not distinct")]
    BadLabels,
    #[error("integer overflow")]
    Overflow,

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("vectors belong to lattices of different rank")]
    HostMismatch,
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("reflecting vector does not have norm 2")]
    NotNormTwo,
    #[error("null root normalization failed: coefficient at node 0 is {0}")]
    NormalizationFailed(i64),
    #[error("form is singular")]
    SingularMatrix,
    #[error("host lies outside the norm characterization of real roots")]
    TheoremHypothesisViolated,
    #[error("vector has negative coordinates")]
    NegativeCoordinates,

    #[error("root list is empty")]
    EmptyRoots,
    #[error("{k} roots exceed the host rank {rank}")]
    TooManyRoots { k: usize, rank: usize },
    #[error("root {0} is not a real root of the host")]
    NotRealRoot(usize),
    #[error("root {0} is not positive")]
    NotPositive(usize),
    #[error("roots {0} and {1} pair positively")]
    PositivePairing(usize, usize),
    #[error("affine diagram has no vertex labeled 0")]
    NoDesignatedZero,
    #[error("lattice is not a hyperbolic extension of an affine diagram")]
    NotHyperbolicExtension,
    #[error("vertex `{0}` is not allowed here")]
    BadVertex(i64),
    #[error("positions do not form an induced A_p chain")]
    NotAChain,
    #[error("parameter {0} is out of range")]
    BadParameter(i64),
    #[error("unknown recipe target `{0}`")]
    UnknownTarget(String),
    #[error("recipe for `{0}` produced a diagram that is not isomorphic to the target")]
    RecipeMismatch(String),
    #[error("no orthogonal roots realize `{0}`")]
    NoExtension(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
