use thiserror::Error;

/// Errors raised while constructing or verifying codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{0} is not a power of an odd prime")]
    NotOddPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field GF({p}^{m}) is too large to represent")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("no monic irreducible polynomial of degree {m} over GF({p}) was found")]
    NoIrreducible { p: u64, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("2n = {two_n} does not divide the multiplicative order {order}")]
    NoPrimitiveRoot { two_n: u64, order: u64 },
    #[error("residue {0} is even; negacyclic roots are odd powers only")]
    EvenResidue(u64),
    #[error("residue {residue} is outside 1..{two_n}")]
    ResidueOutOfRange { residue: u64, two_n: u64 },
    #[error("cosets overlap at residue {0}")]
    OverlappingCosets(u64),
    #[error("coefficient of a minimal polynomial lies outside the subfield")]
    OutsideSubfield,
    #[error("parity-check rank {got} differs from |Z| = {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dual rank {got} below {expected} at degree cap {cap}")]
    DualRankDeficient { expected: usize, got: usize, cap: usize },
    #[error("the convolutional code is not Hermitian self-orthogonal")]
    NotSelfOrthogonal,
    #[error("dual-containment methods disagree (defining set: {by_defining_set}, explicit: {explicit})")]
    ContainmentDisagreement { by_defining_set: bool, explicit: bool },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown table {0}")]
    UnknownTable(u32),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
