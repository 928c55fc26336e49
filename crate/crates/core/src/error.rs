use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Input validation errors, violated preconditions and internal invariant
/// failures are kept apart so that callers (and the CLI exit codes) can tell
/// "bad input" from "bug".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators must be positive integers, got {0}")]
    NonPositive(i128),
    #[error("generators must be three distinct atoms, got {0:?}")]
    NotThreeAtoms([i128; 3]),
    #[error("gcd of the generators is {0}, expected 1")]
    GcdNotOne(i128),
    #[error("generator {generator} lies in the semigroup generated by the other two")]
    NotMinimal { generator: i128 },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("computation too large: {0}")]
    TooLarge(String),
    #[error("{0} is not an element of the semigroup")]
    ElementNotInSemigroup(i128),
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
    #[error("semigroup is not symmetric; use the oracle (`--method oracle`) instead")]
    NonSymmetric,
    #[error("semigroup is symmetric; the non-symmetric path does not apply")]
    NotNonSymmetric,
    #[error("Betti elements carry more than two distinct distances: {0:?}")]
    MoreThanTwoDistinctValues(Vec<i128>),
    #[error("{x} is not a multiple of gcd {g}")]
    NotMultipleOfGcd { x: i128, g: i128 },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("{0} belongs to the Euclid set")]
    InEuclidSet(i128),
    #[error("kernel vector has length zero; it equals {alpha} times the zero-length generator")]
    ZeroLength { alpha: i128 },
    #[error("vector {0:?} is not in the lattice spanned by the basis")]
    NotInLattice([i128; 3]),
    #[error("gap {0} belongs to the Euclid set; no intermediate factorization is guaranteed")]
    GapInEuclid(i128),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no mixed-sign decomposition for {0}")]
    NoMixedSignDecomposition(i128),
    #[error("enumeration needs more than {budget} candidate tuples")]
    BudgetExceeded { budget: u64 },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
