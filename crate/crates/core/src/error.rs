use thiserror::Error;

/// Errors raised by the code, construction and Gröbner basis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("entry {value} at ({row}, {col}) is not a residue mod {modulus}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u64,
        modulus: u64,
    },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("generator not full rank (rank {rank}, rows {rows})")]
    NotFullRank { rank: usize, rows: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("word length {0} exceeds the 64-position limit")]
    WordTooLong(usize),
    #[error(
        "enumeration bound exceeded: {what} needs 2^{needed_log2} steps, limit is 2^{limit_log2}"
    )]
    EnumerationBound {
        what: &'static str,
        needed_log2: u32,
        limit_log2: u32,
    },
    #[error("binary only: field characteristic is {0}")]
    BinaryOnly(u64),
    #[error("invalid index tuple: {0}")]
    InvalidTuple(String),
    #[error("not a basis: rank {rank} < {rows}")]
    NotABasis { rank: usize, rows: usize },
    #[error("overflow computing {0}")]
    Overflow(&'static str),
    #[error("construction invariant violated: {0}")]
    ConstructionInvariant(String),
    #[error("degenerate generator row {0}")]
    DegenerateRow(usize),
    #[error(
        "degenerate code: variable x{0} is not a standard monomial (minimum distance at most 1)"
    )]
    DegenerateCode(usize),
    #[error("Buchberger guard exceeded: n = {n} > {limit}; use the coset engine for larger codes")]
    BuchbergerGuard { n: usize, limit: usize },
    #[error("capability undefined: basis has no code binomials")]
    CapabilityUndefined,
    #[error("invalid probability {0}")]
    InvalidProbability(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported monomial order `{0}`: only degrevlex is implemented")]
    UnsupportedOrder(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
