use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension {l} is outside the supported range {min}..={max}")]
    DimensionOutOfRange { l: u32, min: u32, max: u32 },

    #[error("ambient dimension {l} must be {expected}")]
    WrongParity { l: u32, expected: &'static str },

    #[error("parameter {name}={value} is outside the supported range {min}..={max}")]
    ParameterOutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("degenerate line through points {a} and {b}")]
    DegenerateLine { a: u32, b: u32 },

    #[error("triple [{0}, {1}, {2}] is not a line: need a < b < c and c = a XOR b")]
    NotALine(u32, u32, u32),

    #[error("point {mask} does not lie in PG({}, 2)", .l - 1)]
    PointOutOfRange { mask: u32, l: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("codeline {line} has multiplicity 0")]
    ZeroMultiplicity { line: String },

    #[error("a code needs at least one codeline")]
    EmptyCode,

    #[error("oracle refused: {rows} generator rows exceed the limit of {limit}")]
    OracleRefused { rows: usize, limit: usize },

    #[error("the linear map is not a complete mapping: {0}")]
    NotCompleteMapping(&'static str),

    #[error("lines are not pairwise disjoint: {0} and {1} share a point")]
    OverlappingLines(String, String),

    #[error("{0}")]
    InvalidFanoChoice(String),

    #[error("unknown code family `{0}`")]
    UnknownFamily(String),

    #[error("code file: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
