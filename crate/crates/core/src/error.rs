use thiserror::Error;

use crate::grading::Bidegree;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DuplicateName: generator `{0}` is declared more than once")]
    DuplicateName(String),
    #[error("OddDegreeNonExterior: generator `{name}` has odd degree {deg} but is not exterior")]
    OddDegreeNonExterior { name: String, deg: i64 },
    #[error("EvenDegreeExterior: exterior generator `{name}` has even degree {deg}")]
    EvenDegreeExterior { name: String, deg: i64 },
    #[error("MissingCap: degree-0 generator `{0}` needs an explicit exponent cap")]
    MissingCap(String),
    #[error("BadTruncation: truncated generator `{name}` needs height >= 2, got {height}")]
    BadTruncation { name: String, height: u32 },
    #[error("BadRootRelation: {0}")]
    BadRootRelation(String),
    #[error("InvalidPrime: {0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("NotPLocal: {value} is not in Z_({p})")]
    NotPLocal { value: String, p: u64 },
    #[error("InvalidWindow: [{0}, {1}]")]
    InvalidWindow(i64, i64),
    #[error("InfiniteSlice: {0}")]
    InfiniteSlice(String),
    #[error("WindowMismatch: [{0}, {1}] vs [{2}, {3}]")]
    WindowMismatch(i64, i64, i64, i64),
    #[error("UnknownGenerator: `{0}`")]
    UnknownGenerator(String),
    #[error("NotHomogeneous: {0}")]
    NotHomogeneous(String),
    #[error("DegreeMismatch: `{name}` has bidegree {expected} but its image has {found}")]
    DegreeMismatch {
        name: String,
        expected: Bidegree,
        found: Bidegree,
    },
    #[error("MapError: {0}")]
    MapError(String),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("IncompatibleModulus: cannot collapse weights mod {from} to weights mod {to}")]
    IncompatibleModulus { from: u64, to: u64 },
    #[error("NonZeroModulus: operation needs Z-graded input, got weights mod {0}")]
    NonZeroModulus(u64),
    #[error("ZeroDilation")]
    ZeroDilation,
    #[error("NotDivisible: weight {wt} is not divisible by {s}")]
    NotDivisible { wt: i64, s: i64 },
    #[error("NotConcentrated: table has an entry of weight {0}")]
    NotConcentrated(i64),
    #[error("HypothesisFailed: {0}")]
    HypothesisFailed(String),
    #[error("UnsupportedDivisor: {0}")]
    UnsupportedDivisor(String),
    #[error("UnknownPreset: `{0}`")]
    UnknownPreset(String),
    #[error("UnsupportedPresentation: {0}")]
    UnsupportedPresentation(String),
    #[error("WildPrime: p = {p} divides m = {m}")]
    WildPrime { p: u64, m: u64 },
    #[error("InputNotWeightZero: entry at weight {0}")]
    InputNotWeightZero(i64),
    #[error("SmallPrime: the K-theory tables need p > 3, got {0}")]
    SmallPrime(u64),
    #[error("BadWeight: {0}")]
    BadWeight(String),
}

impl Error {
    /// The bare variant name, used as the error tag on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateName(_) => "DuplicateName",
            Error::OddDegreeNonExterior { .. } => "OddDegreeNonExterior",
            Error::EvenDegreeExterior { .. } => "EvenDegreeExterior",
            Error::MissingCap(_) => "MissingCap",
            Error::BadTruncation { .. } => "BadTruncation",
            Error::BadRootRelation(_) => "BadRootRelation",
            Error::InvalidPrime(_) => "InvalidPrime",
            Error::NotPLocal { .. } => "NotPLocal",
            Error::InvalidWindow(..) => "InvalidWindow",
            Error::InfiniteSlice(_) => "InfiniteSlice",
            Error::WindowMismatch(..) => "WindowMismatch",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::MapError(_) => "MapError",
            Error::Parse(_) => "Parse",
            Error::IncompatibleModulus { .. } => "IncompatibleModulus",
            Error::NonZeroModulus(_) => "NonZeroModulus",
            Error::ZeroDilation => "ZeroDilation",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::NotConcentrated(_) => "NotConcentrated",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::UnsupportedDivisor(_) => "UnsupportedDivisor",
            Error::UnknownPreset(_) => "UnknownPreset",
            Error::UnsupportedPresentation(_) => "UnsupportedPresentation",
            Error::WildPrime { .. } => "WildPrime",
            Error::InputNotWeightZero(_) => "InputNotWeightZero",
            Error::SmallPrime(_) => "SmallPrime",
            Error::BadWeight(_) => "BadWeight",
        }
    }
}
