use crate::report::CheckReport;

/// Errors produced by constructors, precondition checks, and file parsing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("carrier must contain at least one symbol")]
    EmptyCarrier,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`: names must be nonempty, must not contain ',', and must not be the reserved spelling `ε`")]
    InvalidName(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unknown codomain value `{0}`")]
    UnknownValue(String),
    #[error("letter index {index} out of bounds for alphabet of size {alphabet}")]
    LetterOutOfBounds { index: usize, alphabet: usize },
    #[error("cannot concatenate words over different alphabets ({0} vs {1})")]
    CarrierMismatch(usize, usize),
    #[error("word length {len} exceeds horizon {horizon}")]
    BeyondHorizon { len: usize, horizon: usize },
    #[error("horizon must be at least {min}, got {got}")]
    HorizonTooSmall { got: usize, min: usize },
    #[error("table would hold {entries} entries, above the supported limit of {limit}")]
    TableTooLarge { entries: usize, limit: usize },
    #[error("table has {got} entries but {expected} are required")]
    TableNotTotal { got: usize, expected: usize },
    #[error("table value at {at} lies outside the codomain")]
    ValueOutsideCodomain { at: String },
    #[error("empty word range: min_len {min} exceeds max_len {max}")]
    EmptyWordRange { min: usize, max: usize },
    #[error("codomain does not contain ε")]
    MissingEpsilon,
    #[error("codomain is not the carrier extended by ε")]
    NotAnOperation,
    #[error("expected {role} to map {expected}, got a map on different sets")]
    MapShapeMismatch { role: &'static str, expected: &'static str },
    #[error("range of `{function}` is not contained in the domain of `{target}`: value `{value}` is missing")]
    RangeNotCovered {
        function: &'static str,
        target: &'static str,
        value: String,
    },
    #[error("range inclusion fails: value `{value}` of {of} is outside the range of {outside}")]
    RangeInclusion {
        value: String,
        of: &'static str,
        outside: &'static str,
    },
    #[error("`{0}` is not a quasi-inverse of the given function")]
    NotAQuasiInverse(String),
    #[error("precondition `{property}` fails")]
    PreconditionFailed { property: String, report: Box<CheckReport> },
    #[error("extension conditions fail: {summary}")]
    ExtensionConditionsFailed { summary: String },
    #[error("value `{0}` collides with the value of a nonempty word")]
    StandardnessCollision(String),
    #[error("`{function}` is not one-to-one on {on}: `{a}` and `{b}` collide")]
    NotOneToOne {
        function: &'static str,
        on: &'static str,
        a: String,
        b: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("non-finite input value {0}")]
    NonFiniteInput(f64),
    #[error("family `{0}` has no witness-pair generator")]
    NoWitnessGenerator(String),
    #[error("family `{0}` is not registered as factorable: {1}")]
    UnsupportedFactorization(String, String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
