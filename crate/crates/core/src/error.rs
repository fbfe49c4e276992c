use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant has a stable kebab-case name (see [`Error::name`]) which the
/// command-line front end prints next to the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    InvalidParameter(String),
    #[error("enumeration would produce {count} entries (limit {limit})")]
    EnumerationTooLarge { count: String, limit: u64 },
    #[error("{0}")]
    BoundExceeded(String),
    #[error("operands live in different rings")]
    IncompatibleRing,
    #[error("variable `{0}` has no image")]
    UnmappedVariable(String),
    #[error("negative power of `{0}` requires an invertible monomial image")]
    NonInvertibleImage(String),
    #[error("negative exponent on non-Laurent variable `{0}`")]
    NegativeExponent(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("index overflow: `{variable}` needs d_max >= {needed}")]
    SpecTooSmall { variable: String, needed: i64 },
    #[error("{0}")]
    WrongPresentation(String),
    #[error("unknown character `{0}`")]
    UnknownCharacter(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    NotInDomain(String),
    #[error("{0}")]
    WrongClassKind(String),
    #[error("invalid geometric class: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error("{0}")]
    NotHomogeneous(String),
    #[error("frame has {count} monomials (cap {cap}); shrink the window")]
    WindowTooLarge { count: u128, cap: u128 },
    #[error("product {product} has term `{term}` outside the truncation window; widen the e-range")]
    WindowEscape { product: String, term: String },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("{0}")]
    Json(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::EnumerationTooLarge { .. } => "enumeration-too-large",
            Error::BoundExceeded(_) => "bound-exceeded",
            Error::IncompatibleRing => "incompatible-ring",
            Error::UnmappedVariable(_) => "unmapped-variable",
            Error::NonInvertibleImage(_) => "non-invertible-image",
            Error::NegativeExponent(_) => "negative-exponent",
            Error::InvalidInput(_) => "invalid-input",
            Error::SpecTooSmall { .. } => "spec-too-small",
            Error::WrongPresentation(_) => "wrong-presentation",
            Error::UnknownCharacter(_) => "unknown-character",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::Syntax { .. } => "syntax-error",
            Error::NotInDomain(_) => "not-in-domain",
            Error::WrongClassKind(_) => "wrong-class-kind",
            Error::Validation(_) => "validation-failed",
            Error::NotHomogeneous(_) => "not-homogeneous",
            Error::WindowTooLarge { .. } => "window-too-large",
            Error::WindowEscape { .. } => "window-escape",
            Error::Overflow(_) => "overflow",
            Error::Json(_) => "json-error",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
