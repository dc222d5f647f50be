use thiserror::Error;

/// Everything that can go wrong while building fields, codes and reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {p} is not prime")]
    CompositeP { p: u64 },
    #[error("characteristic {p} is below 7; all distance formulas assume p >= 7")]
    PTooSmall { p: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{what} does not fit in the native integer width")]
    Overflow { what: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("5 divides q = {q}")]
    FiveDividesQ { q: u64 },
    #[error("exponent {value} of {label} is outside [0, {max}]")]
    ExponentOutOfRange { label: String, value: u64, max: u64 },
    #[error("exponent for factor {label} is missing")]
    MissingLabel { label: String },
    #[error("factor {label} does not occur in this factorization")]
    UnknownLabel { label: String },
    #[error("expected {expected} exponents, got {got}")]
    ExponentCount { expected: usize, got: usize },
    #[error("s must be at least 1")]
    ZeroS,
    #[error("t = {t} is outside [0, {max}]")]
    TOutOfRange { t: u64, max: u64 },
    #[error("l = {l} is outside [0, {max}]")]
    LOutOfRange { l: u64, max: u64 },
    #[error("the component code is the zero code of length 5")]
    ZeroComponent,
    #[error("weight enumerator sums to {total}, expected q^k = {expected}")]
    InconsistentEnumerator { total: String, expected: String },
    #[error("a count does not fit in 128 bits")]
    CountOverflow,
    #[error("work of {needed} exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("codes belong to different families (field or s differ)")]
    ContextMismatch,
    #[error("the zero code has no minimum distance")]
    ZeroCodeHasNoDistance,
    #[error("a_l + a_r = {sum} must be below n = {n}")]
    ToleranceTooLarge { sum: u64, n: u64 },
    #[error("quantum dimension would be negative ({k})")]
    NegativeK { k: i64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name, used in structured CLI errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CompositeP { .. } => "CompositeP",
            Error::PTooSmall { .. } => "PTooSmall",
            Error::ZeroDegree => "ZeroDegree",
            Error::Overflow { .. } => "Overflow",
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::FiveDividesQ { .. } => "FiveDividesQ",
            Error::ExponentOutOfRange { .. } => "ExponentOutOfRange",
            Error::MissingLabel { .. } => "MissingLabel",
            Error::UnknownLabel { .. } => "UnknownLabel",
            Error::ExponentCount { .. } => "ExponentCount",
            Error::ZeroS => "ZeroS",
            Error::TOutOfRange { .. } => "TOutOfRange",
            Error::LOutOfRange { .. } => "LOutOfRange",
            Error::ZeroComponent => "ZeroComponent",
            Error::InconsistentEnumerator { .. } => "InconsistentEnumerator",
            Error::CountOverflow => "CountOverflow",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::ContextMismatch => "ContextMismatch",
            Error::ZeroCodeHasNoDistance => "ZeroCodeHasNoDistance",
            Error::ToleranceTooLarge { .. } => "ToleranceTooLarge",
            Error::NegativeK { .. } => "NegativeK",
            Error::Invalid(_) => "Invalid",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
