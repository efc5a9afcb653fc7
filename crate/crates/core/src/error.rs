use alloc::string::String;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live over different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("operands live in different polynomial rings")]
    MixedRings,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("ring has no variables")]
    NoVariables,
    #[error("elimination block of size {block} is invalid for {vars} variables")]
    BadEliminationBlock { block: usize, vars: usize },
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("invalid variable set for elimination")]
    BadVariableSet,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("quotient is not of finite length (ideal is not primary to the origin)")]
    NotMPrimary,
    #[error("first ideal is not contained in the second")]
    NotContained,
    #[error("generator is not homogeneous")]
    NotHomogeneous,
    #[error("generators must vanish at the origin")]
    NotAtOrigin,
    #[error("length of the quotient at k = {0} is infinite")]
    InfiniteLength(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;
