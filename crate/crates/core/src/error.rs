use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GinError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("structural violation: {0}")]
    Structure(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("index {index} out of range [0, {k})")]
    IndexOutOfRange { index: i64, k: i64 },

    #[error("closed-form coverage error: {0}")]
    Coverage(String),

    #[error("enumeration bound exceeded: {what} = {value} > {limit}")]
    BoundExceeded {
        what: &'static str,
        value: i64,
        limit: i64,
    },

    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("forms are not a regular sequence after {attempts} attempts")]
    Regularity { attempts: u32 },

    #[error("change-of-coordinates matrix is singular")]
    SingularMatrix,

    #[error("Groebner basis exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("initial ideal differs across seeds after {attempts} attempts")]
    Instability { attempts: u32 },

    #[error("initial ideal has unexpected shape: {0}")]
    Shape(String),

    #[error("parameters outside the desk-scale bounds: {0}")]
    OutOfScope(String),
}

pub type Result<T, E = GinError> = std::result::Result<T, E>;
