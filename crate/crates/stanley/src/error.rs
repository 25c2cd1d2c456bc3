use thiserror::Error;

/// Everything that can go wrong in the library surface.
///
/// The CLI maps these onto exit codes: `CapExceeded` becomes exit code 2
/// (infeasible within configured caps), everything else is exit code 1
/// (bad input or an operation outside its domain). Exit code 3 is reserved
/// for verified mathematical violations and never travels as an `Error`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("variable index {var} out of range (ring has {n} variables)")]
    VariableOutOfRange { var: usize, n: usize },

    #[error("zero ideal not allowed: {0}")]
    ZeroIdeal(&'static str),

    #[error("unit ideal not allowed: {0}")]
    UnitIdeal(&'static str),

    #[error("ideal is not generated in a single degree")]
    NotSingleDegree,

    #[error("ideal is not principal")]
    NotPrincipal,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("ideal is not weakly polymatroidal: pair u = {u}, v = {v} fails at variable {t}")]
    NotWeaklyPolymatroidal { u: String, v: String, t: String },

    #[error("infeasible within caps: {0}")]
    CapExceeded(String),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded(_) => 2,
            _ => 1,
        }
    }
}
