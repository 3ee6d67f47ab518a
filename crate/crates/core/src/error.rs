use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by matrix construction, conversion and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation would allocate more than the configured budget.
    ///
    /// Dense results are capped at [`MAX_DENSE_ENTRIES`](crate::MAX_DENSE_ENTRIES)
    /// entries; logical-form conversions are capped by a node count.
    SizeLimit {
        op: &'static str,
        detail: String,
    },
    /// Operand shapes are incompatible for the requested operation.
    DimMismatch {
        op: &'static str,
        detail: String,
    },
    /// An index (variable, node, or matrix column) is outside its valid range.
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    /// Text could not be parsed; `pos` is a 1-based character position
    /// within the parsed line or document.
    Parse {
        pos: usize,
        msg: String,
    },
}

impl Error {
    /// True for errors caused by the size caps rather than by bad input.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimit { op, detail } => write!(f, "size limit exceeded in {op}: {detail}"),
            Error::DimMismatch { op, detail } => write!(f, "dimension mismatch in {op}: {detail}"),
            Error::IndexOutOfRange { what, got, limit } => {
                write!(f, "{what} {got} out of range 1..={limit}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
