use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not agree.
    DimensionMismatch {
        op: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// A system configuration violates one of its invariants.
    InvalidConfig(&'static str),
    /// The reference combined channel has zero energy, so NMSE is undefined.
    ZeroReference,
    /// A true channel group block is all zeros and cannot anchor an alignment.
    ZeroGroup(usize),
    /// The estimate of a group has no component along the true factor.
    UnalignableGroup(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                op,
                expected,
                found,
            } => write!(
                f,
                "{op}: dimension mismatch, expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::ZeroReference => f.write_str("reference channel has zero norm"),
            Error::ZeroGroup(q) => write!(f, "true channel group {q} is zero"),
            Error::UnalignableGroup(q) => {
                write!(f, "estimate for group {q} is orthogonal to the true factor")
            }
        }
    }
}

impl core::error::Error for Error {}
