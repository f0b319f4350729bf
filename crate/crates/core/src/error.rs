use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Zero-length input where at least one element is required.
    Empty,
    DuplicateValue(usize),
    OutOfRange {
        value: i64,
        n: usize,
    },
    Parse(String),
    NotAPartition,
    Unbalanced,
    BelowAxis {
        step: usize,
    },
    Not321Avoiding,
    Not132Avoiding,
    DoesNotFitStaircase,
    MalformedMinima(&'static str),
    Unfillable,
    BadK(usize),
    BadS(usize),
    PreconditionViolated(&'static str),
    SizeTooLarge {
        n: usize,
        cap: usize,
    },
    BadArgs(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => write!(f, "empty input"),
            Error::DuplicateValue(v) => write!(f, "value {v} occurs more than once"),
            Error::OutOfRange { value, n } => write!(f, "value {value} is outside 1..={n}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotAPartition => write!(f, "parts are not weakly decreasing"),
            Error::Unbalanced => write!(f, "path has unequal numbers of up and down steps"),
            Error::BelowAxis { step } => write!(f, "path falls below the axis at step {step}"),
            Error::Not321Avoiding => write!(f, "permutation contains the pattern 321"),
            Error::Not132Avoiding => write!(f, "permutation contains the pattern 132"),
            Error::DoesNotFitStaircase => write!(f, "partition does not fit in the staircase"),
            Error::MalformedMinima(why) => write!(f, "malformed left-to-right minima: {why}"),
            Error::Unfillable => write!(
                f,
                "left-to-right minima cannot be completed to a permutation"
            ),
            Error::BadK(k) => write!(f, "pattern length k={k} is not allowed here"),
            Error::BadS(s) => write!(f, "shift s={s} is not allowed here"),
            Error::PreconditionViolated(why) => write!(f, "precondition violated: {why}"),
            Error::SizeTooLarge { n, cap } => write!(f, "n={n} exceeds the enumeration cap {cap}"),
            Error::BadArgs(why) => write!(f, "bad arguments: {why}"),
        }
    }
}

impl core::error::Error for Error {}
