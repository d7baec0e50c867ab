use thiserror::Error;

use crate::segment::Segment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("invalid segment [{b},{e}]: begin exceeds end")]
    ReversedSegment { b: i64, e: i64 },

    #[error("invalid line offset {0}: expected a reduced fraction in [0,1)")]
    InvalidOffset(String),

    #[error("operation requires a nonempty multisegment")]
    EmptyInput,

    #[error("segment {0} is not present in the multisegment")]
    AbsentSegment(Segment),

    #[error("{0} is not a ladder")]
    NotLadder(String),

    #[error("{0} is not a Speh multisegment")]
    NotSpeh(String),

    #[error("unsupported query: {0}")]
    Unsupported(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("complementary-series exponent {0} must lie strictly between 0 and 1/2")]
    InvalidExponent(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
