use thiserror::Error;

use crate::objects::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family} size {size} exceeds the enumeration cap {cap}")]
    SizeLimit {
        family: Family,
        size: usize,
        cap: usize,
    },

    #[error("invalid {kind}: {reason}")]
    InvalidObject { kind: &'static str, reason: String },

    #[error("out of domain: {0}")]
    Domain(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
