use alloc::string::String;

use crate::perm::Permutation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse permutation `{input}`: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{0} contains the pattern 312")]
    Contains312(Permutation),
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
}
