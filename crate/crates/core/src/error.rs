use crate::rootsys::Family;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid type {family:?}{rank}: {reason}")]
    InvalidType {
        family: Family,
        rank: usize,
        reason: String,
    },

    #[error("{0:?} is not a root of the system")]
    NotARoot(Vec<i64>),

    #[error("subset is linearly dependent")]
    LinearlyDependent,

    #[error("prime {p} is bad for this type (bad primes: {bad:?})")]
    BadPrime { p: u64, bad: Vec<u64> },

    #[error("parameter not realizable over F_{p}: needs {congruence}")]
    NeedsLargerPrime { p: u64, congruence: String },

    #[error("invalid partition {parts:?} for family {family:?}: {reason}")]
    InvalidPartition {
        family: Family,
        parts: Vec<usize>,
        reason: String,
    },

    #[error("matrix is not in the group: {0}")]
    NotInGroup(String),

    #[error("extracted permutation is outside the embedded Weyl group")]
    CellOutsideWeylGroup,

    #[error("group order {order} exceeds the enumeration threshold {threshold}")]
    SizeThreshold { order: u128, threshold: u128 },

    #[error("no involution with length + rank defect = {0} exists; certification failed")]
    CertificationFailure(usize),

    #[error("stabilizer search not computed: {0}")]
    NotComputed(String),
}
