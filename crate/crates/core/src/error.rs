use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    ZeroRank(u32),

    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("charges must be nonempty and weakly increasing: {0:?}")]
    BadCharges(Vec<i64>),

    #[error("charges {charges:?} span more than n+1 = {modulus}; no chain-ordered tuple exists")]
    ChargeSpread { charges: Vec<i64>, modulus: i64 },

    #[error("{0} is not n-reduced for n = {1}")]
    NotReduced(String, u32),

    #[error("residue {residue} out of range for n = {n}")]
    ResidueOutOfRange { residue: u32, n: u32 },

    #[error("multiset sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("charge mismatch: {0:?} vs {1:?}")]
    ChargeMismatch(Vec<i64>, Vec<i64>),

    #[error("operation requires the cyclic quiver")]
    NeedsCyclic,

    #[error("segment with lo {lo} > hi {hi}")]
    BadSegment { lo: i64, hi: i64 },

    #[error("not a Maya diagram: {0}")]
    BadMaya(String),

    #[error("tuple is not chain-ordered")]
    NotChainOrdered,

    #[error("n-reduction left an undecomposable multiset: {0}")]
    ReductionFailed(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
