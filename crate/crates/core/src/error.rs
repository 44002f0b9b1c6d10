use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds cap of {cap}")]
    OrderCapExceeded { cap: u64 },

    #[error("enumeration would need {needed} points, cap is {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u64 },

    #[error("not a subgroup of the acting group")]
    NotASubgroup,

    #[error("element does not belong to the group")]
    ElementNotInGroup,

    #[error("G-sets live over different groups")]
    GroupMismatch,

    #[error("operands live over different subgroup lattices")]
    LatticeMismatch,

    #[error("marks vector is not integral at class {class}")]
    NotIntegral { class: usize },

    #[error("levels are not related by inclusion")]
    LevelMismatch,

    #[error("element is not in the level carrier")]
    ElementNotInCarrier,

    #[error("norm is only defined on elements with nonnegative coefficients")]
    NormOfVirtual,

    #[error("action table is not a group action: {0}")]
    InvalidAction(String),

    #[error("coefficient out of supported range")]
    CoefficientOverflow,

    #[error("parse error: {0}")]
    Parse(String),
}
