use thiserror::Error;

/// Malformed partition or restriction text/values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("not weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error("part {0} is too large")]
    PartTooLarge(String),
    #[error("invalid restriction: {0}")]
    BadSpec(String),
    #[error("invalid strip record: {0}")]
    BadRecord(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
    #[error("factor monomial has degree zero")]
    ZeroDegreeMonomial,
    #[error("malformed series JSON: {0}")]
    Json(String),
    #[error("expected {expected} variables, found {found}")]
    VarsMismatch { expected: u8, found: u8 },
    #[error("non-canonical order")]
    NonCanonicalOrder,
    #[error("zero coefficient stored")]
    ZeroCoefficient,
    #[error("term of degree {degree} exceeds truncation {truncation}")]
    DegreeExceedsTruncation { degree: u32, truncation: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("partition is not in the gap class for k={0}")]
    NotInGapClass(u32),
    #[error("parts do not share a residue modulo {0}")]
    ResidueViolation(u32),
    #[error("part {part} is not congruent to {residue} mod {modulus}")]
    PartOutsideClass {
        part: u32,
        residue: u32,
        modulus: u32,
    },
    #[error("gap must be positive")]
    ZeroGap,
    #[error("invalid block ({top},{bottom})")]
    InvalidBlock { top: u32, bottom: u32 },
    #[error("blocks are not stackable at position {0}")]
    NotStackable(usize),
    #[error("two Type II blocks with top length {0}")]
    DuplicateTypeII(u32),
    #[error("strip heights must be odd and positive, got {0}")]
    InvalidHeight(u32),
    #[error("partition still has a removable strip for k={0}")]
    NotStripped(u32),
    #[error("partition is not in the restricted class {0}")]
    NotRestricted(String),
    #[error("part {part} of nu: {reason}")]
    InvalidNu { part: u32, reason: String },
}
