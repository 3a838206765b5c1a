use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),
    #[error("group size bound exceeded ({0} elements)")]
    SizeBound(usize),
    #[error("invalid generator label: {0}")]
    InvalidLabel(String),
    #[error("invalid bipartition label: {0}")]
    BadBipartition(String),
    #[error("degenerate type-D label (equal components): {0}")]
    DegenerateDLabel(String),
    #[error("trace is not a polynomial: {0}")]
    NonPolynomialTrace(String),
    #[error("class tables differ")]
    TableMismatch,
    #[error("unknown class label: {0}")]
    UnknownClass(String),
    #[error("linear character is not constant on a coset")]
    NotCosetConstant,
    #[error("character is not constant on the F-conjugacy classes")]
    NotFClassConstant,
    #[error("singular Gram matrix")]
    SingularGram,
    #[error("function outside the declared span")]
    NotInSpan,
    #[error("wrong case for this operation: {0}")]
    WrongCase(String),
    #[error("unknown family: {0}")]
    UnknownFamily(usize),
    #[error("signs not yet determined")]
    SignsUnset,
    #[error("missing record for {0}")]
    MissingRecord(String),
    #[error("inconsistent instance data: {0}")]
    InconsistentInstance(String),
    #[error("invalid q: {0}")]
    InvalidQ(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("q=1 specialization disagrees with the group character: {0}")]
    SpecializationMismatch(String),
    #[error("constraint unsatisfiable: {0}")]
    Unsatisfiable(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}
