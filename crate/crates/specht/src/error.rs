use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpechtError {
    #[error("invalid shape: {0}")]
    BadShape(String),
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("generator index out of range: {0}")]
    BadIndex(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rewrite step cap exceeded while reducing {0}")]
    StepCap(String),
    #[error("parse error: {0}")]
    Parse(String),
}
