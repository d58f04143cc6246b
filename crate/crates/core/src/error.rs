use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix shapes {left:?} and {right:?} cannot be composed")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("d_out * d_in is not zero")]
    NotAComplex,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("element is not homogeneous: found bidegrees {0:?} and {1:?}")]
    NotHomogeneous((usize, usize), (usize, usize)),
    #[error("complex on {sub} vertices is not a subcomplex of a complex on {sup} vertices")]
    GroundSetMismatch { sub: usize, sup: usize },
    #[error("face {0} of the smaller complex is not a face of the larger one")]
    NotASubcomplex(String),
    #[error("cochains live on different ground sets ({0} and {1})")]
    MismatchedM(usize, usize),
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("product of representatives is not a cocycle in bidegree (-{i},{j2})")]
    ProductNotCocycle { i: usize, j2: usize },
    #[error("product cocycle does not reduce to its coordinates in bidegree (-{i},{j2})")]
    ReductionFailed { i: usize, j2: usize },
    #[error("no class with index {0} in the requested bidegree")]
    NoSuchClass(usize),
}
