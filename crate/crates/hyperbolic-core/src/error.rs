use thiserror::Error;

/// Errors raised by geometric constructions and evaluations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Input lies outside the mathematical domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// Quadrilateral data collapses: coincident vertices or a vertex image
    /// escaping to infinity.
    #[error("degenerate quadrilateral: {0}")]
    DegenerateQuadrilateral(String),
    /// Vertices fail the required cyclic arrangement on the ideal boundary.
    #[error("vertices not in circular order: {0}")]
    NotCircularlyOrdered(String),
    /// Geodesics share an ideal endpoint or cross each other.
    #[error("not disjoint: {0}")]
    NotDisjoint(String),
}

impl CoreError {
    pub(crate) fn domain(msg: &str) -> Self {
        CoreError::Domain(msg.to_string())
    }
}
