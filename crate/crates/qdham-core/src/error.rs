use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph6 error at byte {offset}: {msg}")]
    Graph6 { msg: String, offset: usize },

    #[error("expression error at byte {offset}: {msg}")]
    Expr { msg: String, offset: usize },

    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    #[error("{what}: n = {n} exceeds the limit {limit}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error(
        "power iteration did not converge after {iterations} iterations \
         (best rho = {best_rho}, residual = {residual})"
    )]
    NoConvergence {
        iterations: usize,
        best_rho: f64,
        residual: f64,
    },

    #[error(
        "partition is not distance-equitable: vertices {u} and {v} of class {class_u} \
         have different distance sums to class {class_v}"
    )]
    NonEquitable {
        class_u: usize,
        class_v: usize,
        u: usize,
        v: usize,
    },

    #[error("root bracketing failed: {0}")]
    Bracketing(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
