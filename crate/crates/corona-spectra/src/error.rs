//! Crate-wide error type.
//!
//! Every fallible operation in the crate funnels into [`Error`]. The variants
//! are grouped roughly by who is at fault: malformed input (`InvalidGraph`,
//! `Parse`, `Io`, `InvalidOperands`), preconditions the caller can check
//! (`NotRegular`, `Disconnected`, `MixedIsolatedVertices`,
//! `ClosedFormInapplicable`, `CoronalPole`), and internal checks that should
//! never fire on a correct build (`NonrealRoot`, `Inconsistent`).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structural validation of a vertex count / edge list failed.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// An edge-list text could not be parsed. `line` is 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// The operand triple violates the structural requirements of the corona
    /// constructions (first operand connected with >= 2 vertices, >= 1 edge).
    #[error("invalid corona operands: {0}")]
    InvalidOperands(String),

    /// An operation that needs a regular graph was given an irregular one.
    #[error("not regular: {0}")]
    NotRegular(String),

    /// An operation that needs a connected graph was given a disconnected one.
    #[error("not connected: {0}")]
    Disconnected(String),

    /// The normalized Laplacian is undefined when isolated and non-isolated
    /// vertices coexist (no consistent `D^{-1/2}` scaling exists).
    #[error("normalized Laplacian undefined: graph mixes isolated and non-isolated vertices")]
    MixedIsolatedVertices,

    /// The closed-form spectrum machinery does not cover these operands.
    #[error("closed form inapplicable: {0}")]
    ClosedFormInapplicable(String),

    /// A coronal was evaluated at its pole λ = t.
    #[error("coronal pole: evaluation point coincides with the row-sum value {t}")]
    CoronalPole { t: f64 },

    /// A factor polynomial produced a root too far from the real line.
    #[error("nonreal polynomial root: |imaginary part| {imag:.3e} exceeds tolerance {tol:.3e}")]
    NonrealRoot { imag: f64, tol: f64 },

    /// An internal cross-check failed (eigenvalue bookkeeping, method
    /// disagreement beyond tolerance, and similar).
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
