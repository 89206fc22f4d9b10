//! Error taxonomy shared by every module in the crate.
//!
//! Two broad families matter to callers: *domain* errors (bad input — the
//! requested point sits outside an operation's precondition) and
//! *convergence/internal* errors (a series refused to decay, a continued
//! fraction hit a vanishing denominator, a certificate ansatz failed…).
//! The CLI maps the first family to exit code 2 and the second to 3.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the inputs was violated (e.g. `a <= 0`, a
    /// non-fundamental discriminant, an unsupported exponent `s`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A denominator vanished while evaluating a term or rational function.
    #[error("pole: {0}")]
    Pole(String),

    /// Term magnitudes failed to decay over a 50-term window, or a series
    /// would not drop below its target tolerance within the extension budget.
    #[error("series failed to converge near term {0}")]
    Divergent(usize),

    /// A term carrying a `(-1)^k` factor was evaluated at non-integer `k`
    /// without an explicit parity.
    #[error("(-1)^k factor requires an integer k, got {0}")]
    NonIntegerSignedK(String),

    /// A term transform could not be re-expressed in closed Pochhammer form.
    #[error("not representable: {0}")]
    NotRepresentable(String),

    /// The certificate linear system is inconsistent at the given numerator
    /// degrees: no polynomial of that shape completes the pair.
    #[error("no certificate with numerator degrees ({0}, {1})")]
    NoCertificate(usize, usize),

    /// The certificate linear system has deficient rank; the caller should
    /// raise the degrees or add sample points.
    #[error("underdetermined certificate system: rank {rank} of {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },

    /// Backward or forward continued-fraction evaluation divided by zero.
    #[error("zero denominator at continued-fraction level {0}")]
    ZeroDenominator(usize),

    /// The requested precision is outside an operation's supported range
    /// (e.g. the validation oracle is capped at 200 digits).
    #[error("precision error: {0}")]
    Precision(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that indicate a bad request rather than an internal
    /// convergence problem. Used by the CLI to choose exit codes.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::NonIntegerSignedK(_)
                | Error::NotRepresentable(_)
                | Error::Precision(_)
        )
    }
}
