use thiserror::Error;

/// Failures reported by the library. Numeric payloads are carried as `f64`
/// regardless of the scalar type the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{name}` = {value} out of range: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("argument {value} outside the domain of {function}")]
    Domain { function: &'static str, value: f64 },

    #[error("density matrix invariant violated: {0}")]
    InvariantViolation(String),

    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {estimate}, error {error})")]
    QuadratureNonConvergence {
        subdivisions: usize,
        estimate: f64,
        error: f64,
    },

    #[error("no crossing of beta = {target} found before horizon {horizon} (largest beta attained {max_beta})")]
    HorizonTooSmall {
        horizon: f64,
        target: f64,
        max_beta: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_param(
    name: &'static str,
    value: f64,
    ok: bool,
    reason: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason,
        })
    }
}
