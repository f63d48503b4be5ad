//! Qubit dephasing under classical Ornstein–Uhlenbeck noise.
//!
//! The crate computes the Gaussian-channel variance β(t) for an OU field
//! (closed form, quadrature, Monte Carlo), applies the resulting dephasing to
//! Bell-diagonal two-qubit states, tracks their discord and classical
//! correlation through the frozen-discord transition, and evaluates the
//! capacity-based non-Markovianity measure.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the aliases at the
//! crate root fix the scalar to `f64`.

// `!(x <= tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod correlations;
pub mod dephasing_channel;
pub mod error;
pub mod noise_kernel;
pub mod numeric;
pub mod scalar;
pub mod stochastic_oracle;

pub use capacity::{
    binary_entropy, capacity_curve, find_beta_extrema, non_markovianity, quantum_capacity,
    ExtremumKind,
};
pub use correlations::{
    classical_correlation, contour_grid, discord, discord_bruteforce, dynamics_trace, entropy_term,
    mutual_information, transition_time, Regime,
};
pub use dephasing_channel::{
    apply_gaussian_dephasing, apply_local_dephasing, bell_diagonal_matrix, evolve_bell_diagonal,
};
pub use error::{Error, Result};
pub use noise_kernel::{
    beta_closed, beta_derivative, beta_quadrature, beta_unscaled, markovian_limit_beta,
    oscillation_threshold, ou_kernel, Kernel,
};
pub use scalar::Real;
pub use stochastic_oracle::{mc_beta_estimate, sample_ou_path, trapezoid_expectation};

pub type OuNoiseParams = noise_kernel::OuNoiseParams<f64>;
pub type RescaledParams = noise_kernel::RescaledParams<f64>;
pub type OuKernel = noise_kernel::OuKernel<f64>;
pub type DensityMatrix = dephasing_channel::DensityMatrix<f64>;
pub type BellDiagonalState = dephasing_channel::BellDiagonalState<f64>;
pub type DephasingFactor = dephasing_channel::DephasingFactor<f64>;
pub type CorrelationSnapshot = correlations::CorrelationSnapshot<f64>;
pub type TransitionResult = correlations::TransitionResult<f64>;
pub type ContourGrid = correlations::ContourGrid<f64>;
pub type CapacityCurve = capacity::CapacityCurve<f64>;
pub type Extremum = capacity::Extremum<f64>;
pub type ExtremaList = capacity::ExtremaList<f64>;
pub type OuTrajectory = stochastic_oracle::OuTrajectory<f64>;
pub type McEstimate = stochastic_oracle::McEstimate<f64>;
