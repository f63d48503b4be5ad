//! Ornstein–Uhlenbeck autocorrelation kernel and the Gaussian-channel
//! variance β(t) it induces.
//!
//! All dynamics are expressed in units of the environment correlation time
//! t_E: `t̃ = t/t_E`, `λ̃ = λ·t_E`, `δ̃ = δ·t_E`. The unscaled entry points
//! convert and delegate.

use crate::error::{check_param, Result};
use crate::numeric::quadrature::{integrate, QuadConfig};
use crate::numeric::roots::lambert_w0;
use crate::scalar::Real;

/// Physical (unscaled) noise parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuNoiseParams<T> {
    lambda: T,
    delta: T,
    t_env: T,
}

impl<T: Real> OuNoiseParams<T> {
    /// `lambda` is the coupling (1/time), `delta` the detuning (1/time) and
    /// `t_env` the environment correlation time. The detuning enters only
    /// through a cosine, so its sign is dropped.
    pub fn new(lambda: T, delta: T, t_env: T) -> Result<Self> {
        check_param(
            "lambda",
            lambda.as_f64(),
            lambda > T::zero() && lambda.is_finite(),
            "must be positive and finite",
        )?;
        check_param("delta", delta.as_f64(), delta.is_finite(), "must be finite")?;
        check_param(
            "t_env",
            t_env.as_f64(),
            t_env > T::zero() && t_env.is_finite(),
            "must be positive and finite",
        )?;
        Ok(Self {
            lambda,
            delta: delta.abs(),
            t_env,
        })
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn delta(&self) -> T {
        self.delta
    }

    pub fn t_env(&self) -> T {
        self.t_env
    }

    /// Dimensionless form `(λ·t_E, δ·t_E)`.
    pub fn rescaled(&self) -> RescaledParams<T> {
        RescaledParams {
            lambda_r: self.lambda * self.t_env,
            delta_r: self.delta * self.t_env,
        }
    }
}

/// Dimensionless noise parameters `(λ̃, δ̃)`; times paired with them are `t̃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RescaledParams<T> {
    lambda_r: T,
    delta_r: T,
}

impl<T: Real> RescaledParams<T> {
    pub fn new(lambda_r: T, delta_r: T) -> Result<Self> {
        check_param(
            "lambda_r",
            lambda_r.as_f64(),
            lambda_r > T::zero() && lambda_r.is_finite(),
            "must be positive and finite",
        )?;
        check_param(
            "delta_r",
            delta_r.as_f64(),
            delta_r.is_finite(),
            "must be finite",
        )?;
        Ok(Self {
            lambda_r,
            delta_r: delta_r.abs(),
        })
    }

    pub fn lambda_r(&self) -> T {
        self.lambda_r
    }

    pub fn delta_r(&self) -> T {
        self.delta_r
    }
}

/// A field autocorrelation `K(t1, t2)`.
pub trait Kernel<T> {
    fn covariance(&self, t1: T, t2: T) -> T;
}

impl<T, F> Kernel<T> for F
where
    F: Fn(T, T) -> T,
{
    fn covariance(&self, t1: T, t2: T) -> T {
        self(t1, t2)
    }
}

/// The exponential OU kernel as a [`Kernel`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OuKernel<T>(pub OuNoiseParams<T>);

impl<T: Real> Kernel<T> for OuKernel<T> {
    fn covariance(&self, t1: T, t2: T) -> T {
        ou_kernel(t1, t2, &self.0)
    }
}

/// `K(t1, t2) = λ/(2 t_E) · exp(−|t1 − t2| / t_E)`.
pub fn ou_kernel<T: Real>(t1: T, t2: T, p: &OuNoiseParams<T>) -> T {
    p.lambda / (T::lit(2.0) * p.t_env) * (-(t1 - t2).abs() / p.t_env).exp()
}

/// Closed-form channel variance in rescaled units:
///
/// ```text
/// β(t̃) = λ̃/(1+δ̃²)² · { t̃ − 1 + δ̃²(t̃+1) + e^{−t̃}[(1−δ̃²) cos δ̃t̃ − 2δ̃ sin δ̃t̃] }
/// ```
///
/// The braces are regrouped as
/// `(1+δ̃²)t̃ + (1−δ̃²)(e^{−t̃}cos δ̃t̃ − 1) − 2δ̃ e^{−t̃} sin δ̃t̃`
/// with `expm1` so that the `O(t̃²)` onset survives cancellation.
/// Intended for `t_r ≥ 0`.
pub fn beta_closed<T: Real>(t_r: T, p: &RescaledParams<T>) -> T {
    let d = p.delta_r;
    let d2 = d * d;
    let one = T::one();
    let two = T::lit(2.0);
    let (s, c) = (d * t_r).sin_cos();
    let half_s = (d * t_r / two).sin();
    let decay = (-t_r).exp();
    // e^{−t}cos(δt) − 1 = expm1(−t)·cos(δt) − 2 sin²(δt/2)
    let cos_term = (-t_r).exp_m1() * c - two * half_s * half_s;
    let braces = (one + d2) * t_r + (one - d2) * cos_term - two * d * decay * s;
    p.lambda_r / ((one + d2) * (one + d2)) * braces
}

/// Exact derivative of [`beta_closed`] with respect to `t̃`:
/// `λ̃/(1+δ̃²) · [1 − e^{−t̃}(cos δ̃t̃ − δ̃ sin δ̃t̃)]`.
pub fn beta_derivative<T: Real>(t_r: T, p: &RescaledParams<T>) -> T {
    let d = p.delta_r;
    let two = T::lit(2.0);
    let (s, c) = (d * t_r).sin_cos();
    let half_s = (d * t_r / two).sin();
    let bracket = -(-t_r).exp_m1() * c + two * half_s * half_s + d * (-t_r).exp() * s;
    p.lambda_r / (T::one() + d * d) * bracket
}

/// Channel variance for physical parameters; identical to
/// `beta_closed(t / t_E, p.rescaled())`.
pub fn beta_unscaled<T: Real>(t: T, p: &OuNoiseParams<T>) -> T {
    beta_closed(t / p.t_env, &p.rescaled())
}

/// Zero-correlation-time limit `β = λ t`.
pub fn markovian_limit_beta<T: Real>(t: T, lambda: T) -> T {
    lambda * t
}

/// Evaluates `β(t) = ∫₀ᵗ∫₀ᵗ cos[(s₁−s₂)δ] K(s₁,s₂) ds₁ ds₂` for an arbitrary
/// symmetric kernel by nested adaptive Gauss–Kronrod quadrature.
///
/// Only the triangle `s₂ ≤ s₁` is integrated and the result doubled, which
/// keeps a diagonal kink of the kernel on the segment boundaries.
pub fn beta_quadrature<T, K>(t: T, kernel: &K, delta: T, tol: T) -> Result<T>
where
    T: Real,
    K: Kernel<T> + ?Sized,
{
    check_param(
        "t",
        t.as_f64(),
        t >= T::zero() && t.is_finite(),
        "must be non-negative and finite",
    )?;
    check_param(
        "tol",
        tol.as_f64(),
        tol > T::zero() && tol <= T::lit(1e-3),
        "must lie in (0, 1e-3]",
    )?;
    if t == T::zero() {
        return Ok(T::zero());
    }
    let inner_cfg = QuadConfig {
        rel_tol: tol / T::lit(10.0),
        abs_tol: T::min_positive_value(),
        ..QuadConfig::default()
    };
    let outer_cfg = QuadConfig {
        rel_tol: tol,
        abs_tol: T::min_positive_value(),
        ..QuadConfig::default()
    };
    let outer = integrate(
        |s1| {
            integrate(
                |s2| Ok(((s1 - s2) * delta).cos() * kernel.covariance(s1, s2)),
                T::zero(),
                s1,
                inner_cfg,
            )
            .map(|r| r.value)
        },
        T::zero(),
        t,
        outer_cfg,
    )?;
    Ok(T::lit(2.0) * outer.value)
}

/// Rescaled detuning above which β(t̃) stops being monotone:
/// `δ̃₀ = (3π/2) / W₀(3π/2) ≈ 3.644`.
pub fn oscillation_threshold<T: Real>() -> T {
    let x = T::lit(1.5) * T::PI();
    x / lambert_w0(x).expect("3π/2 lies in the principal-branch domain")
}
