//! Quantum capacity of the single-qubit dephasing channel and the
//! capacity-based non-Markovianity measure `N_Q`: the total rise of the
//! capacity over time.

use crate::correlations::scan_step;
use crate::dephasing_channel::DephasingFactor;
use crate::error::{check_param, Error, Result};
use crate::noise_kernel::{beta_closed, beta_derivative, RescaledParams};
use crate::numeric::roots::{bisect, scan_sign_changes};
use crate::scalar::Real;

/// Integration horizon (in `t̃`) used when none is given.
pub const DEFAULT_HORIZON: f64 = 60.0;

/// Envelope level below which the extremum scan stops.
pub const DEFAULT_AMP_TOL: f64 = 1e-12;

/// `H₂(p) = −p log₂p − (1−p) log₂(1−p)`.
pub fn binary_entropy<T: Real>(p: T) -> Result<T> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(Error::Domain {
            function: "binary_entropy",
            value: p.as_f64(),
        });
    }
    let h = |x: T| {
        if x > T::zero() {
            -x * x.log2()
        } else {
            T::zero()
        }
    };
    Ok(h(p) + h(T::one() - p))
}

/// `Q^D = 1 − H₂((1 + e^{−2Λ})/2)`.
pub fn quantum_capacity<T: Real>(lambda: DephasingFactor<T>) -> T {
    let x = (-T::lit(2.0) * lambda.value()).exp();
    let p = (T::one() + x) / T::lit(2.0);
    T::one() - binary_entropy(p).expect("(1 + e^{-2Λ})/2 lies in [1/2, 1]")
}

/// Capacity at rescaled time `t̃`, with `Λ = β/2`.
pub fn capacity_at<T: Real>(t_r: T, p: &RescaledParams<T>) -> Result<T> {
    Ok(quantum_capacity(DephasingFactor::from_beta(beta_closed(
        t_r, p,
    ))?))
}

/// Sampled capacity `Q^D(t̃)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityCurve<T> {
    pub times: Vec<T>,
    pub values: Vec<T>,
}

pub fn capacity_curve<T: Real>(p: &RescaledParams<T>, times: &[T]) -> Result<CapacityCurve<T>> {
    if let Some(&t0) = times.first() {
        check_param(
            "times",
            t0.as_f64(),
            t0 >= T::zero(),
            "must be non-negative",
        )?;
    }
    for w in times.windows(2) {
        check_param(
            "times",
            w[1].as_f64(),
            w[1] > w[0],
            "must be strictly increasing",
        )?;
    }
    let values = times
        .iter()
        .map(|&t| capacity_at(t, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(CapacityCurve {
        times: times.to_vec(),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Minimum,
    Maximum,
}

/// A local extremum of β (a capacity extremum of the opposite kind).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum<T> {
    pub time: T,
    pub kind: ExtremumKind,
    pub beta: T,
}

pub type ExtremaList<T> = Vec<Extremum<T>>;

/// Upper bound on the oscillatory part of β' past `t̃`, as used to truncate
/// the scan: `λ̃ e^{−t̃} √(1+δ̃²) / (1+δ̃²)²`.
pub fn oscillation_envelope<T: Real>(t_r: T, p: &RescaledParams<T>) -> T {
    let s = T::one() + p.delta_r() * p.delta_r();
    p.lambda_r() * (-t_r).exp() * s.sqrt() / (s * s)
}

/// Locates every sign change of `dβ/dt̃` on `(0, horizon]`.
///
/// Brackets come from a grid of step `π/(16·max(δ̃,1))`, each refined by
/// bisection to floating-point resolution. The scan ends early once
/// [`oscillation_envelope`] drops below `amp_tol`.
pub fn find_beta_extrema<T: Real>(
    p: &RescaledParams<T>,
    horizon: T,
    amp_tol: T,
) -> Result<ExtremaList<T>> {
    check_param(
        "horizon",
        horizon.as_f64(),
        horizon > T::zero() && horizon.is_finite(),
        "must be positive and finite",
    )?;
    check_param(
        "amp_tol",
        amp_tol.as_f64(),
        amp_tol > T::zero(),
        "must be positive",
    )?;
    let derivative = |t: T| beta_derivative(t, p);
    let brackets = scan_sign_changes(
        derivative,
        T::zero(),
        horizon,
        scan_step(p.delta_r()),
        |t| oscillation_envelope(t, p) >= amp_tol,
    );
    Ok(brackets
        .into_iter()
        .map(|b| {
            let time = bisect(derivative, b, T::zero());
            let kind = if b.f_lo >= T::zero() {
                ExtremumKind::Maximum
            } else {
                ExtremumKind::Minimum
            };
            Extremum {
                time,
                kind,
                beta: beta_closed(time, p),
            }
        })
        .collect())
}

/// `N_Q`: sum of capacity gains over every interval on which β decreases,
/// i.e. from each maximum of β to the following minimum.
pub fn non_markovianity<T: Real>(p: &RescaledParams<T>, horizon: T) -> Result<T> {
    let extrema = find_beta_extrema(p, horizon, T::lit(DEFAULT_AMP_TOL))?;
    non_markovianity_from_extrema(p, &extrema, horizon)
}

/// [`non_markovianity`] for a precomputed extremum list. A trailing maximum
/// without a following minimum is closed at `horizon`.
pub fn non_markovianity_from_extrema<T: Real>(
    p: &RescaledParams<T>,
    extrema: &[Extremum<T>],
    horizon: T,
) -> Result<T> {
    let mut total = T::zero();
    for (i, e) in extrema.iter().enumerate() {
        if e.kind != ExtremumKind::Maximum {
            continue;
        }
        let end = extrema.get(i + 1).map_or(horizon, |next| next.time);
        let gain = capacity_at(end, p)? - capacity_at(e.time, p)?;
        total += gain.max(T::zero());
    }
    Ok(total)
}
