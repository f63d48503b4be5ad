//! Mutual information, classical correlation and discord of the dephased
//! Bell-diagonal family, plus the classical-to-quantum decoherence
//! transition time.
//!
//! All quantities are in entropic units (base-2 logarithms).

mod bruteforce;

pub use bruteforce::{discord_bruteforce, von_neumann_entropy};

use rayon::prelude::*;

use crate::dephasing_channel::DephasingFactor;
use crate::error::{check_param, Error, Result};
use crate::noise_kernel::{beta_closed, RescaledParams};
use crate::numeric::roots::{bisect, scan_sign_changes};
use crate::scalar::Real;

/// `x·log₂x` with the convention `0·log₂0 = 0`.
pub(crate) fn xlog2x<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x * x.log2()
    }
}

/// `g(x) = (1−x)/2·log₂(1−x) + (1+x)/2·log₂(1+x)` on `[0, 1]`.
pub fn entropy_term<T: Real>(x: T) -> Result<T> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::Domain {
            function: "entropy_term",
            value: x.as_f64(),
        });
    }
    let half = T::lit(0.5);
    let up = (T::one() + x) * half * x.ln_1p();
    let down = if x == T::one() {
        T::zero()
    } else {
        (T::one() - x) * half * (-x).ln_1p()
    };
    Ok((up + down) / T::LN_2())
}

fn check_c<T: Real>(c: T) -> Result<()> {
    check_param("c", c.as_f64(), c.abs() < T::one(), "|c| must be < 1")
}

/// `I = g(|c|) + g(e^{−Λ})`.
pub fn mutual_information<T: Real>(c: T, lambda: DephasingFactor<T>) -> Result<T> {
    check_c(c)?;
    Ok(entropy_term(c.abs())? + entropy_term(lambda.coherence())?)
}

/// `C = g(χ)` with `χ = max{e^{−Λ}, |c|}`.
pub fn classical_correlation<T: Real>(c: T, lambda: DephasingFactor<T>) -> Result<T> {
    check_c(c)?;
    entropy_term(lambda.coherence().max(c.abs()))
}

/// `Q = I − C`, evaluated as `g(min{e^{−Λ}, |c|})` so that the frozen plateau
/// is exactly `g(|c|)`.
pub fn discord<T: Real>(c: T, lambda: DephasingFactor<T>) -> Result<T> {
    check_c(c)?;
    entropy_term(lambda.coherence().min(c.abs()))
}

/// Correlations at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationSnapshot<T> {
    pub t_r: T,
    pub mutual_information: T,
    pub classical: T,
    pub discord: T,
}

impl<T: Real> CorrelationSnapshot<T> {
    pub fn at(c: T, lambda: DephasingFactor<T>, t_r: T) -> Result<Self> {
        Ok(Self {
            t_r,
            mutual_information: mutual_information(c, lambda)?,
            classical: classical_correlation(c, lambda)?,
            discord: discord(c, lambda)?,
        })
    }
}

/// Crossings of `e^{−β(t̃)/2} = c` inside `(0, horizon]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionResult<T> {
    pub first_crossing: T,
    pub all_crossings: Vec<T>,
    pub horizon: T,
}

/// Grid step that samples an oscillation period `2π/δ̃` at least 32 times.
pub(crate) fn scan_step<T: Real>(delta_r: T) -> T {
    T::PI() / (T::lit(16.0) * delta_r.max(T::one()))
}

/// Solves `β(t̃) = −2 ln c` on `(0, horizon]` by scanning for sign changes and
/// bisecting each to floating-point resolution.
pub fn transition_time<T: Real>(
    c: T,
    p: &RescaledParams<T>,
    horizon: T,
) -> Result<TransitionResult<T>> {
    check_param(
        "c",
        c.as_f64(),
        c > T::zero() && c < T::one(),
        "must lie in (0, 1)",
    )?;
    check_param(
        "horizon",
        horizon.as_f64(),
        horizon > T::zero() && horizon.is_finite(),
        "must be positive and finite",
    )?;
    let target = -T::lit(2.0) * c.ln();
    let mut max_beta = T::zero();
    let residual = |t: T| beta_closed(t, p) - target;
    let brackets = scan_sign_changes(
        |t| {
            let b = beta_closed(t, p);
            max_beta = max_beta.max(b);
            b - target
        },
        T::zero(),
        horizon,
        scan_step(p.delta_r()),
        |_| true,
    );
    let all_crossings: Vec<T> = brackets
        .into_iter()
        .map(|b| bisect(residual, b, T::zero()))
        .collect();
    match all_crossings.first() {
        Some(&first_crossing) => Ok(TransitionResult {
            first_crossing,
            all_crossings,
            horizon,
        }),
        None => Err(Error::HorizonTooSmall {
            horizon: horizon.as_f64(),
            target: target.as_f64(),
            max_beta: max_beta.as_f64(),
        }),
    }
}

fn check_times<T: Real>(times: &[T]) -> Result<()> {
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
            w[1] > w[0] && w[1].is_finite(),
            "must be strictly increasing and finite",
        )?;
    }
    Ok(())
}

/// Correlation dynamics `(t̃, I, C, Q)` with `Λ = β(t̃)/2`.
pub fn dynamics_trace<T: Real>(
    c: T,
    p: &RescaledParams<T>,
    times: &[T],
) -> Result<Vec<CorrelationSnapshot<T>>> {
    check_c(c)?;
    check_times(times)?;
    times
        .iter()
        .map(|&t| CorrelationSnapshot::at(c, DephasingFactor::from_beta(beta_closed(t, p))?, t))
        .collect()
}

/// Which correlation is decaying at a point of the `(δ̃, t̃)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Before the transition: discord frozen, classical correlation decays.
    ClassicalDecoherence,
    /// After the transition: discord decays, classical correlation frozen.
    QuantumDecoherence,
}

/// Transition boundary over a detuning sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourGrid<T> {
    pub delta_axis: Vec<T>,
    pub time_axis: Vec<T>,
    /// First crossing per detuning; `None` when it lies beyond the horizon.
    pub boundary: Vec<Option<T>>,
}

/// Number of samples on [`ContourGrid::time_axis`].
pub const CONTOUR_TIME_SAMPLES: usize = 201;

impl<T: Real> ContourGrid<T> {
    /// Regime at `(delta_axis[i], time_axis[j])`. Without a boundary inside
    /// the horizon the whole column is classical decoherence.
    pub fn regime(&self, i: usize, j: usize) -> Regime {
        match self.boundary[i] {
            Some(tb) if self.time_axis[j] >= tb => Regime::QuantumDecoherence,
            _ => Regime::ClassicalDecoherence,
        }
    }
}

/// First transition time for every detuning in `delta_values`. Detunings are
/// evaluated in parallel; the output order follows the input.
pub fn contour_grid<T: Real>(
    c: T,
    lambda_r: T,
    delta_values: &[T],
    horizon: T,
) -> Result<ContourGrid<T>> {
    check_param(
        "horizon",
        horizon.as_f64(),
        horizon > T::zero() && horizon.is_finite(),
        "must be positive and finite",
    )?;
    let boundary = delta_values
        .par_iter()
        .map(|&d| {
            let p = RescaledParams::new(lambda_r, d)?;
            match transition_time(c, &p, horizon) {
                Ok(r) => Ok(Some(r.first_crossing)),
                Err(Error::HorizonTooSmall { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let n = CONTOUR_TIME_SAMPLES - 1;
    let time_axis = (0..=n)
        .map(|j| horizon * T::from_count(j) / T::from_count(n))
        .collect();
    Ok(ContourGrid {
        delta_axis: delta_values.to_vec(),
        time_axis,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const G01: f64 = 0.007_225_546_012_192_2;

    fn lam(x: f64) -> DephasingFactor<f64> {
        DephasingFactor::new(x).unwrap()
    }

    /// Naive evaluation straight from the summand definition.
    fn g_naive(x: f64) -> f64 {
        let t = |y: f64| if y <= 0.0 { 0.0 } else { y / 2.0 * y.log2() };
        t(1.0 - x) + t(1.0 + x)
    }

    #[test]
    fn entropy_term_values() {
        assert_eq!(entropy_term(0.0).unwrap(), 0.0);
        assert!((entropy_term(1.0_f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((entropy_term(0.1).unwrap() - G01).abs() < 1e-15);
        assert!((entropy_term(0.1_f64).unwrap() - 0.007_225).abs() < 1e-6);
        for &x in &[0.05, 0.3, 0.77, 0.999] {
            assert!((entropy_term(x).unwrap() - g_naive(x)).abs() < 1e-14);
        }
        assert!(entropy_term(1.1).is_err());
        assert!(entropy_term(-0.1).is_err());
        assert!(entropy_term(f64::NAN).is_err());
    }

    #[test]
    fn mutual_information_values() {
        assert!((mutual_information(0.1, lam(0.0)).unwrap() - (1.0 + G01)).abs() < 1e-15);
        assert!((mutual_information(0.0, lam(0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((mutual_information(0.1, lam(50.0)).unwrap() - G01).abs() < 1e-10);
        assert!(mutual_information(1.0, lam(0.0)).is_err());
    }

    #[test]
    fn classical_correlation_values() {
        assert!((classical_correlation(0.3, lam(0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((classical_correlation(0.1, lam(5.0)).unwrap() - G01).abs() < 1e-15);
        let tie = -(0.1_f64).ln();
        let at = classical_correlation(0.1, lam(tie)).unwrap();
        let left = classical_correlation(0.1, lam(tie - 1e-12)).unwrap();
        assert!((at - G01).abs() < 1e-15);
        assert!((at - left).abs() < 1e-10);
    }

    #[test]
    fn discord_values() {
        assert!((discord(0.1, lam(0.0)).unwrap() - G01).abs() < 1e-15);
        let tie = -(0.1_f64).ln();
        for l in [tie - 1e-12, tie, tie + 1e-12] {
            assert!((discord(0.1, lam(l)).unwrap() - G01).abs() < 1e-10);
        }
        assert!(discord(0.1, lam(50.0)).unwrap() < 1e-40);
        // negative c behaves like |c|
        assert_eq!(
            discord(-0.1, lam(0.3)).unwrap(),
            discord(0.1, lam(0.3)).unwrap()
        );
    }

    #[test]
    fn discord_is_mutual_minus_classical() {
        for &c in &[0.0, 0.1, 0.5, 0.9] {
            for &l in &[0.0, 0.1, 1.0, 5.0, 50.0] {
                let i = mutual_information(c, lam(l)).unwrap();
                let cc = classical_correlation(c, lam(l)).unwrap();
                let q = discord(c, lam(l)).unwrap();
                assert!((i - cc - q).abs() < 1e-15);
                assert!(i >= cc && q >= 0.0);
            }
        }
    }

    #[test]
    fn resonant_transition() {
        let p = RescaledParams::new(1.0, 0.0).unwrap();
        let r = transition_time(0.1_f64, &p, 100.0).unwrap();
        assert!((r.first_crossing - 5.601_477_782_875_5).abs() < 1e-9);
        assert_eq!(r.all_crossings.len(), 1);
        let c = (-(-1.0_f64).exp() / 2.0).exp();
        let r = transition_time(c, &p, 10.0).unwrap();
        assert!((r.first_crossing - 1.0).abs() < 1e-10);
    }

    #[test]
    fn horizon_too_small() {
        let p = RescaledParams::new(1.0, 10.0).unwrap();
        match transition_time(0.1, &p, 100.0) {
            Err(Error::HorizonTooSmall { max_beta, .. }) => {
                assert!(max_beta > 0.9 && max_beta < 1.0)
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(transition_time(1.0, &p, 100.0).is_err());
        assert!(transition_time(0.1, &p, 0.0).is_err());
    }

    #[test]
    fn trace_snapshots() {
        let p = RescaledParams::new(1.0, 0.0).unwrap();
        let tr = dynamics_trace(0.1, &p, &[0.0, 1.0, 20.0]).unwrap();
        assert!((tr[0].mutual_information - (1.0 + G01)).abs() < 1e-15);
        assert!((tr[0].classical - 1.0).abs() < 1e-15);
        assert!((tr[0].discord - G01).abs() < 1e-15);
        assert!((tr[2].classical - G01).abs() < 1e-15);
        let a = (-beta_closed(20.0, &p) / 2.0).exp();
        assert!((tr[2].discord - entropy_term(a).unwrap()).abs() < 1e-18);
        assert!(dynamics_trace(0.1, &p, &[1.0, 0.5]).is_err());
        assert!(dynamics_trace(0.1, &p, &[-1.0]).is_err());
    }

    #[test]
    fn contour_marks_missing_boundary() {
        let g = contour_grid(0.1, 1.0, &[0.0, 10.0], 50.0).unwrap();
        assert!(g.boundary[0].is_some());
        assert!(g.boundary[1].is_none());
        assert_eq!(g.time_axis.len(), CONTOUR_TIME_SAMPLES);
        assert_eq!(g.regime(0, 0), Regime::ClassicalDecoherence);
        assert_eq!(
            g.regime(0, CONTOUR_TIME_SAMPLES - 1),
            Regime::QuantumDecoherence
        );
        assert_eq!(
            g.regime(1, CONTOUR_TIME_SAMPLES - 1),
            Regime::ClassicalDecoherence
        );
    }
}
