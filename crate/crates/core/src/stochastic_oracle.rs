//! Monte Carlo estimate of the channel variance from sampled OU field paths.
//!
//! Uses `β(t) = E|∫₀ᵗ e^{iδs} B_x(s) ds|²`, so it shares nothing with the
//! closed form except the noise parameters.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{check_param, Result};
use crate::noise_kernel::{ou_kernel, OuNoiseParams};
use crate::scalar::Real;

/// Field samples `B_x(k·dt)`, `k = 0..=n_steps`.
#[derive(Debug, Clone, PartialEq)]
pub struct OuTrajectory<T> {
    pub dt: T,
    pub values: Vec<T>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate<T> {
    pub mean: T,
    pub std_error: T,
    pub n_samples: usize,
    pub seed: u64,
}

/// Generator for path `index` under a given seed: one ChaCha stream per path,
/// so results do not depend on how paths are scheduled across threads.
fn path_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn fill_path<T, R>(p: &OuNoiseParams<T>, dt: T, out: &mut [T], rng: &mut R)
where
    T: Real,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    let sigma = (p.lambda() / (T::lit(2.0) * p.t_env())).sqrt();
    let decay = (-dt / p.t_env()).exp();
    let kick = sigma * (-(-T::lit(2.0) * dt / p.t_env()).exp_m1()).sqrt();
    let mut x = sigma * StandardNormal.sample(rng);
    for v in out.iter_mut() {
        *v = x;
        let xi: T = StandardNormal.sample(rng);
        x = x * decay + kick * xi;
    }
}

/// Stationary OU path by exact discretisation:
/// `x₀ ~ N(0, λ/(2t_E))`, `x_{k+1} = x_k e^{−dt/t_E} + σ√(1 − e^{−2dt/t_E}) ξ_k`.
pub fn sample_ou_path<T>(
    p: &OuNoiseParams<T>,
    dt: T,
    n_steps: usize,
    seed: u64,
) -> Result<OuTrajectory<T>>
where
    T: Real,
    StandardNormal: Distribution<T>,
{
    check_param(
        "dt",
        dt.as_f64(),
        dt > T::zero() && dt.is_finite(),
        "must be positive and finite",
    )?;
    check_param(
        "n_steps",
        n_steps as f64,
        n_steps >= 2,
        "must be at least 2",
    )?;
    let mut values = vec![T::zero(); n_steps + 1];
    fill_path(p, dt, &mut values, &mut path_rng(seed, 0));
    Ok(OuTrajectory { dt, values })
}

/// Trapezoid weights times `e^{iδ s_k}` on the uniform grid `s_k = k·h`.
fn phase_weights<T: Real>(delta: T, h: T, n_steps: usize) -> (Vec<T>, Vec<T>) {
    (0..=n_steps)
        .map(|k| {
            let w = if k == 0 || k == n_steps {
                h / T::lit(2.0)
            } else {
                h
            };
            let (s, c) = (delta * h * T::from_count(k)).sin_cos();
            (w * c, w * s)
        })
        .unzip()
}

fn grid_for<T: Real>(t: T, dt: T) -> (usize, T) {
    let n = (t / dt).ceil().to_usize().unwrap_or(1).max(1);
    (n, t / T::from_count(n))
}

fn check_mc_args<T: Real>(t: T, dt: T) -> Result<()> {
    check_param(
        "t",
        t.as_f64(),
        t > T::zero() && t.is_finite(),
        "must be positive and finite",
    )?;
    check_param(
        "dt",
        dt.as_f64(),
        dt > T::zero() && dt <= t / T::lit(50.0),
        "must lie in (0, t/50]",
    )
}

/// Monte Carlo estimate of β(t): the mean over `n_samples` paths of
/// `|Z|²`, `Z = ∫₀ᵗ e^{iδs} B_x(s) ds` by the trapezoid rule.
///
/// The grid step is `t / ceil(t/dt)`, i.e. at most `dt`. Path `i` draws from
/// its own ChaCha stream, so the estimate is bit-identical for a given seed.
pub fn mc_beta_estimate<T>(
    t: T,
    p: &OuNoiseParams<T>,
    dt: T,
    n_samples: usize,
    seed: u64,
) -> Result<McEstimate<T>>
where
    T: Real,
    StandardNormal: Distribution<T>,
{
    check_mc_args(t, dt)?;
    check_param(
        "n_samples",
        n_samples as f64,
        n_samples >= 100,
        "must be at least 100",
    )?;
    let (n_steps, h) = grid_for(t, dt);
    let (wc, ws) = phase_weights(p.delta(), h, n_steps);

    let squares: Vec<T> = (0..n_samples)
        .into_par_iter()
        .map_init(
            || vec![T::zero(); n_steps + 1],
            |path, i| {
                fill_path(p, h, path, &mut path_rng(seed, i as u64));
                let re: T = path.iter().zip(&wc).map(|(x, w)| *x * *w).sum();
                let im: T = path.iter().zip(&ws).map(|(x, w)| *x * *w).sum();
                re * re + im * im
            },
        )
        .collect();

    let n = T::from_count(n_samples);
    let mean = squares.iter().copied().sum::<T>() / n;
    let var = squares.iter().map(|&s| (s - mean) * (s - mean)).sum::<T>() / (n - T::one());
    Ok(McEstimate {
        mean,
        std_error: (var / n).sqrt(),
        n_samples,
        seed,
    })
}

/// Exact expectation of the Monte Carlo estimator on its grid:
/// `Σ_jk w_j w_k cos(δ(s_j − s_k)) K(s_j, s_k)`. Its distance to the true β is
/// the trapezoid bias, which scales as `dt²`.
pub fn trapezoid_expectation<T: Real>(t: T, p: &OuNoiseParams<T>, dt: T) -> Result<T> {
    check_mc_args(t, dt)?;
    let (n_steps, h) = grid_for(t, dt);
    let (wc, ws) = phase_weights(p.delta(), h, n_steps);
    let mut total = T::zero();
    for j in 0..=n_steps {
        let sj = h * T::from_count(j);
        let mut row = T::zero();
        for k in 0..=n_steps {
            let sk = h * T::from_count(k);
            // Re[(wc_j + i ws_j)(wc_k − i ws_k)] = w_j w_k cos(δ(s_j − s_k))
            row += (wc[j] * wc[k] + ws[j] * ws[k]) * ou_kernel(sj, sk, p);
        }
        total += row;
    }
    Ok(total)
}
