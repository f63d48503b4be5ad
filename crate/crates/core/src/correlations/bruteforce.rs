//! Discord of an arbitrary two-qubit state by direct optimisation over
//! projective measurements on qubit A. Independent of the closed forms in
//! the parent module and used to check them.

use num_complex::Complex;

use super::xlog2x;
use crate::dephasing_channel::DensityMatrix;
use crate::error::{check_param, Error, Result};
use crate::numeric::roots::golden_max;
use crate::scalar::Real;

type C<T> = Complex<T>;

/// Von Neumann entropy in bits; tiny negative eigenvalues are clipped.
pub fn von_neumann_entropy<T: Real>(rho: &DensityMatrix<T>) -> T {
    -rho.eigenvalues().into_iter().map(xlog2x).sum::<T>()
}

/// Entropy of a 2×2 Hermitian block `[[a, b], [b*, d]]` scaled by `1/norm`.
fn qubit_entropy<T: Real>(block: &[C<T>; 4], norm: T) -> T {
    let a = block[0].re / norm;
    let d = block[3].re / norm;
    let b = block[1].norm() / norm;
    let half_tr = (a + d) / T::lit(2.0);
    let r = (((a - d) / T::lit(2.0)).powi(2) + b * b).sqrt();
    -(xlog2x(half_tr + r) + xlog2x(half_tr - r))
}

fn partial_trace_a<T: Real>(rho: &DensityMatrix<T>) -> [C<T>; 4] {
    // ρ_B[b][b'] = Σ_a ρ[(a,b),(a,b')]
    let mut out = [C::new(T::zero(), T::zero()); 4];
    for b in 0..2 {
        for bp in 0..2 {
            out[2 * b + bp] = rho.get(b, bp) + rho.get(2 + b, 2 + bp);
        }
    }
    out
}

fn partial_trace_b<T: Real>(rho: &DensityMatrix<T>) -> [C<T>; 4] {
    let mut out = [C::new(T::zero(), T::zero()); 4];
    for a in 0..2 {
        for ap in 0..2 {
            out[2 * a + ap] = rho.get(2 * a, 2 * ap) + rho.get(2 * a + 1, 2 * ap + 1);
        }
    }
    out
}

/// Information about B gained by measuring A in the basis
/// `|ψ₀⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`, `|ψ₁⟩ ⊥ |ψ₀⟩`:
/// `J = S(ρ_B) − Σ_k p_k S(ρ_{B|k})`.
fn measurement_information<T: Real>(rho: &DensityMatrix<T>, s_b: T, theta: T, phi: T) -> T {
    let (sh, ch) = (theta / T::lit(2.0)).sin_cos();
    let phase = C::from_polar(T::one(), phi);
    let basis = [
        [C::new(ch, T::zero()), phase * sh],
        [-phase.conj() * sh, C::new(ch, T::zero())],
    ];
    let mut conditional = T::zero();
    for psi in &basis {
        // Unnormalised ρ_{B|k}[b][b'] = Σ_{a,a'} ψ*_a ρ[(a,b),(a',b')] ψ_{a'}
        let mut block = [C::new(T::zero(), T::zero()); 4];
        for b in 0..2 {
            for bp in 0..2 {
                let mut acc = C::new(T::zero(), T::zero());
                for a in 0..2 {
                    for ap in 0..2 {
                        acc += psi[a].conj() * rho.get(2 * a + b, 2 * ap + bp) * psi[ap];
                    }
                }
                block[2 * b + bp] = acc;
            }
        }
        let p = block[0].re + block[3].re;
        if p > T::epsilon() {
            conditional += p * qubit_entropy(&block, p);
        }
    }
    s_b - conditional
}

/// Discord `Q = I − max_{Π_A} J` of a two-qubit state.
///
/// The measurement direction is searched on a `grid_n × grid_n` grid over
/// `θ ∈ [0, π]`, `φ ∈ [0, 2π)`; the best grid point is then polished with one
/// golden-section pass in `θ` followed by one in `φ`.
pub fn discord_bruteforce<T: Real>(rho: &DensityMatrix<T>, grid_n: usize) -> Result<T> {
    if rho.dim() != 4 {
        return Err(Error::InvariantViolation(format!(
            "two-qubit state expected, got dimension {}",
            rho.dim()
        )));
    }
    check_param("grid_n", grid_n as f64, grid_n >= 32, "must be at least 32")?;

    let one = T::one();
    let s_ab = von_neumann_entropy(rho);
    let s_a = qubit_entropy(&partial_trace_b(rho), one);
    let s_b = qubit_entropy(&partial_trace_a(rho), one);
    let mutual = s_a + s_b - s_ab;

    let d_theta = T::PI() / T::from_count(grid_n - 1);
    let d_phi = T::TAU() / T::from_count(grid_n);
    let j = |theta: T, phi: T| measurement_information(rho, s_b, theta, phi);

    let (mut best_theta, mut best_phi, mut best) = (T::zero(), T::zero(), -T::infinity());
    for i in 0..grid_n {
        let theta = d_theta * T::from_count(i);
        for k in 0..grid_n {
            let phi = d_phi * T::from_count(k);
            let v = j(theta, phi);
            if v > best {
                (best_theta, best_phi, best) = (theta, phi, v);
            }
        }
    }

    let x_tol = T::lit(1e-10);
    let (theta, v) = golden_max(
        |t| j(t, best_phi),
        (best_theta - d_theta).max(T::zero()),
        (best_theta + d_theta).min(T::PI()),
        x_tol,
    );
    if v > best {
        (best_theta, best) = (theta, v);
    }
    let (_, v) = golden_max(
        |p| j(best_theta, p),
        best_phi - d_phi,
        best_phi + d_phi,
        x_tol,
    );
    best = best.max(v);

    Ok(mutual - best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dephasing_channel::{bell_diagonal_matrix, BellDiagonalState};

    #[test]
    fn maximally_mixed_has_no_discord() {
        let rho = DensityMatrix::<f64>::maximally_mixed(4).unwrap();
        assert!(discord_bruteforce(&rho, 32).unwrap().abs() < 1e-12);
        assert!((von_neumann_entropy(&rho) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn pure_bell_state_has_unit_discord() {
        let h = 0.5;
        let rho = DensityMatrix::<f64>::from_real(
            4,
            &[
                h, 0.0, 0.0, h, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, h, 0.0, 0.0, h,
            ],
        )
        .unwrap();
        assert!((discord_bruteforce(&rho, 32).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn classical_state_has_no_discord() {
        // ½(|00⟩⟨00| + |11⟩⟨11|)
        let rho = DensityMatrix::<f64>::from_real(
            4,
            &[
                0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5,
            ],
        )
        .unwrap();
        assert!(discord_bruteforce(&rho, 32).unwrap().abs() < 1e-9);
    }

    #[test]
    fn frozen_value_at_c_one_tenth() {
        let rho = bell_diagonal_matrix(&BellDiagonalState::new(0.1_f64).unwrap());
        let q = discord_bruteforce(&rho, 64).unwrap();
        assert!((q - 0.007_225).abs() < 5e-4, "{q}");
    }

    #[test]
    fn rejects_bad_input() {
        let rho = DensityMatrix::<f64>::maximally_mixed(2).unwrap();
        assert!(discord_bruteforce(&rho, 64).is_err());
        let rho = DensityMatrix::<f64>::maximally_mixed(4).unwrap();
        assert!(discord_bruteforce(&rho, 8).is_err());
    }
}
