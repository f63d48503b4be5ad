//! Gaussian dephasing channel on density matrices in the number basis and
//! the Bell-diagonal two-qubit family it acts on.

use std::fmt;

use num_complex::Complex;

use crate::error::{check_param, Error, Result};
use crate::numeric::eigen::hermitian_eigenvalues;
use crate::scalar::Real;

/// Largest matrix dimension accepted by [`DensityMatrix::new`].
pub const MAX_DIM: usize = 32;

fn hermitian_tol<T: Real>() -> T {
    T::lit(1e-12).max(T::lit(64.0) * T::epsilon())
}

fn psd_tol<T: Real>() -> T {
    T::lit(1e-10).max(T::lit(256.0) * T::epsilon())
}

/// Hermitian, unit-trace, positive semidefinite matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix<T> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
    /// (smallest eigenvalue ≥ −1e-10).
    pub fn new(dim: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvariantViolation(format!(
                "dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvariantViolation(format!(
                "{} entries for a {dim}×{dim} matrix",
                entries.len()
            )));
        }
        let rho = Self { dim, entries };
        rho.validate()?;
        Ok(rho)
    }

    /// Builds a density matrix from real entries.
    pub fn from_real(dim: usize, entries: &[T]) -> Result<Self> {
        Self::new(
            dim,
            entries
                .iter()
                .map(|&x| Complex::new(x, T::zero()))
                .collect(),
        )
    }

    /// The maximally mixed state `I/dim`.
    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        let w = T::one() / T::from_count(dim);
        let mut entries = vec![Complex::new(T::zero(), T::zero()); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex::new(w, T::zero());
        }
        Self::new(dim, entries)
    }

    fn validate(&self) -> Result<()> {
        let tol = hermitian_tol::<T>();
        let n = self.dim;
        for r in 0..n {
            for c in r..n {
                let d = self.get(r, c) - self.get(c, r).conj();
                if !(d.norm() <= tol) {
                    return Err(Error::InvariantViolation(format!(
                        "not Hermitian at ({r},{c}): deviation {}",
                        d.norm()
                    )));
                }
            }
        }
        let trace = self.trace();
        if !((trace - T::one()).abs() <= tol) {
            return Err(Error::InvariantViolation(format!("trace {trace} ≠ 1")));
        }
        let min_eig = self.eigenvalues()[0];
        if !(min_eig >= -psd_tol::<T>()) {
            return Err(Error::InvariantViolation(format!(
                "negative eigenvalue {min_eig}"
            )));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn trace(&self) -> T {
        (0..self.dim)
            .map(|i| self.entries[i * self.dim + i].re)
            .sum()
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<T> {
        hermitian_eigenvalues(&self.entries, self.dim)
    }

    /// Largest absolute entry-wise difference to another matrix of equal size.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Applies an entry-wise damping mask; the result stays a valid state
    /// whenever the mask is a positive semidefinite matrix with unit diagonal.
    fn damped(&self, factor: impl Fn(usize, usize) -> T) -> Self {
        let n = self.dim;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(k, z)| z * factor(k / n, k % n))
            .collect();
        Self { dim: n, entries }
    }
}

impl<T: Real> fmt::Debug for DensityMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DensityMatrix({}×{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| {
                    let z = self.get(r, c);
                    format!("{:+.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Two-qubit state `(1+c)/2 |Ψ⁺⟩⟨Ψ⁺| + (1−c)/2 |Φ⁺⟩⟨Φ⁺|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellDiagonalState<T> {
    c: T,
}

impl<T: Real> BellDiagonalState<T> {
    pub fn new(c: T) -> Result<Self> {
        check_param("c", c.as_f64(), c.abs() < T::one(), "|c| must be < 1")?;
        Ok(Self { c })
    }

    pub fn c(&self) -> T {
        self.c
    }
}

/// Exponent Λ of the coherence decay `e^{−Λ}` in the bipartite formulas.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DephasingFactor<T>(T);

impl<T: Real> DephasingFactor<T> {
    pub fn new(lambda: T) -> Result<Self> {
        check_param(
            "Lambda",
            lambda.as_f64(),
            lambda >= T::zero(),
            "must be non-negative",
        )?;
        Ok(Self(lambda))
    }

    /// `Λ = β/2` for a channel variance β.
    pub fn from_beta(beta: T) -> Result<Self> {
        Self::new(beta / T::lit(2.0))
    }

    pub fn value(&self) -> T {
        self.0
    }

    /// Surviving coherence `e^{−Λ}`.
    pub fn coherence(&self) -> T {
        (-self.0).exp()
    }
}

/// Multiplies element `(n, m)` by `exp(−(n−m)²·β/2)`.
pub fn apply_gaussian_dephasing<T: Real>(
    rho: &DensityMatrix<T>,
    beta: T,
) -> Result<DensityMatrix<T>> {
    check_param(
        "beta",
        beta.as_f64(),
        beta >= T::zero(),
        "must be non-negative",
    )?;
    let half = beta / T::lit(2.0);
    Ok(rho.damped(|n, m| {
        let k = T::from_count(n.abs_diff(m));
        (-k * k * half).exp()
    }))
}

/// Independent Gaussian dephasing of each qubit of a two-qubit state, with
/// variances `beta_a` (first qubit) and `beta_b` (second qubit). Basis order
/// is `|00⟩, |01⟩, |10⟩, |11⟩`.
pub fn apply_local_dephasing<T: Real>(
    rho: &DensityMatrix<T>,
    beta_a: T,
    beta_b: T,
) -> Result<DensityMatrix<T>> {
    if rho.dim() != 4 {
        return Err(Error::InvariantViolation(format!(
            "two-qubit state expected, got dimension {}",
            rho.dim()
        )));
    }
    check_param(
        "beta_a",
        beta_a.as_f64(),
        beta_a >= T::zero(),
        "must be non-negative",
    )?;
    check_param(
        "beta_b",
        beta_b.as_f64(),
        beta_b >= T::zero(),
        "must be non-negative",
    )?;
    let half = T::lit(0.5);
    Ok(rho.damped(|r, c| {
        let flips_a = T::from_count(((r >> 1) ^ (c >> 1)) & 1);
        let flips_b = T::from_count((r ^ c) & 1);
        (-(flips_a * beta_a + flips_b * beta_b) * half).exp()
    }))
}

/// Density matrix of the Bell-diagonal state in the computational basis.
pub fn bell_diagonal_matrix<T: Real>(s: &BellDiagonalState<T>) -> DensityMatrix<T> {
    let quarter = T::lit(0.25);
    let psi = (T::one() + s.c) * quarter; // weight·½ on the |Ψ⁺⟩ block
    let phi = (T::one() - s.c) * quarter; // weight·½ on the |Φ⁺⟩ block
    let z = T::zero();
    #[rustfmt::skip]
    let entries = [
        phi, z,   z,   phi,
        z,   psi, psi, z,
        z,   psi, psi, z,
        phi, z,   z,   phi,
    ];
    DensityMatrix {
        dim: 4,
        entries: entries.iter().map(|&x| Complex::new(x, z)).collect(),
    }
}

/// Bell-diagonal state after both qubits dephase with local variance `Λ`,
/// so the `⟨XX⟩` correlation decays to `e^{−Λ}` while `⟨ZZ⟩ = −c` is kept.
pub fn evolve_bell_diagonal<T: Real>(
    s: &BellDiagonalState<T>,
    lambda: DephasingFactor<T>,
) -> DensityMatrix<T> {
    let rho = bell_diagonal_matrix(s);
    let l = lambda.value();
    apply_local_dephasing(&rho, l, l).expect("two-qubit input with non-negative variances")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qubit(p0: f64, coh: f64) -> DensityMatrix<f64> {
        DensityMatrix::from_real(2, &[p0, coh, coh, 1.0 - p0]).unwrap()
    }

    #[test]
    fn rejects_invalid_matrices() {
        assert!(DensityMatrix::from_real(2, &[0.5, 0.1, 0.2, 0.5]).is_err());
        assert!(DensityMatrix::from_real(2, &[0.6, 0.0, 0.0, 0.6]).is_err());
        assert!(DensityMatrix::from_real(2, &[0.5, 0.9, 0.9, 0.5]).is_err());
        assert!(DensityMatrix::<f64>::from_real(2, &[1.0, 0.0, 0.0]).is_err());
        assert!(DensityMatrix::<f64>::maximally_mixed(MAX_DIM + 1).is_err());
    }

    #[test]
    fn zero_beta_is_identity() {
        let rho = qubit(0.3, 0.4);
        assert_eq!(apply_gaussian_dephasing(&rho, 0.0).unwrap(), rho);
    }

    #[test]
    fn qubit_coherence_halves() {
        let rho = qubit(0.5, 0.5);
        let out = apply_gaussian_dephasing(&rho, 2.0 * 2.0_f64.ln()).unwrap();
        assert!((out.get(0, 1).re - 0.25).abs() < 1e-15);
        assert!((out.get(1, 0).re - 0.25).abs() < 1e-15);
        assert_eq!(out.get(0, 0), rho.get(0, 0));
    }

    #[test]
    fn qutrit_far_coherence() {
        let rho =
            DensityMatrix::from_real(3, &[0.4, 0.1, 0.2, 0.1, 0.3, 0.05, 0.2, 0.05, 0.3]).unwrap();
        let out = apply_gaussian_dephasing(&rho, 1.0).unwrap();
        assert!((out.get(0, 2).re - 0.2 * (-2.0_f64).exp()).abs() < 1e-16);
        assert!((out.get(0, 1).re - 0.1 * (-0.5_f64).exp()).abs() < 1e-16);
    }

    #[test]
    fn negative_beta_rejected() {
        assert!(apply_gaussian_dephasing(&qubit(0.5, 0.1), -1.0).is_err());
    }

    #[test]
    fn bell_diagonal_construction() {
        assert!(BellDiagonalState::new(1.0).is_err());
        assert!(BellDiagonalState::new(-1.0).is_err());
        for &c in &[0.0_f64, 0.1, -0.4, 0.9] {
            let rho = bell_diagonal_matrix(&BellDiagonalState::new(c).unwrap());
            assert!((rho.trace() - 1.0).abs() < 1e-15);
            let e = rho.eigenvalues();
            let mut expected = [0.0, 0.0, (1.0 - c) / 2.0, (1.0 + c) / 2.0];
            expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (x, y) in e.iter().zip(expected) {
                assert!((x - y).abs() < 1e-12, "c = {c}: {e:?}");
            }
            // Re-validate through the public constructor.
            DensityMatrix::new(4, rho.entries().to_vec()).unwrap();
        }
    }

    #[test]
    fn evolve_identity_and_limit() {
        let s = BellDiagonalState::new(0.1).unwrap();
        let rho0 = bell_diagonal_matrix(&s);
        let out = evolve_bell_diagonal(&s, DephasingFactor::new(0.0).unwrap());
        assert!(out.max_abs_diff(&rho0) < 1e-16);
        let out = evolve_bell_diagonal(&s, DephasingFactor::new(50.0).unwrap());
        assert!(out.get(0, 3).norm() < 1e-20);
        assert!(out.get(1, 2).norm() < 1e-20);
        // populations untouched
        for i in 0..4 {
            assert_eq!(out.get(i, i), rho0.get(i, i));
        }
    }

    #[test]
    fn evolved_correlations() {
        // ⟨XX⟩ = 2 Re(ρ₀₃ + ρ₁₂) should equal e^{−Λ}.
        let s = BellDiagonalState::new(0.1).unwrap();
        let lam = DephasingFactor::new(-(0.1_f64).ln()).unwrap();
        let out = evolve_bell_diagonal(&s, lam);
        let xx = 2.0 * (out.get(0, 3).re + out.get(1, 2).re);
        assert!((xx - 0.1).abs() < 1e-15);
        assert!((lam.coherence() - s.c()).abs() < 1e-15);
    }

    #[test]
    fn dephasing_factor_from_beta() {
        assert_eq!(DephasingFactor::from_beta(3.0).unwrap().value(), 1.5);
        assert!(DephasingFactor::new(-0.1).is_err());
    }
}
