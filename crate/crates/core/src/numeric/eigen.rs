//! Eigenvalues of small Hermitian matrices by cyclic Jacobi rotations.

use num_complex::Complex;

use crate::scalar::Real;

/// Eigenvalues of a real symmetric `n×n` matrix (row-major), ascending.
pub fn symmetric_eigenvalues<T: Real>(matrix: &[T], n: usize) -> Vec<T> {
    assert_eq!(matrix.len(), n * n, "matrix must be n×n");
    let mut a = matrix.to_vec();
    let idx = |r: usize, c: usize| r * n + c;
    for _sweep in 0..100 {
        let off: T = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[idx(p, q)] * a[idx(p, q)])
            .sum();
        let diag: T = (0..n).map(|p| a[idx(p, p)] * a[idx(p, p)]).sum();
        if off <= T::epsilon() * T::epsilon() * diag.max(T::min_positive_value()) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (T::lit(2.0) * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<T> = (0..n).map(|i| a[idx(i, i)]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    eig
}

/// Eigenvalues of a Hermitian `n×n` complex matrix (row-major), ascending.
///
/// `H = A + iB` is embedded as the real symmetric `[[A, −B], [B, A]]`, whose
/// spectrum is that of `H` with every eigenvalue doubled.
pub fn hermitian_eigenvalues<T: Real>(matrix: &[Complex<T>], n: usize) -> Vec<T> {
    assert_eq!(matrix.len(), n * n, "matrix must be n×n");
    let m = 2 * n;
    let mut real = vec![T::zero(); m * m];
    for r in 0..n {
        for c in 0..n {
            let z = matrix[r * n + c];
            real[r * m + c] = z.re;
            real[(r + n) * m + (c + n)] = z.re;
            real[r * m + (c + n)] = -z.im;
            real[(r + n) * m + c] = z.im;
        }
    }
    symmetric_eigenvalues(&real, m)
        .into_iter()
        .step_by(2)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_symmetric_known_spectrum() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3.
        let e = symmetric_eigenvalues(&[2.0_f64, 1.0, 1.0, 2.0], 2);
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_y_spectrum() {
        let z = Complex::new(0.0_f64, 0.0);
        let m = [z, Complex::new(0.0, -1.0), Complex::new(0.0, 1.0), z];
        let e = hermitian_eigenvalues(&m, 2);
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrix_is_unchanged() {
        let e = symmetric_eigenvalues(&[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 0.5], 3);
        assert_eq!(e, vec![-1.0, 0.5, 3.0]);
    }

    #[test]
    fn trace_and_frobenius_norm_are_preserved() {
        let m = [
            4.0, 1.0, -2.0, 0.5, //
            1.0, 3.0, 0.0, 1.5, //
            -2.0, 0.0, 1.0, 0.25, //
            0.5, 1.5, 0.25, -1.0,
        ];
        let e = symmetric_eigenvalues(&m, 4);
        let trace: f64 = e.iter().sum();
        let fro: f64 = e.iter().map(|x| x * x).sum();
        assert!((trace - 7.0).abs() < 1e-12);
        assert!((fro - m.iter().map(|x| x * x).sum::<f64>()).abs() < 1e-11);
    }
}
