//! Bracketing root search, golden-section maximisation and the principal
//! branch of the Lambert W function.

use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_BISECTIONS: usize = 400;

/// A sign change of some function between two consecutive grid points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T> {
    pub lo: T,
    pub hi: T,
    pub f_lo: T,
    pub f_hi: T,
}

/// Walks `(start, end]` with the given step and records every interval on
/// which `f` changes sign. Zero counts as non-negative.
///
/// `keep_going` is consulted before each step and may stop the scan early.
pub fn scan_sign_changes<T, F, K>(
    mut f: F,
    start: T,
    end: T,
    step: T,
    mut keep_going: K,
) -> Vec<Bracket<T>>
where
    T: Real,
    F: FnMut(T) -> T,
    K: FnMut(T) -> bool,
{
    let mut out = Vec::new();
    if !(end > start) || !(step > T::zero()) {
        return out;
    }
    let n = ((end - start) / step).ceil().to_usize().unwrap_or(0).max(1);
    let mut lo = start;
    let mut f_lo = f(lo);
    for i in 1..=n {
        if !keep_going(lo) {
            break;
        }
        // Recompute from the index so that the last point lands on `end`.
        let hi = if i == n {
            end
        } else {
            start + step * T::from_count(i)
        };
        let f_hi = f(hi);
        if (f_lo < T::zero()) != (f_hi < T::zero()) {
            out.push(Bracket { lo, hi, f_lo, f_hi });
        }
        lo = hi;
        f_lo = f_hi;
    }
    out
}

/// Bisects a bracket down to width `x_tol`. Returns the midpoint of the final
/// interval, or an exact zero if one is hit on the way.
pub fn bisect<T, F>(mut f: F, bracket: Bracket<T>, x_tol: T) -> T
where
    T: Real,
    F: FnMut(T) -> T,
{
    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        ..
    } = bracket;
    let two = T::lit(2.0);
    for _ in 0..MAX_BISECTIONS {
        let mid = lo + (hi - lo) / two;
        if hi - lo <= x_tol || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return mid;
        }
        if (f_mid < T::zero()) == (f_lo < T::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    lo + (hi - lo) / two
}

/// Golden-section search for a maximum of a unimodal `f` on `[a, b]`.
/// Returns `(argmax, max)`.
pub fn golden_max<T, F>(mut f: F, mut a: T, mut b: T, x_tol: T) -> (T, T)
where
    T: Real,
    F: FnMut(T) -> T,
{
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if (b - a).abs() <= x_tol {
            break;
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Principal branch W₀ of the Lambert W function, solving `w·eʷ = x` by
/// Newton iteration seeded at `ln(1 + x)`.
///
/// Iterates until the residual `|w·eʷ − x|` drops below `1e-12·max(1, |x|)`
/// or the Newton step stalls at machine precision.
pub fn lambert_w0<T: Real>(x: T) -> Result<T> {
    let branch_point = -T::one() / T::E();
    if !(x >= branch_point) || !x.is_finite() {
        return Err(Error::Domain {
            function: "lambert_w0",
            value: x.as_f64(),
        });
    }
    if x == T::zero() {
        return Ok(T::zero());
    }
    if x == branch_point {
        return Ok(-T::one());
    }
    let tol = T::lit(1e-12) * x.abs().max(T::one());
    let mut w = x.ln_1p();
    for _ in 0..100 {
        let ew = w.exp();
        let residual = w * ew - x;
        if residual.abs() <= tol {
            break;
        }
        let step = residual / (ew * (w + T::one()));
        w -= step;
        if step.abs() <= T::epsilon() * w.abs().max(T::one()) {
            break;
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambert_w_at_zero_and_one() {
        assert_eq!(lambert_w0(0.0_f64).unwrap(), 0.0);
        // Omega constant.
        let w = lambert_w0(1.0_f64).unwrap();
        assert!((w - 0.567_143_290_409_783_8).abs() < 1e-14);
    }

    #[test]
    fn lambert_w_satisfies_defining_equation() {
        for &x in &[
            -0.3,
            -0.1,
            0.5,
            2.0,
            3.0 * std::f64::consts::PI / 2.0,
            10.0,
            1e4,
        ] {
            let w = lambert_w0(x).unwrap();
            assert!(
                (w * w.exp() - x).abs() <= 1e-12 * x.abs().max(1.0),
                "x = {x}"
            );
        }
    }

    #[test]
    fn lambert_w_rejects_below_branch_point() {
        assert!(matches!(lambert_w0(-0.5_f64), Err(Error::Domain { .. })));
        assert_eq!(lambert_w0(-1.0 / std::f64::consts::E).unwrap(), -1.0);
    }

    #[test]
    fn lambert_w_f32() {
        let w = lambert_w0(1.0_f32).unwrap();
        assert!((w - 0.567_143_3).abs() < 1e-6);
    }

    #[test]
    fn scan_and_bisect_find_all_sine_roots() {
        let brackets = scan_sign_changes(f64::sin, 0.5, 10.0, 0.1, |_| true);
        assert_eq!(brackets.len(), 3);
        for (k, b) in brackets.iter().enumerate() {
            let r = bisect(f64::sin, *b, 1e-13);
            assert!((r - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn scan_honours_early_stop() {
        let brackets = scan_sign_changes(f64::sin, 0.5, 10.0, 0.1, |t| t < 4.0);
        assert_eq!(brackets.len(), 1);
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, fx) = golden_max(|x: f64| -(x - 1.3).powi(2) + 2.0, 0.0, 3.0, 1e-10);
        assert!((x - 1.3).abs() < 1e-6);
        assert!((fx - 2.0).abs() < 1e-14);
    }
}
