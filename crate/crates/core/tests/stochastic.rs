use frozen_discord::*;

fn params(delta: f64) -> OuNoiseParams {
    OuNoiseParams::new(1.0, delta, 1.0).unwrap()
}

#[test]
fn estimates_are_seed_deterministic() {
    let p = params(5.0);
    let a = mc_beta_estimate(1.0, &p, 0.01, 2000, 42).unwrap();
    let b = mc_beta_estimate(1.0, &p, 0.01, 2000, 42).unwrap();
    assert_eq!(a.mean.to_bits(), b.mean.to_bits());
    assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    let c = mc_beta_estimate(1.0, &p, 0.01, 2000, 43).unwrap();
    assert_ne!(a.mean, c.mean);
}

#[test]
fn estimates_are_unbiased_up_to_trapezoid_error() {
    let cases = [(0.5, 0.0), (1.0, 2.0), (2.0, 5.0), (3.0, 10.0), (4.0, 1.0)];
    for (k, &(t, d)) in cases.iter().enumerate() {
        let p = params(d);
        let dt = t / 100.0;
        let exact = beta_unscaled(t, &p);
        // Richardson: the bias at dt and dt/2 should differ by a factor 4,
        // which pins the C in C·dt².
        let b1 = trapezoid_expectation(t, &p, dt).unwrap() - exact;
        let b2 = trapezoid_expectation(t, &p, dt / 2.0).unwrap() - exact;
        assert!(((b1 / b2) - 4.0).abs() < 0.1, "t={t} d={d}: {b1} / {b2}");
        let c_coef = (b1 / (dt * dt)).abs();
        let est = mc_beta_estimate(t, &p, dt, 10_000, 1000 + k as u64).unwrap();
        let budget = 3.0 * est.std_error + c_coef * dt * dt;
        assert!(
            (est.mean - exact).abs() <= budget,
            "t={t} d={d}: {} vs {exact} (budget {budget})",
            est.mean
        );
    }
}

#[test]
fn standard_error_shrinks_as_root_n() {
    let p = params(2.0);
    let small = mc_beta_estimate(1.5, &p, 0.015, 2_000, 5).unwrap();
    let large = mc_beta_estimate(1.5, &p, 0.015, 8_000, 6).unwrap();
    let ratio = small.std_error / large.std_error;
    assert!((ratio - 2.0).abs() < 0.4, "ratio {ratio}");
}

#[test]
fn small_time_quadratic_onset() {
    let p = params(0.0);
    let est = mc_beta_estimate(0.05, &p, 0.001, 10_000, 11).unwrap();
    assert!(
        (est.mean - 1.25e-3).abs() < 3.0 * est.std_error + 2e-5,
        "{est:?}"
    );
}

#[test]
fn path_statistics_match_kernel() {
    let p = params(0.0);
    let path = sample_ou_path(&p, 0.01, 200_000, 17).unwrap();
    let x = &path.values;
    let n = x.len() as f64;
    let var = x.iter().map(|v| v * v).sum::<f64>() / n;
    // Long correlated path: generous band around λ/(2t_E).
    assert!((var - 0.5).abs() < 0.1, "{var}");
}
