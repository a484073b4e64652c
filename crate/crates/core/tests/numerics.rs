use trisim_core::numerics::*;

fn growth() -> FnSystem<impl Fn(f64, &[f64], &mut [f64])> {
    FnSystem::new(1, |_t, y: &[f64], d: &mut [f64]| d[0] = y[0])
}

fn global_error(stepper: fn(&FnSystem<fn(f64, &[f64], &mut [f64])>, f64, &[f64], f64) -> trisim_core::Result<Vec<f64>>, n: usize) -> f64 {
    let sys: FnSystem<fn(f64, &[f64], &mut [f64])> = FnSystem::new(1, |_t, y, d| d[0] = y[0]);
    let dt = 1.0 / n as f64;
    let mut y = vec![1.0];
    for i in 0..n {
        y = stepper(&sys, i as f64 * dt, &y, dt).unwrap();
    }
    (y[0] - std::f64::consts::E).abs()
}

fn slope(errors: &[(usize, f64)]) -> f64 {
    // least-squares slope of log(error) against log(dt)
    let pts: Vec<(f64, f64)> = errors.iter().map(|&(n, e)| ((1.0 / n as f64).ln(), e.ln())).collect();
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    num / den
}

#[test]
fn euler_is_first_order() {
    let errs: Vec<_> = [16, 32, 64, 128, 256].iter().map(|&n| (n, global_error(euler_step, n))).collect();
    let s = slope(&errs);
    assert!((s - 1.0).abs() <= 0.2, "slope {s}");
}

#[test]
fn rk4_is_fourth_order() {
    let errs: Vec<_> = [8, 16, 32, 64].iter().map(|&n| (n, global_error(rk4_step, n))).collect();
    let s = slope(&errs);
    assert!((s - 4.0).abs() <= 0.2, "slope {s}");
    for w in errs.windows(2) {
        let ratio = w[0].1 / w[1].1;
        assert!((15.0..=17.0).contains(&ratio), "ratio {ratio}");
    }
}

#[test]
fn adaptive_matches_fixed_step_reference() {
    let (y, steps) = adaptive_integrate(&growth(), 0.0, &[1.0], 2.0, 1e-10).unwrap();
    assert!((y[0] - 2f64.exp()).abs() < 1e-7);
    assert!(steps > 1);
}

#[test]
fn monte_carlo_error_scales_as_inverse_sqrt() {
    let f = |x: f64| (1.0 - x * x).sqrt();
    for n in [10_000usize, 40_000, 160_000] {
        let small = monte_carlo_mean(f, 0.0, 1.0, n, 4).unwrap();
        let big = monte_carlo_mean(f, 0.0, 1.0, 4 * n, 4).unwrap();
        let ratio = big.std_error / small.std_error;
        assert!((0.4..=0.6).contains(&ratio), "n {n}: ratio {ratio}");
    }
}

#[test]
fn monte_carlo_linear_integrand() {
    let est = monte_carlo_mean(|x| x, 0.0, 1.0, 100_000, 17).unwrap();
    assert!((est.mean - 0.5).abs() <= 3.0 * est.std_error);
    assert_eq!(est.n, 100_000);
}

#[test]
fn prng_stream_is_pinned_per_seed() {
    let a: Vec<f64> = {
        let mut p = Prng::new(42);
        (0..1000).map(|_| p.next_f64()).collect()
    };
    let b: Vec<f64> = {
        let mut p = Prng::new(42);
        (0..1000).map(|_| p.next_f64()).collect()
    };
    assert_eq!(a, b);
    assert!(a.iter().all(|v| (0.0..1.0).contains(v)));
}
