//! Sliding Fourier decomposition of sampled signals.
//!
//! For a signal x and period T, the phasor `X_k(t) = (1/T) ∫_{t-T}^{t} x(τ) e^{-jkωτ} dτ`
//! is evaluated by trapezoidal quadrature over the trailing window at every
//! sample instant past the first period.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Time-varying phasors of a (possibly vector-valued) signal.
pub struct PhasorTrajectory {
    k_set: Vec<i64>,
    times: Vec<f64>,
    components: usize,
    /// Indexed (component, k index, time index), time fastest.
    values: Vec<Complex64>,
}

impl PhasorTrajectory {
    /// Harmonic indices carried by this trajectory.
    pub fn k_set(&self) -> &[i64] {
        &self.k_set
    }

    /// Output instants (input instants past the first period).
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    /// Number of signal components.
    pub fn components(&self) -> usize {
        self.components
    }

    /// Phasor X_k of one component at one output instant.
    pub fn value(&self, component: usize, k_index: usize, time_index: usize) -> Complex64 {
        assert!(component < self.components && k_index < self.k_set.len() && time_index < self.times.len());
        let per_k = self.times.len();
        let per_comp = per_k * self.k_set.len();
        self.values[component * per_comp + k_index * per_k + time_index]
    }

    /// All phasors of one (component, harmonic) channel over time.
    pub fn channel(&self, component: usize, k_index: usize) -> &[Complex64] {
        let per_k = self.times.len();
        let per_comp = per_k * self.k_set.len();
        let start = component * per_comp + k_index * per_k;
        &self.values[start..start + per_k]
    }
}

/// Sliding Fourier decomposition of a uniformly sampled vector signal.
///
/// `samples[q]` is the signal value at `times[q]`. The step must be uniform
/// and divide the period to within one sample; the span must cover at least
/// one period. Output instants start once the trailing window fits.
pub fn sliding_fourier(
    times: &[f64],
    samples: &[DVector<f64>],
    period: f64,
    k_set: &[i64],
) -> Result<PhasorTrajectory> {
    if period <= 0.0 {
        return Err(Error::InvalidArgument(format!("sliding_fourier: period must be positive, got {period}")));
    }
    if times.len() != samples.len() {
        return Err(Error::DimensionMismatch(format!(
            "sliding_fourier: {} instants but {} samples",
            times.len(),
            samples.len()
        )));
    }
    if times.len() < 2 {
        return Err(Error::InvalidArgument("sliding_fourier: need at least two samples".into()));
    }
    let dt = times[1] - times[0];
    if dt <= 0.0 {
        return Err(Error::InvalidArgument("sliding_fourier: instants must be increasing".into()));
    }
    for w in times.windows(2) {
        if ((w[1] - w[0]) - dt).abs() > 1e-9 * dt.max(1.0) {
            return Err(Error::InvalidArgument("sliding_fourier: sampling is not uniform".into()));
        }
    }
    let n_per_period = (period / dt).round() as usize;
    if n_per_period < 2 || (n_per_period as f64 * dt - period).abs() > dt {
        return Err(Error::InvalidArgument(format!(
            "sliding_fourier: step {dt} does not divide the period {period} to within one sample"
        )));
    }
    if times.len() <= n_per_period {
        return Err(Error::InvalidArgument(format!(
            "sliding_fourier: sample span must cover at least one period ({n_per_period} intervals)"
        )));
    }
    let components = samples[0].len();
    for (q, s) in samples.iter().enumerate() {
        if s.len() != components {
            return Err(Error::DimensionMismatch(format!(
                "sliding_fourier: sample {q} has {} components, expected {components}",
                s.len()
            )));
        }
    }

    let omega = 2.0 * std::f64::consts::PI / period;
    let out_times: Vec<f64> = times[n_per_period..].to_vec();
    let n_out = out_times.len();
    let mut values = vec![Complex64::new(0.0, 0.0); components * k_set.len() * n_out];

    for (ki, &k) in k_set.iter().enumerate() {
        // demodulated integrand f(τ) = x(τ) e^{-jkωτ}, per component
        let phase: Vec<Complex64> = times
            .iter()
            .map(|&t| Complex64::from_polar(1.0, -(k as f64) * omega * t))
            .collect();
        for comp in 0..components {
            let f: Vec<Complex64> = (0..times.len()).map(|q| phase[q] * samples[q][comp]).collect();
            // trapezoid over the trailing window, updated incrementally
            let mut acc = Complex64::new(0.0, 0.0);
            for q in 0..n_per_period {
                acc += (f[q] + f[q + 1]) * 0.5;
            }
            let base = comp * k_set.len() * n_out + ki * n_out;
            values[base] = acc * dt / period;
            for (oi, q_end) in (n_per_period + 1..times.len()).enumerate() {
                acc += (f[q_end - 1] + f[q_end]) * 0.5;
                acc -= (f[q_end - 1 - n_per_period] + f[q_end - n_per_period]) * 0.5;
                values[base + oi + 1] = acc * dt / period;
            }
        }
    }

    Ok(PhasorTrajectory { k_set: k_set.to_vec(), times: out_times, components, values })
}

/// Scalar-signal convenience wrapper around [`sliding_fourier`].
pub fn sliding_fourier_scalar(
    times: &[f64],
    samples: &[f64],
    period: f64,
    k_set: &[i64],
) -> Result<PhasorTrajectory> {
    let vecs: Vec<DVector<f64>> = samples.iter().map(|&v| DVector::from_vec(vec![v])).collect();
    sliding_fourier(times, &vecs, period, k_set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn grid(n: usize, dt: f64) -> Vec<f64> {
        (0..n).map(|q| q as f64 * dt).collect()
    }

    #[test]
    fn stationary_cosine_gives_constant_half() {
        let period = 1.0;
        let dt = period / 1e4;
        let times = grid(20_001, dt);
        let x: Vec<f64> = times.iter().map(|&t| (2.0 * PI * t).cos()).collect();
        let traj = sliding_fourier_scalar(&times, &x, period, &[1]).unwrap();
        for ti in 0..traj.times().len() {
            let v = traj.value(0, 0, ti);
            assert!((v - Complex64::new(0.5, 0.0)).norm() < 1e-6, "t index {ti}: {v}");
        }
    }

    #[test]
    fn constant_signal_phasors() {
        let period = 2.0;
        let dt = period / 500.0;
        let times = grid(1501, dt);
        let x = vec![1.0; times.len()];
        let traj = sliding_fourier_scalar(&times, &x, period, &[0, 1]).unwrap();
        for ti in 0..traj.times().len() {
            assert!((traj.value(0, 0, ti) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
            assert!(traj.value(0, 1, ti).norm() < 1e-9);
        }
    }

    #[test]
    fn growing_cosine_matches_quadrature_oracle() {
        // x(t) = e^{αt} cos(ωt); the windowed integral is evaluated by a
        // high-resolution Simpson oracle, independent of the trapezoid path
        let period = 1.0;
        let alpha = 0.8;
        let omega = 2.0 * PI / period;
        let x_fn = |t: f64| (alpha * t).exp() * (omega * t).cos();
        let dt = period / 4000.0;
        let times = grid(9001, dt);
        let x: Vec<f64> = times.iter().map(|&t| x_fn(t)).collect();
        let traj = sliding_fourier_scalar(&times, &x, period, &[1]).unwrap();

        let oracle = |t_end: f64| -> Complex64 {
            let n = 20_000usize; // even
            let h = period / n as f64;
            let f = |tau: f64| Complex64::from_polar(1.0, -omega * tau) * x_fn(tau);
            let mut acc = f(t_end - period) + f(t_end);
            for q in 1..n {
                let w = if q % 2 == 1 { 4.0 } else { 2.0 };
                acc += f(t_end - period + q as f64 * h) * w;
            }
            acc * h / 3.0 / period
        };

        for &ti in &[0usize, 1000, 3000, 4999] {
            let t_end = traj.times()[ti];
            let dev = (traj.value(0, 0, ti) - oracle(t_end)).norm();
            assert!(dev < 1e-6, "t = {t_end}: deviation {dev}");
        }
    }

    #[test]
    fn span_shorter_than_period_rejected() {
        let times = grid(50, 0.01);
        let x = vec![0.0; 50];
        assert!(sliding_fourier_scalar(&times, &x, 1.0, &[0]).is_err());
    }

    #[test]
    fn non_uniform_sampling_rejected() {
        let mut times = grid(200, 0.01);
        times[100] += 0.004;
        let x = vec![0.0; 200];
        assert!(sliding_fourier_scalar(&times, &x, 1.0, &[0]).is_err());
    }

    #[test]
    fn step_must_divide_period() {
        let times = grid(400, 0.0301);
        let x = vec![0.0; 400];
        assert!(sliding_fourier_scalar(&times, &x, 1.0, &[0]).is_err());
    }

    #[test]
    fn vector_signal_channels() {
        let period = 1.0;
        let dt = period / 200.0;
        let times = grid(601, dt);
        let samples: Vec<DVector<f64>> = times
            .iter()
            .map(|&t| DVector::from_vec(vec![(2.0 * PI * t).cos(), 2.0]))
            .collect();
        let traj = sliding_fourier(&times, &samples, period, &[0, 1]).unwrap();
        assert_eq!(traj.components(), 2);
        let last = traj.times().len() - 1;
        assert!(traj.value(0, 0, last).norm() < 1e-4); // cos has no DC
        assert!((traj.value(0, 1, last) - Complex64::new(0.5, 0.0)).norm() < 1e-4);
        assert!((traj.value(1, 0, last) - Complex64::new(2.0, 0.0)).norm() < 1e-9);
        assert!(traj.value(1, 1, last).norm() < 1e-9);
    }
}
