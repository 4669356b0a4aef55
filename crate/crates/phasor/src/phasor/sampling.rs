//! Grid sampling and FFT-based harmonic extraction: building a `PhasorArray`
//! from a periodic function handle, and the time-domain inverse.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::FftPlanner;

use super::{PhasorArray, ReduceMode};
use crate::error::{Error, Result};

/// Options for [`PhasorArray::inverse_with`].
#[derive(Clone, Debug)]
pub struct InverseOptions {
    /// Sampling grid exponent N (2^N points over one period). When `None`,
    /// the smallest N with `2^{N-1} - 1 >= 4h` is used, at least 8.
    pub grid_exp: Option<u32>,
    /// Absolute threshold below which output harmonics are dropped.
    pub reduce_threshold: f64,
    /// Samples with a 1-norm condition estimate above this bound are rejected.
    pub max_condition: f64,
}

impl Default for InverseOptions {
    fn default() -> Self {
        InverseOptions { grid_exp: None, reduce_threshold: 1e-12, max_condition: 1e12 }
    }
}

/// Extracts centered harmonics from one period of uniform samples.
///
/// `samples` holds 2^N matrices; the result has order h = 2^{N-1} - 1 (the
/// Nyquist bin is dropped so the slice count stays odd). When `real` is set,
/// negative harmonics are mirrored from the conjugates of the positive ones.
fn harmonics_from_samples(samples: &[DMatrix<Complex64>], real: bool) -> PhasorArray {
    let m = samples.len();
    debug_assert!(m >= 4 && m.is_power_of_two());
    let (rows, cols) = (samples[0].nrows(), samples[0].ncols());
    let h = m / 2 - 1;
    let mut out = PhasorArray::from_raw(rows, cols, h, real, PhasorArray::zero_coeffs(rows, cols, h));
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(m);
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    for i in 0..rows {
        for j in 0..cols {
            for (q, s) in samples.iter().enumerate() {
                buf[q] = s[(i, j)];
            }
            fft.process(&mut buf);
            let scale = 1.0 / m as f64;
            for k in 0..=h as i64 {
                let pos = buf[k as usize] * scale;
                *out.coeff_mut(i, j, k) = pos;
                if k > 0 {
                    *out.coeff_mut(i, j, -k) = if real {
                        pos.conj()
                    } else {
                        buf[m - k as usize] * scale
                    };
                }
            }
            if real {
                let dc = out.coeff(i, j, 0);
                *out.coeff_mut(i, j, 0) = Complex64::new(dc.re, 0.0);
            }
        }
    }
    out
}

fn check_sample(s: &DMatrix<Complex64>, rows: usize, cols: usize, t: f64) -> Result<()> {
    if (s.nrows(), s.ncols()) != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "sampler returned a {}x{} matrix at t = {t}, expected {rows}x{cols}",
            s.nrows(),
            s.ncols()
        )));
    }
    if s.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::InvalidArgument(format!("sampler returned a non-finite value at t = {t}")));
    }
    Ok(())
}

impl PhasorArray {
    /// Samples a real-valued periodic matrix function on a 2^N grid over one
    /// period and extracts its harmonics by FFT (order h = 2^{N-1} - 1).
    pub fn from_function<F>(sampler: F, period: f64, grid_exp: u32) -> Result<PhasorArray>
    where
        F: Fn(f64) -> DMatrix<f64>,
    {
        Self::sample_grid(|t| sampler(t).map(|v| Complex64::new(v, 0.0)), period, grid_exp, Some(true))
    }

    /// Complex-sampler variant of [`PhasorArray::from_function`]. The real
    /// flag is set when every sample is exactly real.
    pub fn from_function_complex<F>(sampler: F, period: f64, grid_exp: u32) -> Result<PhasorArray>
    where
        F: Fn(f64) -> DMatrix<Complex64>,
    {
        Self::sample_grid(sampler, period, grid_exp, None)
    }

    fn sample_grid<F>(sampler: F, period: f64, grid_exp: u32, real_hint: Option<bool>) -> Result<PhasorArray>
    where
        F: Fn(f64) -> DMatrix<Complex64>,
    {
        if period <= 0.0 {
            return Err(Error::InvalidArgument(format!("from_function: period must be positive, got {period}")));
        }
        if grid_exp < 2 {
            return Err(Error::InvalidArgument(format!(
                "from_function: grid exponent must be at least 2, got {grid_exp}"
            )));
        }
        let m = 1usize << grid_exp;
        let mut samples = Vec::with_capacity(m);
        let first = sampler(0.0);
        let (rows, cols) = (first.nrows(), first.ncols());
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("from_function: sampler must return a non-empty matrix".into()));
        }
        check_sample(&first, rows, cols, 0.0)?;
        samples.push(first);
        for q in 1..m {
            let t = q as f64 * period / m as f64;
            let s = sampler(t);
            check_sample(&s, rows, cols, t)?;
            samples.push(s);
        }
        let real = real_hint.unwrap_or_else(|| samples.iter().all(|s| s.iter().all(|z| z.im == 0.0)));
        Ok(harmonics_from_samples(&samples, real))
    }

    /// Pointwise time-domain inverse `A(t)^{-1}` reconstructed via FFT, with
    /// default options (see [`InverseOptions`]).
    pub fn inverse(&self) -> Result<PhasorArray> {
        self.inverse_with(&InverseOptions::default())
    }

    /// Pointwise time-domain inverse with explicit grid and reduction options.
    ///
    /// The matrix is evaluated on a 2^N phase grid, inverted sample by sample
    /// and the harmonics of the inverse are extracted by FFT. Harmonics below
    /// the reduction threshold are dropped. Samples whose condition estimate
    /// exceeds the bound abort with [`Error::SingularSample`] (the reported
    /// `t` is the offending fraction of the period).
    pub fn inverse_with(&self, opts: &InverseOptions) -> Result<PhasorArray> {
        if !self.is_square() {
            return Err(Error::InvalidArgument(format!(
                "inverse: matrix must be square, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n_exp = opts.grid_exp.unwrap_or_else(|| {
            let mut n = 8u32;
            while ((1usize << (n - 1)) - 1) < 4 * self.h {
                n += 1;
            }
            n
        });
        let m = 1usize << n_exp;
        let mut inverses = Vec::with_capacity(m);
        for q in 0..m {
            let theta = 2.0 * std::f64::consts::PI * q as f64 / m as f64;
            let sample = self.eval_phase(theta);
            let norm_a = one_norm(&sample);
            let t_frac = q as f64 / m as f64;
            let inv = sample.lu().try_inverse().ok_or(Error::SingularSample {
                t: t_frac,
                cond: f64::INFINITY,
            })?;
            let cond = norm_a * one_norm(&inv);
            if !cond.is_finite() || cond > opts.max_condition {
                return Err(Error::SingularSample { t: t_frac, cond });
            }
            inverses.push(inv);
        }
        let real = self.real;
        let raw = harmonics_from_samples(&inverses, real);
        Ok(raw.neglect(opts.reduce_threshold, ReduceMode::Absolute))
    }
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}
