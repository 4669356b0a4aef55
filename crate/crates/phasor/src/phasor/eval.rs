//! Time- and phase-domain evaluation of `PhasorArray` values.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::PhasorArray;
use crate::error::{Error, Result};

impl PhasorArray {
    /// Evaluates `A(θ) = Σ_k A_k e^{jkθ}` at one phase angle.
    ///
    /// For real-flagged arrays the sum is formed as `A_0 + 2 Re(Σ_{k>0} A_k e^{jkθ})`,
    /// so the imaginary residue vanishes identically.
    pub fn eval_phase(&self, theta: f64) -> DMatrix<Complex64> {
        let mut acc = self.slice_owned(0);
        if self.real {
            let mut re_acc = acc.map(|z| z.re);
            for k in 1..=self.h as i64 {
                let e = Complex64::from_polar(1.0, k as f64 * theta);
                let slice = self.slice(k);
                re_acc.zip_apply(&slice, |r, s| *r += 2.0 * (s * e).re);
            }
            re_acc.map(|r| Complex64::new(r, 0.0))
        } else {
            for k in 1..=self.h as i64 {
                let ep = Complex64::from_polar(1.0, k as f64 * theta);
                let em = ep.conj();
                let sp = self.slice(k);
                let sm = self.slice(-k);
                acc.zip_zip_apply(&sp, &sm, |a, p, m| *a += p * ep + m * em);
            }
            acc
        }
    }

    /// Evaluates `A(t)` at the given instants. For real-flagged arrays the
    /// returned matrices have exactly zero imaginary parts.
    pub fn eval_time(&self, period: f64, times: &[f64]) -> Result<Vec<DMatrix<Complex64>>> {
        if period <= 0.0 {
            return Err(Error::InvalidArgument(format!("eval_time: period must be positive, got {period}")));
        }
        let omega = 2.0 * std::f64::consts::PI / period;
        Ok(times.iter().map(|&t| self.eval_phase(omega * t)).collect())
    }

    /// Real-matrix evaluation; requires the real flag.
    pub fn eval_time_real(&self, period: f64, times: &[f64]) -> Result<Vec<DMatrix<f64>>> {
        if !self.real {
            return Err(Error::InvalidArgument(
                "eval_time_real: array is not flagged as a real-valued signal".into(),
            ));
        }
        Ok(self
            .eval_time(period, times)?
            .into_iter()
            .map(|m| m.map(|z| z.re))
            .collect())
    }
}
