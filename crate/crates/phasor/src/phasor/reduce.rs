//! Harmonic reduction: fixed-order truncation and threshold-based neglect.

use super::PhasorArray;

/// Thresholding convention for [`PhasorArray::neglect`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceMode {
    /// Compare slice magnitudes against the threshold directly.
    Absolute,
    /// Compare against `threshold × max slice magnitude` (DC included).
    Relative,
}

impl PhasorArray {
    /// Enforces a fixed harmonic order: slices with |k| ≤ h_new are kept
    /// exactly, the rest dropped (or zero-padded if h_new exceeds the order).
    pub fn trunc(&self, h_new: usize) -> PhasorArray {
        let mut out = PhasorArray::from_raw(
            self.rows,
            self.cols,
            h_new,
            self.real,
            Self::zero_coeffs(self.rows, self.cols, h_new),
        );
        let keep = self.h.min(h_new) as i64;
        for k in -keep..=keep {
            out.set_slice(k, &self.slice_owned(k));
        }
        out
    }

    /// Drops harmonics whose slice magnitude falls below a threshold, then
    /// shrinks the order to the largest surviving |k|. The DC slice always
    /// survives. For real-flagged arrays the ±k pair is decided together.
    pub fn neglect(&self, threshold: f64, mode: ReduceMode) -> PhasorArray {
        assert!(threshold >= 0.0, "neglect: threshold must be non-negative");
        let cutoff = match mode {
            ReduceMode::Absolute => threshold,
            ReduceMode::Relative => {
                let peak = (-(self.h as i64)..=self.h as i64)
                    .map(|k| self.slice_magnitude(k))
                    .fold(0.0, f64::max);
                threshold * peak
            }
        };
        let keep = |k: i64| -> bool {
            if self.real {
                self.slice_magnitude(k).max(self.slice_magnitude(-k)) >= cutoff
            } else {
                self.slice_magnitude(k) >= cutoff
            }
        };
        let mut h_out = 0usize;
        for k in 1..=self.h as i64 {
            if keep(k) || (!self.real && keep(-k)) {
                h_out = h_out.max(k as usize);
            }
        }
        let mut out = PhasorArray::from_raw(
            self.rows,
            self.cols,
            h_out,
            self.real,
            Self::zero_coeffs(self.rows, self.cols, h_out),
        );
        out.set_slice(0, &self.slice_owned(0));
        for k in 1..=h_out as i64 {
            if keep(k) {
                out.set_slice(k, &self.slice_owned(k));
            }
            if keep(-k) {
                out.set_slice(-k, &self.slice_owned(-k));
            }
        }
        out
    }
}
