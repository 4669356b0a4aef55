//! Exact harmonic arithmetic on `PhasorArray` values.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::PhasorArray;
use crate::error::{Error, Result};

impl PhasorArray {
    /// Slicewise sum. Harmonic orders may differ; the shorter operand is
    /// zero-padded. The real flag survives only if both operands carry it.
    pub fn add(&self, rhs: &PhasorArray) -> Result<PhasorArray> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "add: {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let h = self.h.max(rhs.h);
        let mut out = PhasorArray::from_raw(
            self.rows,
            self.cols,
            h,
            self.real && rhs.real,
            Self::zero_coeffs(self.rows, self.cols, h),
        );
        for k in -(h as i64)..=h as i64 {
            let s = self.slice_owned(k) + rhs.slice_owned(k);
            out.set_slice(k, &s);
        }
        Ok(out)
    }

    /// Slicewise difference.
    pub fn sub(&self, rhs: &PhasorArray) -> Result<PhasorArray> {
        self.add(&rhs.neg())
    }

    /// Negation.
    pub fn neg(&self) -> PhasorArray {
        let mut out = self.clone();
        for z in &mut out.coeffs {
            *z = -*z;
        }
        out
    }

    /// Exact harmonic convolution `D_k = Σ_{i+l=k} A_i B_l`.
    ///
    /// The output order is `h_A + h_B`; nothing is truncated. Evaluating the
    /// product in time equals the product of the evaluations.
    pub fn mul(&self, rhs: &PhasorArray) -> Result<PhasorArray> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: inner dimensions differ ({}x{} times {}x{})",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let h = self.h + rhs.h;
        let real = self.real && rhs.real;
        let mut out = PhasorArray::from_raw(self.rows, rhs.cols, h, real, Self::zero_coeffs(self.rows, rhs.cols, h));
        // For real operands only k >= 0 is computed and the negative slices are
        // mirrored, which keeps conjugate symmetry bit-exact.
        let k_lo = if real { 0 } else { -(h as i64) };
        for k in k_lo..=h as i64 {
            let mut acc = DMatrix::<Complex64>::zeros(self.rows, rhs.cols);
            let i_lo = (-(self.h as i64)).max(k - rhs.h as i64);
            let i_hi = (self.h as i64).min(k + rhs.h as i64);
            for i in i_lo..=i_hi {
                acc.gemm(Complex64::new(1.0, 0.0), &self.slice(i), &rhs.slice(k - i), Complex64::new(1.0, 0.0));
            }
            if real && k == 0 {
                // the DC slice of a real product is real; drop rounding residue
                out.set_slice(0, &acc.map(|z| Complex64::new(z.re, 0.0)));
            } else {
                out.set_slice(k, &acc);
            }
            if real && k > 0 {
                out.set_slice(-k, &acc.map(|z| z.conj()));
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a complex scalar. A nonzero imaginary
    /// part clears the real flag.
    pub fn scale(&self, factor: Complex64) -> PhasorArray {
        let mut out = self.clone();
        out.real = self.real && factor.im == 0.0;
        for z in &mut out.coeffs {
            *z *= factor;
        }
        out
    }

    /// Plain transpose with respect to the time domain: slice k of the output
    /// is `(A_k)^T`, so that `out(t) = A(t)^T`.
    pub fn transpose(&self) -> PhasorArray {
        let mut out = PhasorArray::from_raw(self.cols, self.rows, self.h, self.real, Self::zero_coeffs(self.cols, self.rows, self.h));
        for k in -(self.h as i64)..=self.h as i64 {
            out.set_slice(k, &self.slice(k).transpose());
        }
        out
    }

    /// Hermitian conjugate with respect to the time domain: slice k of the
    /// output is `(A_{-k})^*`, so that `out(t) = A(t)^*`.
    pub fn hermitian(&self) -> PhasorArray {
        let mut out = PhasorArray::from_raw(self.cols, self.rows, self.h, self.real, Self::zero_coeffs(self.cols, self.rows, self.h));
        for k in -(self.h as i64)..=self.h as i64 {
            out.set_slice(k, &self.slice(-k).adjoint());
        }
        out
    }

    /// Harmonic differentiation: slice k of the output is `jkω A_k`, ω = 2π/T.
    pub fn derivative(&self, period: f64) -> Result<PhasorArray> {
        if period <= 0.0 {
            return Err(Error::InvalidArgument(format!("derivative: period must be positive, got {period}")));
        }
        let omega = 2.0 * std::f64::consts::PI / period;
        let mut out = self.clone();
        for k in -(self.h as i64)..=self.h as i64 {
            let f = Complex64::new(0.0, k as f64 * omega);
            let s = self.slice_owned(k) * f;
            out.set_slice(k, &s);
        }
        Ok(out)
    }

    /// Projects onto hermitian-valued arrays: `out(t) = (A(t) + A(t)^*)/2`,
    /// with the symmetry exact down to the last bit.
    pub fn snap_hermitian(&self) -> PhasorArray {
        assert!(self.is_square(), "snap_hermitian: matrix must be square");
        let mut out = self.clone();
        for k in 0..=self.h as i64 {
            let avg = (self.slice_owned(k) + self.slice_owned(-k).adjoint()).scale(0.5);
            out.set_slice(k, &avg);
            out.set_slice(-k, &avg.adjoint());
        }
        out
    }

    /// Projects onto real-valued hermitian-valued arrays (symmetric-valued in
    /// the time domain). Slices become complex-symmetric with exact conjugate
    /// pairing; the result carries the real flag.
    pub fn snap_real_hermitian(&self) -> PhasorArray {
        assert!(self.is_square(), "snap_real_hermitian: matrix must be square");
        let mut out = self.clone();
        for k in 0..=self.h as i64 {
            let y = (self.slice_owned(k) + self.slice_owned(-k).map(|z| z.conj())).scale(0.5);
            // symmetrize entrywise so w(i,j) and w(j,i) are bit-identical
            let n = y.nrows();
            let mut w = y.clone();
            for i in 0..n {
                for j in 0..i {
                    let avg = (y[(i, j)] + y[(j, i)]) * 0.5;
                    w[(i, j)] = avg;
                    w[(j, i)] = avg;
                }
            }
            if k == 0 {
                w = w.map(|z| Complex64::new(z.re, 0.0));
            }
            out.set_slice(k, &w);
            if k > 0 {
                out.set_slice(-k, &w.map(|z| z.conj()));
            }
        }
        out.real = true;
        out
    }
}

impl std::ops::Add for &PhasorArray {
    type Output = PhasorArray;
    fn add(self, rhs: &PhasorArray) -> PhasorArray {
        PhasorArray::add(self, rhs).expect("PhasorArray addition: dimension mismatch")
    }
}

impl std::ops::Sub for &PhasorArray {
    type Output = PhasorArray;
    fn sub(self, rhs: &PhasorArray) -> PhasorArray {
        PhasorArray::sub(self, rhs).expect("PhasorArray subtraction: dimension mismatch")
    }
}

impl std::ops::Mul for &PhasorArray {
    type Output = PhasorArray;
    fn mul(self, rhs: &PhasorArray) -> PhasorArray {
        PhasorArray::mul(self, rhs).expect("PhasorArray multiplication: dimension mismatch")
    }
}

impl std::ops::Mul<f64> for &PhasorArray {
    type Output = PhasorArray;
    fn mul(self, rhs: f64) -> PhasorArray {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

impl std::ops::Neg for &PhasorArray {
    type Output = PhasorArray;
    fn neg(self) -> PhasorArray {
        PhasorArray::neg(self)
    }
}
