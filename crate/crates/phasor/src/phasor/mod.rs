//! The `PhasorArray` value type: a periodic matrix stored by its Fourier
//! coefficients.
//!
//! A T-periodic matrix `A(t) = Σ_{k=-h}^{h} A_k e^{jkωt}` (ω = 2π/T) is stored
//! as 2h+1 complex n×m slices in one contiguous buffer, the DC slice `A_0` in
//! the middle. Arithmetic is exact in the harmonic domain: multiplication is
//! the full convolution `D_k = Σ_{i+l=k} A_i B_l` and never truncates.
//!
//! Values are immutable after construction; every operation returns a new value.

mod arith;
mod eval;
mod json;
mod reduce;
mod sampling;

pub use reduce::ReduceMode;
pub use sampling::InverseOptions;

use nalgebra::{DMatrix, DMatrixView};
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Truncated Fourier-coefficient representation of a periodic n×m matrix.
#[derive(Clone)]
pub struct PhasorArray {
    rows: usize,
    cols: usize,
    h: usize,
    real: bool,
    /// Slice-major storage: slice k+h holds the n×m coefficient matrix of
    /// `e^{jkωt}`, column-major. All index arithmetic stays in this module.
    coeffs: Vec<Complex64>,
}

/// Ordering convention for [`PhasorArray::from_slices`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceOrder {
    /// All 2h+1 slices, ordered k = -h..h.
    Full,
    /// Slices A_0, A_1, ..., A_h of a real-valued signal; A_{-k} = conj(A_k)
    /// is filled in and the result carries the real-valued flag.
    DcAndPositive,
}

impl PhasorArray {
    pub(crate) fn from_raw(rows: usize, cols: usize, h: usize, real: bool, coeffs: Vec<Complex64>) -> Self {
        assert_eq!(coeffs.len(), rows * cols * (2 * h + 1));
        assert!(rows > 0 && cols > 0);
        PhasorArray { rows, cols, h, real, coeffs }
    }

    fn zero_coeffs(rows: usize, cols: usize, h: usize) -> Vec<Complex64> {
        vec![Complex64::new(0.0, 0.0); rows * cols * (2 * h + 1)]
    }

    /// Time-domain row count n.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Time-domain column count m.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Maximum harmonic order h; the array holds 2h+1 slices.
    pub fn order(&self) -> usize {
        self.h
    }

    /// Whether the array is flagged as a real-valued signal
    /// (`A_{-k} = conj(A_k)` holds exactly).
    pub fn is_real(&self) -> bool {
        self.real
    }

    /// True when the time-domain matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn slice_offset(&self, k: i64) -> usize {
        debug_assert!(k.unsigned_abs() as usize <= self.h);
        (k + self.h as i64) as usize * self.rows * self.cols
    }

    /// Coefficient A_k(i, j). Returns zero for |k| > h; panics on out-of-range
    /// matrix indices.
    pub fn coeff(&self, i: usize, j: usize, k: i64) -> Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        if k.unsigned_abs() as usize > self.h {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[self.slice_offset(k) + j * self.rows + i]
    }

    pub(crate) fn coeff_mut(&mut self, i: usize, j: usize, k: i64) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols && k.unsigned_abs() as usize <= self.h);
        let off = self.slice_offset(k);
        &mut self.coeffs[off + j * self.rows + i]
    }

    /// Borrowed view of coefficient slice k (|k| ≤ h).
    pub fn slice(&self, k: i64) -> DMatrixView<'_, Complex64> {
        assert!(k.unsigned_abs() as usize <= self.h, "harmonic index out of range");
        let off = self.slice_offset(k);
        DMatrixView::from_slice(&self.coeffs[off..off + self.rows * self.cols], self.rows, self.cols)
    }

    /// Owned copy of slice k; zero matrix for |k| > h.
    pub fn slice_owned(&self, k: i64) -> DMatrix<Complex64> {
        if k.unsigned_abs() as usize > self.h {
            DMatrix::zeros(self.rows, self.cols)
        } else {
            self.slice(k).into_owned()
        }
    }

    pub(crate) fn set_slice(&mut self, k: i64, m: &DMatrix<Complex64>) {
        assert_eq!((m.nrows(), m.ncols()), (self.rows, self.cols));
        let off = self.slice_offset(k);
        self.coeffs[off..off + self.rows * self.cols].copy_from_slice(m.as_slice());
    }

    /// Largest coefficient magnitude of slice k (0 for |k| > h).
    pub fn slice_magnitude(&self, k: i64) -> f64 {
        if k.unsigned_abs() as usize > self.h {
            return 0.0;
        }
        let off = self.slice_offset(k);
        self.coeffs[off..off + self.rows * self.cols]
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest coefficient magnitude over all slices.
    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Builds a PhasorArray from explicit coefficient slices.
    pub fn from_slices(slices: &[DMatrix<Complex64>], order: SliceOrder) -> Result<Self> {
        if slices.is_empty() {
            return Err(Error::InvalidArgument("from_slices: empty slice list".into()));
        }
        let (rows, cols) = (slices[0].nrows(), slices[0].ncols());
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument("from_slices: slices must be non-empty matrices".into()));
        }
        for (idx, s) in slices.iter().enumerate() {
            if (s.nrows(), s.ncols()) != (rows, cols) {
                return Err(Error::DimensionMismatch(format!(
                    "from_slices: slice {idx} is {}x{}, expected {rows}x{cols}",
                    s.nrows(),
                    s.ncols()
                )));
            }
        }
        match order {
            SliceOrder::Full => {
                if slices.len() % 2 == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "from_slices: full ordering needs an odd number of slices (2h+1), got {}",
                        slices.len()
                    )));
                }
                let h = (slices.len() - 1) / 2;
                let mut out = PhasorArray::from_raw(rows, cols, h, false, Self::zero_coeffs(rows, cols, h));
                for (idx, s) in slices.iter().enumerate() {
                    out.set_slice(idx as i64 - h as i64, s);
                }
                out.detect_and_snap_real();
                Ok(out)
            }
            SliceOrder::DcAndPositive => {
                let h = slices.len() - 1;
                let mut out = PhasorArray::from_raw(rows, cols, h, true, Self::zero_coeffs(rows, cols, h));
                for (k, s) in slices.iter().enumerate() {
                    if k == 0 {
                        // A_0 = conj(A_0) must hold for a real-valued signal
                        out.set_slice(0, &s.map(|z| Complex64::new(z.re, 0.0)));
                    } else {
                        out.set_slice(k as i64, s);
                        out.set_slice(-(k as i64), &s.map(|z| z.conj()));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Sets the real flag if conjugate symmetry holds within 1e-12, snapping
    /// coefficients so the symmetry becomes exact.
    fn detect_and_snap_real(&mut self) {
        let mut worst = 0.0f64;
        for k in 0..=self.h as i64 {
            let pos = self.slice_owned(k);
            let neg = self.slice_owned(-k);
            for (a, b) in pos.iter().zip(neg.iter()) {
                worst = worst.max((a - b.conj()).norm());
            }
        }
        if worst <= 1e-12 {
            self.snap_real();
        }
    }

    /// Forces exact conjugate symmetry (A_{-k} := conj of the averaged A_k)
    /// and sets the real flag.
    pub(crate) fn snap_real(&mut self) {
        for k in 0..=self.h as i64 {
            let avg = (self.slice_owned(k) + self.slice_owned(-k).map(|z| z.conj())).scale(0.5);
            self.set_slice(k, &avg);
            if k > 0 {
                self.set_slice(-k, &avg.map(|z| z.conj()));
            }
        }
        self.real = true;
    }

    /// All-zero constant matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PhasorArray::from_raw(rows, cols, 0, true, Self::zero_coeffs(rows, cols, 0))
    }

    /// Constant identity matrix.
    pub fn eye(n: usize) -> Self {
        Self::from_constant_complex(DMatrix::identity(n, n))
    }

    /// Constant (h = 0) PhasorArray from a real matrix.
    pub fn from_constant(m: DMatrix<f64>) -> Self {
        Self::from_constant_complex(m.map(|v| Complex64::new(v, 0.0)))
    }

    /// Constant (h = 0) PhasorArray from a complex matrix.
    pub fn from_constant_complex(m: DMatrix<Complex64>) -> Self {
        let real = m.iter().all(|z| z.im == 0.0);
        let mut out = PhasorArray::from_raw(m.nrows(), m.ncols(), 0, real, Self::zero_coeffs(m.nrows(), m.ncols(), 0));
        out.set_slice(0, &m);
        out
    }

    /// Scalar cos(ωt): phasors (1/2, 0, 1/2).
    pub fn cos() -> Self {
        let half = DMatrix::from_element(1, 1, Complex64::new(0.5, 0.0));
        Self::from_slices(&[DMatrix::zeros(1, 1), half], SliceOrder::DcAndPositive).unwrap()
    }

    /// Scalar sin(ωt): phasors (j/2, 0, -j/2).
    pub fn sin() -> Self {
        let mj_half = DMatrix::from_element(1, 1, Complex64::new(0.0, -0.5));
        Self::from_slices(&[DMatrix::zeros(1, 1), mj_half], SliceOrder::DcAndPositive).unwrap()
    }

    /// Random real-valued test matrix: conjugate symmetry imposed, slice
    /// magnitudes decaying geometrically with |k| (ratio 0.5).
    pub fn random<R: Rng>(rows: usize, cols: usize, h: usize, rng: &mut R) -> Self {
        Self::random_with_decay(rows, cols, h, 0.5, rng)
    }

    /// Random real-valued test matrix with explicit decay ratio.
    pub fn random_with_decay<R: Rng>(rows: usize, cols: usize, h: usize, decay: f64, rng: &mut R) -> Self {
        let mut out = PhasorArray::from_raw(rows, cols, h, true, Self::zero_coeffs(rows, cols, h));
        let dc = DMatrix::from_fn(rows, cols, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        out.set_slice(0, &dc);
        for k in 1..=h as i64 {
            let amp = decay.powi(k as i32);
            let s = DMatrix::from_fn(rows, cols, |_, _| {
                Complex64::new(rng.gen_range(-amp..amp), rng.gen_range(-amp..amp))
            });
            out.set_slice(k, &s);
            out.set_slice(-k, &s.map(|z| z.conj()));
        }
        out
    }

    /// The (i, j) entry as a 1×1 PhasorArray carrying all harmonics.
    pub fn element_at(&self, i: usize, j: usize) -> Result<PhasorArray> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::InvalidArgument(format!(
                "element_at: index ({i}, {j}) out of range for {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = PhasorArray::from_raw(1, 1, self.h, self.real, Self::zero_coeffs(1, 1, self.h));
        for k in -(self.h as i64)..=self.h as i64 {
            *out.coeff_mut(0, 0, k) = self.coeff(i, j, k);
        }
        Ok(out)
    }
}

/// Equality of the represented periodic matrices: same time-domain shape and
/// identical coefficients over the union of harmonic ranges (trailing zero
/// slices do not distinguish two arrays). The real flag is not compared.
impl PartialEq for PhasorArray {
    fn eq(&self, other: &Self) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        let h = self.h.max(other.h) as i64;
        for k in -h..=h {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    if self.coeff(i, j, k) != other.coeff(i, j, k) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl std::fmt::Display for PhasorArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}x{} {} periodic matrix with {} harmonics",
            self.rows,
            self.cols,
            if self.real { "real-valued" } else { "complex-valued" },
            self.h
        )
    }
}

impl std::fmt::Debug for PhasorArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PhasorArray({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dc_and_positive_builds_conjugate_symmetric_array() {
        // the explicit three-harmonic 2x2 construction
        let a0 = DMatrix::from_row_slice(2, 2, &[c(1.5, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-0.5, 0.0)]);
        let a1 = DMatrix::from_row_slice(2, 2, &[
            c(-4.0 / PI.powi(2), 0.0), c(0.5, 0.0),
            c(0.0, 0.0), c(0.0, -1.0 / PI),
        ]);
        let a2 = DMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.5), c(0.0, 0.0)]);
        let a3 = DMatrix::from_row_slice(2, 2, &[
            c(4.0 / (9.0 * PI.powi(2)), 0.0), c(0.0, 0.0),
            c(0.0, 0.0), c(0.0, -1.0 / (3.0 * PI)),
        ]);
        let a = PhasorArray::from_slices(&[a0, a1.clone(), a2, a3], SliceOrder::DcAndPositive).unwrap();
        assert_eq!((a.rows(), a.cols(), a.order()), (2, 2, 3));
        assert!(a.is_real());
        assert_eq!(a.to_string(), "2x2 real-valued periodic matrix with 3 harmonics");
        for k in 0..=3i64 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(a.coeff(i, j, -k), a.coeff(i, j, k).conj());
                }
            }
        }
        assert_eq!(a.coeff(1, 1, 1), c(0.0, -1.0 / PI));
    }

    #[test]
    fn full_single_slice_is_constant() {
        let a = PhasorArray::from_slices(&[DMatrix::from_element(1, 1, c(2.0, 0.0))], SliceOrder::Full).unwrap();
        assert_eq!(a.order(), 0);
        assert!(a.is_real());
        assert_eq!(a.coeff(0, 0, 0), c(2.0, 0.0));
        assert_eq!(a.coeff(0, 0, 5), c(0.0, 0.0));
    }

    #[test]
    fn dc_and_positive_sin_identity() {
        let a = PhasorArray::from_slices(
            &[DMatrix::zeros(1, 1), DMatrix::from_element(1, 1, c(0.0, -0.5))],
            SliceOrder::DcAndPositive,
        )
        .unwrap();
        assert_eq!(a.coeff(0, 0, -1), c(0.0, 0.5));
        assert_eq!(a.coeff(0, 0, 0), c(0.0, 0.0));
        assert_eq!(a.coeff(0, 0, 1), c(0.0, -0.5));
        assert_eq!(a, PhasorArray::sin());
    }

    #[test]
    fn full_even_length_rejected() {
        let s = vec![DMatrix::<Complex64>::zeros(1, 1); 4];
        assert!(PhasorArray::from_slices(&s, SliceOrder::Full).is_err());
    }

    #[test]
    fn inconsistent_slice_dims_rejected() {
        let s = vec![DMatrix::<Complex64>::zeros(2, 2), DMatrix::<Complex64>::zeros(2, 3)];
        assert!(PhasorArray::from_slices(&s, SliceOrder::DcAndPositive).is_err());
    }

    #[test]
    fn element_at_extracts_fiber() {
        let a = PhasorArray::eye(2);
        let e12 = a.element_at(0, 1).unwrap();
        assert_eq!((e12.rows(), e12.cols()), (1, 1));
        assert_eq!(e12.coeff(0, 0, 0), c(0.0, 0.0));
        let e11 = a.element_at(0, 0).unwrap();
        assert_eq!(e11.coeff(0, 0, 0), c(1.0, 0.0));
        assert!(a.element_at(2, 0).is_err());
    }

    #[test]
    fn random_is_conjugate_symmetric_and_decays() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let a = PhasorArray::random(3, 2, 6, &mut rng);
        assert!(a.is_real());
        for k in 1..=6i64 {
            for i in 0..3 {
                for j in 0..2 {
                    assert_eq!(a.coeff(i, j, -k), a.coeff(i, j, k).conj());
                }
            }
            assert!(a.slice_magnitude(k) <= 0.5f64.powi(k as i32) * 2.0f64.sqrt() + 1e-15);
        }
    }
}
