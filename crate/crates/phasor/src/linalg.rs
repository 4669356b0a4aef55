//! Dense complex linear algebra kernels backed by LAPACK/BLAS (system OpenBLAS).
//!
//! Everything here operates on column-major `DMatrix<Complex64>` so buffers can
//! be handed to Fortran routines without copying the layout.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Unitary Schur factorization `A = Q T Q^*` with `T` upper triangular.
pub struct Schur {
    pub q: DMatrix<Complex64>,
    pub t: DMatrix<Complex64>,
    pub eigenvalues: Vec<Complex64>,
}

/// Eigenvalues and right eigenvectors of a general complex matrix.
pub struct Eigen {
    pub values: Vec<Complex64>,
    /// Column `k` is the (unit 2-norm) eigenvector for `values[k]`.
    pub vectors: DMatrix<Complex64>,
}

fn square_dims(a: &DMatrix<Complex64>, routine: &'static str) -> Result<i32> {
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidArgument(format!(
            "{routine}: matrix must be square, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(a.nrows() as i32)
}

/// Complex Schur decomposition via `zgees`.
pub fn schur(a: &DMatrix<Complex64>) -> Result<Schur> {
    let n = square_dims(a, "schur")?;
    let nu = n as usize;
    let mut t = a.as_slice().to_vec();
    let mut w = vec![ZERO; nu];
    let mut vs = vec![ZERO; nu * nu];
    let mut rwork = vec![0.0f64; nu.max(1)];
    let mut sdim = 0i32;
    let mut info = 0i32;
    let mut query = [ZERO];
    unsafe {
        lapack::zgees(
            b'V', b'N', None, n, &mut t, n.max(1), &mut sdim, &mut w, &mut vs, n.max(1),
            &mut query, -1, &mut rwork, &mut [], &mut info,
        );
    }
    let lwork = query[0].re as i32;
    let mut work = vec![ZERO; lwork.max(1) as usize];
    unsafe {
        lapack::zgees(
            b'V', b'N', None, n, &mut t, n.max(1), &mut sdim, &mut w, &mut vs, n.max(1),
            &mut work, lwork, &mut rwork, &mut [], &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "zgees", info });
    }
    Ok(Schur {
        q: DMatrix::from_vec(nu, nu, vs),
        t: DMatrix::from_vec(nu, nu, t),
        eigenvalues: w,
    })
}

/// Eigenvalues and right eigenvectors via `zgeev`.
pub fn eigen(a: &DMatrix<Complex64>) -> Result<Eigen> {
    let n = square_dims(a, "eigen")?;
    let nu = n as usize;
    let mut buf = a.as_slice().to_vec();
    let mut w = vec![ZERO; nu];
    let mut vr = vec![ZERO; nu * nu];
    let mut rwork = vec![0.0f64; (2 * nu).max(1)];
    let mut info = 0i32;
    let mut query = [ZERO];
    unsafe {
        lapack::zgeev(
            b'N', b'V', n, &mut buf, n.max(1), &mut w, &mut [], 1, &mut vr, n.max(1),
            &mut query, -1, &mut rwork, &mut info,
        );
    }
    let lwork = query[0].re as i32;
    let mut work = vec![ZERO; lwork.max(1) as usize];
    unsafe {
        lapack::zgeev(
            b'N', b'V', n, &mut buf, n.max(1), &mut w, &mut [], 1, &mut vr, n.max(1),
            &mut work, lwork, &mut rwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "zgeev", info });
    }
    Ok(Eigen { values: w, vectors: DMatrix::from_vec(nu, nu, vr) })
}

/// Eigenvalues of a hermitian matrix (ascending) via `zheevd`.
pub fn hermitian_eigenvalues(a: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let n = square_dims(a, "hermitian_eigenvalues")?;
    let nu = n as usize;
    if nu == 0 {
        return Ok(Vec::new());
    }
    let mut buf = a.as_slice().to_vec();
    let mut w = vec![0.0f64; nu];
    let mut info = 0i32;
    let mut qw = [ZERO];
    let mut qr = [0.0f64];
    let mut qi = [0i32];
    unsafe {
        lapack::zheevd(
            b'N', b'L', n, &mut buf, n, &mut w, &mut qw, -1, &mut qr, -1, &mut qi, -1, &mut info,
        );
    }
    let lwork = qw[0].re as i32;
    let lrwork = qr[0] as i32;
    let liwork = qi[0];
    let mut work = vec![ZERO; lwork.max(1) as usize];
    let mut rwork = vec![0.0f64; lrwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        lapack::zheevd(
            b'N', b'L', n, &mut buf, n, &mut w, &mut work, lwork, &mut rwork, lrwork, &mut iwork,
            liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack { routine: "zheevd", info });
    }
    Ok(w)
}

#[derive(Clone, Copy)]
pub enum Side {
    /// op(A) = A
    None,
    /// op(A) = A^*
    Adjoint,
}

/// `op(A) * op(B)` through `zgemm`.
pub fn mat_mul(a: &DMatrix<Complex64>, sa: Side, b: &DMatrix<Complex64>, sb: Side) -> DMatrix<Complex64> {
    let (ta, m, k) = match sa {
        Side::None => (b'N', a.nrows(), a.ncols()),
        Side::Adjoint => (b'C', a.ncols(), a.nrows()),
    };
    let (tb, kb, n) = match sb {
        Side::None => (b'N', b.nrows(), b.ncols()),
        Side::Adjoint => (b'C', b.ncols(), b.nrows()),
    };
    assert_eq!(k, kb, "mat_mul: inner dimensions differ");
    let mut c = vec![ZERO; m * n];
    unsafe {
        blas::zgemm(
            ta, tb, m as i32, n as i32, k as i32, ONE, a.as_slice(), a.nrows().max(1) as i32,
            b.as_slice(), b.nrows().max(1) as i32, ZERO, &mut c, m.max(1) as i32,
        );
    }
    DMatrix::from_vec(m, n, c)
}

/// Solves `A X + X B + C = 0` (Bartels–Stewart: two Schur forms + `ztrsyl`).
pub fn solve_sylvester(
    a: &DMatrix<Complex64>,
    b: &DMatrix<Complex64>,
    c: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>> {
    let sa = schur(a)?;
    let sb = schur(b)?;
    // T_a Y + Y T_b = -Qa^* C Qb
    let rhs = mat_mul(&mat_mul(&sa.q, Side::Adjoint, c, Side::None), Side::None, &sb.q, Side::None);
    let y = solve_triangular_sylvester(&sa.t, false, &sb.t, &(-rhs))?;
    Ok(mat_mul(&mat_mul(&sa.q, Side::None, &y, Side::None), Side::None, &sb.q, Side::Adjoint))
}

/// Solves `M^* P + P M + Q = 0` with a single Schur pass over `M`.
pub fn solve_lyapunov_adjoint(
    m: &DMatrix<Complex64>,
    q: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>> {
    let sm = schur(m)?;
    let rhs = mat_mul(&mat_mul(&sm.q, Side::Adjoint, q, Side::None), Side::None, &sm.q, Side::None);
    let y = solve_triangular_sylvester(&sm.t, true, &sm.t, &(-rhs))?;
    Ok(mat_mul(&mat_mul(&sm.q, Side::None, &y, Side::None), Side::None, &sm.q, Side::Adjoint))
}

/// Solves `op(Ta) X + X Tb = C` for upper-triangular `Ta`, `Tb` via `ztrsyl`,
/// where `op` is the identity or the conjugate transpose.
fn solve_triangular_sylvester(
    ta: &DMatrix<Complex64>,
    adjoint_left: bool,
    tb: &DMatrix<Complex64>,
    c: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>> {
    let m = ta.nrows() as i32;
    let n = tb.nrows() as i32;
    let mut x = c.as_slice().to_vec();
    let mut scale = [1.0f64];
    let mut info = 0i32;
    let trana = if adjoint_left { b'C' } else { b'N' };
    unsafe {
        lapack::ztrsyl(
            trana, b'N', &[1], m, n, ta.as_slice(), m.max(1), tb.as_slice(), n.max(1), &mut x,
            m.max(1), &mut scale, &mut info,
        );
    }
    match info {
        0 => {}
        1 => return Err(Error::SpectralOverlap),
        _ => return Err(Error::Lapack { routine: "ztrsyl", info }),
    }
    let mut out = DMatrix::from_vec(ta.nrows(), tb.nrows(), x);
    if scale[0] != 1.0 {
        out /= Complex64::new(scale[0], 0.0);
    }
    Ok(out)
}

/// Matrix exponential by Padé(13) with scaling and squaring.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    assert_eq!(a.nrows(), a.ncols(), "expm: matrix must be square");
    let n = a.nrows();
    const THETA_13: f64 = 5.371_920_351_148_152;
    #[rustfmt::skip]
    const B: [f64; 14] = [
        64_764_752_532_480_000.0, 32_382_376_266_240_000.0, 7_771_770_303_897_600.0,
        1_187_353_796_428_800.0, 129_060_195_264_000.0, 10_559_470_521_600.0,
        670_442_572_800.0, 33_522_128_640.0, 1_323_241_920.0, 40_840_800.0,
        960_960.0, 16_380.0, 182.0, 1.0,
    ];
    // 1-norm based scaling
    let norm = a
        .column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as u32
    } else {
        0
    };
    let a1 = a / Complex64::new(2f64.powi(s as i32), 0.0);
    let id = DMatrix::<Complex64>::identity(n, n);
    let a2 = mat_mul(&a1, Side::None, &a1, Side::None);
    let a4 = mat_mul(&a2, Side::None, &a2, Side::None);
    let a6 = mat_mul(&a2, Side::None, &a4, Side::None);
    let cb = |k: usize| Complex64::new(B[k], 0.0);
    let u_inner = &a6 * cb(13) + &a4 * cb(11) + &a2 * cb(9);
    let u_poly = mat_mul(&a6, Side::None, &u_inner, Side::None)
        + &a6 * cb(7)
        + &a4 * cb(5)
        + &a2 * cb(3)
        + &id * cb(1);
    let u = mat_mul(&a1, Side::None, &u_poly, Side::None);
    let v_inner = &a6 * cb(12) + &a4 * cb(10) + &a2 * cb(8);
    let v = mat_mul(&a6, Side::None, &v_inner, Side::None)
        + &a6 * cb(6)
        + &a4 * cb(4)
        + &a2 * cb(2)
        + &id * cb(0);
    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut f = lhs
        .lu()
        .solve(&rhs)
        .expect("expm: Padé denominator is singular");
    for _ in 0..s {
        f = mat_mul(&f, Side::None, &f, Side::None);
    }
    f
}

/// Solves the dense system `A x = b` by LU with partial pivoting.
pub fn solve_dense(a: &DMatrix<Complex64>, b: &DVector<Complex64>) -> Option<DVector<Complex64>> {
    a.clone().lu().solve(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_matrix(n: usize, seed: u64) -> DMatrix<Complex64> {
        // deterministic pseudo-random entries, no RNG dependency needed here
        DMatrix::from_fn(n, n, |i, j| {
            let v = (seed as f64 + (i * 31 + j * 17) as f64).sin();
            let w = (seed as f64 * 0.7 + (i * 13 + j * 41) as f64).cos();
            Complex64::new(v, 0.5 * w)
        })
    }

    #[test]
    fn schur_reconstructs_and_is_triangular() {
        let a = test_matrix(12, 3);
        let s = schur(&a).unwrap();
        let recon = mat_mul(&mat_mul(&s.q, Side::None, &s.t, Side::None), Side::None, &s.q, Side::Adjoint);
        assert!((recon - &a).norm() < 1e-12 * a.norm().max(1.0));
        for i in 0..12 {
            for j in 0..i {
                assert_eq!(s.t[(i, j)], ZERO);
            }
        }
    }

    #[test]
    fn eigen_pairs_satisfy_definition() {
        let a = test_matrix(10, 7);
        let e = eigen(&a).unwrap();
        for k in 0..10 {
            let v = e.vectors.column(k);
            let r = (&a * v - v * e.values[k]).norm();
            assert!(r < 1e-12, "eigenpair residual {r}");
        }
    }

    #[test]
    fn hermitian_eigenvalues_match_trace() {
        let a = test_matrix(8, 11);
        let h = (&a + a.adjoint()) * Complex64::new(0.5, 0.0);
        let w = hermitian_eigenvalues(&h).unwrap();
        let tr: f64 = (0..8).map(|i| h[(i, i)].re).sum();
        assert!((w.iter().sum::<f64>() - tr).abs() < 1e-10);
        assert!(w.windows(2).all(|p| p[0] <= p[1]));
    }

    #[test]
    fn sylvester_solution_satisfies_equation() {
        let a = test_matrix(9, 1) - DMatrix::identity(9, 9) * Complex64::new(4.0, 0.0);
        let b = test_matrix(7, 2) - DMatrix::identity(7, 7) * Complex64::new(3.0, 0.0);
        let c = DMatrix::from_fn(9, 7, |i, j| Complex64::new((i + 2 * j) as f64, j as f64 * 0.3));
        let x = solve_sylvester(&a, &b, &c).unwrap();
        let r = (&a * &x + &x * &b + &c).norm();
        assert!(r < 1e-10, "residual {r}");
    }

    #[test]
    fn lyapunov_adjoint_solution_satisfies_equation() {
        let m = test_matrix(8, 5) - DMatrix::identity(8, 8) * Complex64::new(5.0, 0.0);
        let q0 = test_matrix(8, 6);
        let q = (&q0 + q0.adjoint()) * Complex64::new(0.5, 0.0);
        let p = solve_lyapunov_adjoint(&m, &q).unwrap();
        let r = (m.adjoint() * &p + &p * &m + &q).norm();
        assert!(r < 1e-10, "residual {r}");
        // self-adjoint right-hand side gives a self-adjoint solution
        assert!((&p - p.adjoint()).norm() < 1e-10);
    }

    #[test]
    fn expm_matches_diagonal_and_inverse() {
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![
            Complex64::new(0.3, 1.0),
            Complex64::new(-0.7, -2.0),
            Complex64::new(0.0, 0.0),
        ]));
        let e = expm(&d);
        for i in 0..3 {
            assert!((e[(i, i)] - d[(i, i)].exp()).norm() < 1e-14);
        }
        let a = test_matrix(6, 9);
        let fwd = expm(&a);
        let bwd = expm(&(-&a));
        let prod = mat_mul(&fwd, Side::None, &bwd, Side::None);
        assert!((prod - DMatrix::<Complex64>::identity(6, 6)).norm() < 1e-10);
    }

    #[test]
    fn expm_nilpotent_exact() {
        let mut a = DMatrix::<Complex64>::zeros(2, 2);
        a[(0, 1)] = Complex64::new(3.0, 0.0);
        let e = expm(&a);
        assert!((e[(0, 0)] - ONE).norm() < 1e-15);
        assert!((e[(0, 1)] - Complex64::new(3.0, 0.0)).norm() < 1e-15);
        assert!((e[(1, 1)] - ONE).norm() < 1e-15);
        assert!(e[(1, 0)].norm() < 1e-15);
    }
}
