//! Reference periodic waveforms (MATLAB `sawtooth`/`square` conventions).
//!
//! All functions take a phase in radians and are 2π-periodic.

/// Sawtooth wave in [-1, 1] with adjustable peak position.
///
/// Rises linearly from -1 to 1 on `[0, 2π·width)`, then falls linearly back to
/// -1 on `[2π·width, 2π)`. `width = 1` is the classic sawtooth, `width = 0.5`
/// the symmetric triangle peaking at phase π.
pub fn sawtooth(theta: f64, width: f64) -> f64 {
    assert!((0.0..=1.0).contains(&width), "width must lie in [0, 1]");
    let x = (theta / (2.0 * std::f64::consts::PI)).rem_euclid(1.0);
    if x < width {
        -1.0 + 2.0 * x / width
    } else {
        1.0 - 2.0 * (x - width) / (1.0 - width)
    }
}

/// Symmetric triangle wave, peak +1 at phase π.
pub fn triangle(theta: f64) -> f64 {
    sawtooth(theta, 0.5)
}

/// Square wave: +1 on [0, π), -1 on [π, 2π).
pub fn square(theta: f64) -> f64 {
    let x = (theta / (2.0 * std::f64::consts::PI)).rem_euclid(1.0);
    if x < 0.5 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn triangle_endpoints_and_peak() {
        assert_eq!(triangle(0.0), -1.0);
        assert!((triangle(PI) - 1.0).abs() < 1e-12);
        assert!((triangle(PI / 2.0)).abs() < 1e-12);
        assert!((triangle(2.0 * PI) - triangle(0.0)).abs() < 1e-12);
    }

    #[test]
    fn square_levels() {
        assert_eq!(square(0.0), 1.0);
        assert_eq!(square(PI - 1e-9), 1.0);
        assert_eq!(square(PI), -1.0);
        assert_eq!(square(2.0 * PI - 1e-9), -1.0);
        assert_eq!(square(2.0 * PI), 1.0);
    }

    #[test]
    fn full_width_sawtooth_ramps() {
        assert!((sawtooth(PI, 1.0) - 0.0).abs() < 1e-12);
        assert!((sawtooth(PI / 2.0, 1.0) + 0.5).abs() < 1e-12);
    }

    // The triangle's Fourier coefficients are -4/(π²m²) for odd m; checked by
    // direct periodic quadrature. The wave is continuous but not smooth, so
    // the trapezoid converges at O(1/M²) ≈ 6e-8 here.
    #[test]
    fn triangle_fourier_coefficient() {
        let m = 4096;
        let mut c1 = num_complex::Complex64::new(0.0, 0.0);
        let mut c3 = num_complex::Complex64::new(0.0, 0.0);
        for q in 0..m {
            let th = 2.0 * PI * q as f64 / m as f64;
            let v = triangle(th);
            c1 += v * (-num_complex::Complex64::i() * th).exp();
            c3 += v * (-num_complex::Complex64::i() * 3.0 * th).exp();
        }
        c1 /= m as f64;
        c3 /= m as f64;
        assert!((c1.re + 4.0 / PI.powi(2)).abs() < 1e-10, "c1 = {c1}");
        assert!((c3.re + 4.0 / (9.0 * PI.powi(2))).abs() < 1e-10, "c3 = {c3}");
        assert!(c1.im.abs() < 1e-10);
    }
}
