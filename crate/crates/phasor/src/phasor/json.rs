//! JSON serialization of `PhasorArray` values.
//!
//! Schema: `{ "rows": int, "cols": int, "h": int, "real": bool,
//! "coeffs": [[re, im], ...] }` with coefficients ordered k = -h..h outermost,
//! then row-major (i, j) within each slice. Floats are printed with
//! shortest-roundtrip precision, so a serialize/deserialize cycle is lossless.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::PhasorArray;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct PhasorArrayDoc {
    rows: usize,
    cols: usize,
    h: usize,
    real: bool,
    coeffs: Vec<[f64; 2]>,
}

impl PhasorArray {
    /// Serializes to the documented JSON schema.
    pub fn to_json(&self) -> String {
        let mut coeffs = Vec::with_capacity(self.rows * self.cols * (2 * self.h + 1));
        for k in -(self.h as i64)..=self.h as i64 {
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let z = self.coeff(i, j, k);
                    coeffs.push([z.re, z.im]);
                }
            }
        }
        let doc = PhasorArrayDoc { rows: self.rows, cols: self.cols, h: self.h, real: self.real, coeffs };
        serde_json::to_string(&doc).expect("PhasorArray JSON encoding cannot fail")
    }

    /// Parses the documented JSON schema.
    pub fn from_json(text: &str) -> Result<PhasorArray> {
        let doc: PhasorArrayDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if doc.rows == 0 || doc.cols == 0 {
            return Err(Error::Schema("rows and cols must be positive".into()));
        }
        let expected = doc.rows * doc.cols * (2 * doc.h + 1);
        if doc.coeffs.len() != expected {
            return Err(Error::Schema(format!(
                "coefficient count {} does not match rows*cols*(2h+1) = {expected}",
                doc.coeffs.len()
            )));
        }
        let mut out = PhasorArray::from_raw(doc.rows, doc.cols, doc.h, false, Self::zero_coeffs(doc.rows, doc.cols, doc.h));
        let mut it = doc.coeffs.iter();
        for k in -(doc.h as i64)..=doc.h as i64 {
            for i in 0..doc.rows {
                for j in 0..doc.cols {
                    let [re, im] = it.next().unwrap();
                    if !re.is_finite() || !im.is_finite() {
                        return Err(Error::Schema(format!("non-finite coefficient at (i={i}, j={j}, k={k})")));
                    }
                    *out.coeff_mut(i, j, k) = Complex64::new(*re, *im);
                }
            }
        }
        if doc.real {
            // validate conjugate symmetry before snapping it exact
            for k in 0..=doc.h as i64 {
                for i in 0..doc.rows {
                    for j in 0..doc.cols {
                        let dev = (out.coeff(i, j, -k) - out.coeff(i, j, k).conj()).norm();
                        if dev > 1e-12 {
                            return Err(Error::Schema(format!(
                                "real flag set but conjugate symmetry violated at (i={i}, j={j}, k={k}) by {dev:.3e}"
                            )));
                        }
                    }
                }
            }
            out.snap_real();
        }
        Ok(out)
    }

    /// Reads a PhasorArray JSON file.
    pub fn read_json_file(path: impl AsRef<std::path::Path>) -> Result<PhasorArray> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    /// Writes the JSON document to a file.
    pub fn write_json_file(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}
