//! Shift, averaging and difference quotient operators.
//!
//! With half-mesh entry `i` standing for `x_{i-1/2}` (see [`Mesh`]):
//!
//! - `(s v)_{k-1/2}  = (v_{k-1} + v_k) / 2`
//! - `(δ v)_{k-1/2}  = (v_k - v_{k-1}) / h`
//! - `(δ* y)_k       = (y_{k+1/2} - y_{k-1/2}) / h`
//! - `(s* y)_k       = (y_{k-1/2} + y_{k+1/2}) / 2`
//!
//! so that `δ*δ v` is the usual second difference divided by h².

use alloc::vec::Vec;

use crate::error::Result;
use crate::mesh::Mesh;

impl Mesh {
    /// `v_{k+1}` with the boundary rule supplying the ghost value.
    pub fn shift_plus(&self, v: &[f64]) -> Result<Vec<f64>> {
        let p = self.pad(v)?;
        Ok(p[2..].to_vec())
    }

    /// `v_{k-1}` with the boundary rule supplying the ghost value.
    pub fn shift_minus(&self, v: &[f64]) -> Result<Vec<f64>> {
        let p = self.pad(v)?;
        Ok(p[..self.n].to_vec())
    }

    /// `s`: node → half-mesh average.
    pub fn average(&self, v: &[f64]) -> Result<Vec<f64>> {
        Ok(average_padded(&self.pad(v)?))
    }

    /// `δ`: node → half-mesh difference quotient.
    pub fn diff(&self, v: &[f64]) -> Result<Vec<f64>> {
        Ok(diff_padded(&self.pad(v)?, self.h))
    }

    /// `δ*`: half-mesh → node difference quotient.
    pub fn diff_star(&self, y: &[f64]) -> Result<Vec<f64>> {
        self.check_half(y.len())?;
        Ok(diff_padded(y, self.h))
    }

    /// `s*`: half-mesh → node average.
    pub fn average_star(&self, y: &[f64]) -> Result<Vec<f64>> {
        self.check_half(y.len())?;
        Ok(average_padded(y))
    }
}

pub(crate) fn average_padded(p: &[f64]) -> Vec<f64> {
    p.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
}

pub(crate) fn diff_padded(p: &[f64], h: f64) -> Vec<f64> {
    p.windows(2).map(|w| (w[1] - w[0]) / h).collect()
}
