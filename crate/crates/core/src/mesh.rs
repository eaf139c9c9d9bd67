use alloc::vec::Vec;

use crate::error::{positive, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Node N ≡ node 0.
    Periodic,
    /// One ghost node per side replicating the boundary node.
    CopyOutflow,
}

/// Uniform mesh with nodes `x_k = x_min + k h`, `k = 0..n`.
///
/// Half-mesh arrays have `n + 1` entries: entry `i` sits at `x_{i-1/2}`,
/// between nodes `i - 1` and `i`, where nodes `-1` and `n` are ghosts supplied
/// by the boundary rule. On a periodic mesh entries `0` and `n` describe the
/// same half-node and are computed from the same values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mesh {
    pub n: usize,
    pub h: f64,
    pub x_min: f64,
    pub boundary: Boundary,
}

impl Mesh {
    pub fn new(n: usize, h: f64, x_min: f64, boundary: Boundary) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: n as f64,
            });
        }
        positive("h", h)?;
        if !x_min.is_finite() {
            return Err(Error::InvalidParameter {
                name: "x_min",
                value: x_min,
            });
        }
        Ok(Self {
            n,
            h,
            x_min,
            boundary,
        })
    }

    pub fn periodic(n: usize, h: f64) -> Result<Self> {
        Self::new(n, h, 0.0, Boundary::Periodic)
    }

    pub fn node(&self, k: usize) -> f64 {
        self.x_min + k as f64 * self.h
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|k| self.node(k)).collect()
    }

    /// Position of half-mesh entry `i`, i.e. `x_{i-1/2}`.
    pub fn half_node(&self, i: usize) -> f64 {
        self.x_min + (i as f64 - 0.5) * self.h
    }

    pub fn x_max(&self) -> f64 {
        self.node(self.n - 1)
    }

    pub(crate) fn check_nodes(&self, len: usize) -> Result<()> {
        if len == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: len,
            })
        }
    }

    pub(crate) fn check_half(&self, len: usize) -> Result<()> {
        if len == self.n + 1 {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n + 1,
                found: len,
            })
        }
    }

    /// Node array extended by one ghost value per side.
    pub fn pad(&self, v: &[f64]) -> Result<Vec<f64>> {
        self.check_nodes(v.len())?;
        let n = v.len();
        let (left, right) = match self.boundary {
            Boundary::Periodic => (v[n - 1], v[0]),
            Boundary::CopyOutflow => (v[0], v[n - 1]),
        };
        let mut out = Vec::with_capacity(n + 2);
        out.push(left);
        out.extend_from_slice(v);
        out.push(right);
        Ok(out)
    }
}

/// Density and velocity at the mesh nodes at time `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeshState {
    pub rho: Vec<f64>,
    pub u: Vec<f64>,
    pub t: f64,
}

impl MeshState {
    pub fn new(rho: Vec<f64>, u: Vec<f64>, t: f64) -> Result<Self> {
        if rho.len() != u.len() {
            return Err(Error::LengthMismatch {
                expected: rho.len(),
                found: u.len(),
            });
        }
        if let Some((node, &r)) = rho
            .iter()
            .enumerate()
            .find(|(_, r)| r.is_nan() || **r <= 0.0)
        {
            return Err(Error::NonPositiveDensity {
                rho: r,
                node: Some(node),
            });
        }
        if let Some(node) = u.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { node });
        }
        Ok(Self { rho, u, t })
    }

    pub fn constant(n: usize, rho: f64, u: f64) -> Result<Self> {
        Self::new(alloc::vec![rho; n], alloc::vec![u; n], 0.0)
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    pub fn momentum_density(&self) -> Vec<f64> {
        self.rho.iter().zip(&self.u).map(|(r, u)| r * u).collect()
    }

    /// Σ ρ_k h
    pub fn total_mass(&self, h: f64) -> f64 {
        self.rho.iter().sum::<f64>() * h
    }

    /// Σ ρ_k u_k h
    pub fn total_momentum(&self, h: f64) -> f64 {
        self.rho
            .iter()
            .zip(&self.u)
            .map(|(r, u)| r * u)
            .sum::<f64>()
            * h
    }

    pub fn min_rho(&self) -> f64 {
        self.rho.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_abs_u(&self) -> f64 {
        self.u.iter().fold(0.0, |acc, u| acc.max(u.abs()))
    }
}
