//! Barotropic pressure laws.
//!
//! The gas is described by an increasing pressure law p(ρ). The "enthalpy"
//! scheme additionally needs h(ρ) = ∫_{r₀}^{ρ} p′(r)/r dr, which has a closed
//! form for the isentropic law and is integrated numerically otherwise.

use crate::error::{positive, Error, Result};

/// Pressure law of a barotropic gas.
#[derive(Clone, Copy, Debug)]
pub enum PressureLaw {
    /// p(ρ) = p₁ ρ^γ with p₁ > 0, γ > 1.
    Isentropic { p1: f64, gamma: f64 },
    /// User supplied p(ρ) and p′(ρ).
    Tabulated {
        pressure: fn(f64) -> f64,
        derivative: fn(f64) -> f64,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct GasModel {
    pub law: PressureLaw,
    /// Lower limit of the enthalpy integral. Ignored by the isentropic law,
    /// which uses r₀ = 0 in closed form.
    pub r0: f64,
}

impl GasModel {
    pub fn isentropic(p1: f64, gamma: f64) -> Result<Self> {
        positive("p1", p1)?;
        if !(gamma > 1.0 && gamma.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
            });
        }
        Ok(Self {
            law: PressureLaw::Isentropic { p1, gamma },
            r0: 0.0,
        })
    }

    /// p(ρ) = ρ², the scaled shallow water equations.
    pub fn shallow_water() -> Self {
        Self {
            law: PressureLaw::Isentropic {
                p1: 1.0,
                gamma: 2.0,
            },
            r0: 0.0,
        }
    }

    pub fn tabulated(
        pressure: fn(f64) -> f64,
        derivative: fn(f64) -> f64,
        r0: f64,
    ) -> Result<Self> {
        positive("r0", r0)?;
        Ok(Self {
            law: PressureLaw::Tabulated {
                pressure,
                derivative,
            },
            r0,
        })
    }

    /// Returns `(p(ρ), p′(ρ))`.
    pub fn pressure(&self, rho: f64) -> Result<(f64, f64)> {
        if rho.is_nan() || rho <= 0.0 {
            return Err(Error::NonPositiveDensity { rho, node: None });
        }
        let (p, dp) = match self.law {
            PressureLaw::Isentropic { p1, gamma } => {
                let pow = libm::pow(rho, gamma - 1.0);
                (p1 * pow * rho, gamma * p1 * pow)
            }
            PressureLaw::Tabulated {
                pressure,
                derivative,
            } => (pressure(rho), derivative(rho)),
        };
        if dp.is_nan() || dp <= 0.0 {
            return Err(Error::NonMonotonePressure {
                rho,
                derivative: dp,
            });
        }
        Ok((p, dp))
    }

    /// Returns `(h(ρ), h′(ρ))` with h′(ρ) = p′(ρ)/ρ.
    pub fn enthalpy(&self, rho: f64) -> Result<(f64, f64)> {
        let (p, dp) = self.pressure(rho)?;
        match self.law {
            PressureLaw::Isentropic { gamma, .. } => {
                Ok((gamma / (gamma - 1.0) * p / rho, gamma * p / (rho * rho)))
            }
            PressureLaw::Tabulated { derivative, .. } => {
                let integrand = |r: f64| derivative(r) / r;
                let h = signed_integral(integrand, self.r0, rho, 1e-12);
                Ok((h, dp / rho))
            }
        }
    }

    /// c(ρ) = √p′(ρ).
    pub fn sound_speed(&self, rho: f64) -> Result<f64> {
        Ok(libm::sqrt(self.pressure(rho)?.1))
    }

    /// True for p(ρ) = ρ².
    pub fn is_shallow_water(&self) -> bool {
        matches!(self.law, PressureLaw::Isentropic { p1, gamma } if p1 == 1.0 && gamma == 2.0)
    }
}

fn signed_integral(f: impl Fn(f64) -> f64 + Copy, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    // Split into panels so that strongly varying integrands (p′(r)/r near a
    // small r₀) do not stall the recursion.
    let panels = 16;
    let width = (hi - lo) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let x0 = lo + width * i as f64;
        let x1 = if i + 1 == panels { hi } else { x0 + width };
        total += adaptive_simpson(f, x0, x1, tol / panels as f64);
    }
    sign * total
}

fn adaptive_simpson(f: impl Fn(f64) -> f64 + Copy, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: impl Fn(f64) -> f64 + Copy,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || libm::fabs(delta) <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn pressure_values() {
        let m = GasModel::isentropic(1.0, 2.0).unwrap();
        assert_eq!(m.pressure(1.0).unwrap(), (1.0, 2.0));
        let (p, dp) = m.pressure(0.1).unwrap();
        assert!(close(p, 0.01, 1e-15) && close(dp, 0.2, 1e-15));

        // 2^1.4 and 1.4 * 2^0.4 by repeated square roots: 2^0.4 = (2^(1/5))^2.
        let fifth_root = {
            let mut x = 1.0f64;
            for _ in 0..200 {
                x -= (x.powi(5) - 2.0) / (5.0 * x.powi(4));
            }
            x
        };
        let two_pow_04 = fifth_root * fifth_root;
        let m = GasModel::isentropic(1.0, 1.4).unwrap();
        let (p, dp) = m.pressure(2.0).unwrap();
        assert!(close(p, 2.0 * two_pow_04, 1e-14));
        assert!(close(dp, 1.4 * two_pow_04, 1e-14));
        assert!(close(p, 2.639016, 1e-6) && close(dp, 1.847311, 1e-6));
    }

    #[test]
    fn rejects_bad_density_and_law() {
        let m = GasModel::shallow_water();
        assert!(matches!(
            m.pressure(0.0),
            Err(Error::NonPositiveDensity { .. })
        ));
        assert!(matches!(
            m.enthalpy(-1.0),
            Err(Error::NonPositiveDensity { .. })
        ));
        let flat = GasModel::tabulated(|_| 1.0, |_| 0.0, 0.5).unwrap();
        assert!(matches!(
            flat.pressure(1.0),
            Err(Error::NonMonotonePressure { .. })
        ));
        assert!(GasModel::isentropic(1.0, 1.0).is_err());
        assert!(GasModel::isentropic(0.0, 2.0).is_err());
    }

    #[test]
    fn enthalpy_closed_form() {
        let m = GasModel::shallow_water();
        assert_eq!(m.enthalpy(1.0).unwrap(), (2.0, 2.0));
        let (h, dh) = m.enthalpy(0.25).unwrap();
        assert!(close(h, 0.5, 1e-15) && close(dh, 2.0, 1e-15));
        let m = GasModel::isentropic(1.0, 1.4).unwrap();
        let (h, dh) = m.enthalpy(1.0).unwrap();
        assert!(close(h, 3.5, 1e-14) && close(dh, 1.4, 1e-14));
    }

    #[test]
    fn enthalpy_identities_hold() {
        for &(p1, gamma) in &[(1.0, 2.0), (0.7, 1.4), (3.0, 5.0 / 3.0)] {
            let m = GasModel::isentropic(p1, gamma).unwrap();
            for &rho in &[0.01, 0.3, 1.0, 4.5] {
                let (p, dp) = m.pressure(rho).unwrap();
                let (h, dh) = m.enthalpy(rho).unwrap();
                assert!(close(h, gamma / (gamma - 1.0) * p / rho, 1e-15));
                assert!(close(dh, dp / rho, 1e-15));
            }
        }
    }

    #[test]
    fn quadrature_matches_closed_form_differences() {
        fn p(r: f64) -> f64 {
            r.powf(1.4)
        }
        fn dp(r: f64) -> f64 {
            1.4 * r.powf(0.4)
        }
        let exact = GasModel::isentropic(1.0, 1.4).unwrap();
        for &r0 in &[0.05, 0.5, 2.0] {
            let quad = GasModel::tabulated(p, dp, r0).unwrap();
            for &(a, b) in &[(0.1, 1.0), (0.3, 3.0), (1.0, 1.5)] {
                let exact_diff = exact.enthalpy(b).unwrap().0 - exact.enthalpy(a).unwrap().0;
                let quad_diff = quad.enthalpy(b).unwrap().0 - quad.enthalpy(a).unwrap().0;
                assert!((exact_diff - quad_diff).abs() < 1e-8, "{r0} {a} {b}");
            }
            assert!(quad.enthalpy(r0).unwrap().0.abs() < 1e-14);
        }
    }
}
