use num_complex::Complex64;

use super::linearized::LinearizedParams;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Symbol G(ξ) of the linearized scheme:
///
/// ```text
/// G = [[1 − ω₁, −iω₂], [−iω₂, 1 − κω₁]],  θ = sin²(ξ/2), ω₁ = 4αβθ, ω₂ = β sin ξ
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AmplificationMatrix {
    pub entries: [[Complex64; 2]; 2],
    pub xi: f64,
    pub theta: f64,
    pub omega1: f64,
    pub omega2: f64,
    pub kappa: f64,
}

impl AmplificationMatrix {
    pub fn new(xi: f64, params: &LinearizedParams) -> Self {
        let s = libm::sin(0.5 * xi);
        let theta = s * s;
        let omega1 = 4.0 * params.alpha * params.beta * theta;
        let omega2 = params.beta * libm::sin(xi);
        let off = -I * omega2;
        Self {
            entries: [
                [Complex64::new(1.0 - omega1, 0.0), off],
                [off, Complex64::new(1.0 - params.kappa * omega1, 0.0)],
            ],
            xi,
            theta,
            omega1,
            omega2,
            kappa: params.kappa,
        }
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let g = &self.entries;
        [
            g[0][0] * v[0] + g[0][1] * v[1],
            g[1][0] * v[0] + g[1][1] * v[1],
        ]
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn det(&self) -> Complex64 {
        let g = &self.entries;
        g[0][0] * g[1][1] - g[0][1] * g[1][0]
    }

    /// Roots of λ² − (tr G)λ + det G.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let tr = self.trace();
        let det = self.det();
        let root = (tr * tr - det * 4.0).sqrt();
        // larger root first, the other from the product to avoid cancellation
        let (a, b) = (tr + root, tr - root);
        let big = if a.norm_sqr() >= b.norm_sqr() { a } else { b } * 0.5;
        if big.norm_sqr() == 0.0 {
            return [big, big];
        }
        [big, det / big]
    }

    pub fn spectral_radius(&self) -> f64 {
        let [a, b] = self.eigenvalues();
        a.norm().max(b.norm())
    }

    /// G*G in closed form. The off-diagonal is `i(1 − κ)ω₁ω₂`; its conjugate
    /// belongs to GG*, which has the same eigenvalues but not the same
    /// eigenvectors.
    pub fn gram(&self) -> GramMatrix {
        let (w1, w2, k) = (self.omega1, self.omega2, self.kappa);
        let a = (1.0 - w1) * (1.0 - w1) + w2 * w2;
        let d = (1.0 - k * w1) * (1.0 - k * w1) + w2 * w2;
        GramMatrix {
            a,
            d,
            b: I * ((1.0 - k) * w1 * w2),
        }
    }
}

/// Hermitian 2×2 matrix `[[a, b], [conj(b), d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GramMatrix {
    pub a: f64,
    pub d: f64,
    pub b: Complex64,
}

impl GramMatrix {
    /// Eigenvalues `(min, max)`: mean ∓ half-spread.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.a + self.d);
        let half = 0.5 * (self.a - self.d);
        let spread = libm::sqrt(half * half + self.b.norm_sqr());
        (mean - spread, mean + spread)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues().1
    }

    /// Unit eigenvector for the largest eigenvalue.
    pub fn top_eigenvector(&self) -> [Complex64; 2] {
        let lambda = self.max_eigenvalue();
        let scale = self.a.abs().max(self.d.abs()).max(1.0);
        let v = if self.b.norm() > 1e-14 * scale {
            [self.b, Complex64::new(lambda - self.a, 0.0)]
        } else if self.a >= self.d {
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
        } else {
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]
        };
        let norm = libm::sqrt(v[0].norm_sqr() + v[1].norm_sqr());
        [v[0] / norm, v[1] / norm]
    }
}

/// λ_max(G*G)(ξ).
pub fn gram_max_eigen(xi: f64, params: &LinearizedParams) -> f64 {
    AmplificationMatrix::new(xi, params).gram().max_eigenvalue()
}
