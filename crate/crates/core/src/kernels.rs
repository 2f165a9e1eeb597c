//! Free-space kernels for `-Δ + γ⁻²`: the fundamental solution
//! `G_γ(x) = (1/2π) K₀(|x|/γ)` and the adjoint double-layer
//! (Neumann–Poincaré) kernel `K_γ(x, y) = 2 ∂_{n,x} G_γ(x - y)`.

use crate::bessel;
use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Normalization making `(-Δ + γ⁻²) G_γ = δ`: the paper-level jump relations
/// `±½φ` hold exactly with this factor.
pub const FUND_NORM: f64 = 1.0 / (2.0 * PI);

/// `G_γ(x) = (1/2π) K₀(|x|/γ)`.
pub fn fundamental_solution(x: [f64; 2], gamma: f64) -> Result<f64> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
    }
    let r = x[0].hypot(x[1]);
    if r == 0.0 {
        return Err(Error::Singular("fundamental solution evaluated at the origin".into()));
    }
    Ok(FUND_NORM * bessel::k0(r / gamma))
}

/// Neumann–Poincaré kernel `K_γ(x, y) = 2 (∂_{n_x,x} G_γ)(x - y)`.
///
/// With `K₀' = -K₁` this is
/// `-(1/π γ) K₁(|x-y|/γ) ((x - y)·n_x)/|x-y|`; it vanishes when `x - y ⊥ n_x`
/// and satisfies the interior jump relation `∂_n^{int} Ψ = ½φ + ½K_γ*φ` for
/// the domain whose outward normal is `n_x`.
pub fn np_kernel(x: [f64; 2], n_x: [f64; 2], y: [f64; 2], gamma: f64) -> Result<f64> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
    }
    let d = [x[0] - y[0], x[1] - y[1]];
    let r = d[0].hypot(d[1]);
    if r == 0.0 {
        return Err(Error::Singular(
            "Neumann-Poincare kernel at coincident points; use the on-diagonal quadrature".into(),
        ));
    }
    let proj = (d[0] * n_x[0] + d[1] * n_x[1]) / r;
    Ok(-2.0 * FUND_NORM / gamma * bessel::k1(r / gamma) * proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn value_at_radius_gamma() {
        let gamma = 0.07;
        let v = fundamental_solution([gamma, 0.0], gamma).unwrap();
        assert_relative_eq!(v, FUND_NORM * bessel::k0(1.0), max_relative = 1e-14);
    }

    #[test]
    fn rotation_invariance() {
        let gamma = 0.3;
        let r = 0.11;
        let v0 = fundamental_solution([r, 0.0], gamma).unwrap();
        for k in 1..7 {
            let th = k as f64;
            let v = fundamental_solution([r * th.cos(), r * th.sin()], gamma).unwrap();
            assert_relative_eq!(v, v0, max_relative = 1e-13);
        }
    }

    #[test]
    fn pde_residual_by_five_point_stencil() {
        // (-Δ + γ⁻²) G = 0 away from the origin
        let gamma = 0.05;
        let x0 = [3.0 * gamma, 0.0];
        let h = gamma * 1e-3;
        let g = |dx: f64, dy: f64| fundamental_solution([x0[0] + dx, x0[1] + dy], gamma).unwrap();
        let lap = (g(h, 0.0) + g(-h, 0.0) + g(0.0, h) + g(0.0, -h) - 4.0 * g(0.0, 0.0)) / (h * h);
        let residual = (-lap + g(0.0, 0.0) / (gamma * gamma)).abs() / (g(0.0, 0.0) / (gamma * gamma));
        assert!(residual <= 1e-4, "relative stencil residual {residual}");
    }

    #[test]
    fn np_kernel_vanishes_on_flat_boundary() {
        // x, y on a common line with n ⊥ (x - y)
        let v = np_kernel([0.3, 0.0], [0.0, 1.0], [-0.2, 0.0], 0.1).unwrap();
        assert_relative_eq!(v, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn np_kernel_translation_invariance() {
        let (x, n, y) = ([0.2, 0.1], [0.6, 0.8], [0.05, -0.3]);
        let g = 0.07;
        let v = np_kernel(x, n, y, g).unwrap();
        for shift in [[1.3, -0.4], [-5.0, 2.0]] {
            let vs = np_kernel(
                [x[0] + shift[0], x[1] + shift[1]],
                n,
                [y[0] + shift[0], y[1] + shift[1]],
                g,
            )
            .unwrap();
            assert_relative_eq!(v, vs, max_relative = 1e-14);
        }
    }

    #[test]
    fn errors_on_singular_and_invalid_input() {
        assert!(fundamental_solution([0.0, 0.0], 0.1).is_err());
        assert!(np_kernel([0.1, 0.2], [1.0, 0.0], [0.1, 0.2], 0.1).is_err());
        assert!(fundamental_solution([0.1, 0.0], -1.0).is_err());
    }
}
