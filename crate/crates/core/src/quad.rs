//! Quadrature building blocks: Gauss–Legendre rules, barycentric Lagrange
//! interpolation, and product-integration weights for integrands with a
//! `ln|ξ - s|` factor on `[-1, 1]`.

/// Gauss–Legendre rule on the reference interval `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Barycentric weights for interpolation through the nodes.
    pub bary: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the `q`-point rule by Newton iteration on the Legendre roots.
    pub fn new(q: usize) -> Self {
        assert!(q >= 1, "quadrature order must be positive");
        let mut nodes = vec![0.0; q];
        let mut weights = vec![0.0; q];
        let m = q.div_ceil(2);
        for i in 0..m {
            // Chebyshev-like initial guess for the i-th root.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (q as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(q, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[q - 1 - i] = x;
            weights[i] = w;
            weights[q - 1 - i] = w;
        }
        if q % 2 == 1 {
            let (_, d) = legendre_with_deriv(q, 0.0);
            nodes[q / 2] = 0.0;
            weights[q / 2] = 2.0 / (d * d);
        }
        let bary = barycentric_weights(&nodes);
        Self { nodes, weights, bary }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Row of per-node interpolation coefficients `ℓ_j(x)` at an arbitrary
    /// point, so that `f(x) ≈ Σ_j row[j] f(ξ_j)`.
    pub fn interp_row(&self, x: f64) -> Vec<f64> {
        let q = self.len();
        let mut row = vec![0.0; q];
        // At (or extremely near) a node the barycentric formula degenerates.
        for j in 0..q {
            if (x - self.nodes[j]).abs() < 1e-14 {
                row[j] = 1.0;
                return row;
            }
        }
        let mut denom = 0.0;
        for j in 0..q {
            let t = self.bary[j] / (x - self.nodes[j]);
            row[j] = t;
            denom += t;
        }
        for r in row.iter_mut() {
            *r /= denom;
        }
        row
    }

    /// Product-integration weights for `∫_{-1}^{1} f(ξ) ln|ξ - s| dξ`.
    ///
    /// The smooth factor `f` is replaced by its interpolant through the rule's
    /// nodes; the log moments of the Legendre basis are evaluated in closed
    /// form. Requires `|s| <= 1`.
    pub fn log_weight_row(&self, s: f64) -> Vec<f64> {
        let q = self.len();
        debug_assert!(s.abs() <= 1.0 + 1e-12);
        let m = legendre_log_moments(s, q);
        // l_j = sum_k (2k+1)/2 * P_k(xi_j) * w_j * m_k
        let mut row = vec![0.0; q];
        for (j, r) in row.iter_mut().enumerate() {
            let x = self.nodes[j];
            let mut pkm1 = 1.0;
            let mut pk = x;
            let mut acc = 0.5 * m[0];
            if q > 1 {
                acc += 1.5 * pk * m[1];
            }
            for k in 2..q {
                let pk1 = ((2 * k - 1) as f64 * x * pk - (k - 1) as f64 * pkm1) / k as f64;
                pkm1 = pk;
                pk = pk1;
                acc += (k as f64 + 0.5) * pk * m[k];
            }
            *r = acc * self.weights[j];
        }
        row
    }
}

/// Legendre polynomial `P_q` and its derivative at `x`.
fn legendre_with_deriv(q: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if q == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=q {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = q as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn barycentric_weights(nodes: &[f64]) -> Vec<f64> {
    let q = nodes.len();
    let mut w = vec![1.0; q];
    for j in 0..q {
        for k in 0..q {
            if k != j {
                w[j] /= nodes[j] - nodes[k];
            }
        }
    }
    w
}

/// Moments `m_k(s) = ∫_{-1}^{1} P_k(ξ) ln|ξ - s| dξ` for `k < count`.
///
/// `m_0` is elementary; for `k >= 1`,
/// `m_k = 2 (Q_{k+1}(s) - Q_{k-1}(s)) / (2k+1)` with `Q_k` the Legendre
/// function of the second kind on the cut, where the recurrence is stable.
pub fn legendre_log_moments(s: f64, count: usize) -> Vec<f64> {
    let mut m = Vec::with_capacity(count);
    let om = 1.0 - s;
    let op = 1.0 + s;
    let t0 = if om.abs() < 1e-300 { 0.0 } else { om * om.abs().ln() };
    let t1 = if op.abs() < 1e-300 { 0.0 } else { op * op.abs().ln() };
    m.push(t0 + t1 - 2.0);
    if count == 1 {
        return m;
    }
    // Legendre Q on (-1, 1): Q_0 = atanh(s), (k+1) Q_{k+1} = (2k+1) s Q_k - k Q_{k-1}.
    let q0 = 0.5 * (op / om).abs().ln();
    let mut qm1 = q0;
    let mut qk = s * q0 - 1.0;
    let mut qs = Vec::with_capacity(count + 2);
    qs.push(qm1);
    qs.push(qk);
    for k in 1..=count {
        let qk1 = ((2 * k + 1) as f64 * s * qk - k as f64 * qm1) / (k + 1) as f64;
        qs.push(qk1);
        qm1 = qk;
        qk = qk1;
    }
    for k in 1..count {
        m.push(2.0 * (qs[k + 1] - qs[k - 1]) / (2 * k + 1) as f64);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let gl = GaussLegendre::new(8);
        // degree 15 is the highest exact degree for 8 points
        let integral: f64 = gl
            .nodes
            .iter()
            .zip(&gl.weights)
            .map(|(x, w)| w * (3.0 * x.powi(15) + x.powi(10) - 2.0 * x.powi(3) + 0.5))
            .sum();
        // odd powers vanish; ∫ x^10 = 2/11; ∫ 0.5 = 1
        assert_abs_diff_eq!(integral, 2.0 / 11.0 + 1.0, epsilon = 1e-14);
        let total: f64 = gl.weights.iter().sum();
        assert_abs_diff_eq!(total, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn interp_row_reproduces_polynomials() {
        let gl = GaussLegendre::new(6);
        let f = |x: f64| 1.0 - 2.0 * x + x.powi(4);
        for &x in &[-0.93, -0.2, 0.11, 0.77] {
            let row = gl.interp_row(x);
            let got: f64 = row.iter().zip(&gl.nodes).map(|(r, n)| r * f(*n)).sum();
            assert_abs_diff_eq!(got, f(x), epsilon = 1e-13);
        }
        // at a node it must pick exactly that node
        let row = gl.interp_row(gl.nodes[2]);
        assert_abs_diff_eq!(row[2], 1.0, epsilon = 1e-14);
    }

    /// Brute-force log-moment oracle: split the interval at the singular
    /// point and refine a composite Simpson rule until it settles.
    fn log_moment_bruteforce(k: usize, s: f64) -> f64 {
        let pk = |x: f64| {
            let (mut p0, mut p1) = (1.0, x);
            if k == 0 {
                return 1.0;
            }
            for j in 2..=k {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            p1
        };
        // substitute xi = s ± u^2 to tame the log singularity
        let mut total = 0.0;
        for (a, b) in [(-1.0_f64, s), (s, 1.0_f64)] {
            let len = (b - a).abs();
            if len < 1e-300 {
                continue;
            }
            let sing_at_b = (b - s).abs() < (a - s).abs();
            let n = 20_000;
            let mut acc = 0.0;
            for i in 0..n {
                let u0 = len.sqrt() * (i as f64) / n as f64;
                let u1 = len.sqrt() * (i as f64 + 1.0) / n as f64;
                let um = 0.5 * (u0 + u1);
                let eval = |u: f64| {
                    let xi = if sing_at_b { b - u * u } else { a + u * u };
                    let d = (xi - s).abs().max(1e-300);
                    2.0 * u * pk(xi) * d.ln()
                };
                acc += (u1 - u0) / 6.0 * (eval(u0) + 4.0 * eval(um) + eval(u1));
            }
            if sing_at_b {
                total += acc;
            } else {
                total += acc;
            }
        }
        total
    }

    #[test]
    fn legendre_log_moments_match_bruteforce() {
        for &s in &[-0.71, 0.0, 0.3, 0.925] {
            let m = legendre_log_moments(s, 9);
            for k in 0..9 {
                let want = log_moment_bruteforce(k, s);
                assert_abs_diff_eq!(m[k], want, epsilon = 2e-7);
            }
        }
    }

    #[test]
    fn log_weight_row_integrates_smooth_times_log() {
        let gl = GaussLegendre::new(12);
        let s = 0.37;
        let row = gl.log_weight_row(s);
        // f(xi) = exp(xi): reference from the moment expansion of exp against
        // monomial brute force
        let got: f64 = row.iter().zip(&gl.nodes).map(|(r, n)| r * n.exp()).sum();
        // high-accuracy reference computed by splitting at s (composite
        // Simpson with the sqrt substitution as in the moment oracle)
        let reference = {
            let mut total = 0.0;
            for (a, b) in [(-1.0_f64, s), (s, 1.0_f64)] {
                let len: f64 = (b - a).abs();
                let sing_at_b = (b - s).abs() < (a - s).abs();
                let n = 40_000;
                for i in 0..n {
                    let u0 = len.sqrt() * (i as f64) / n as f64;
                    let u1 = len.sqrt() * (i as f64 + 1.0) / n as f64;
                    let um = 0.5 * (u0 + u1);
                    let eval = |u: f64| {
                        let xi = if sing_at_b { b - u * u } else { a + u * u };
                        let d = (xi - s).abs().max(1e-300);
                        2.0 * u * xi.exp() * d.ln()
                    };
                    total += (u1 - u0) / 6.0 * (eval(u0) + 4.0 * eval(um) + eval(u1));
                }
            }
            total
        };
        assert_abs_diff_eq!(got, reference, epsilon = 5e-8);
    }
}
