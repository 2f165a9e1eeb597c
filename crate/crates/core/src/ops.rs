//! Dense Nyström assembly of the boundary operators for `-Δ + γ⁻²`:
//! the single-layer operator `V_γ`, the adjoint double-layer
//! (Neumann–Poincaré) operator `K'_γ`, and the diagonal mass pairing.
//!
//! Quadrature strategy per (target node, source panel):
//!
//! * panel carrying the target (or a geometrically coincident panel of
//!   another boundary): split the kernel into `smooth · ln|ξ - s| + smooth`
//!   using the small-argument structure of `K₀`/`K₁` and integrate the log
//!   part with a dedicated product rule. The split is only applied inside a
//!   window of radius `O(γ)` around the target where the scaled Bessel
//!   factors are tame; the rest of the panel is handled adaptively.
//! * nearby or γ-underresolved panels: dyadic subdivision toward the target
//!   with plain Gauss–Legendre on the pieces, mapped back to the panel's
//!   nodes by barycentric interpolation.
//! * far panels: plain nodal quadrature.
//! * panels farther than `40γ`: dropped entirely (the scaled-Bessel tail
//!   bound puts such entries below 1e-15 of the row scale).

use crate::bessel;
use crate::error::{Error, Result};
use crate::geometry::{dist, BoundaryMesh};
use crate::kernels::FUND_NORM;
use ndarray::{Array1, Array2};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// What the matrix maps between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// Columns are nodal densities (`H^{-1/2}`-type data paired through the
    /// mass matrix), rows are pointwise values.
    DensityToValues,
    /// Plain nodal values to nodal values.
    ValuesToValues,
}

/// Whose outward normal a normal-derivative operator uses. `Omega1` is the
/// bounded interior domain (the mesh's stored normals); `Omega0` is the
/// complement, with the opposite normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalOf {
    Omega0,
    Omega1,
}

/// Dense operator on nodal boundary data.
#[derive(Debug, Clone)]
pub struct BoundaryOperator {
    pub matrix: Array2<f64>,
    pub convention: Convention,
    pub gamma: Option<f64>,
    pub row_mesh: Arc<BoundaryMesh>,
    pub col_mesh: Arc<BoundaryMesh>,
}

impl BoundaryOperator {
    pub fn apply(&self, x: &Array1<f64>) -> Array1<f64> {
        self.matrix.dot(x)
    }
}

/// Assembly tuning knobs. The defaults implement the documented scheme.
#[derive(Debug, Clone, Copy)]
pub struct AssemblyOptions {
    /// Drop source panels farther than this many multiples of γ (`None`
    /// disables the locality truncation).
    pub truncate_at_gamma: Option<f64>,
    /// Radius of the log-product window around a singular target, in
    /// multiples of γ.
    pub split_radius_gamma: f64,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        Self { truncate_at_gamma: Some(40.0), split_radius_gamma: 2.0 }
    }
}

#[derive(Clone, Copy)]
enum KernelKind {
    SingleLayer,
    /// Adjoint double layer with the target normal scaled by the row sign.
    AdjointDouble,
}

/// Identifies which source panel must be treated as singular for each target.
enum Singularity<'a> {
    /// Target nodes live on the source mesh itself.
    SelfMesh,
    /// Target node i coincides with a point of the source mesh:
    /// `(panel, ξ, n_target·n_source)` per node, when matched.
    Coincident(&'a [Option<(usize, f64, f64)>]),
    /// Disjoint geometries (may still be arbitrarily close).
    None,
}

struct TargetData<'a> {
    points: &'a [[f64; 2]],
    /// Unit normals per target (adjoint-double-layer kernels only).
    normals: Option<&'a [[f64; 2]]>,
}

/// Per-panel bounding data for cheap distance estimates.
struct PanelBounds {
    center: [f64; 2],
    radius: f64,
}

fn panel_bounds(mesh: &BoundaryMesh) -> Vec<PanelBounds> {
    mesh.panels
        .iter()
        .map(|p| {
            let center = [0.5 * (p.start[0] + p.end[0]), 0.5 * (p.start[1] + p.end[1])];
            let mut radius = dist(center, p.start).max(dist(center, p.end));
            for j in 0..mesh.q {
                radius = radius.max(dist(center, mesh.nodes[p.first_node + j]));
            }
            PanelBounds { center, radius }
        })
        .collect()
}

fn kernel_value(kind: KernelKind, x: [f64; 2], n: [f64; 2], y: [f64; 2], gamma: f64) -> f64 {
    let d = [x[0] - y[0], x[1] - y[1]];
    let r = d[0].hypot(d[1]);
    let z = r / gamma;
    match kind {
        KernelKind::SingleLayer => FUND_NORM * bessel::k0(z),
        KernelKind::AdjointDouble => {
            let proj = (d[0] * n[0] + d[1] * n[1]) / r;
            -FUND_NORM / gamma * bessel::k1(z) * proj
        }
    }
}

/// Core assembler: rows indexed by targets, columns by source nodes.
fn assemble(
    target: &TargetData,
    source: &BoundaryMesh,
    gamma: f64,
    kind: KernelKind,
    singular: &Singularity,
    opts: &AssemblyOptions,
) -> Array2<f64> {
    let nt = target.points.len();
    let ns = source.len();
    let bounds = panel_bounds(source);
    let cutoff = opts.truncate_at_gamma.map(|c| c * gamma);
    let rows: Vec<Vec<f64>> = (0..nt)
        .into_par_iter()
        .map(|i| {
            let x = target.points[i];
            let n = target.normals.map(|ns| ns[i]).unwrap_or([0.0, 0.0]);
            let mut row = vec![0.0; ns];
            let sing_panel: Option<(usize, f64, f64)> = match singular {
                Singularity::SelfMesh => {
                    let p = source.panel_index[i];
                    let local = i - source.panels[p].first_node;
                    Some((p, source.gl.nodes[local], 1.0))
                }
                Singularity::Coincident(map) => map[i],
                Singularity::None => None,
            };
            for (p, pb) in bounds.iter().enumerate() {
                let dlo = (dist(x, pb.center) - pb.radius).max(0.0);
                if let Some(c) = cutoff {
                    if dlo > c + pb.radius {
                        continue;
                    }
                }
                match sing_panel {
                    Some((sp, s_hat, nsign)) if sp == p => {
                        singular_panel_row(&mut row, x, n, source, p, s_hat, nsign, gamma, kind, opts);
                    }
                    _ => {
                        let len = source.panels[p].len;
                        if dlo >= 2.5 * len && len <= 2.0 * gamma {
                            plain_panel_row(&mut row, x, n, source, p, gamma, kind);
                        } else {
                            adaptive_panel_row(&mut row, x, n, source, p, (-1.0, 1.0), gamma, kind, 0);
                        }
                    }
                }
            }
            row
        })
        .collect();
    let mut m = Array2::zeros((nt, ns));
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m[[i, j]] = v;
        }
    }
    m
}

fn plain_panel_row(
    row: &mut [f64],
    x: [f64; 2],
    n: [f64; 2],
    source: &BoundaryMesh,
    p: usize,
    gamma: f64,
    kind: KernelKind,
) {
    let panel = &source.panels[p];
    for j in 0..source.q {
        let g = panel.first_node + j;
        row[g] += kernel_value(kind, x, n, source.nodes[g], gamma) * source.weights[g];
    }
}

const MAX_DEPTH: usize = 40;

/// Adaptive dyadic refinement of a panel sub-interval toward the target.
#[allow(clippy::too_many_arguments)]
fn adaptive_panel_row(
    row: &mut [f64],
    x: [f64; 2],
    n: [f64; 2],
    source: &BoundaryMesh,
    p: usize,
    (a, b): (f64, f64),
    gamma: f64,
    kind: KernelKind,
    depth: usize,
) {
    let gl = &source.gl;
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    // sample geometry at the sub-interval endpoints and midpoint
    let pa = source.panel_point(p, a);
    let pb = source.panel_point(p, b);
    let pm = source.panel_point(p, mid);
    let len = dist(pa.pos, pm.pos) + dist(pm.pos, pb.pos);
    let d = dist(x, pa.pos).min(dist(x, pb.pos)).min(dist(x, pm.pos));
    // lower bound on the true distance: every arc point is within len/2 of a
    // sample
    let d_lo = (d - 0.5 * len).max(0.0);
    let resolved = len <= 0.45 * d_lo && len <= 2.0 * gamma;
    if depth >= MAX_DEPTH || resolved {
        for (&xi, &w) in gl.nodes.iter().zip(&gl.weights) {
            let t = mid + half * xi;
            let pp = source.panel_point(p, t);
            let v = kernel_value(kind, x, n, pp.pos, gamma) * w * half * pp.jac;
            let interp = gl.interp_row(t);
            let first = source.panels[p].first_node;
            for (j, c) in interp.iter().enumerate() {
                row[first + j] += v * c;
            }
        }
        return;
    }
    adaptive_panel_row(row, x, n, source, p, (a, mid), gamma, kind, depth + 1);
    adaptive_panel_row(row, x, n, source, p, (mid, b), gamma, kind, depth + 1);
}

/// Log-product rule on the window around the singular point, adaptive rule
/// on the rest of the panel.
#[allow(clippy::too_many_arguments)]
fn singular_panel_row(
    row: &mut [f64],
    x: [f64; 2],
    n: [f64; 2],
    source: &BoundaryMesh,
    p: usize,
    s_hat: f64,
    nsign: f64,
    gamma: f64,
    kind: KernelKind,
    opts: &AssemblyOptions,
) {
    let gl = &source.gl;
    let jac_s = source.panel_point(p, s_hat).jac;
    let delta = opts.split_radius_gamma * gamma / jac_s;
    let la = (s_hat - delta).max(-1.0);
    let lb = (s_hat + delta).min(1.0);

    // --- log window [la, lb] ---
    let h = 0.5 * (lb - la);
    let c = 0.5 * (la + lb);
    let s_loc = (s_hat - c) / h;
    let logrow = gl.log_weight_row(s_loc.clamp(-1.0, 1.0));
    let lnh = h.ln();
    let first = source.panels[p].first_node;
    for k in 0..gl.len() {
        let tau = gl.nodes[k];
        let xi = c + h * tau;
        let pp = source.panel_point(p, xi);
        let r = dist(x, pp.pos);
        let z = r / gamma;
        let dxi = (xi - s_hat).abs();
        // rho = r / |xi - s|, smooth and positive along the panel
        let rho = if dxi < 1e-10 { pp.jac } else { r / dxi };
        let (ak, bk) = match kind {
            KernelKind::SingleLayer => {
                let a = -FUND_NORM * bessel::i0(z) * pp.jac;
                let b = if dxi < 1e-10 {
                    FUND_NORM * ((2.0 * gamma / pp.jac).ln() - bessel::EULER_GAMMA) * pp.jac
                } else {
                    FUND_NORM * (-bessel::i0(z) * (rho / gamma).ln() + bessel::k0_log_remainder(z)) * pp.jac
                };
                (a, b)
            }
            KernelKind::AdjointDouble => {
                let dv = [x[0] - pp.pos[0], x[1] - pp.pos[1]];
                let dotn = dv[0] * n[0] + dv[1] * n[1];
                let a = -FUND_NORM / (gamma * gamma) * bessel::i1_over_z(z) * dotn * pp.jac;
                let b = if dxi < 1e-10 {
                    -FUND_NORM * (nsign * pp.curvature / 2.0) * pp.jac
                } else {
                    let r2 = r * r;
                    (-FUND_NORM * (dotn / r2)
                        - FUND_NORM / (gamma * gamma)
                            * (bessel::i1_over_z(z) * (rho / gamma).ln() + bessel::k1_log_remainder_over_z(z))
                            * dotn)
                        * pp.jac
                };
                (a, b)
            }
        };
        let coeff = h * (logrow[k] * ak + gl.weights[k] * (bk + ak * lnh));
        let interp = gl.interp_row(xi);
        for (j, cj) in interp.iter().enumerate() {
            row[first + j] += coeff * cj;
        }
    }

    // --- regular remainder of the panel ---
    if la > -1.0 {
        adaptive_panel_row(row, x, n, source, p, (-1.0, la), gamma, kind, 0);
    }
    if lb < 1.0 {
        adaptive_panel_row(row, x, n, source, p, (lb, 1.0), gamma, kind, 0);
    }
}

/// Single-layer operator `(Vφ)(x_i) ≈ ∫ G_γ(x_i - y) φ(y) dσ(y)`.
pub fn assemble_single_layer(mesh: &Arc<BoundaryMesh>, gamma: f64) -> Result<BoundaryOperator> {
    assemble_single_layer_with(mesh, gamma, &AssemblyOptions::default())
}

pub fn assemble_single_layer_with(
    mesh: &Arc<BoundaryMesh>,
    gamma: f64,
    opts: &AssemblyOptions,
) -> Result<BoundaryOperator> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
    }
    let target = TargetData { points: &mesh.nodes, normals: None };
    let mut matrix =
        assemble(&target, mesh, gamma, KernelKind::SingleLayer, &Singularity::SelfMesh, opts);
    // Mass-weight symmetrization: the kernel is symmetric, so the
    // column-weighted transpose is an equally consistent quadrature and the
    // average makes w_i V_ij exactly symmetric.
    let w = &mesh.weights;
    let n = mesh.len();
    for i in 0..n {
        for j in 0..i {
            let a = w[i] * matrix[[i, j]];
            let b = w[j] * matrix[[j, i]];
            let s = 0.5 * (a + b);
            matrix[[i, j]] = s / w[i];
            matrix[[j, i]] = s / w[j];
        }
    }
    Ok(BoundaryOperator {
        matrix,
        convention: Convention::DensityToValues,
        gamma: Some(gamma),
        row_mesh: mesh.clone(),
        col_mesh: mesh.clone(),
    })
}

/// Adjoint double-layer operator `K'` for the chosen normal orientation:
/// the interior/exterior Neumann traces of the single-layer potential are
/// `(±½I + K') φ` for the domain whose outward normal was chosen.
pub fn assemble_adjoint_double_layer(
    mesh: &Arc<BoundaryMesh>,
    normal_of: NormalOf,
    gamma: f64,
) -> Result<BoundaryOperator> {
    assemble_adjoint_double_layer_with(mesh, normal_of, gamma, &AssemblyOptions::default())
}

pub fn assemble_adjoint_double_layer_with(
    mesh: &Arc<BoundaryMesh>,
    normal_of: NormalOf,
    gamma: f64,
    opts: &AssemblyOptions,
) -> Result<BoundaryOperator> {
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("gamma must be positive, got {gamma}")));
    }
    let target = TargetData { points: &mesh.nodes, normals: Some(&mesh.normals) };
    let mut matrix =
        assemble(&target, mesh, gamma, KernelKind::AdjointDouble, &Singularity::SelfMesh, opts);
    if normal_of == NormalOf::Omega0 {
        matrix.mapv_inplace(|v| -v);
    }
    Ok(BoundaryOperator {
        matrix,
        convention: Convention::DensityToValues,
        gamma: Some(gamma),
        row_mesh: mesh.clone(),
        col_mesh: mesh.clone(),
    })
}

/// Diagonal quadrature-weight (mass) operator: `⟨f, g⟩ = Σ w_i f_i g_i`.
pub fn assemble_mass(mesh: &Arc<BoundaryMesh>) -> BoundaryOperator {
    let n = mesh.len();
    let mut matrix = Array2::zeros((n, n));
    for i in 0..n {
        matrix[[i, i]] = mesh.weights[i];
    }
    BoundaryOperator {
        matrix,
        convention: Convention::ValuesToValues,
        gamma: None,
        row_mesh: mesh.clone(),
        col_mesh: mesh.clone(),
    }
}

/// Map from target node index to a coincident source location
/// `(panel, ξ, n_target·n_source)`.
pub type CoincidenceMap = Vec<Option<(usize, f64, f64)>>;

/// Adjoint-double-layer block with targets on one boundary and densities on
/// another. `target_normal_sign` scales the stored target normals (−1 when
/// the subdomain's outward normal opposes the mesh normal). A coincidence
/// map enables the singular rule on geometrically shared panels; the `±½`
/// jump term is *not* included here.
pub fn assemble_adjoint_cross(
    target_mesh: &BoundaryMesh,
    target_normal_sign: f64,
    source_mesh: &BoundaryMesh,
    coincident: Option<&CoincidenceMap>,
    gamma: f64,
    opts: &AssemblyOptions,
) -> Array2<f64> {
    let normals: Vec<[f64; 2]> = target_mesh
        .normals
        .iter()
        .map(|n| [n[0] * target_normal_sign, n[1] * target_normal_sign])
        .collect();
    let target = TargetData { points: &target_mesh.nodes, normals: Some(&normals) };
    let sing = match coincident {
        Some(map) => Singularity::Coincident(map),
        None => Singularity::None,
    };
    assemble(&target, source_mesh, gamma, KernelKind::AdjointDouble, &sing, opts)
}

/// Single-layer block for arbitrary target points (values of the potential).
pub fn single_layer_eval_matrix(
    targets: &[[f64; 2]],
    source_mesh: &BoundaryMesh,
    gamma: f64,
) -> Array2<f64> {
    let target = TargetData { points: targets, normals: None };
    assemble(
        &target,
        source_mesh,
        gamma,
        KernelKind::SingleLayer,
        &Singularity::None,
        &AssemblyOptions::default(),
    )
}

/// Normal-derivative (gradient dotted with given unit directions) of the
/// single-layer potential at points strictly off the source curve.
pub fn single_layer_grad_matrix(
    targets: &[[f64; 2]],
    target_normals: &[[f64; 2]],
    source_mesh: &BoundaryMesh,
    gamma: f64,
) -> Array2<f64> {
    let target = TargetData { points: targets, normals: Some(target_normals) };
    let mut m = assemble(
        &target,
        source_mesh,
        gamma,
        KernelKind::AdjointDouble,
        &Singularity::None,
        &AssemblyOptions::default(),
    );
    // the adjoint-double kernel is 2 ∂_n G in paper normalization; traces of
    // potentials want plain ∂_n G, which is the same kernel here (FUND_NORM
    // already folded in); nothing to rescale
    m.mapv_inplace(|v| v);
    m
}

// ---------------------------------------------------------------------------
// Binary export with JSON sidecar.
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct OperatorSidecar {
    pub rows: usize,
    pub cols: usize,
    pub gamma: Option<f64>,
    pub convention: Convention,
    pub row_mesh_hash: String,
    pub col_mesh_hash: String,
}

impl BoundaryOperator {
    /// Writes `<stem>.bin` (little-endian f64, row-major, with a 16-byte
    /// shape header) and `<stem>.json`.
    pub fn export(&self, stem: &std::path::Path) -> Result<()> {
        use std::io::Write;
        let (r, c) = (self.matrix.nrows(), self.matrix.ncols());
        let mut buf = Vec::with_capacity(16 + 8 * r * c);
        buf.extend_from_slice(&(r as u64).to_le_bytes());
        buf.extend_from_slice(&(c as u64).to_le_bytes());
        for v in self.matrix.iter() {
            buf.extend_from_slice(&v.to_le_bytes());
        }
        let mut f = std::fs::File::create(stem.with_extension("bin"))?;
        f.write_all(&buf)?;
        let sidecar = OperatorSidecar {
            rows: r,
            cols: c,
            gamma: self.gamma,
            convention: self.convention,
            row_mesh_hash: self.row_mesh.content_hash(),
            col_mesh_hash: self.col_mesh.content_hash(),
        };
        std::fs::write(stem.with_extension("json"), serde_json::to_string_pretty(&sidecar)?)?;
        Ok(())
    }

    /// Reads a matrix written by [`BoundaryOperator::export`].
    pub fn import_matrix(stem: &std::path::Path) -> Result<(Array2<f64>, OperatorSidecar)> {
        let bytes = std::fs::read(stem.with_extension("bin"))?;
        if bytes.len() < 16 {
            return Err(Error::Io(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                "matrix container too short",
            )));
        }
        let r = u64::from_le_bytes(bytes[0..8].try_into().unwrap()) as usize;
        let c = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        let mut m = Array2::zeros((r, c));
        for (k, chunk) in bytes[16..].chunks_exact(8).enumerate() {
            m[[k / c, k % c]] = f64::from_le_bytes(chunk.try_into().unwrap());
        }
        let sidecar: OperatorSidecar =
            serde_json::from_str(&std::fs::read_to_string(stem.with_extension("json"))?)?;
        Ok((m, sidecar))
    }
}

/// Mass-weighted symmetrization defect `‖MV - (MV)ᵀ‖_F / ‖MV‖_F`.
pub fn mass_symmetry_defect(op: &BoundaryOperator) -> f64 {
    let w = &op.row_mesh.weights;
    let n = op.matrix.nrows();
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..n {
        for j in 0..n {
            let a = w[i] * op.matrix[[i, j]];
            let b = w[j] * op.matrix[[j, i]];
            num += (a - b) * (a - b);
            den += a * a;
        }
    }
    (num / den).sqrt()
}
