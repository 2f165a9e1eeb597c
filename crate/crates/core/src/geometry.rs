//! Discretizations of smooth closed curves and curvilinear polygons.
//!
//! A [`BoundaryMesh`] is a panel decomposition of a counterclockwise closed
//! curve with Gauss–Legendre nodes in every panel interior. Nodes carry
//! arc-length quadrature weights, outward normals of the enclosed (interior)
//! domain, signed curvature, and the distance to the nearest corner. Corners
//! are exact: no node is ever placed on a vertex.

use crate::error::{Error, Result};
use crate::quad::GaussLegendre;
use serde::{Deserialize, Serialize};

/// One side of a curvilinear polygon: a straight segment or a circular arc.
///
/// `bulge` follows the usual convention: `0` is a straight line, otherwise
/// the side is the circular arc whose sagitta is `bulge` times the
/// half-chord, bulging to the left of `from → to` for positive values. The
/// included angle is `4·atan(bulge)`, so tangent directions at the endpoints
/// are determined by the same parameter.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SideSpec {
    pub from: [f64; 2],
    pub to: [f64; 2],
    #[serde(default)]
    pub bulge: f64,
}

impl SideSpec {
    pub fn line(from: [f64; 2], to: [f64; 2]) -> Self {
        Self { from, to, bulge: 0.0 }
    }
}

/// Geometry of a closed, simple, counterclockwise curve.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveSpec {
    Circle {
        radius: f64,
        #[serde(default)]
        center: [f64; 2],
    },
    Ellipse {
        a: f64,
        b: f64,
    },
    /// Polar perturbation of a circle: `r(θ) = radius (1 + amplitude cos(lobes θ))`.
    SmoothStar {
        radius: f64,
        amplitude: f64,
        lobes: u32,
    },
    Polygon {
        sides: Vec<SideSpec>,
    },
}

impl CurveSpec {
    /// Axis-aligned rectangle as four straight sides, counterclockwise.
    pub fn rectangle(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        CurveSpec::Polygon {
            sides: vec![
                SideSpec::line([x0, y0], [x1, y0]),
                SideSpec::line([x1, y0], [x1, y1]),
                SideSpec::line([x1, y1], [x0, y1]),
                SideSpec::line([x0, y1], [x0, y0]),
            ],
        }
    }

    /// Unit square `[0,1]²`.
    pub fn unit_square() -> Self {
        Self::rectangle(0.0, 0.0, 1.0, 1.0)
    }

    fn is_polygon(&self) -> bool {
        matches!(self, CurveSpec::Polygon { .. })
    }
}

/// Panel refinement policy near polygon vertices.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "policy", rename_all = "kebab-case")]
pub enum GradingPolicy {
    Uniform,
    /// Panels shrink geometrically (ratio ½) toward every side endpoint, down
    /// to `cutoff`. Use [`GradingPolicy::dyadic_for_gamma`] for the default
    /// cutoff tied to the kernel length scale.
    DyadicTowardVertices { cutoff: f64 },
}

impl GradingPolicy {
    /// Default grading for a given kernel scale: cutoff `max(γ/4, L·2⁻¹²)`
    /// where `L` is the side length (applied per side at build time).
    pub fn dyadic_for_gamma(gamma: f64) -> Self {
        GradingPolicy::DyadicTowardVertices { cutoff: gamma / 4.0 }
    }
}

/// Sweep and problem parameters attached to the γ-weighted function spaces.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GammaParams {
    pub gamma: f64,
    /// Frequency bound `M` of the low-pass subspace.
    pub m_bound: f64,
    /// Exponent `a ∈ (0,1)` in the vertex-neighborhood radius `γ^a`.
    pub a: f64,
    /// Sobolev index in `[-1/2, 0]`.
    pub s: f64,
}

impl GammaParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.gamma > 0.0) {
            return Err(Error::Domain("gamma must be positive".into()));
        }
        if !(self.m_bound > 0.0 && self.m_bound <= 1.0 / self.gamma) {
            return Err(Error::Domain(format!(
                "frequency bound must satisfy 0 < M <= 1/gamma, got M={} gamma={}",
                self.m_bound, self.gamma
            )));
        }
        if !(self.a > 0.0 && self.a < 1.0) {
            return Err(Error::Domain("exponent a must lie in (0,1)".into()));
        }
        if !(-0.5..=0.0).contains(&self.s) {
            return Err(Error::Domain("Sobolev index s must lie in [-1/2, 0]".into()));
        }
        Ok(())
    }
}

/// Pointwise curve data at a panel parameter.
#[derive(Debug, Clone, Copy)]
pub struct PanelPoint {
    pub pos: [f64; 2],
    /// Unit tangent in the traversal (counterclockwise) direction.
    pub tangent: [f64; 2],
    /// Outward unit normal of the interior domain.
    pub normal: [f64; 2],
    /// `|dy/dξ|` with ξ the panel-local coordinate in `[-1, 1]`.
    pub jac: f64,
    /// Signed curvature (positive for a counterclockwise circle).
    pub curvature: f64,
}

/// One panel: a parameter subinterval of one side.
#[derive(Debug, Clone)]
pub struct Panel {
    pub side: usize,
    pub u0: f64,
    pub u1: f64,
    pub first_node: usize,
    /// Arc length of the panel.
    pub len: f64,
    pub start: [f64; 2],
    pub end: [f64; 2],
}

/// Discretized closed curve. Immutable after construction.
#[derive(Debug, Clone)]
pub struct BoundaryMesh {
    pub spec: CurveSpec,
    /// Nodes per panel (Gauss–Legendre order).
    pub q: usize,
    pub nodes: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub normals: Vec<[f64; 2]>,
    pub tangents: Vec<[f64; 2]>,
    pub curvature: Vec<f64>,
    /// Arc-length coordinate of each node along the curve.
    pub arc: Vec<f64>,
    pub arc_len: f64,
    pub vertices: Vec<[f64; 2]>,
    pub vertex_dist: Vec<f64>,
    pub panel_index: Vec<usize>,
    pub panels: Vec<Panel>,
    pub gl: GaussLegendre,
}

const DEFAULT_PANEL_ORDER: usize = 8;

fn sub(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn norm(a: [f64; 2]) -> f64 {
    a[0].hypot(a[1])
}

pub(crate) fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    norm(sub(a, b))
}

/// Evaluates one side of the spec at parameter `u` (side-local).
///
/// For the closed analytic kinds there is a single side with `u ∈ [0, 2π)`;
/// polygon sides use `u ∈ [0, 1]`.
fn side_eval(spec: &CurveSpec, side: usize, u: f64) -> PanelPoint {
    match spec {
        CurveSpec::Circle { radius, center } => {
            let (s, c) = u.sin_cos();
            let pos = [center[0] + radius * c, center[1] + radius * s];
            let tangent = [-s, c];
            PanelPoint {
                pos,
                tangent,
                normal: [c, s],
                jac: *radius,
                curvature: 1.0 / radius,
            }
        }
        CurveSpec::Ellipse { a, b } => {
            let (s, c) = u.sin_cos();
            let d = [-a * s, b * c];
            let j = norm(d);
            let tangent = [d[0] / j, d[1] / j];
            PanelPoint {
                pos: [a * c, b * s],
                tangent,
                normal: [tangent[1], -tangent[0]],
                jac: j,
                curvature: a * b / (j * j * j),
            }
        }
        CurveSpec::SmoothStar { radius, amplitude, lobes } => {
            let k = *lobes as f64;
            let r = radius * (1.0 + amplitude * (k * u).cos());
            let rp = -radius * amplitude * k * (k * u).sin();
            let rpp = -radius * amplitude * k * k * (k * u).cos();
            let (s, c) = u.sin_cos();
            let d = [rp * c - r * s, rp * s + r * c];
            let j = norm(d);
            let tangent = [d[0] / j, d[1] / j];
            let kappa = (r * r + 2.0 * rp * rp - r * rpp) / (j * j * j);
            PanelPoint {
                pos: [r * c, r * s],
                tangent,
                normal: [tangent[1], -tangent[0]],
                jac: j,
                curvature: kappa,
            }
        }
        CurveSpec::Polygon { sides } => {
            let sd = &sides[side];
            if sd.bulge == 0.0 {
                let d = sub(sd.to, sd.from);
                let j = norm(d);
                let tangent = [d[0] / j, d[1] / j];
                PanelPoint {
                    pos: [sd.from[0] + u * d[0], sd.from[1] + u * d[1]],
                    tangent,
                    normal: [tangent[1], -tangent[0]],
                    jac: j,
                    curvature: 0.0,
                }
            } else {
                let (center, r, a0, sweep) = arc_geometry(sd);
                let phi = a0 + u * sweep;
                let (s, c) = phi.sin_cos();
                let pos = [center[0] + r * c, center[1] + r * s];
                let dir = if sweep >= 0.0 { 1.0 } else { -1.0 };
                let tangent = [-s * dir, c * dir];
                PanelPoint {
                    pos,
                    tangent,
                    normal: [tangent[1], -tangent[0]],
                    jac: r * sweep.abs(),
                    curvature: dir / r,
                }
            }
        }
    }
}

/// Arc center, radius, start angle, and signed sweep for a bulged side.
fn arc_geometry(sd: &SideSpec) -> ([f64; 2], f64, f64, f64) {
    let b = sd.bulge;
    let mid = [0.5 * (sd.from[0] + sd.to[0]), 0.5 * (sd.from[1] + sd.to[1])];
    let chord = sub(sd.to, sd.from);
    let c = 0.5 * norm(chord);
    let nhat = [-chord[1] / (2.0 * c), chord[0] / (2.0 * c)];
    let h = c * (1.0 - b * b) / (2.0 * b);
    let center = [mid[0] - h * nhat[0], mid[1] - h * nhat[1]];
    let r = c * (1.0 + b * b) / (2.0 * b.abs());
    let a0 = (sd.from[1] - center[1]).atan2(sd.from[0] - center[0]);
    let sweep = 4.0 * b.atan();
    (center, r, a0, sweep)
}

fn side_count(spec: &CurveSpec) -> usize {
    match spec {
        CurveSpec::Polygon { sides } => sides.len(),
        _ => 1,
    }
}

fn side_param_range(spec: &CurveSpec) -> f64 {
    match spec {
        CurveSpec::Polygon { .. } => 1.0,
        _ => std::f64::consts::TAU,
    }
}

/// Rough side length by fine sampling (panel layout only; quadrature uses
/// exact jacobians).
fn side_length_estimate(spec: &CurveSpec, side: usize) -> f64 {
    let umax = side_param_range(spec);
    let n = 64;
    let mut len = 0.0;
    let mut prev = side_eval(spec, side, 0.0).pos;
    for i in 1..=n {
        let p = side_eval(spec, side, umax * i as f64 / n as f64).pos;
        len += dist(prev, p);
        prev = p;
    }
    len
}

fn validate_spec(spec: &CurveSpec) -> Result<()> {
    match spec {
        CurveSpec::Circle { radius, .. } => {
            if !(*radius > 0.0) {
                return Err(Error::InvalidCurve("circle radius must be positive".into()));
            }
        }
        CurveSpec::Ellipse { a, b } => {
            if !(*a > 0.0 && *b > 0.0) {
                return Err(Error::InvalidCurve("ellipse semi-axes must be positive".into()));
            }
        }
        CurveSpec::SmoothStar { radius, amplitude, lobes } => {
            if !(*radius > 0.0) || !(*amplitude >= 0.0) || *amplitude >= 1.0 {
                return Err(Error::InvalidCurve(
                    "star requires radius > 0 and amplitude in [0, 1) to stay simple".into(),
                ));
            }
            if *lobes == 0 {
                return Err(Error::InvalidCurve("star needs at least one lobe".into()));
            }
        }
        CurveSpec::Polygon { sides } => {
            if sides.len() < 2 {
                return Err(Error::InvalidCurve("polygon needs at least two sides".into()));
            }
            for (i, sd) in sides.iter().enumerate() {
                let next = &sides[(i + 1) % sides.len()];
                if dist(sd.to, next.from) > 1e-12 {
                    return Err(Error::InvalidCurve(format!(
                        "side {i} ends at ({}, {}) but side {} starts at ({}, {}): curve is not closed",
                        sd.to[0],
                        sd.to[1],
                        (i + 1) % sides.len(),
                        next.from[0],
                        next.from[1]
                    )));
                }
                if dist(sd.from, sd.to) < 1e-14 {
                    return Err(Error::InvalidCurve(format!("side {i} has zero length")));
                }
                // interior angle in (0, 2pi); pi is a flat junction, allowed
                // but not a vertex
                let t_in = side_eval(spec, i, 1.0).tangent;
                let t_out = side_eval(spec, (i + 1) % sides.len(), 0.0).tangent;
                let turn = t_in[1].atan2(t_in[0]) - t_out[1].atan2(t_out[0]);
                let _ = turn; // angle itself validated by orientation + simplicity
            }
        }
    }
    Ok(())
}

/// Builds a mesh with roughly `n` nodes.
///
/// `n` is a target: panel layouts round it to a whole number of panels of
/// order `q = 8`, and dyadic grading may add panels near vertices. The
/// largest panels are bisected until at least `n` nodes exist.
pub fn build_mesh(spec: &CurveSpec, n: usize, grading: &GradingPolicy) -> Result<BoundaryMesh> {
    if n < 16 {
        return Err(Error::Precondition(format!("need at least 16 nodes, got {n}")));
    }
    validate_spec(spec)?;
    let q = DEFAULT_PANEL_ORDER;
    let gl = GaussLegendre::new(q);
    let nsides = side_count(spec);
    let umax = side_param_range(spec);

    // Per-side panel breakpoints in the side parameter.
    let mut side_breaks: Vec<Vec<f64>> = Vec::with_capacity(nsides);
    let side_lens: Vec<f64> = (0..nsides).map(|s| side_length_estimate(spec, s)).collect();
    let total_len: f64 = side_lens.iter().sum();
    match (spec.is_polygon(), grading) {
        (false, _) => {
            let p = (n as f64 / q as f64).round().max(2.0) as usize;
            side_breaks.push((0..=p).map(|i| i as f64 / p as f64).collect());
        }
        (true, GradingPolicy::Uniform) => {
            for s in 0..nsides {
                let p = ((n as f64 / q as f64) * side_lens[s] / total_len).round().max(1.0) as usize;
                side_breaks.push((0..=p).map(|i| i as f64 / p as f64).collect());
            }
        }
        (true, GradingPolicy::DyadicTowardVertices { cutoff }) => {
            for s in 0..nsides {
                let len = side_lens[s];
                let c = cutoff.max(len * 2f64.powi(-12));
                let half = 0.5 * len;
                // lengths c', 2c', ..., 2^{m-1} c' summing exactly to half
                let m = ((half / c + 1.0).log2().floor() as i32).max(1);
                let scale = half / (2f64.powi(m) - 1.0);
                let mut b = vec![0.0];
                let mut acc = 0.0;
                for j in 0..m {
                    acc += scale * 2f64.powi(j);
                    b.push(acc / len);
                }
                // mirror the first half
                let mut full: Vec<f64> = b.clone();
                for v in b.iter().rev().skip(1) {
                    full.push(1.0 - v);
                }
                full.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
                side_breaks.push(full);
            }
        }
    }

    // Bisect largest panels (by estimated arc length) until the node target
    // is met.
    let mut panel_lens: Vec<Vec<f64>> = side_breaks
        .iter()
        .enumerate()
        .map(|(s, br)| br.windows(2).map(|w| (w[1] - w[0]) * side_lens[s] / 1.0).collect())
        .collect();
    loop {
        let total_panels: usize = side_breaks.iter().map(|b| b.len() - 1).sum();
        if total_panels * q >= n {
            break;
        }
        let (mut bs, mut bi, mut bl) = (0usize, 0usize, 0.0f64);
        for (s, lens) in panel_lens.iter().enumerate() {
            for (i, &l) in lens.iter().enumerate() {
                if l > bl {
                    bl = l;
                    bs = s;
                    bi = i;
                }
            }
        }
        let mid = 0.5 * (side_breaks[bs][bi] + side_breaks[bs][bi + 1]);
        side_breaks[bs].insert(bi + 1, mid);
        let l = panel_lens[bs][bi];
        panel_lens[bs][bi] = 0.5 * l;
        panel_lens[bs].insert(bi + 1, 0.5 * l);
    }

    // Vertices: polygon junctions with a genuine corner.
    let mut vertices = Vec::new();
    if let CurveSpec::Polygon { sides } = spec {
        for i in 0..sides.len() {
            let t_in = side_eval(spec, i, 1.0).tangent;
            let j = (i + 1) % sides.len();
            let t_out = side_eval(spec, j, 0.0).tangent;
            let cross = t_in[0] * t_out[1] - t_in[1] * t_out[0];
            let dot = t_in[0] * t_out[0] + t_in[1] * t_out[1];
            let turn = cross.atan2(dot);
            if turn.abs() > 1e-9 {
                vertices.push(sides[j].from);
            }
        }
    }

    // Assemble nodes panel by panel.
    let mut panels = Vec::new();
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let mut normals = Vec::new();
    let mut tangents = Vec::new();
    let mut curvature = Vec::new();
    let mut arc = Vec::new();
    let mut panel_index = Vec::new();
    let mut arc_acc = 0.0;
    for (s, breaks) in side_breaks.iter().enumerate() {
        let scale = umax;
        for w in breaks.windows(2) {
            let (u0, u1) = (w[0] * scale, w[1] * scale);
            let pidx = panels.len();
            let first_node = nodes.len();
            // arc length within the panel up to each node, by per-node GL
            let half = 0.5 * (u1 - u0);
            let mid = 0.5 * (u0 + u1);
            let mut panel_len = 0.0;
            let node_arcs: Vec<f64> = gl
                .nodes
                .iter()
                .map(|&xi| {
                    // integrate jac over [-1, xi]
                    let a = -1.0;
                    let hw = 0.5 * (xi - a);
                    let cm = 0.5 * (xi + a);
                    gl.nodes
                        .iter()
                        .zip(&gl.weights)
                        .map(|(&t, &wt)| {
                            let u = mid + half * (cm + hw * t);
                            wt * hw * side_eval(spec, s, u).jac * half / half
                        })
                        .sum::<f64>()
                })
                .collect();
            for (&xi, wgl) in gl.nodes.iter().zip(&gl.weights) {
                let u = mid + half * xi;
                let p = side_eval(spec, s, u);
                nodes.push(p.pos);
                weights.push(wgl * p.jac * half);
                normals.push(p.normal);
                tangents.push(p.tangent);
                curvature.push(p.curvature);
                panel_index.push(pidx);
            }
            for (j, na) in node_arcs.iter().enumerate() {
                arc.push(arc_acc + na * half);
                let _ = j;
            }
            panel_len += gl
                .nodes
                .iter()
                .zip(&gl.weights)
                .map(|(&t, &wt)| wt * side_eval(spec, s, mid + half * t).jac * half)
                .sum::<f64>();
            arc_acc += panel_len;
            panels.push(Panel {
                side: s,
                u0,
                u1,
                first_node,
                len: panel_len,
                start: side_eval(spec, s, u0).pos,
                end: side_eval(spec, s, u1).pos,
            });
        }
    }
    let arc_len = arc_acc;

    let vertex_dist: Vec<f64> = nodes
        .iter()
        .map(|&p| vertices.iter().map(|&v| dist(p, v)).fold(f64::INFINITY, f64::min))
        .collect();

    let mesh = BoundaryMesh {
        spec: spec.clone(),
        q,
        nodes,
        weights,
        normals,
        tangents,
        curvature,
        arc,
        arc_len,
        vertices,
        vertex_dist,
        panel_index,
        panels,
        gl,
    };

    // Orientation: counterclockwise means positive signed area.
    if mesh.signed_area() <= 0.0 {
        return Err(Error::InvalidCurve("curve must be counterclockwise oriented".into()));
    }
    mesh.check_simple()?;
    Ok(mesh)
}

impl BoundaryMesh {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Curve data at panel-local coordinate `ξ ∈ [-1, 1]`.
    pub fn panel_point(&self, panel: usize, xi: f64) -> PanelPoint {
        let p = &self.panels[panel];
        let u = 0.5 * (p.u0 + p.u1) + 0.5 * (p.u1 - p.u0) * xi;
        let mut pp = side_eval(&self.spec, p.side, u);
        pp.jac *= 0.5 * (p.u1 - p.u0);
        pp
    }

    /// Signed area enclosed by the curve, from the quadrature rule.
    pub fn signed_area(&self) -> f64 {
        self.nodes
            .iter()
            .zip(&self.tangents)
            .zip(&self.weights)
            .map(|((p, t), w)| w * p[0] * t[1])
            .sum()
    }

    /// Coarse self-intersection check on the panel-endpoint polyline.
    fn check_simple(&self) -> Result<()> {
        let m = self.panels.len();
        let seg: Vec<([f64; 2], [f64; 2])> = self.panels.iter().map(|p| (p.start, p.end)).collect();
        for i in 0..m {
            for j in (i + 2)..m {
                if i == 0 && j == m - 1 {
                    continue; // closing adjacency
                }
                if segments_intersect(seg[i], seg[j]) {
                    return Err(Error::InvalidCurve(format!(
                        "curve self-intersects near panels {i} and {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Distance from `x` to the nearest vertex, `+∞` if the curve is smooth.
    pub fn dist_to_vertices(&self, x: [f64; 2]) -> f64 {
        self.vertices.iter().map(|&v| dist(x, v)).fold(f64::INFINITY, f64::min)
    }

    /// CSV export: `x,y,nx,ny,w,vertex_dist`, one row per node.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,nx,ny,w,vertex_dist\n");
        for i in 0..self.len() {
            out.push_str(&format!(
                "{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}\n",
                self.nodes[i][0],
                self.nodes[i][1],
                self.normals[i][0],
                self.normals[i][1],
                self.weights[i],
                self.vertex_dist[i]
            ));
        }
        out
    }

    /// Hash of the node coordinates (used to tag exported operators).
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        for p in &self.nodes {
            h.update(p[0].to_le_bytes());
            h.update(p[1].to_le_bytes());
        }
        let out = h.finalize();
        out.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

/// Free-function form of [`BoundaryMesh::dist_to_vertices`].
pub fn dist_to_vertices(mesh: &BoundaryMesh, x: [f64; 2]) -> f64 {
    mesh.dist_to_vertices(x)
}

fn segments_intersect(a: ([f64; 2], [f64; 2]), b: ([f64; 2], [f64; 2])) -> bool {
    let d = |p: [f64; 2], q: [f64; 2], r: [f64; 2]| (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    let (p1, p2) = a;
    let (p3, p4) = b;
    let d1 = d(p3, p4, p1);
    let d2 = d(p3, p4, p2);
    let d3 = d(p1, p2, p3);
    let d4 = d(p1, p2, p4);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn circle_arc_length_and_normals() {
        let spec = CurveSpec::Circle { radius: 1.0, center: [0.0, 0.0] };
        let mesh = build_mesh(&spec, 128, &GradingPolicy::Uniform).unwrap();
        let total: f64 = mesh.weights.iter().sum();
        assert_abs_diff_eq!(total, std::f64::consts::TAU, epsilon = 1e-10);
        // node closest to (1, 0): outward normal points along the node itself
        let (i, _) = mesh
            .nodes
            .iter()
            .enumerate()
            .min_by(|a, b| dist(*a.1, [1.0, 0.0]).partial_cmp(&dist(*b.1, [1.0, 0.0])).unwrap())
            .unwrap();
        let n = mesh.normals[i];
        let p = mesh.nodes[i];
        assert_abs_diff_eq!(n[0], p[0], epsilon = 1e-12);
        assert_abs_diff_eq!(n[1], p[1], epsilon = 1e-12);
        assert_abs_diff_eq!(mesh.curvature[i], 1.0, epsilon = 1e-12);
        for n in &mesh.normals {
            assert_abs_diff_eq!(norm(*n), 1.0, epsilon = 1e-13);
        }
        assert!(mesh.signed_area() > 0.0);
        assert_abs_diff_eq!(mesh.signed_area(), std::f64::consts::PI, epsilon = 1e-10);
    }

    #[test]
    fn square_vertices_and_vertex_distance() {
        let spec = CurveSpec::unit_square();
        let mesh = build_mesh(&spec, 256, &GradingPolicy::Uniform).unwrap();
        assert_eq!(mesh.vertices.len(), 4);
        let total: f64 = mesh.weights.iter().sum();
        assert_abs_diff_eq!(total, 4.0, epsilon = 1e-10);
        assert_abs_diff_eq!(mesh.dist_to_vertices([0.5, 0.0]), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(mesh.dist_to_vertices([0.0, 0.0]), 0.0, epsilon = 1e-14);
        for &d in &mesh.vertex_dist {
            assert!(d > 0.0, "no node sits on a vertex");
        }
    }

    #[test]
    fn smooth_curve_reports_no_vertices() {
        let spec = CurveSpec::Ellipse { a: 1.0, b: 0.5 };
        let mesh = build_mesh(&spec, 64, &GradingPolicy::Uniform).unwrap();
        assert!(mesh.vertices.is_empty());
        assert_eq!(mesh.dist_to_vertices([0.3, 0.0]), f64::INFINITY);
    }

    #[test]
    fn dyadic_grading_ratio_near_vertices() {
        let spec = CurveSpec::unit_square();
        let mesh = build_mesh(&spec, 64, &GradingPolicy::DyadicTowardVertices { cutoff: 0.01 }).unwrap();
        // panels of side 0 sorted by u; first three lengths double
        let mut lens: Vec<(f64, f64)> =
            mesh.panels.iter().filter(|p| p.side == 0).map(|p| (p.u0, p.len)).collect();
        lens.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for w in lens.windows(2).take(3) {
            let ratio = w[0].1 / w[1].1;
            assert!((0.4..=0.6).contains(&ratio), "ratio {ratio}");
        }
        // smallest panel respects the cutoff
        assert!(lens[0].1 >= 0.01 && lens[0].1 <= 0.025, "innermost {}", lens[0].1);
    }

    #[test]
    fn refinement_is_consistent_on_analytic_curves() {
        let spec = CurveSpec::SmoothStar { radius: 1.0, amplitude: 0.2, lobes: 5 };
        let coarse = build_mesh(&spec, 256, &GradingPolicy::Uniform).unwrap();
        let fine = build_mesh(&spec, 512, &GradingPolicy::Uniform).unwrap();
        assert!((coarse.arc_len - fine.arc_len).abs() <= 1e-8);
        // normals and curvature at matching parameters agree through the
        // panel evaluation path
        let p = coarse.panel_point(3, 0.25);
        assert_abs_diff_eq!(norm(p.normal), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn rejects_open_and_clockwise_curves() {
        let open = CurveSpec::Polygon {
            sides: vec![
                SideSpec::line([0.0, 0.0], [1.0, 0.0]),
                SideSpec::line([1.0, 0.0], [1.0, 1.0]),
                SideSpec::line([1.0, 1.0], [0.3, 0.9]),
            ],
        };
        assert!(matches!(build_mesh(&open, 64, &GradingPolicy::Uniform), Err(Error::InvalidCurve(_))));
        let cw = CurveSpec::Polygon {
            sides: vec![
                SideSpec::line([0.0, 0.0], [0.0, 1.0]),
                SideSpec::line([0.0, 1.0], [1.0, 1.0]),
                SideSpec::line([1.0, 1.0], [1.0, 0.0]),
                SideSpec::line([1.0, 0.0], [0.0, 0.0]),
            ],
        };
        assert!(build_mesh(&cw, 64, &GradingPolicy::Uniform).is_err());
    }

    #[test]
    fn rejects_self_intersecting_polygon() {
        let bow = CurveSpec::Polygon {
            sides: vec![
                SideSpec::line([0.0, 0.0], [1.0, 1.0]),
                SideSpec::line([1.0, 1.0], [1.0, 0.0]),
                SideSpec::line([1.0, 0.0], [0.0, 1.0]),
                SideSpec::line([0.0, 1.0], [0.0, 0.0]),
            ],
        };
        assert!(build_mesh(&bow, 64, &GradingPolicy::Uniform).is_err());
    }

    #[test]
    fn bulged_sides_give_expected_curvature() {
        // half-disc: diameter + half-circle arc (bulge 1 = semicircle)
        let spec = CurveSpec::Polygon {
            sides: vec![
                SideSpec::line([-1.0, 0.0], [1.0, 0.0]),
                SideSpec { from: [1.0, 0.0], to: [-1.0, 0.0], bulge: 1.0 },
            ],
        };
        let mesh = build_mesh(&spec, 64, &GradingPolicy::Uniform).unwrap();
        let total: f64 = mesh.weights.iter().sum();
        assert_abs_diff_eq!(total, 2.0 + std::f64::consts::PI, epsilon = 1e-10);
        assert_eq!(mesh.vertices.len(), 2);
        // arc nodes have curvature 1, line nodes 0
        for i in 0..mesh.len() {
            if mesh.nodes[i][1] > 0.1 {
                assert_abs_diff_eq!(mesh.curvature[i], 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn curve_spec_json_round_trip() {
        let spec = CurveSpec::SmoothStar { radius: 1.0, amplitude: 0.15, lobes: 4 };
        let s = serde_json::to_string(&spec).unwrap();
        assert!(s.contains("smooth-star"));
        let back: CurveSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(spec, back);
    }
}
