//! Boundary-integral operators for the modified Helmholtz equation
//! `-Δu + γ⁻²u = 0` on planar domains with smooth or curvilinear-polygon
//! boundaries.
//!
//! The crate provides:
//!
//! * panel-based Nyström discretizations of the single-layer operator `V_γ`
//!   and the adjoint double-layer (Neumann–Poincaré) operator `K'_γ`, with
//!   log-singularity-corrected quadrature ([`ops`]);
//! * discrete Dirichlet-to-Neumann operators, Steklov eigenpairs, and the
//!   γ-weighted Sobolev scale `H^s_γ` built on them ([`dtn`]);
//! * the local and non-local exchange operators `Π₀`/`Π_γ`, scattering
//!   operators, and a relaxed fixed-point transmission solver for
//!   non-overlapping partitions, including cross-points ([`exchange`],
//!   [`scatter`]);
//! * γ-sweep rate reports with log-log slope fits ([`report`]).
//!
//! Everything works in `f64`; dense matrices use [`ndarray`] with
//! factorizations backed by [`faer`].

pub mod bessel;
pub mod dtn;
pub mod error;
pub mod exchange;
pub mod geometry;
pub mod kernels;
pub mod linalg;
pub mod ops;
pub mod quad;
pub mod report;
pub mod scatter;

pub use error::{Error, Result};
pub use geometry::{BoundaryMesh, CurveSpec, GammaParams, GradingPolicy, SideSpec};
pub use ops::{BoundaryOperator, Convention, NormalOf};
pub use report::RateReport;
