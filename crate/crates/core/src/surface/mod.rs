//! Weak del Pezzo surface models, plane constructions, the built-in catalog and
//! singularity labels.

mod catalog;
mod dynkin;
mod model;
mod plane;

use thiserror::Error;

pub use catalog::{catalog_get, catalog_list, Catalog, CatalogEntry, CatalogSummary};
pub use dynkin::{admissible_types, is_admissible, Component, DynkinError, Family, Mark, SingularityType};
pub use model::{dynkin_type, refine_singularity_label, validate_model, Curve, ModelIssue, ModelReport, SurfaceModel};
pub use plane::{
    build_from_plane_spec, validate_plane_spec, CubicSingularity, CurveKind, PlaneCurve, PlanePoint, PlaneReport,
    PlaneSpec, PlaneViolation,
};

use crate::piclattice::LatticeError;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("degree {0} is out of range")]
    Degree(u32),
    #[error("curve {curve} lives on {found} points, expected {expected}")]
    Dimension { curve: String, expected: usize, found: usize },
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
    #[error("invalid plane spec: {}", .0.join("; "))]
    InvalidSpec(Vec<String>),
    #[error("non-canonical configuration: curve {0} would have self-intersection at most -3")]
    NonCanonical(String),
    #[error("catalog-incomplete spec: some exceptional class does not decompose")]
    CatalogIncomplete,
    #[error("refinement applies to degree 2 only, got degree {0}")]
    RefinementDegree(u32),
    #[error("unknown catalog id {0}")]
    UnknownId(String),
    #[error("catalog parse error: {0}")]
    CatalogParse(String),
    #[error("entry {id}: declared {declared}, computed {computed}")]
    LabelMismatch { id: String, declared: String, computed: String },
}
