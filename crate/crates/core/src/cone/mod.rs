//! Exact polyhedral cone algebra in Q^k under the uniform norm.
//!
//! Convex cones are kept in generator (V-) representation; the conversion
//! between generators and inequalities is a double-description sweep with
//! LP-based redundancy elimination, which is ample at desk scale. General
//! (possibly non-convex) closed cones exist only for k <= 2 as unions of
//! circular sectors, see [`sector`].

mod convex;
pub mod cover;
pub mod sector;
pub mod weight;

pub use convex::{cone_from_inequalities, dual_cone, BilinearForm, ConvexCone};
pub use cover::{positively_spans, simplicial_cover, union_covers_space, SimplicialCover};
pub use sector::{Dir, SectorSet};
pub use weight::{exp_membership, multiplier_admissible, ConeRep, ExpMembership, RegionCertificate, WeightSpec};

use std::fmt;

/// Errors shared by the cone operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeError {
    /// Operand dimensions disagree (cone vs cone or cone vs form).
    DimensionMismatch { left: usize, right: usize },
    /// A bilinear form that is not symmetric or is degenerate.
    InvalidForm(String),
    /// A generator or direction vector is zero.
    ZeroVector,
    /// Sign enumeration cap exceeded in `bilinear_norm_constant`.
    CapExceeded { dim: usize, cap: usize },
    /// Non-convex cone machinery requested outside k <= 2.
    UnsupportedDimension { dim: usize, what: &'static str },
    /// The k+1 vectors of a simplicial cover do not positively span R^k.
    NotPositivelySpanning,
    /// An operation required a proper cone.
    ImproperCone(String),
}

impl fmt::Display for ConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            ConeError::InvalidForm(msg) => write!(f, "invalid bilinear form: {msg}"),
            ConeError::ZeroVector => write!(f, "zero vector is not a valid generator or direction"),
            ConeError::CapExceeded { dim, cap } => {
                write!(f, "sign enumeration cap exceeded: dim {dim} > cap {cap}")
            }
            ConeError::UnsupportedDimension { dim, what } => {
                write!(f, "{what} is only supported for k <= 2 (got k = {dim})")
            }
            ConeError::NotPositivelySpanning => {
                write!(f, "vectors do not positively span the whole space")
            }
            ConeError::ImproperCone(msg) => write!(f, "improper cone: {msg}"),
        }
    }
}

impl std::error::Error for ConeError {}
