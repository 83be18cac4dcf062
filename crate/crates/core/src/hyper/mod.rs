//! Computable one-dimensional functional calculus: exact point-mass and
//! exponential-segment functionals, their Laplace transforms as symbolic
//! functions, boundary-value hyperfunction classes, and the kernel
//! decomposition witnessing the bijectivity of the Fourier map on this
//! class.
//!
//! Conventions: the transform kernel is `e^{i x z}` with no `2 pi` factor
//! anywhere, and the pairing is the plain product on the line. Composed
//! with the boundary-value operators, the resulting map plays the role of
//! an inverse Fourier transform on this class; no attempt is made to match
//! classical distribution-transform constants.

pub mod ecoef;
pub mod gaussian;
pub mod hyperfn;
pub mod poly;
pub mod symfn;
pub mod triple;
pub mod ultra;

pub use ecoef::ECoef;
pub use gaussian::GaussRat;
pub use hyperfn::{boundary_value, fourier, BoundarySide, Hyperfunction1D};
pub use poly::Poly;
pub use symfn::{ExpTerm, FactoredRational, SymFn};
pub use triple::{kernel_decompose, s_map, KernelDecomposition, Triple1D};
pub use ultra::{semigroup_check, Domain, PointMass, Segment, Side, Ultrafunctional1D};

use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperError {
    /// Segment decay factors must have a strictly positive real part.
    NonpositiveDecay { decay: GaussRat },
    /// A segment integral diverges at the requested point.
    DivergentIntegral { zeta: GaussRat },
    /// The functional is carried by the whole line; split it first.
    ImproperCarrier,
    /// The requested carrier does not contain the functional's own carrier.
    CarrierTooSmall,
    /// An exponential multiplier would destroy a segment's decay.
    MultiplierBreaksDecay { decay: GaussRat, eta: Scalar },
    /// Semigroup multipliers must be positive.
    NonpositiveMultiplier,
    /// A representative has a pole on the forbidden side.
    PoleOnWrongSide { side: &'static str },
}

impl fmt::Display for HyperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperError::NonpositiveDecay { decay } => {
                write!(f, "segment decay {decay} must have positive real part")
            }
            HyperError::DivergentIntegral { zeta } => {
                write!(f, "segment integral diverges at zeta = {zeta}")
            }
            HyperError::ImproperCarrier => {
                write!(f, "carrier is the whole line; decompose before transforming")
            }
            HyperError::CarrierTooSmall => {
                write!(f, "requested carrier does not contain the functional's carrier")
            }
            HyperError::MultiplierBreaksDecay { decay, eta } => {
                write!(
                    f,
                    "multiplier eta = {} brings segment decay {decay} out of the class",
                    crate::scalar::format_scalar(eta)
                )
            }
            HyperError::NonpositiveMultiplier => write!(f, "multipliers must be positive"),
            HyperError::PoleOnWrongSide { side } => {
                write!(f, "representative has a pole violating the {side} constraint")
            }
        }
    }
}

impl std::error::Error for HyperError {}
