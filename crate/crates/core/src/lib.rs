//! Exact-arithmetic kernel for conic analysis at desk scale.
//!
//! The crate has four pillars:
//!
//! - [`cone`]: polyhedral cone algebra over Q^k (duality, intersection,
//!   properness, uniform-norm distance), circular-sector cones for k <= 2,
//!   weight-function membership certificates, and simplicial coverings.
//! - [`lattice`]: finite posets, quasi-lattices, distributivity and morphism
//!   checks, and concrete cone lattices.
//! - [`indsys`]: inductive systems of finite-dimensional rational vector
//!   spaces over finite posets — colimits, localizability conditions,
//!   pushforwards along lattice morphisms, and quotient presentations.
//! - [`hyper`]: a closed symbolic class of 1-D functionals with exact
//!   Laplace/Fourier transforms into boundary-value pairs.
//!
//! Everything is immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

#![allow(clippy::needless_range_loop, clippy::result_large_err)]

pub mod cone;
pub mod hyper;
pub mod indsys;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod oracle;
pub mod scalar;
pub mod suites;
