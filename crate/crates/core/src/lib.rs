//! Exact `F_2` computer algebra for the real equivariant bordism of
//! `G = (Z/2)^l`.
//!
//! The crate models the graded rings through which geometric bordism embeds
//! into homotopic bordism: the coefficient ring `MO_*`, the Hopf algebra
//! `MO_*(BO)`, the ring `MO_*[e_V, e_V^-1, Y_{d,V}]` with its involution
//! `ι`, the map `φ_N` on symbolic fixed-point data, and a truncated
//! membership test for the pullback description of `N_*^G`.

pub mod error;
pub mod geometric;
pub mod group;
pub mod hopf;
pub mod mo;
pub mod poly;
pub mod pullback;
pub mod rings;
pub mod sampling;

pub use error::{Error, Result};
pub use geometric::{FixedPointDatum, GeometricClass};
pub use group::{Character, ReprVector};
pub use poly::{GradedPolynomial, Monomial, RingSpec, Variable};
pub use pullback::{GradedBasis, PullbackReport, TruncationWindow};
pub use rings::{AoElement, BigRingSpec, Direction};
