//! Exact-arithmetic constructors, polynomial identity checks, singular-point
//! censuses and locus-curve computations for conic bundles over the quadric
//! and the double solids they deform into.
//!
//! Everything algebraic runs over arbitrary-precision rationals; floating
//! point appears only in the independent numeric search oracle and in plot
//! sampling.

pub mod binform;
pub mod dualcurve;
pub mod families;
pub mod identities;
pub mod invariants;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod ratfun;
pub mod report;
pub mod scalar;
pub mod singular;
pub mod unipoly;

pub use binform::{discriminant_binary, resultant_univariate, BinaryForm};
pub use poly::MultiPoly;
pub use ratfun::RationalFunction;
pub use scalar::Scalar;
