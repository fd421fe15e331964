//! Combinatorial and numerical machinery for surfaces of low complexity:
//! exact simple closed curves and intersection numbers, the pants graph and
//! its metric, subsurface projections with a distance-formula estimator,
//! Fenchel-Nielsen holonomy with Bers short-pants extraction, and a compiler
//! from pants-graph paths to triangulated 3-manifold models with volume
//! accounting.
//!
//! The crate supports surfaces with complexity `d = 3g - 3 + n` between 1
//! and 4. All curve arithmetic on punctured surfaces is exact (integer and
//! word combinatorics, no floating point); hyperbolic lengths are computed
//! from holonomy traces in `f64`.

pub mod config;
pub mod errors;
pub mod hyperbolic;
pub mod model3;
pub mod oracle;
pub mod pantsgraph;
pub mod projection;
pub mod surface;

pub use errors::{Result, TopoError};
pub use surface::{Curve, Multicurve, Surface};
