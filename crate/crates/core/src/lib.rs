//! Exact-arithmetic laboratory for cube-ideal set-systems.
//!
//! A set-system `S ⊆ {0,1}^n` is cube-ideal when its convex hull is cut out
//! by the unit box together with generalized set covering (GSC) inequalities.
//! The modules here build the objects around that notion and check the
//! quantitative lower bounds attached to them on desk-scale instances:
//!
//! - [`setsys`]: set-systems, twisting, projection and VC dimension.
//! - [`gsc`]: GSC inequalities, connectivity, the 2-cover graph, cores and
//!   rainbow inequalities.
//! - [`polytope`]: exact vertex enumeration, cube-idealness, membership and
//!   minimal faces.
//! - [`clutter`]: clutters, blockers, idealness, cuboids and cores.
//! - [`graphapps`]: strong orientations of mixed graphs, dijoins, r-graphs,
//!   postman sets, staircases and cycle spaces.
//! - [`bounds`]: entropy, rate functions, Barvinok-type constants and the
//!   theorem verification harness.

pub mod bounds;
pub mod clutter;
mod error;
pub mod extended;
pub mod graphapps;
pub mod gsc;
pub mod polytope;
pub mod rational;
pub mod setsys;

pub use error::{Error, Result};
pub use extended::Extended;
