//! Skew inverse semigroup rings of partial actions on zero-dimensional spaces.

pub mod action;
pub mod analysis;
pub mod bruteforce;
pub mod corpus;
pub mod error;
pub mod gallery;
pub mod io;
pub mod isg;
pub mod linalg;
pub mod scalar;
pub mod skew;
pub mod space;
pub mod steinberg;

pub use action::PartialAction;
pub use analysis::{AnalyzeOptions, Report};
pub use error::{Error, Result};
pub use isg::InverseSemigroup;
pub use scalar::{Carrier, Scalar};
pub use skew::{SkewElement, SkewRing};
pub use space::{ClopenSet, LcFun, PointSet, SpaceModel};
