//! Exact-arithmetic toolkit for linear pfaffian and determinantal
//! representations of plane curves: pfaffian calculus on skew polynomial
//! matrices, representation verification and construction, the Weierstrass
//! cubic family, and the genus-3 quartic canonical-form workflow.

pub mod cubic;
pub mod error;
pub mod io;
pub mod matrix;
pub mod mpoly;
mod parse;
pub mod poly;
pub mod quartic;
pub mod reps;
pub mod ring;
pub mod scalar;
pub mod skew;

pub use cubic::{AffineCurvePoint, WeierstrassCurve};
pub use error::{Error, Result};
pub use matrix::{ConstMatrix, PolyMatrix};
pub use mpoly::{MPoly, MVMono};
pub use poly::{Mono3, Poly};
pub use quartic::{CanonicalFrame, GroupElement, ParamMode, QuarticParams};
pub use reps::{DeterminantalRep, PfaffianRep, Point, SectionMatrix};
pub use ring::Ring;
pub use scalar::{FieldSpec, Scalar};
pub use skew::SkewPolyMatrix;
