//! Exact straightedge-and-compass geometry over the constructible reals.
//!
//! The geometric layers are generic over a [`Scalar`]; the aliases below fix
//! the exact field [`CReal`], which is what the script interpreter uses.

pub mod cfield;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod kernel;
pub mod model;
pub mod quantities;
pub mod render;
pub mod scalar;
pub mod script;

pub use cfield::CReal;
pub use error::{Error, Result};
pub use scalar::{Scalar, Sign};

pub type Point = model::Point<CReal>;
pub type Line = model::Line<CReal>;
pub type Ray = model::Ray<CReal>;
pub type Flag = model::Flag<CReal>;
pub type Length = quantities::Length<CReal>;
pub type Rotation = quantities::Rotation<CReal>;
pub type Triangle = congruence::Triangle<CReal>;

/// Points over exact rationals; square roots succeed only on perfect squares.
pub type RationalPoint = model::Point<num_rational::BigRational>;
/// Points over `f64`; predicates are approximate.
pub type F64Point = model::Point<f64>;
