//! Exact computer algebra for motives of moduli stacks of vector bundles on a
//! curve.
//!
//! Motivic expressions are evaluated through two realizations: the Poincaré
//! series (a truncated power series in `z`, with `z` tracking degree) and the
//! finite-field point count (an exact rational). Both are driven by one
//! λ-ring engine working on Adams characters.

pub mod bun;
pub mod curve;
pub mod lambda;
pub mod motive;
pub mod oracle;
pub mod series;

pub use bun::{BIndex, BSummand, ITuple};
pub use curve::{CurveData, CurveSpec, ExplicitModel, ModelKind, PointCounts};
pub use lambda::{AdamsClass, LambdaCoeff, SymSeries};
pub use motive::{Atom, MotiveExpr, Realization, RealizationContext, Realized};
pub use series::{Ball, Poly, Rat, RatFunc, TruncSeries};
