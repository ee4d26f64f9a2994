//! Symbolic motive expressions and their two realizations.
//!
//! `Jac` and `BGm` are not primitive: they expand to `Sym*` of their
//! generators before evaluation. Every `Sym` node is evaluated by the
//! Newton recursion on Adams characters.

mod ast;
mod parser;
mod realize;
mod spectrum;

pub use ast::{Atom, MotiveExpr};
pub use parser::{parse, ParseError, ParseErrorKind};
pub use realize::{
    count_adams, poincare_adams, realize, realize_count, realize_series, to_adams, AdamsValue,
    CountMode, Realization, RealizationContext, Realized, DEFAULT_MAX_DEPTH,
};

use thiserror::Error;

use crate::curve::CurveError;
use crate::lambda::LambdaError;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("Z(C,L^{0}) has no finite count realization")]
    PoleAtTwist(i64),
    #[error("{0} needs a Laurent series and has no Poincaré realization in z")]
    LaurentRequired(String),
    #[error("Sym depth {needed} exceeds the available budget {available}")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("SymStar({0}) has no finite count realization")]
    Divergent(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl From<LambdaError> for RealizeError {
    fn from(e: LambdaError) -> Self {
        match e {
            LambdaError::InsufficientDepth { needed, available } => {
                RealizeError::InsufficientDepth { needed, available }
            }
            LambdaError::NegativeTwistInPoincare(i) => {
                RealizeError::LaurentRequired(format!("L^{i}"))
            }
        }
    }
}
