//! Exact rational arithmetic: polynomials, truncated power series, rational
//! functions and rational balls.
//!
//! Nothing in here ever touches floating point. Truncated series carry their
//! order explicitly and mixed-order operations truncate to the smaller order.

mod ball;
mod poly;
mod ratfunc;
mod trunc;

pub use ball::Ball;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use trunc::TruncSeries;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("rational function has a pole at {0}")]
    PoleAtPoint(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// Integer power with a possibly negative exponent.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

/// `q^e` for a natural base and integer exponent.
pub fn q_pow(q: u64, exp: i64) -> Rat {
    rat_pow(&big(q), exp)
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n/d`, or an exact decimal such as `-12`, `0.25` or `1e-9`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        return (!d.is_zero()).then(|| Rat::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) || (whole.is_empty() && frac.is_empty()) {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    Some(Rat::from_integer(digits) * rat_pow(&int(10), exp - frac.len() as i64))
}
