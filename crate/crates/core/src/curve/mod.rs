//! Curves over finite fields and their zeta data.
//!
//! A curve is given either by its Weil numerator `P(T)` or by an explicit
//! model whose points are enumerated. Everything downstream (zeta function,
//! symmetric-power counts, Jacobian order, special values) is derived from
//! the numerator, stored with the convention `P(T) = 1 - aT + ... + q^g T^{2g}`
//! so that `P(1) = #Jac(F_q)`.

pub mod catalog;
mod field;
mod file;
mod model;
mod weil;

pub use field::{prime_power, GaloisField, MAX_FIELD_SIZE};
pub use file::{CurveFile, ModelFile};
pub use model::{ExplicitModel, ModelKind};
pub use weil::{
    counts_from_weil, satisfies_functional_equation, weil_from_counts, within_weil_bounds,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{big, int, q_pow, Poly, Rat, RatFunc, SeriesError, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of size {size} exceeds the enumeration limit of {MAX_FIELD_SIZE}")]
    TooLarge { size: u64 },
    #[error("singular model: {0}")]
    SingularModel(String),
    #[error("model shape: {0}")]
    ModelShape(String),
    #[error("coefficient {0} is not an element encoding of F_q")]
    InvalidCoefficient(i64),
    #[error("inconsistent counts: {0}")]
    InconsistentCounts(String),
    #[error("invalid Weil numerator: {0}")]
    InvalidWeil(String),
    #[error("symmetric-power count {0} is not a natural number")]
    NonIntegralCount(String),
    #[error("curve file: {0}")]
    File(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `#C(F_{q^r})` for `r = 1..=R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCounts {
    counts: Vec<BigInt>,
}

impl PointCounts {
    pub fn new(counts: Vec<BigInt>) -> Self {
        PointCounts { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `#C(F_{q^r})`, 1-based.
    pub fn get(&self, r: usize) -> &BigInt {
        &self.counts[r - 1]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.counts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveSource {
    Weil(Poly),
    Model(ExplicitModel),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    pub genus: u32,
    pub q: u64,
    pub source: CurveSource,
}

impl CurveSpec {
    pub fn p1(q: u64) -> Self {
        CurveSpec {
            genus: 0,
            q,
            source: CurveSource::Model(ExplicitModel::p1()),
        }
    }

    pub fn from_model(genus: u32, q: u64, model: ExplicitModel) -> Self {
        CurveSpec {
            genus,
            q,
            source: CurveSource::Model(model),
        }
    }

    pub fn from_weil(genus: u32, q: u64, weil: Poly) -> Self {
        CurveSpec {
            genus,
            q,
            source: CurveSource::Weil(weil),
        }
    }

    /// Largest `r <= max_r` for which `F_{q^r}` can be enumerated.
    pub fn enumerable_depth(&self, max_r: u32) -> u32 {
        (1..=max_r)
            .take_while(|&r| self.q.checked_pow(r).is_some_and(|s| s <= MAX_FIELD_SIZE))
            .last()
            .unwrap_or(0)
    }

    /// Brute-force counts for `r = 1..=max_r` (explicit models only).
    pub fn enumerate_counts(&self, max_r: u32) -> Result<PointCounts, CurveError> {
        let CurveSource::Model(model) = &self.source else {
            return Err(CurveError::File(
                "point enumeration needs an explicit model".into(),
            ));
        };
        let counts = (1..=max_r)
            .map(|r| model.count_points(self.q, r).map(BigInt::from))
            .collect::<Result<_, _>>()?;
        Ok(PointCounts::new(counts))
    }

    /// Validates the curve description and fixes its Weil numerator.
    pub fn resolve(&self) -> Result<CurveData, CurveError> {
        prime_power(self.q).ok_or(CurveError::NotPrimePower(self.q))?;
        let g = self.genus;
        let weil = match &self.source {
            CurveSource::Weil(p) => {
                if p.coeff(0) != Rat::one() {
                    return Err(CurveError::InvalidWeil("P(0) must be 1".into()));
                }
                if p.degree() != Some(2 * g as usize) {
                    return Err(CurveError::InvalidWeil(format!(
                        "degree must be 2g = {}",
                        2 * g
                    )));
                }
                if p.coeffs().iter().any(|c| !c.is_integer()) {
                    return Err(CurveError::InvalidWeil(
                        "coefficients must be integers".into(),
                    ));
                }
                if !satisfies_functional_equation(p, g, self.q) {
                    return Err(CurveError::InvalidWeil("functional equation fails".into()));
                }
                p.clone()
            }
            CurveSource::Model(model) => {
                if model.kind != ModelKind::P1 {
                    let shape_genus = model.validate(self.q)?;
                    if shape_genus != g {
                        return Err(CurveError::InconsistentCounts(format!(
                            "model has genus {shape_genus}, file says {g}"
                        )));
                    }
                }
                let depth = self.enumerable_depth(2 * g + 2);
                if (depth as usize) < g.max(1) as usize {
                    return Err(CurveError::TooLarge {
                        size: self.q.saturating_pow(g),
                    });
                }
                let counts = self.enumerate_counts(depth)?;
                weil_from_counts(&counts, g, self.q)?
            }
        };
        Ok(CurveData::new(g, self.q, weil))
    }
}

/// A curve reduced to its zeta data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    genus: u32,
    q: u64,
    weil: Poly,
}

impl CurveData {
    /// Trusts its input; use [`CurveSpec::resolve`] for validation.
    pub fn new(genus: u32, q: u64, weil: Poly) -> Self {
        CurveData { genus, q, weil }
    }

    pub fn p1(q: u64) -> Self {
        CurveData::new(0, q, Poly::one())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn weil(&self) -> &Poly {
        &self.weil
    }

    /// Whether `C(F_q)` is nonempty. Recorded for reference; the count
    /// formulas do not depend on it.
    pub fn has_rational_point(&self) -> bool {
        self.point_count(1) > BigInt::zero()
    }

    /// `#C(F_{q^r})` for `r >= 1`.
    pub fn point_count(&self, r: usize) -> BigInt {
        self.point_counts(r).get(r).clone()
    }

    pub fn point_counts(&self, count: usize) -> PointCounts {
        counts_from_weil(&self.weil, self.q, count)
    }

    /// Weil numerator of the base change to `F_{q^r}`: `Π (1 - α_i^r T)`.
    pub fn weil_over_extension(&self, r: usize) -> Poly {
        let deg = 2 * self.genus as usize;
        let s = weil::power_sums_from_poly(&self.weil, deg * r);
        let s_r: Vec<Rat> = (1..=deg).map(|k| s[k * r - 1].clone()).collect();
        Poly::new(weil::poly_from_power_sums(&s_r, deg))
    }

    /// Base change to `F_{q^r}`.
    pub fn over_extension(&self, r: usize) -> CurveData {
        CurveData::new(
            self.genus,
            self.q.pow(r as u32),
            self.weil_over_extension(r),
        )
    }

    /// `Z_C(T) = P(T) / ((1 - T)(1 - qT))`.
    pub fn zeta_ratfunc(&self) -> RatFunc {
        let den = &Poly::from_ints(&[1, -1]) * &Poly::new(vec![int(1), -big(self.q)]);
        RatFunc::new(self.weil.clone(), den).expect("denominator is 1 at the origin")
    }

    /// `#Sym^j C(F_q)` for `j = 0..=max_j`.
    pub fn sym_counts(&self, max_j: usize) -> Result<Vec<BigInt>, CurveError> {
        let s: TruncSeries = self.zeta_ratfunc().expand(max_j);
        s.coeffs()
            .iter()
            .map(|c| {
                if c.is_integer() && *c >= Rat::zero() {
                    Ok(c.to_integer())
                } else {
                    Err(CurveError::NonIntegralCount(crate::series::fmt_rat(c)))
                }
            })
            .collect()
    }

    /// `#Jac(F_q) = P(1)`.
    pub fn jac_count(&self) -> BigInt {
        self.weil.eval(&Rat::one()).to_integer()
    }

    /// `ζ_C(i) = Z_C(q^{-i})`.
    pub fn zeta_special_value(&self, i: i64) -> Result<Rat, CurveError> {
        Ok(self.zeta_ratfunc().eval(&q_pow(self.q, -i))?)
    }

    /// Bound `B` with `#Sym^j C(F_q) <= B q^j` for all `j`.
    pub fn sym_count_growth_bound(&self) -> Rat {
        let q = big(self.q);
        let s: Rat = self
            .weil
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| num_traits::Signed::abs(c) * q_pow(self.q, 1 - k as i64))
            .sum();
        s / (q - int(1))
    }
}
