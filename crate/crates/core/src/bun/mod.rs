//! Formulas for the moduli stack of vector bundles on a curve as executable
//! pipelines: the closed formula, its compactly supported version, the
//! divisor and Hecke motives, and the colimit that computes the closed formula
//! degree by degree.

mod index;

pub use index::{b_index_set, transition_support, tuple_maps, BIndex, ITuple};

use num_traits::One;
use thiserror::Error;

use crate::curve::{CurveData, CurveError};
use crate::lambda::{sym_star, LambdaError};
use crate::motive::{poincare_adams, Atom, MotiveExpr, RealizeError};
use crate::series::{big, q_pow, Rat, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BunError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("n*l - d = {n}*{l} - {d} is negative")]
    NegativeLength { n: u32, d: i64, l: i64 },
    #[error("colimit did not stabilize in degree {degree}")]
    Unstable { degree: usize },
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

impl From<LambdaError> for BunError {
    fn from(e: LambdaError) -> Self {
        BunError::Realize(e.into())
    }
}

/// One summand `⊗_i Sym^{m_i}(M(C)){i m_i}` of the divisor motive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSummand {
    pub index: BIndex,
    /// `Σ i m_i`.
    pub twist: u64,
    pub expr: MotiveExpr,
}

fn check_rank(n: u32) -> Result<(), BunError> {
    if n == 0 {
        Err(BunError::ZeroRank)
    } else {
        Ok(())
    }
}

/// `n l - d`, the length of the modifications in `Div_{n,d}(l)`.
pub fn modification_length(n: u32, d: i64, l: i64) -> Result<usize, BunError> {
    check_rank(n)?;
    let len = i64::from(n) * l - d;
    usize::try_from(len).map_err(|_| BunError::NegativeLength { n, d, l })
}

/// `M_{C,n} = M̄(C) ⊕ ⊕_{i=1}^{n-1} M(C){i}`.
pub fn m_c_n(n: u32) -> Result<MotiveExpr, BunError> {
    check_rank(n)?;
    let mut parts = vec![MotiveExpr::Atom(Atom::MbarC)];
    parts.extend((1..n).map(|i| MotiveExpr::mc().twist(i64::from(i))));
    Ok(MotiveExpr::sum(parts))
}

/// `Jac ⊗ BGm ⊗ ⊗_{i=1}^{n-1} Z(C, L^i)`; the degree does not enter.
pub fn bun_closed(n: u32) -> Result<MotiveExpr, BunError> {
    check_rank(n)?;
    let mut parts = vec![Atom::Jac.into(), Atom::BGm.into()];
    parts.extend((1..n).map(|i| MotiveExpr::ZetaTwist(i64::from(i))));
    Ok(MotiveExpr::Tensor(parts))
}

/// Poincaré series of `Σ_{i <= nl-d} Sym^i(M_{C,n})` to order `order`, for
/// the least `l` with `nl - d >= order`. Since `M_{C,n}` starts in degree one,
/// `Sym^i` starts in degree `i`, and the next stage of the colimit is checked
/// to leave every coefficient unchanged.
pub fn bun_colimit(n: u32, d: i64, genus: u32, order: usize) -> Result<TruncSeries, BunError> {
    check_rank(n)?;
    let nn = i64::from(n);
    let mut l = (d + order as i64).div_euclid(nn);
    while nn * l - d < order as i64 {
        l += 1;
    }
    let len = modification_length(n, d, l)?;
    let next = len + n as usize;
    let class = poincare_adams(&m_c_n(n)?, genus, order, next)?;
    let sigma = sym_star(&class, next)?;
    let stage = |top: usize| {
        sigma.coeffs()[..=top]
            .iter()
            .fold(TruncSeries::zero(order), |acc, s| &acc + s)
    };
    let current = stage(len);
    if let Some(degree) = current.first_mismatch(&stage(next)) {
        return Err(BunError::Unstable { degree });
    }
    Ok(current)
}

/// `M(Div_{n,d}(l)) = Sym^{nl-d}(M(C) ⊗ M(P^{n-1}))`.
pub fn div_motive(n: u32, d: i64, l: i64) -> Result<MotiveExpr, BunError> {
    let len = modification_length(n, d, l)?;
    Ok(kunneth_factor(n).sym(len as u32))
}

/// `M(C × P^{n-1}) = M(C) ⊗ M(P^{n-1})`.
pub fn kunneth_factor(n: u32) -> MotiveExpr {
    MotiveExpr::Tensor(vec![
        MotiveExpr::mc(),
        MotiveExpr::proj(n.saturating_sub(1)),
    ])
}

/// The summand of the divisor motive indexed by `m`.
pub fn b_summand(m: &BIndex) -> BSummand {
    let mut factors = Vec::new();
    for (i, &mi) in m.parts().iter().enumerate() {
        if mi == 0 {
            continue;
        }
        let sym = if mi == 1 {
            MotiveExpr::mc()
        } else {
            MotiveExpr::mc().sym(mi as u32)
        };
        factors.push(sym.twist(i as i64 * mi as i64));
    }
    BSummand {
        index: m.clone(),
        twist: m.twist(),
        expr: MotiveExpr::tensor(factors),
    }
}

/// One summand per `m ∈ B_l`, in the order of [`b_index_set`].
pub fn div_decomposition(n: u32, d: i64, l: i64) -> Result<Vec<BSummand>, BunError> {
    let len = modification_length(n, d, l)?;
    Ok(b_index_set(n, len as u64).iter().map(b_summand).collect())
}

/// `M(THecke^l) = M(T) ⊗ M(C × P^{n-1})^{⊗ l}`.
pub fn hecke_motive(l: usize, n: u32, base: MotiveExpr) -> MotiveExpr {
    let mut parts = vec![base];
    parts.extend(std::iter::repeat_n(kunneth_factor(n), l));
    MotiveExpr::tensor(parts)
}

/// `M(FDiv_{n,d}(l)) = M(C × P^{n-1})^{⊗ nl-d}`.
pub fn flag_div_motive(n: u32, d: i64, l: i64) -> Result<MotiveExpr, BunError> {
    let len = modification_length(n, d, l)?;
    Ok(hecke_motive(len, n, MotiveExpr::unit()))
}

/// `M^c(Bun_{n,d}) = Jac ⊗ M^c(BG_m){(n²-1)(g-1)} ⊗ ⊗_{i=2}^{n} Z(C, L^{-i})`.
pub fn bun_compact(n: u32, genus: u32) -> Result<MotiveExpr, BunError> {
    check_rank(n)?;
    let shift = (i64::from(n) * i64::from(n) - 1) * (i64::from(genus) - 1);
    let mut parts = vec![Atom::Jac.into(), MotiveExpr::Atom(Atom::BGmC).twist(shift)];
    parts.extend((2..=n).map(|i| MotiveExpr::ZetaTwist(-i64::from(i))));
    Ok(MotiveExpr::Tensor(parts))
}

/// Stacky count `#Jac(F_q) / (q-1) · q^{(n²-1)(g-1)} · Π_{i=2}^{n} ζ_C(i)`.
pub fn harder_count(n: u32, curve: &CurveData) -> Result<Rat, BunError> {
    check_rank(n)?;
    let q = curve.q();
    let g = i64::from(curve.genus());
    let nn = i64::from(n);
    let mut value = big(curve.jac_count()) / (big(q) - Rat::one());
    value *= q_pow(q, (nn * nn - 1) * (g - 1));
    for i in 2..=nn {
        value *= curve.zeta_special_value(i)?;
    }
    Ok(value)
}

#[cfg(test)]
mod tests;
