//! Pre-λ-ring arithmetic on classes presented by their Adams characters.
//!
//! A class is the sequence `r -> ψ^r` for `r = 1..=R`. Sums, products and
//! Tate twists act pointwise; symmetric powers come out of the Newton
//! recursion `n σ_n = Σ_{r=1}^{n} ψ^r σ_{n-r}`. Odd-degree classes (such as
//! the weight-one part of a Jacobian) are encoded with alternating signs, so
//! the same recursion produces exterior-algebra behaviour for them.

mod coeff;

pub use coeff::LambdaCoeff;

use num_traits::One;
use thiserror::Error;

use crate::series::{int, q_pow, Rat, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("Adams depth {available} is too small, {needed} required")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("negative twist {0} has no power-series Poincaré realization")]
    NegativeTwistInPoincare(i64),
}

/// A realized class given by `ψ^1, ..., ψ^R`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdamsClass<C> {
    psi: Vec<C>,
    unit: C,
}

/// `coeffs[n]` is the realization of `Sym^n` of a class, for `n <= order`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymSeries<C> {
    coeffs: Vec<C>,
}

impl<C: LambdaCoeff> AdamsClass<C> {
    /// `unit` fixes the realization (e.g. the series order); it is the value of `ψ^r(1)`.
    pub fn new(psi: Vec<C>, unit: C) -> Self {
        AdamsClass { psi, unit }
    }

    pub fn from_fn(depth: usize, unit: C, mut f: impl FnMut(usize) -> C) -> Self {
        AdamsClass {
            psi: (1..=depth).map(&mut f).collect(),
            unit,
        }
    }

    pub fn try_from_fn<E>(
        depth: usize,
        unit: C,
        mut f: impl FnMut(usize) -> Result<C, E>,
    ) -> Result<Self, E> {
        let psi = (1..=depth).map(&mut f).collect::<Result<_, _>>()?;
        Ok(AdamsClass { psi, unit })
    }

    pub fn zero(unit: C, depth: usize) -> Self {
        let z = unit.zero_like();
        AdamsClass {
            psi: vec![z; depth],
            unit,
        }
    }

    pub fn one(unit: C, depth: usize) -> Self {
        AdamsClass {
            psi: vec![unit.clone(); depth],
            unit,
        }
    }

    /// `m` copies of the unit class.
    pub fn multiple_of_unit(m: &Rat, unit: C, depth: usize) -> Self {
        let v = unit.scale(m);
        AdamsClass {
            psi: vec![v; depth],
            unit,
        }
    }

    pub fn depth(&self) -> usize {
        self.psi.len()
    }

    pub fn unit(&self) -> &C {
        &self.unit
    }

    /// `ψ^r`, 1-based.
    pub fn psi(&self, r: usize) -> &C {
        &self.psi[r - 1]
    }

    pub fn psis(&self) -> &[C] {
        &self.psi
    }

    /// The realization of the class itself, `ψ^1`.
    pub fn value(&self) -> Result<&C, LambdaError> {
        self.psi.first().ok_or(LambdaError::InsufficientDepth {
            needed: 1,
            available: 0,
        })
    }

    pub fn truncate_depth(&self, depth: usize) -> Self {
        AdamsClass {
            psi: self.psi[..depth.min(self.depth())].to_vec(),
            unit: self.unit.clone(),
        }
    }

    /// Class with `ψ^k` replaced by `ψ^{rk}`, i.e. `ψ^r` applied to the class.
    pub fn dilate(&self, r: usize) -> Self {
        assert!(r >= 1);
        AdamsClass {
            psi: (1..=self.depth() / r)
                .map(|k| self.psi[r * k - 1].clone())
                .collect(),
            unit: self.unit.clone(),
        }
    }

    pub fn map(&self, mut f: impl FnMut(usize, &C) -> C) -> Self {
        AdamsClass {
            psi: self
                .psi
                .iter()
                .enumerate()
                .map(|(i, c)| f(i + 1, c))
                .collect(),
            unit: self.unit.clone(),
        }
    }

    fn require(&self, needed: usize) -> Result<(), LambdaError> {
        if self.depth() < needed {
            Err(LambdaError::InsufficientDepth {
                needed,
                available: self.depth(),
            })
        } else {
            Ok(())
        }
    }
}

/// Direct sum: `ψ^r(a ⊕ b) = ψ^r(a) + ψ^r(b)`. Depth is the smaller of the two.
pub fn adams_sum<C: LambdaCoeff>(a: &AdamsClass<C>, b: &AdamsClass<C>) -> AdamsClass<C> {
    AdamsClass {
        psi: a.psi.iter().zip(&b.psi).map(|(x, y)| x.add(y)).collect(),
        unit: a.unit.clone(),
    }
}

/// Tensor product: `ψ^r(a ⊗ b) = ψ^r(a) ψ^r(b)`.
pub fn adams_mul<C: LambdaCoeff>(a: &AdamsClass<C>, b: &AdamsClass<C>) -> AdamsClass<C> {
    AdamsClass {
        psi: a.psi.iter().zip(&b.psi).map(|(x, y)| x.mul(y)).collect(),
        unit: a.unit.clone(),
    }
}

/// Realization of `Sym^n(a)` via `n σ_n = Σ_{r=1}^{n} ψ^r(a) σ_{n-r}`.
pub fn sym_n<C: LambdaCoeff>(a: &AdamsClass<C>, n: usize) -> Result<C, LambdaError> {
    let series = sym_star(a, n)?;
    Ok(series
        .coeffs
        .into_iter()
        .next_back()
        .expect("order + 1 entries"))
}

/// `Sym^0(a), ..., Sym^order(a)`.
pub fn sym_star<C: LambdaCoeff>(
    a: &AdamsClass<C>,
    order: usize,
) -> Result<SymSeries<C>, LambdaError> {
    a.require(order)?;
    let mut sigma: Vec<C> = Vec::with_capacity(order + 1);
    sigma.push(a.unit.clone());
    for n in 1..=order {
        let mut acc = a.unit.zero_like();
        for r in 1..=n {
            let p = a.psi(r);
            if p.is_zero() || sigma[n - r].is_zero() {
                continue;
            }
            acc = acc.add(&p.mul(&sigma[n - r]));
        }
        sigma.push(acc.scale(&Rat::new(One::one(), (n as i64).into())));
    }
    Ok(SymSeries { coeffs: sigma })
}

impl<C: LambdaCoeff> SymSeries<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a Sym series always contains Sym^0");
        SymSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn get(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    /// Cauchy product in the Sym-index, the Sym series of a direct sum.
    pub fn convolve(&self, other: &SymSeries<C>) -> SymSeries<C> {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(self.coeffs[0].zero_like(), |acc, i| {
                    acc.add(&self.coeffs[i].mul(&other.coeffs[k - i]))
                })
            })
            .collect();
        SymSeries { coeffs }
    }

    /// `Σ_{n <= order} Sym^n`.
    pub fn total(&self) -> C {
        self.coeffs
            .iter()
            .skip(1)
            .fold(self.coeffs[0].clone(), |acc, c| acc.add(c))
    }
}

/// Count realization of `Q{i}`: `ψ^r = q^{ir}`. Negative `i` gives rationals.
pub fn tate_count(i: i64, q: u64, depth: usize) -> AdamsClass<Rat> {
    AdamsClass::from_fn(depth, int(1), |r| q_pow(q, i * r as i64))
}

/// Poincaré realization of `Q{i}`: `ψ^r = z^{2ir}`.
pub fn tate_poincare(
    i: i64,
    order: usize,
    depth: usize,
) -> Result<AdamsClass<TruncSeries>, LambdaError> {
    if i < 0 {
        return Err(LambdaError::NegativeTwistInPoincare(i));
    }
    let i = i as usize;
    Ok(AdamsClass::from_fn(depth, TruncSeries::one(order), |r| {
        TruncSeries::monomial(int(1), 2 * i * r, order)
    }))
}

/// Odd class of rank `m` sitting in degree one: `ψ^r = (-1)^{r+1} m z^r`.
/// Its Sym series is `(1 + sz)^m`.
pub fn odd_class_poincare(m: u64, order: usize, depth: usize) -> AdamsClass<TruncSeries> {
    AdamsClass::from_fn(depth, TruncSeries::one(order), |r| {
        let sign = if r % 2 == 1 { 1 } else { -1 };
        TruncSeries::monomial(int(sign * m as i64), r, order)
    })
}

/// Adams character of a pure class (odd degrees are odd classes) from its
/// Poincaré series `f`: `ψ^r f(z) = f(-(-z)^r)`.
pub fn pure_poincare_class(f: &TruncSeries, depth: usize) -> AdamsClass<TruncSeries> {
    let order = f.order();
    AdamsClass::from_fn(depth, TruncSeries::one(order), |r| {
        let sign = if r % 2 == 1 { int(1) } else { int(-1) };
        f.substitute(r, &sign).truncate(order)
    })
}

#[cfg(test)]
mod tests;
