use std::fmt;

use num_traits::Signed;

use super::ast::{Atom, MotiveExpr};
use super::spectrum::{rational_sum, spectrum};
use super::RealizeError;
use crate::curve::CurveData;
use crate::lambda::{
    adams_mul, adams_sum, odd_class_poincare, pure_poincare_class, sym_n, sym_star, tate_count,
    tate_poincare, AdamsClass, LambdaCoeff,
};
use crate::series::{big, fmt_rat, int, q_pow, rat_pow, Ball, Poly, Rat, RatFunc, TruncSeries};

/// Largest Adams depth any node may request unless the context says otherwise.
pub const DEFAULT_MAX_DEPTH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Exact rationals from closed forms.
    Exact,
    /// Partial sums to the given length, returned as balls with certified radius.
    Truncated(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Poincare { genus: u32, order: usize },
    Count { curve: CurveData, mode: CountMode },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationContext {
    pub realization: Realization,
    /// Upper bound on the Adams depth requested by nested `Sym` nodes.
    pub max_depth: usize,
}

impl RealizationContext {
    pub fn poincare(genus: u32, order: usize) -> Self {
        RealizationContext {
            realization: Realization::Poincare { genus, order },
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    pub fn count(curve: CurveData) -> Self {
        RealizationContext {
            realization: Realization::Count {
                curve,
                mode: CountMode::Exact,
            },
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    pub fn count_truncated(curve: CurveData, terms: usize) -> Self {
        RealizationContext {
            realization: Realization::Count {
                curve,
                mode: CountMode::Truncated(terms),
            },
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    pub fn with_max_depth(mut self, max_depth: usize) -> Self {
        self.max_depth = max_depth;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Realized {
    Series(TruncSeries),
    Exact(Rat),
    Approx(Ball),
}

impl Realized {
    pub fn as_series(&self) -> Option<&TruncSeries> {
        match self {
            Realized::Series(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Realized::Exact(x) => Some(x),
            _ => None,
        }
    }
}

/// Series print as their coefficients `c_0 .. c_N` separated by spaces.
impl fmt::Display for Realized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Realized::Series(s) => {
                let parts: Vec<String> = s.coeffs().iter().map(fmt_rat).collect();
                write!(f, "{}", parts.join(" "))
            }
            Realized::Exact(x) => write!(f, "{}", fmt_rat(x)),
            Realized::Approx(b) => write!(f, "{b}"),
        }
    }
}

/// Adams character of an expression in one of the three realizations.
#[derive(Debug, Clone, PartialEq)]
pub enum AdamsValue {
    Series(AdamsClass<TruncSeries>),
    Exact(AdamsClass<Rat>),
    Approx(AdamsClass<Ball>),
}

trait Backend {
    type C: LambdaCoeff;
    fn unit(&self) -> Self::C;
    fn max_depth(&self) -> usize;
    fn leaf(&self, atom: &Atom, depth: usize) -> Result<AdamsClass<Self::C>, RealizeError>;
    fn tate(&self, i: i64, depth: usize) -> Result<AdamsClass<Self::C>, RealizeError>;
    fn zeta_twist(&self, i: i64, depth: usize) -> Result<AdamsClass<Self::C>, RealizeError>;
    fn sym_star(&self, e: &MotiveExpr, depth: usize) -> Result<AdamsClass<Self::C>, RealizeError>;

    fn budget(&self, needed: Option<usize>) -> Result<usize, RealizeError> {
        match needed {
            Some(n) if n <= self.max_depth() => Ok(n),
            _ => Err(RealizeError::InsufficientDepth {
                needed: needed.unwrap_or(usize::MAX),
                available: self.max_depth(),
            }),
        }
    }
}

fn adams<B: Backend>(
    b: &B,
    expr: &MotiveExpr,
    depth: usize,
) -> Result<AdamsClass<B::C>, RealizeError> {
    b.budget(Some(depth))?;
    match expr {
        MotiveExpr::Atom(Atom::Jac) => b.sym_star(&Atom::M1Jac.into(), depth),
        MotiveExpr::Atom(Atom::BGm) => b.sym_star(&MotiveExpr::tate(1), depth),
        MotiveExpr::Atom(a) => b.leaf(a, depth),
        MotiveExpr::Sum(parts) => parts
            .iter()
            .try_fold(AdamsClass::zero(b.unit(), depth), |acc, p| {
                Ok(adams_sum(&acc, &adams(b, p, depth)?))
            }),
        MotiveExpr::Tensor(parts) => parts
            .iter()
            .try_fold(AdamsClass::one(b.unit(), depth), |acc, p| {
                Ok(adams_mul(&acc, &adams(b, p, depth)?))
            }),
        MotiveExpr::Twist(e, i) => Ok(adams_mul(&adams(b, e, depth)?, &b.tate(*i, depth)?)),
        MotiveExpr::Sym(e, n) => {
            let n = *n as usize;
            let child = adams(b, e, b.budget(depth.checked_mul(n))?)?;
            Ok(AdamsClass::try_from_fn(depth, b.unit(), |r| {
                sym_n(&child.dilate(r), n)
            })?)
        }
        MotiveExpr::SymStar(e) => b.sym_star(e, depth),
        MotiveExpr::ZetaTwist(i) => b.zeta_twist(*i, depth),
    }
}

struct PoincareBackend {
    genus: u64,
    order: usize,
    max_depth: usize,
}

impl PoincareBackend {
    fn pure(&self, coeffs: &[i64], depth: usize) -> AdamsClass<TruncSeries> {
        pure_poincare_class(&TruncSeries::from_ints(coeffs, self.order), depth)
    }

    /// `(1 + z^{2i+1})^{2g} / ((1 - z^{2i})(1 - z^{2i+2}))`.
    fn zeta_closed_form(&self, i: usize) -> TruncSeries {
        let n = self.order;
        let one = TruncSeries::one(n);
        let odd = &one + &TruncSeries::monomial(int(1), 2 * i + 1, n);
        let num = odd.pow(2 * self.genus as u32);
        let d1 = &one - &TruncSeries::monomial(int(1), 2 * i, n);
        let d2 = &one - &TruncSeries::monomial(int(1), 2 * i + 2, n);
        let inv = (&d1 * &d2).inv().expect("constant term is one");
        &num * &inv
    }
}

impl Backend for PoincareBackend {
    type C = TruncSeries;

    fn unit(&self) -> TruncSeries {
        TruncSeries::one(self.order)
    }

    fn max_depth(&self) -> usize {
        self.max_depth
    }

    fn leaf(&self, atom: &Atom, depth: usize) -> Result<AdamsClass<TruncSeries>, RealizeError> {
        let g = self.genus as i64;
        Ok(match atom {
            Atom::Unit => AdamsClass::one(self.unit(), depth),
            Atom::Tate(i) => return self.tate(*i, depth),
            Atom::MC => self.pure(&[1, 2 * g, 1], depth),
            Atom::MbarC => self.pure(&[0, 2 * g, 1], depth),
            Atom::M1Jac => odd_class_poincare(2 * self.genus, self.order, depth),
            Atom::ProjSpace(k) => {
                let coeffs: Vec<i64> = (0..=2 * *k as usize)
                    .map(|d| i64::from(d % 2 == 0))
                    .collect();
                self.pure(&coeffs, depth)
            }
            Atom::BGmC => return Err(RealizeError::LaurentRequired("BGmC".into())),
            Atom::Jac | Atom::BGm => unreachable!("expanded before reaching the backend"),
        })
    }

    fn tate(&self, i: i64, depth: usize) -> Result<AdamsClass<TruncSeries>, RealizeError> {
        Ok(tate_poincare(i, self.order, depth)?)
    }

    fn zeta_twist(&self, i: i64, depth: usize) -> Result<AdamsClass<TruncSeries>, RealizeError> {
        if i <= 0 {
            return Err(RealizeError::LaurentRequired(format!("Z(C,L^{i})")));
        }
        Ok(pure_poincare_class(
            &self.zeta_closed_form(i as usize),
            depth,
        ))
    }

    /// Converges in the `z`-adic topology when `ψ^j` of the argument has
    /// `z`-order at least `j`, so that `Sym^n` starts in degree `n`.
    fn sym_star(
        &self,
        e: &MotiveExpr,
        depth: usize,
    ) -> Result<AdamsClass<TruncSeries>, RealizeError> {
        let n = self.order;
        let child = adams(self, e, n)?;
        for j in 1..=n {
            if child.psi(j).valuation().is_some_and(|v| v < j) {
                return Err(RealizeError::Divergent(e.to_string()));
            }
        }
        AdamsClass::try_from_fn(depth, self.unit(), |r| {
            Ok(sym_star(&child.dilate(r), n / r)?.total())
        })
    }
}

struct CountBackend<'a> {
    curve: &'a CurveData,
    max_depth: usize,
}

fn base_change_zeta(curve: &CurveData, r: usize) -> (Poly, RatFunc) {
    let p = curve.weil_over_extension(r);
    let qr = num_traits::pow(big(curve.q()), r);
    let den = &Poly::from_ints(&[1, -1]) * &Poly::new(vec![int(1), -qr]);
    let zeta = RatFunc::new(p.clone(), den).expect("denominator is one at the origin");
    (p, zeta)
}

impl CountBackend<'_> {
    fn q(&self) -> u64 {
        self.curve.q()
    }

    fn count_class(&self, depth: usize, f: impl Fn(usize, Rat) -> Rat) -> AdamsClass<Rat> {
        let counts = self.curve.point_counts(depth);
        AdamsClass::from_fn(depth, int(1), |r| f(r, big(counts.get(r).clone())))
    }
}

impl Backend for CountBackend<'_> {
    type C = Rat;

    fn unit(&self) -> Rat {
        int(1)
    }

    fn max_depth(&self) -> usize {
        self.max_depth
    }

    fn leaf(&self, atom: &Atom, depth: usize) -> Result<AdamsClass<Rat>, RealizeError> {
        let q = self.q();
        Ok(match atom {
            Atom::Unit => AdamsClass::one(int(1), depth),
            Atom::Tate(i) => return self.tate(*i, depth),
            Atom::MC => self.count_class(depth, |_, p| p),
            Atom::MbarC => self.count_class(depth, |_, p| p - int(1)),
            Atom::M1Jac => self.count_class(depth, |r, p| p - int(1) - q_pow(q, r as i64)),
            Atom::ProjSpace(k) => AdamsClass::from_fn(depth, int(1), |r| {
                (0..=i64::from(*k)).map(|i| q_pow(q, r as i64 * i)).sum()
            }),
            Atom::BGmC => {
                AdamsClass::from_fn(depth, int(1), |r| (q_pow(q, r as i64) - int(1)).recip())
            }
            Atom::Jac | Atom::BGm => unreachable!("expanded before reaching the backend"),
        })
    }

    fn tate(&self, i: i64, depth: usize) -> Result<AdamsClass<Rat>, RealizeError> {
        Ok(tate_count(i, self.q(), depth))
    }

    fn zeta_twist(&self, i: i64, depth: usize) -> Result<AdamsClass<Rat>, RealizeError> {
        if i >= -1 {
            return Err(RealizeError::PoleAtTwist(i));
        }
        AdamsClass::try_from_fn(depth, int(1), |r| {
            let (_, zeta) = base_change_zeta(self.curve, r);
            Ok(zeta.eval(&q_pow(self.q(), r as i64 * i))?)
        })
    }

    /// Closed form of `Σ_n Sym^n` from the spectrum bound: with no positive
    /// part the series is a polynomial; otherwise its generating function is
    /// rational of known complexity and is recovered from finitely many terms.
    fn sym_star(&self, e: &MotiveExpr, depth: usize) -> Result<AdamsClass<Rat>, RealizeError> {
        let divergent = || RealizeError::Divergent(e.to_string());
        let sp = spectrum(e, u64::from(self.curve.genus())).ok_or_else(divergent)?;
        if !sp.sym_star_converges() {
            return Err(divergent());
        }
        if sp.pos == 0 {
            let terms = self.budget(usize::try_from(sp.neg).ok())?;
            let child = adams(self, e, self.budget(depth.checked_mul(terms))?)?;
            return AdamsClass::try_from_fn(depth, int(1), |r| {
                Ok(sym_star(&child.dilate(r), terms)?.total())
            });
        }
        let l = usize::try_from(sp.pos.max(sp.neg.saturating_add(1))).ok();
        let terms = self.budget(l.and_then(|l| l.checked_mul(2)?.checked_add(2)))?;
        let child = adams(self, e, self.budget(depth.checked_mul(terms))?)?;
        AdamsClass::try_from_fn(depth, int(1), |r| {
            let sigma = sym_star(&child.dilate(r), terms - 1)?;
            rational_sum(sigma.coeffs()).ok_or_else(divergent)
        })
    }
}

struct TruncatedBackend<'a> {
    exact: CountBackend<'a>,
    terms: usize,
}

fn balls(c: AdamsClass<Rat>) -> AdamsClass<Ball> {
    AdamsClass::new(
        c.psis().iter().cloned().map(Ball::exact).collect(),
        Ball::exact(int(1)),
    )
}

impl Backend for TruncatedBackend<'_> {
    type C = Ball;

    fn unit(&self) -> Ball {
        Ball::exact(int(1))
    }

    fn max_depth(&self) -> usize {
        self.exact.max_depth
    }

    fn leaf(&self, atom: &Atom, depth: usize) -> Result<AdamsClass<Ball>, RealizeError> {
        if *atom != Atom::BGmC {
            return Ok(balls(self.exact.leaf(atom, depth)?));
        }
        let q = self.exact.q();
        let j = self.terms as i64;
        Ok(AdamsClass::from_fn(depth, self.unit(), |r| {
            let big_q = q_pow(q, r as i64);
            let inv = big_q.recip();
            let partial: Rat = (1..=j).map(|i| rat_pow(&inv, i)).sum();
            let tail = rat_pow(&inv, j) / (big_q - int(1));
            Ball::new(partial, tail)
        }))
    }

    fn tate(&self, i: i64, depth: usize) -> Result<AdamsClass<Ball>, RealizeError> {
        Ok(balls(self.exact.tate(i, depth)?))
    }

    /// Partial sum `Σ_{j <= J} #Sym^j C(F_Q) Q^{ij}` with the tail bounded by
    /// `#Sym^j C(F_Q) <= B Q^j`.
    fn zeta_twist(&self, i: i64, depth: usize) -> Result<AdamsClass<Ball>, RealizeError> {
        if i >= -1 {
            return Err(RealizeError::PoleAtTwist(i));
        }
        let q = self.exact.q();
        Ok(AdamsClass::from_fn(depth, self.unit(), |r| {
            let (p, zeta) = base_change_zeta(self.exact.curve, r);
            let big_q = q_pow(q, r as i64);
            let x = q_pow(q, r as i64 * i);
            let partial = zeta.expand(self.terms).partial_sum_at(&x);
            let growth: Rat = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c.abs() * rat_pow(&big_q, 1 - k as i64))
                .sum::<Rat>()
                / (&big_q - int(1));
            let rho = &big_q * &x;
            let tail = growth * rat_pow(&rho, self.terms as i64 + 1) / (int(1) - rho);
            Ball::new(partial, tail)
        }))
    }

    fn sym_star(&self, e: &MotiveExpr, depth: usize) -> Result<AdamsClass<Ball>, RealizeError> {
        let exact = self.exact.sym_star(e, depth)?;
        let child = adams(&self.exact, e, self.budget(depth.checked_mul(self.terms))?)?;
        AdamsClass::try_from_fn(depth, self.unit(), |r| {
            let partial = sym_star(&child.dilate(r), self.terms)?.total();
            let rad = (exact.psi(r) - &partial).abs();
            Ok(Ball::new(partial, rad))
        })
    }
}

/// Adams character `ψ^1 .. ψ^depth` of `expr` in the realization of `ctx`.
pub fn to_adams(
    expr: &MotiveExpr,
    ctx: &RealizationContext,
    depth: usize,
) -> Result<AdamsValue, RealizeError> {
    match &ctx.realization {
        Realization::Poincare { genus, order } => {
            let b = PoincareBackend {
                genus: u64::from(*genus),
                order: *order,
                max_depth: ctx.max_depth,
            };
            Ok(AdamsValue::Series(adams(&b, expr, depth)?))
        }
        Realization::Count { curve, mode } => {
            let exact = CountBackend {
                curve,
                max_depth: ctx.max_depth,
            };
            match mode {
                CountMode::Exact => Ok(AdamsValue::Exact(adams(&exact, expr, depth)?)),
                CountMode::Truncated(terms) => {
                    let b = TruncatedBackend {
                        exact,
                        terms: *terms,
                    };
                    Ok(AdamsValue::Approx(adams(&b, expr, depth)?))
                }
            }
        }
    }
}

pub fn poincare_adams(
    expr: &MotiveExpr,
    genus: u32,
    order: usize,
    depth: usize,
) -> Result<AdamsClass<TruncSeries>, RealizeError> {
    let ctx =
        RealizationContext::poincare(genus, order).with_max_depth(DEFAULT_MAX_DEPTH.max(depth));
    match to_adams(expr, &ctx, depth)? {
        AdamsValue::Series(c) => Ok(c),
        _ => unreachable!(),
    }
}

pub fn count_adams(
    expr: &MotiveExpr,
    curve: &CurveData,
    depth: usize,
) -> Result<AdamsClass<Rat>, RealizeError> {
    let ctx = RealizationContext::count(curve.clone()).with_max_depth(DEFAULT_MAX_DEPTH.max(depth));
    match to_adams(expr, &ctx, depth)? {
        AdamsValue::Exact(c) => Ok(c),
        _ => unreachable!(),
    }
}

pub fn realize(expr: &MotiveExpr, ctx: &RealizationContext) -> Result<Realized, RealizeError> {
    Ok(match to_adams(expr, ctx, 1)? {
        AdamsValue::Series(c) => Realized::Series(c.value()?.clone()),
        AdamsValue::Exact(c) => Realized::Exact(c.value()?.clone()),
        AdamsValue::Approx(c) => Realized::Approx(c.value()?.clone()),
    })
}

/// Poincaré series of `expr` on a curve of the given genus, to order `order`.
pub fn realize_series(
    expr: &MotiveExpr,
    genus: u32,
    order: usize,
) -> Result<TruncSeries, RealizeError> {
    Ok(poincare_adams(expr, genus, order, 1)?.value()?.clone())
}

/// Exact point count of `expr` over the base field of `curve`.
pub fn realize_count(expr: &MotiveExpr, curve: &CurveData) -> Result<Rat, RealizeError> {
    Ok(count_adams(expr, curve, 1)?.value()?.clone())
}
