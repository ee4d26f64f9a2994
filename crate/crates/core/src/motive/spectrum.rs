//! Symbolic bounds on the Frobenius spectrum of an expression, used to decide
//! whether `Sym*` of it has a finite point count and to size the recurrence
//! needed to find that count in closed form.
//!
//! An eigenvalue of weight `w` has absolute value `q^{w/2}`. A class is
//! written as (positive eigenvalues) minus (negative eigenvalues); counts are
//! upper bounds since cancellations are never detected.

use super::ast::{Atom, MotiveExpr};
use num_traits::Zero;

use crate::series::{int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Spectrum {
    pub pos: u64,
    pub neg: u64,
    pub max_pos: Option<i64>,
    pub max_neg: Option<i64>,
}

fn opt_max(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn opt_add(a: Option<i64>, b: Option<i64>) -> Option<Option<i64>> {
    match (a, b) {
        (Some(x), Some(y)) => x.checked_add(y).map(Some),
        _ => Some(None),
    }
}

fn binom(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

impl Spectrum {
    fn single(pos: u64, max_pos: i64, neg: u64, max_neg: i64) -> Self {
        Spectrum {
            pos,
            neg,
            max_pos: (pos > 0).then_some(max_pos),
            max_neg: (neg > 0).then_some(max_neg),
        }
    }

    fn zero() -> Self {
        Spectrum::single(0, 0, 0, 0)
    }

    fn one() -> Self {
        Spectrum::single(1, 0, 0, 0)
    }

    fn add(self, o: Spectrum) -> Option<Spectrum> {
        Some(Spectrum {
            pos: self.pos.checked_add(o.pos)?,
            neg: self.neg.checked_add(o.neg)?,
            max_pos: opt_max(self.max_pos, o.max_pos),
            max_neg: opt_max(self.max_neg, o.max_neg),
        })
    }

    fn mul(self, o: Spectrum) -> Option<Spectrum> {
        let pos = self
            .pos
            .checked_mul(o.pos)?
            .checked_add(self.neg.checked_mul(o.neg)?)?;
        let neg = self
            .pos
            .checked_mul(o.neg)?
            .checked_add(self.neg.checked_mul(o.pos)?)?;
        let max_pos = opt_max(
            opt_add(self.max_pos, o.max_pos)?,
            opt_add(self.max_neg, o.max_neg)?,
        );
        let max_neg = opt_max(
            opt_add(self.max_pos, o.max_neg)?,
            opt_add(self.max_neg, o.max_pos)?,
        );
        Some(Spectrum {
            pos,
            neg,
            max_pos: max_pos.filter(|_| pos > 0),
            max_neg: max_neg.filter(|_| neg > 0),
        })
    }

    fn twist(self, i: i64) -> Option<Spectrum> {
        let shift = i.checked_mul(2)?;
        Some(Spectrum {
            max_pos: match self.max_pos {
                Some(w) => Some(w.checked_add(shift)?),
                None => None,
            },
            max_neg: match self.max_neg {
                Some(w) => Some(w.checked_add(shift)?),
                None => None,
            },
            ..self
        })
    }

    /// `Sym^n(A - B) = Σ_k (-1)^k Sym^{n-k}(A) ⊗ Λ^k(B)`.
    fn sym(self, n: u64) -> Option<Spectrum> {
        let mut out = Spectrum::zero();
        for k in 0..=n.min(self.neg) {
            let from_pos = if self.pos == 0 {
                u64::from(n == k)
            } else {
                binom(self.pos + (n - k) - 1, n - k)?
            };
            let count = from_pos.checked_mul(binom(self.neg, k)?)?;
            if count == 0 {
                continue;
            }
            let a = i64::try_from(n - k).ok()?;
            let b = i64::try_from(k).ok()?;
            let wa = if a == 0 {
                0
            } else {
                self.max_pos?.checked_mul(a)?
            };
            let wb = if b == 0 {
                0
            } else {
                self.max_neg?.checked_mul(b)?
            };
            let w = wa.checked_add(wb)?;
            let part = if k % 2 == 0 {
                Spectrum::single(count, w, 0, 0)
            } else {
                Spectrum::single(0, 0, count, w)
            };
            out = out.add(part)?;
        }
        Some(out)
    }

    /// `Sym*` of a class with no positive part: the signed exterior algebra on `B`.
    fn sym_star(self) -> Option<Spectrum> {
        if self.pos > 0 {
            return None;
        }
        self.sym_upto(self.neg)
    }

    fn sym_upto(self, top: u64) -> Option<Spectrum> {
        let mut out = Spectrum::zero();
        for n in 0..=top {
            out = out.add(self.sym(n)?)?;
        }
        Some(out)
    }

    /// Whether `Σ_n Sym^n` converges, i.e. every positive eigenvalue has absolute value below one.
    pub fn sym_star_converges(&self) -> bool {
        self.pos == 0 || self.max_pos.is_some_and(|w| w < 0)
    }
}

/// Spectrum bound of `expr` on a curve of genus `g`, or `None` for
/// infinite-dimensional pieces (`BGmC`, zeta twists, divergent `Sym*`).
pub(crate) fn spectrum(expr: &MotiveExpr, g: u64) -> Option<Spectrum> {
    match expr {
        MotiveExpr::Atom(a) => match a {
            Atom::Unit => Some(Spectrum::one()),
            Atom::Tate(i) => Some(Spectrum::single(1, i.checked_mul(2)?, 0, 0)),
            Atom::MC => Some(Spectrum::single(2, 2, 2 * g, 1)),
            Atom::MbarC => Some(Spectrum::single(1, 2, 2 * g, 1)),
            Atom::M1Jac => Some(Spectrum::single(0, 0, 2 * g, 1)),
            Atom::ProjSpace(k) => {
                Some(Spectrum::single(u64::from(*k) + 1, 2 * i64::from(*k), 0, 0))
            }
            Atom::Jac => Spectrum::single(0, 0, 2 * g, 1).sym_star(),
            Atom::BGm | Atom::BGmC => None,
        },
        MotiveExpr::Sum(parts) => parts
            .iter()
            .try_fold(Spectrum::zero(), |acc, p| acc.add(spectrum(p, g)?)),
        MotiveExpr::Tensor(parts) => parts
            .iter()
            .try_fold(Spectrum::one(), |acc, p| acc.mul(spectrum(p, g)?)),
        MotiveExpr::Twist(e, i) => spectrum(e, g)?.twist(*i),
        MotiveExpr::Sym(e, n) => spectrum(e, g)?.sym(u64::from(*n)),
        MotiveExpr::SymStar(e) => spectrum(e, g)?.sym_star(),
        MotiveExpr::ZetaTwist(_) => None,
    }
}

/// Minimal linear recurrence of a sequence over `Q`: returns the connection
/// polynomial `C` with `C(0) = 1` and the recurrence length `ℓ`.
pub(crate) fn berlekamp_massey(s: &[Rat]) -> (Vec<Rat>, usize) {
    let mut c = vec![int(1)];
    let mut b = vec![int(1)];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = int(1);
    for n in 0..s.len() {
        let mut d = s[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d += &c[i] * &s[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &last;
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, Rat::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.truncate(l + 1);
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    (c, l)
}

/// Value at `t = 1` of the rational generating function `Σ s_n t^n` whose
/// linear complexity is at most `s.len() / 2`. `None` when `t = 1` is a pole.
pub(crate) fn rational_sum(s: &[Rat]) -> Option<Rat> {
    let (c, l) = berlekamp_massey(s);
    let mut num = Rat::zero();
    for n in 0..l {
        for (j, cj) in c.iter().enumerate().take(n + 1) {
            num += cj * &s[n - j];
        }
    }
    let den: Rat = c.iter().sum();
    if den.is_zero() {
        None
    } else {
        Some(num / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn bm_recovers_geometric_series() {
        let s: Vec<Rat> = (0..6).map(|n| rat(1, 1 << n)).collect();
        let (c, l) = berlekamp_massey(&s);
        assert_eq!(l, 1);
        assert_eq!(c, vec![int(1), rat(-1, 2)]);
        assert_eq!(rational_sum(&s), Some(int(2)));
    }

    #[test]
    fn bm_handles_polynomial_numerators() {
        // (1 + 3t + t^2) / (1 - t/3)
        let mut s = vec![int(1), int(3) + rat(1, 3), int(1) + rat(10, 9)];
        for _ in 0..5 {
            let next = s.last().unwrap() / int(3);
            s.push(next);
        }
        let expect = int(5) / (int(1) - rat(1, 3));
        assert_eq!(rational_sum(&s), Some(expect));
    }

    #[test]
    fn bm_reports_pole_at_one() {
        let s = vec![int(1); 6];
        assert_eq!(rational_sum(&s), None);
    }

    #[test]
    fn spectra_of_atoms() {
        let jac = spectrum(&MotiveExpr::Atom(Atom::Jac), 1).unwrap();
        assert_eq!((jac.pos, jac.neg), (2, 2));
        assert_eq!(spectrum(&MotiveExpr::Atom(Atom::BGm), 1), None);
        let twisted = spectrum(&MotiveExpr::mc().twist(-2), 1).unwrap();
        assert_eq!(twisted.max_pos, Some(-2));
        assert!(twisted.sym_star_converges());
        assert!(!spectrum(&MotiveExpr::mc(), 0).unwrap().sym_star_converges());
    }

    #[test]
    fn sym_counts_match_dimensions() {
        // Sym^2 of a 3-dimensional even class has dimension 6.
        let s = spectrum(&MotiveExpr::proj(2).sym(2), 0).unwrap();
        assert_eq!((s.pos, s.neg, s.max_pos), (6, 0, Some(8)));
        // Sym^2 of a 2-dimensional odd class is its exterior square.
        let s = spectrum(&MotiveExpr::Atom(Atom::M1Jac).sym(2), 1).unwrap();
        assert_eq!((s.pos, s.neg, s.max_pos), (1, 0, Some(2)));
    }
}
