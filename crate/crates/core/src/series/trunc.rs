use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_rat, rat_pow, Poly, Rat, SeriesError};

/// Formal power series `c_0 + c_1 z + ... + c_N z^N` over the rationals,
/// known exactly up to and including its order `N`.
///
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    // always exactly order + 1 entries
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^k`, which is zero when `k > order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or drops coefficients above `order`.
    pub fn from_coeffs(mut coeffs: Vec<Rat>, order: usize) -> Self {
        coeffs.resize(order + 1, Rat::zero());
        TruncSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::int(c)).collect(), order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `z^k`. Panics above the order, where the value is unknown.
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(
            k <= self.order(),
            "coefficient {k} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, `None` if zero to this order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// True iff both series agree in every coefficient up to `min(order, self.order, other.order)`
    /// and both are known at least to `order`.
    pub fn agrees_to(&self, other: &TruncSeries, order: usize) -> bool {
        self.order() >= order
            && other.order() >= order
            && self.coeffs[..=order] == other.coeffs[..=order]
    }

    /// First degree where the two series differ, within their common order.
    pub fn first_mismatch(&self, other: &TruncSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (j, c) in self.coeffs.iter().enumerate() {
            if j + k > self.order() {
                break;
            }
            out.coeffs[j + k] = c.clone();
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let a0_inv = a0.recip();
        let n = self.order();
        let mut b = vec![Rat::zero(); n + 1];
        b[0] = a0_inv.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -acc * &a0_inv;
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `a(c * z^k)`: exponent `j` moves to `j*k` with coefficient scaled by `c^j`.
    /// The result is known to order `order * k`.
    pub fn substitute(&self, k: usize, c: &Rat) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut out = Self::zero(self.order() * k);
        for (j, a) in self.coeffs.iter().enumerate() {
            out.coeffs[j * k] = a * rat_pow(c, j as i64);
        }
        out
    }

    /// `sum_k c_k x^k` over the known coefficients.
    pub fn partial_sum_at(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(z^{})", self, self.order() + 1)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = fmt_rat(c);
            terms.push(match k {
                0 => body,
                1 => format!("{body}z"),
                _ => format!("{body}z^{k}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn s(c: &[i64], n: usize) -> TruncSeries {
        TruncSeries::from_ints(c, n)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&s(&[1, 1], 4) + &s(&[0, 1, 1], 4), s(&[1, 2, 1], 4));
        let a = s(&[3, -1, 2], 5);
        assert_eq!(&a + &TruncSeries::zero(5), a);
        // mixed orders truncate to the smaller
        let sum = &s(&[1, 1], 2) + &s(&[1, 0, 0, 1], 5);
        assert_eq!(sum, s(&[2, 1], 2));
        assert_eq!(sum.order(), 2);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&s(&[1, 1], 3) * &s(&[1, -1], 3), s(&[1, 0, -1], 3));
        let a = s(&[2, 0, 5, -1], 3);
        assert_eq!(&a * &TruncSeries::one(3), a);
        let geometric = TruncSeries::from_ints(&[1; 11], 10);
        assert_eq!(&geometric * &s(&[1, -1], 10), TruncSeries::one(10));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(
            s(&[1, -1], 6).inv().unwrap(),
            TruncSeries::from_ints(&[1; 7], 6)
        );
        assert_eq!(
            s(&[2], 3).inv().unwrap(),
            TruncSeries::constant(rat(1, 2), 3)
        );
        assert_eq!(s(&[1, -2], 3).inv().unwrap(), s(&[1, 2, 4, 8], 3));
        assert_eq!(s(&[0, 1], 3).inv(), Err(SeriesError::ZeroConstantTerm));
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(s(&[1, 1], 1).substitute(2, &int(1)), s(&[1, 0, 1], 2));
        assert_eq!(s(&[1, 1], 1).substitute(1, &int(2)), s(&[1, 2], 1));
        let sub = s(&[1, 1, 1], 2).substitute(3, &int(1));
        assert_eq!(sub, s(&[1, 0, 0, 1, 0, 0, 1], 6));
        assert_eq!(sub.order(), 6);
    }

    #[test]
    fn shift_and_valuation() {
        let a = s(&[1, 2, 3], 3).shift(2);
        assert_eq!(a, s(&[0, 0, 1, 2], 3));
        assert_eq!(a.valuation(), Some(2));
        assert_eq!(TruncSeries::zero(4).valuation(), None);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coefficients_above_order_are_never_reported() {
        let _ = s(&[1, 2], 1).coeff(2);
    }
}
