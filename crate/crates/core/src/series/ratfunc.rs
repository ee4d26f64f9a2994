use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use super::{fmt_rat, Poly, Rat, SeriesError, TruncSeries};

/// Rational function `num / den` expandable at the origin.
///
/// Normal form: `gcd(num, den) = 1` and `den(0) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(SeriesError::PoleAtOrigin);
        }
        let s = d0.recip();
        Ok(RatFunc {
            num: num.scale(&s),
            den: den.scale(&s),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Taylor expansion at the origin through `z^order`.
    pub fn expand(&self, order: usize) -> TruncSeries {
        // den(0) = 1 in normal form, so the recurrence needs no division.
        let d = self.den.coeffs();
        let mut c = vec![Rat::zero(); order + 1];
        for k in 0..=order {
            let mut acc = self.num.coeff(k);
            for j in 1..d.len().min(k + 1) {
                if !d[j].is_zero() {
                    acc -= &d[j] * &c[k - j];
                }
            }
            c[k] = acc;
        }
        TruncSeries::from_coeffs(c, order)
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat, SeriesError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(SeriesError::PoleAtPoint(fmt_rat(x)));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0) && self.den.coeff(0).is_one()
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of functions regular at 0 is regular at 0")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn genus0_zeta(q: i64) -> RatFunc {
        let den = &Poly::from_ints(&[1, -1]) * &Poly::from_ints(&[1, -q]);
        RatFunc::new(Poly::one(), den).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            genus0_zeta(2).expand(2),
            TruncSeries::from_ints(&[1, 3, 7], 2)
        );
        let p = Poly::from_ints(&[1, 0, 2]);
        assert_eq!(
            RatFunc::from_poly(p.clone()).expand(4),
            TruncSeries::from_poly(&p, 4)
        );
        let e = &RatFunc::from_poly(p) * &genus0_zeta(2);
        assert_eq!(e.expand(2), TruncSeries::from_ints(&[1, 3, 9], 2));
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(genus0_zeta(2).eval(&rat(1, 4)).unwrap(), rat(8, 3));
        let f = RatFunc::new(Poly::from_ints(&[-1, 1]), Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(f.eval(&int(1)).unwrap(), int(0));
        let e = &RatFunc::from_poly(Poly::from_ints(&[1, 0, 2])) * &genus0_zeta(2);
        assert!(matches!(e.eval(&int(1)), Err(SeriesError::PoleAtPoint(_))));
    }

    #[test]
    fn normal_form_cancels_common_factors() {
        let f = RatFunc::new(
            &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[1, -1]),
            &Poly::from_ints(&[2, -2]) * &Poly::from_ints(&[1, -3]),
        )
        .unwrap();
        assert_eq!(f.den(), &Poly::from_ints(&[1, -3]));
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(
            RatFunc::new(Poly::one(), Poly::from_ints(&[0, 1])),
            Err(SeriesError::PoleAtOrigin)
        );
        // removable singularity at 0
        assert!(RatFunc::new(Poly::from_ints(&[0, 1]), Poly::from_ints(&[0, 2])).is_ok());
    }
}
