use std::fmt::Debug;

use num_traits::Zero;

use crate::series::{Ball, Rat, TruncSeries};

/// Values an Adams character can take: a commutative ring with rational scalars.
pub trait LambdaCoeff: Clone + Debug + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    fn is_zero(&self) -> bool;
}

impl LambdaCoeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl LambdaCoeff for TruncSeries {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.order())
    }
    fn one_like(&self) -> Self {
        TruncSeries::one(self.order())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rat) -> Self {
        TruncSeries::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        TruncSeries::is_zero(self)
    }
}

impl LambdaCoeff for Ball {
    fn zero_like(&self) -> Self {
        Ball::exact(Rat::zero())
    }
    fn one_like(&self) -> Self {
        Ball::exact(num_traits::One::one())
    }
    fn add(&self, other: &Self) -> Self {
        Ball::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Ball::mul(self, other)
    }
    fn scale(&self, c: &Rat) -> Self {
        Ball::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.mid) && Zero::is_zero(&self.rad)
    }
}
