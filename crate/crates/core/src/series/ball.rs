use std::fmt;

use num_traits::{Signed, Zero};

use super::{fmt_rat, Rat};

/// Closed rational interval `[mid - rad, mid + rad]`, used to carry certified
/// tail bounds through truncated count realizations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ball {
    pub mid: Rat,
    pub rad: Rat,
}

impl Ball {
    pub fn exact(mid: Rat) -> Self {
        Ball {
            mid,
            rad: Rat::zero(),
        }
    }

    pub fn new(mid: Rat, rad: Rat) -> Self {
        assert!(!rad.is_negative(), "ball radius must be non-negative");
        Ball { mid, rad }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        (x - &self.mid).abs() <= self.rad
    }

    pub fn lower(&self) -> Rat {
        &self.mid - &self.rad
    }

    pub fn upper(&self) -> Rat {
        &self.mid + &self.rad
    }

    pub fn add(&self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
        }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        let rad = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball {
            mid: &self.mid * &o.mid,
            rad,
        }
    }

    pub fn scale(&self, c: &Rat) -> Ball {
        Ball {
            mid: &self.mid * c,
            rad: &self.rad * c.abs(),
        }
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            write!(f, "{}", fmt_rat(&self.mid))
        } else {
            write!(f, "{} +/- {}", fmt_rat(&self.mid), fmt_rat(&self.rad))
        }
    }
}
