//! Brute-force ground truth that is computed without the λ-ring engine.
//!
//! Effective divisors are counted from the census of closed points, and
//! stacky counts of bundles on the projective line are summed over
//! splitting types with a certified bound on the omitted tail.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::curve::PointCounts;
use crate::series::{int, q_pow, rat_pow, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("census stops at degree {available}, degree {needed} requested")]
    InsufficientCensus { needed: usize, available: usize },
    #[error("number of closed points of degree {degree} is not a non-negative integer: {value}")]
    InvalidCensus { degree: usize, value: String },
    #[error("tail tolerance must be positive")]
    NonPositiveTolerance,
    #[error("rank must be at least 1")]
    ZeroRank,
}

/// `a[r]` = number of closed points of degree `r`, for `1 <= r <= R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPointCensus {
    a: Vec<BigInt>,
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

impl ClosedPointCensus {
    /// Möbius inversion of `p_r = Σ_{s | r} s a_s`.
    pub fn from_counts(counts: &PointCounts) -> Result<Self, OracleError> {
        let mut a = Vec::with_capacity(counts.len());
        for r in 1..=counts.len() {
            let mut acc = BigInt::zero();
            for s in (1..=r).filter(|s| r % s == 0) {
                acc += counts.get(s) * mobius(r / s);
            }
            let (quot, rem) = acc.div_rem(&BigInt::from(r));
            if !rem.is_zero() || quot.is_negative() {
                return Err(OracleError::InvalidCensus {
                    degree: r,
                    value: format!("{acc}/{r}"),
                });
            }
            a.push(quot);
        }
        Ok(ClosedPointCensus { a })
    }

    pub fn depth(&self) -> usize {
        self.a.len()
    }

    /// Number of closed points of degree `r`, 1-based.
    pub fn get(&self, r: usize) -> &BigInt {
        &self.a[r - 1]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.a
    }
}

/// Number of effective divisors of degree `j`: the coefficient of `T^j` in
/// `Π_r (1 - T^r)^{-a_r}`.
pub fn divisor_count(census: &ClosedPointCensus, j: usize) -> Result<BigInt, OracleError> {
    if j > census.depth() {
        return Err(OracleError::InsufficientCensus {
            needed: j,
            available: census.depth(),
        });
    }
    let mut poly = vec![BigInt::zero(); j + 1];
    poly[0] = BigInt::one();
    for r in 1..=j {
        let a = census.get(r);
        // multiplicities of each degree-r point: C(a + k - 1, k) choices of k points
        let mut factor = vec![BigInt::zero(); j + 1];
        let mut binom = BigInt::one();
        for k in 0..=j / r {
            factor[r * k] = binom.clone();
            binom = binom * (a + k) / (k + 1);
        }
        let mut next = vec![BigInt::zero(); j + 1];
        for (i, x) in poly.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (k, y) in factor.iter().enumerate().take(j + 1 - i) {
                if !y.is_zero() {
                    next[i + k] += x * y;
                }
            }
        }
        poly = next;
    }
    Ok(poly.pop().expect("j + 1 entries"))
}

fn gl_order(m: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let qm = num_traits::pow(q.clone(), m);
    (0..m)
        .map(|k| &qm - num_traits::pow(q.clone(), k))
        .product()
}

/// `#Aut(O(a_1) ⊕ ... ⊕ O(a_n))` for a non-increasing splitting type.
pub fn automorphism_count(splitting: &[i64], q: u64) -> BigInt {
    let mut unipotent = 0u64;
    for (i, ai) in splitting.iter().enumerate() {
        for aj in &splitting[i + 1..] {
            if ai > aj {
                unipotent += (ai - aj + 1) as u64;
            }
        }
    }
    let mut levels = 1;
    let mut blocks = BigInt::one();
    for w in 1..=splitting.len() {
        if w == splitting.len() || splitting[w] != splitting[w - 1] {
            blocks *= gl_order(levels, q);
            levels = 1;
        } else {
            levels += 1;
        }
    }
    blocks * num_traits::pow(BigInt::from(q), unipotent as usize)
}

/// Non-increasing types `a_1 >= ... >= a_n` with `Σ a_i = d` and `a_1 - a_n = spread`.
pub fn splitting_types(n: usize, d: i64, spread: i64) -> Vec<Vec<i64>> {
    fn middles(len: usize, hi: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for b in (0..=hi).rev() {
            prefix.push(b);
            middles(len, b, prefix, out);
            prefix.pop();
        }
    }
    if n == 1 {
        return if spread == 0 { vec![vec![d]] } else { vec![] };
    }
    let mut shapes = Vec::new();
    middles(n - 2, spread, &mut Vec::new(), &mut shapes);
    shapes
        .into_iter()
        .filter_map(|mid| {
            let offsets: Vec<i64> = std::iter::once(spread)
                .chain(mid)
                .chain(std::iter::once(0))
                .collect();
            let rest = d - offsets.iter().sum::<i64>();
            (rest.rem_euclid(n as i64) == 0).then(|| {
                let low = rest.div_euclid(n as i64);
                offsets.iter().map(|b| b + low).collect()
            })
        })
        .collect()
}

/// Stacky count `Σ 1/#Aut(E)` of rank-`n` degree-`d` bundles on `P¹` over
/// `F_q`, summed over splitting types by increasing spread `a_1 - a_n`.
///
/// Returns `(partial, bound)` with the exact value in `[partial, partial + bound]`
/// and `bound < tail_eps`. A type of spread `s` contributes at most
/// `q^{-(n-1)(s+1)} / (q-1)^n` and there are at most `(s+1)^{n-2}` of them.
pub fn split_bundle_count_p1(
    n: u32,
    d: i64,
    q: u64,
    tail_eps: &Rat,
) -> Result<(Rat, Rat), OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroRank);
    }
    if !tail_eps.is_positive() {
        return Err(OracleError::NonPositiveTolerance);
    }
    let n_us = n as usize;
    let q_minus_one = int(q as i64 - 1);
    let scale = rat_pow(&q_minus_one, n as i64).recip();
    let x = q_pow(q, -(i64::from(n) - 1));
    let mut partial = Rat::zero();
    let mut spread = 0i64;
    loop {
        for t in splitting_types(n_us, d, spread) {
            partial += Rat::new(BigInt::one(), automorphism_count(&t, q));
        }
        if n == 1 {
            return Ok((partial, Rat::zero()));
        }
        let k = spread + 2;
        let kk = int(k);
        let rho = &x * rat_pow(&((&kk + int(1)) / &kk), i64::from(n) - 2);
        if rho < int(1) {
            let bound = rat_pow(&kk, i64::from(n) - 2) * rat_pow(&x, k) / (int(1) - rho) * &scale;
            if &bound < tail_eps {
                return Ok((partial, bound));
            }
        }
        spread += 1;
    }
}

/// `true` when `x` lies in `[partial, partial + bound]`.
pub fn interval_contains(partial: &Rat, bound: &Rat, x: &Rat) -> bool {
    partial <= x && *x <= partial + bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn census(counts: &[u64]) -> ClosedPointCensus {
        ClosedPointCensus::from_counts(&PointCounts::from_u64(counts)).unwrap()
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn projective_line_over_f2() {
        let c = census(&[3, 5, 9, 17]);
        assert_eq!(c.as_slice(), &[3, 1, 2, 3].map(BigInt::from));
        let d: Vec<BigInt> = (0..=3).map(|j| divisor_count(&c, j).unwrap()).collect();
        assert_eq!(d, [1, 3, 7, 15].map(BigInt::from));
    }

    #[test]
    fn elliptic_over_f2() {
        let c = census(&[3, 9]);
        assert_eq!(c.as_slice(), &[3, 3].map(BigInt::from));
        assert_eq!(divisor_count(&c, 2).unwrap(), BigInt::from(9));
    }

    #[test]
    fn census_rejects_impossible_counts() {
        assert!(matches!(
            ClosedPointCensus::from_counts(&PointCounts::from_u64(&[3, 2])),
            Err(OracleError::InvalidCensus { degree: 2, .. })
        ));
        assert!(matches!(
            ClosedPointCensus::from_counts(&PointCounts::from_u64(&[5, 1])),
            Err(OracleError::InvalidCensus { degree: 2, .. })
        ));
        assert_eq!(
            divisor_count(&census(&[3]), 2),
            Err(OracleError::InsufficientCensus {
                needed: 2,
                available: 1
            })
        );
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphism_count(&[0, 0], 2), BigInt::from(6));
        assert_eq!(automorphism_count(&[1, -1], 2), BigInt::from(8));
        assert_eq!(automorphism_count(&[3], 5), BigInt::from(4));
        assert_eq!(automorphism_count(&[1, 0, 0], 2), BigInt::from(6 * 16));
    }

    #[test]
    fn splitting_types_by_spread() {
        assert_eq!(splitting_types(2, 0, 0), vec![vec![0, 0]]);
        assert!(splitting_types(2, 0, 1).is_empty());
        assert_eq!(splitting_types(2, 0, 2), vec![vec![1, -1]]);
        assert_eq!(splitting_types(3, 1, 1), vec![vec![1, 0, 0]]);
        assert_eq!(splitting_types(3, 0, 2), vec![vec![1, 0, -1]]);
    }

    #[test]
    fn rank_two_on_projective_line() {
        let eps = rat(1, 1_000_000_000);
        for (q, expect) in [(2u64, rat(1, 3)), (3, rat(1, 32))] {
            for d in [0, 1, -5] {
                let (value, bound) = split_bundle_count_p1(2, d, q, &eps).unwrap();
                assert!(bound < eps);
                assert!(interval_contains(&value, &bound, &expect), "q={q} d={d}");
            }
        }
    }

    #[test]
    fn rank_one_and_three() {
        let eps = rat(1, 1_000_000);
        assert_eq!(
            split_bundle_count_p1(1, 4, 5, &eps).unwrap(),
            (rat(1, 4), rat(0, 1))
        );
        let (value, bound) = split_bundle_count_p1(3, 0, 2, &eps).unwrap();
        assert!(interval_contains(&value, &bound, &rat(1, 63)));
        let (value, bound) = split_bundle_count_p1(3, 2, 2, &eps).unwrap();
        assert!(interval_contains(&value, &bound, &rat(1, 63)));
    }

    #[test]
    fn partial_sums_increase() {
        let coarse = split_bundle_count_p1(2, 0, 2, &rat(1, 100)).unwrap();
        let fine = split_bundle_count_p1(2, 0, 2, &rat(1, 100_000)).unwrap();
        assert!(coarse.0 <= fine.0);
        assert!(fine.0 <= &coarse.0 + &coarse.1);
        assert!(split_bundle_count_p1(2, 0, 2, &rat(0, 1)).is_err());
    }
}
