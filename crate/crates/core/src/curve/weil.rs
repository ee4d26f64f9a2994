//! Weil numerators from point counts and back, via Newton's identities.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CurveError, PointCounts};
use crate::series::{big, int, Poly, Rat};

/// `s_m = q^m + 1 - #C(F_{q^m})`, the power sums of the inverse roots of `P`.
fn power_sums_from_counts(counts: &PointCounts, q: u64) -> Vec<Rat> {
    counts
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, p)| big(BigInt::from(q).pow(i as u32 + 1) + 1u32 - p))
        .collect()
}

/// Coefficients `c_0..c_deg` of `Π (1 - α_i T)` from `s_1..s_deg`.
pub(crate) fn poly_from_power_sums(s: &[Rat], degree: usize) -> Vec<Rat> {
    let mut c = vec![Rat::one()];
    for m in 1..=degree {
        let acc: Rat = (0..m).map(|k| &c[k] * &s[m - k - 1]).sum();
        c.push(-acc / int(m as i64));
    }
    c
}

/// `s_1..s_count` of the inverse roots of `P(T) = Σ c_k T^k` with `c_0 = 1`.
pub(crate) fn power_sums_from_poly(p: &Poly, count: usize) -> Vec<Rat> {
    let mut s: Vec<Rat> = Vec::with_capacity(count);
    for m in 1..=count {
        let mut v = -p.coeff(m) * int(m as i64);
        for k in 1..m {
            v -= p.coeff(k) * &s[m - k - 1];
        }
        s.push(v);
    }
    s
}

/// Reconstructs the Weil numerator from `#C(F_{q^r})`, `r = 1..R`, `R >= g`,
/// and checks every supplied count beyond `g` against it.
pub fn weil_from_counts(counts: &PointCounts, genus: u32, q: u64) -> Result<Poly, CurveError> {
    let g = genus as usize;
    if counts.len() < g {
        return Err(CurveError::InconsistentCounts(format!(
            "{} counts supplied, genus {g} needs at least {g}",
            counts.len()
        )));
    }
    let s = power_sums_from_counts(counts, q);
    let low = poly_from_power_sums(&s, g);
    let mut coeffs = vec![Rat::zero(); 2 * g + 1];
    for k in 0..=g {
        coeffs[k] = low[k].clone();
        // functional equation: c_{2g-k} = q^{g-k} c_k
        coeffs[2 * g - k] = &low[k] * big(BigInt::from(q).pow((g - k) as u32));
    }
    if let Some(bad) = coeffs.iter().position(|c| !c.is_integer()) {
        return Err(CurveError::InconsistentCounts(format!(
            "reconstructed coefficient {bad} is not an integer"
        )));
    }
    let p = Poly::new(coeffs);
    let predicted = counts_from_weil(&p, q, counts.len());
    for (r, (want, got)) in counts
        .as_slice()
        .iter()
        .zip(predicted.as_slice())
        .enumerate()
    {
        if want != got {
            return Err(CurveError::InconsistentCounts(format!(
                "genus-{g} numerator {p} predicts #C(F_q^{}) = {got}, counted {want}",
                r + 1
            )));
        }
    }
    Ok(p)
}

/// `#C(F_{q^r})` for `r = 1..=count` from a Weil numerator.
pub fn counts_from_weil(p: &Poly, q: u64, count: usize) -> PointCounts {
    let s = power_sums_from_poly(p, count);
    let counts = s
        .iter()
        .enumerate()
        .map(|(i, s)| BigInt::from(q).pow(i as u32 + 1) + 1u32 - s.to_integer())
        .collect();
    PointCounts::new(counts)
}

/// `P(T) = q^g T^{2g} P(1/(qT))`, coefficientwise: `c_{2g-k} = q^{g-k} c_k`.
pub fn satisfies_functional_equation(p: &Poly, genus: u32, q: u64) -> bool {
    let g = genus as usize;
    if p.degree().unwrap_or(0) > 2 * g {
        return false;
    }
    (0..=2 * g).all(|k| {
        let lhs = p.coeff(2 * g - k);
        let rhs = p.coeff(k) * crate::series::q_pow(q, g as i64 - k as i64);
        lhs == rhs
    })
}

/// `|p_r - q^r - 1| <= 2g q^{r/2}`, checked exactly by squaring.
pub fn within_weil_bounds(counts: &PointCounts, genus: u32, q: u64) -> bool {
    counts.as_slice().iter().enumerate().all(|(i, p)| {
        let qr = BigInt::from(q).pow(i as u32 + 1);
        let dev = (p - &qr - 1u32).abs();
        &dev * &dev <= BigInt::from(4u32 * genus * genus) * qr
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(v: &[i64]) -> PointCounts {
        PointCounts::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn genus_zero_numerator_is_one() {
        assert_eq!(
            weil_from_counts(&pc(&[3, 5, 9]), 0, 2).unwrap(),
            Poly::one()
        );
    }

    #[test]
    fn supersingular_numerator() {
        let p = weil_from_counts(&pc(&[3, 9]), 1, 2).unwrap();
        assert_eq!(p, Poly::from_ints(&[1, 0, 2]));
        assert!(satisfies_functional_equation(&p, 1, 2));
    }

    #[test]
    fn sign_convention_gives_p1_at_one() {
        // P(T) = 1 - aT + qT^2 with a = q + 1 - p_1, so P(1) = p_1
        let p = weil_from_counts(&pc(&[4]), 1, 5).unwrap();
        assert_eq!(p, Poly::from_ints(&[1, -2, 5]));
        assert_eq!(p.eval(&int(1)), int(4));
    }

    #[test]
    fn contradictory_counts() {
        // P^1 over F_2 declared as genus 1
        assert!(matches!(
            weil_from_counts(&pc(&[3, 5]), 1, 2),
            Err(CurveError::InconsistentCounts(_))
        ));
        assert!(matches!(
            weil_from_counts(&pc(&[3]), 2, 2),
            Err(CurveError::InconsistentCounts(_))
        ));
    }

    #[test]
    fn round_trip_through_newton() {
        let p = Poly::from_ints(&[1, -2, 3, -6, 9]);
        let counts = counts_from_weil(&p, 3, 6);
        assert_eq!(weil_from_counts(&counts, 2, 3).unwrap(), p);
    }

    #[test]
    fn weil_bound_check() {
        assert!(within_weil_bounds(&pc(&[3, 9]), 1, 2));
        assert!(!within_weil_bounds(&pc(&[9]), 1, 2));
    }
}
