use proptest::prelude::*;

use super::*;
use crate::series::{int, rat, Rat, TruncSeries};

fn class(vals: &[i64]) -> AdamsClass<Rat> {
    AdamsClass::new(vals.iter().map(|&v| int(v)).collect(), int(1))
}

#[test]
fn sum_examples() {
    assert_eq!(adams_sum(&class(&[3, 5]), &class(&[1, 1])), class(&[4, 6]));
    let a = class(&[7, -2, 4]);
    assert_eq!(adams_sum(&a, &AdamsClass::zero(int(1), 3)), a);
    // M(C) ⊕ L for P^1 over F_2
    let curve = class(&[3, 5, 9]);
    assert_eq!(adams_sum(&curve, &tate_count(1, 2, 3)), class(&[5, 9, 17]));
}

#[test]
fn product_examples() {
    assert_eq!(adams_mul(&class(&[2, 4]), &class(&[3, 9])), class(&[6, 36]));
    let a = class(&[7, -2, 4]);
    assert_eq!(adams_mul(&a, &AdamsClass::one(int(1), 3)), a);
    assert_eq!(adams_mul(&a, &tate_count(1, 2, 3)), class(&[14, -8, 32]));
}

#[test]
fn tate_examples() {
    assert_eq!(tate_count(1, 3, 2).psi(2), &int(9));
    assert_eq!(tate_count(0, 7, 4), AdamsClass::one(int(1), 4));
    assert_eq!(tate_count(-2, 2, 1).psi(1), &rat(1, 4));
    assert_eq!(
        tate_poincare(-1, 4, 2),
        Err(LambdaError::NegativeTwistInPoincare(-1))
    );
    let t = tate_poincare(1, 6, 3).unwrap();
    assert_eq!(t.psi(3), &TruncSeries::monomial(int(1), 6, 6));
}

#[test]
fn sym_n_examples() {
    // (p1^2 + p2) / 2
    assert_eq!(sym_n(&class(&[3, 5]), 2).unwrap(), int(7));
    for q in [2i64, 3, 5, 7] {
        let p1 = AdamsClass::from_fn(2, int(1), |r| int(q.pow(r as u32) + 1));
        assert_eq!(sym_n(&p1, 2).unwrap(), int(q * q + q + 1));
    }
    // y^2 + y = x^3 over F_2: #E(F_2) = 3, #E(F_4) = 9
    assert_eq!(sym_n(&class(&[3, 9]), 2).unwrap(), int(9));
    assert_eq!(sym_n(&class(&[3]), 0).unwrap(), int(1));
    assert_eq!(
        sym_n(&class(&[3]), 2),
        Err(LambdaError::InsufficientDepth {
            needed: 2,
            available: 1
        })
    );
}

#[test]
fn sym_star_examples() {
    let s = sym_star(&tate_count(1, 2, 8), 8).unwrap();
    for n in 0..=8 {
        assert_eq!(s.get(n), &int(1 << n));
    }
    let odd = sym_star(&odd_class_poincare(2, 6, 6), 6).unwrap();
    let expect = [
        TruncSeries::one(6),
        TruncSeries::monomial(int(2), 1, 6),
        TruncSeries::monomial(int(1), 2, 6),
    ];
    for n in 0..=6 {
        let want = expect
            .get(n)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(6));
        assert_eq!(odd.get(n), &want, "n = {n}");
    }
    let zero = sym_star(&AdamsClass::zero(int(1), 5), 5).unwrap();
    assert_eq!(
        zero.coeffs(),
        &[int(1), int(0), int(0), int(0), int(0), int(0)]
    );
}

#[test]
fn odd_class_examples() {
    let unit_series = sym_star(&odd_class_poincare(0, 4, 4), 4).unwrap();
    assert_eq!(unit_series.total(), TruncSeries::one(4));
    assert_eq!(
        sym_n(&odd_class_poincare(4, 6, 2), 2).unwrap(),
        TruncSeries::monomial(int(6), 2, 6)
    );
}

#[test]
fn pure_class_matches_odd_encoding() {
    let f = TruncSeries::from_ints(&[0, 4], 8);
    assert_eq!(pure_poincare_class(&f, 5), odd_class_poincare(4, 8, 5));
    let g = TruncSeries::from_ints(&[0, 0, 1], 8);
    assert_eq!(pure_poincare_class(&g, 4), tate_poincare(1, 8, 4).unwrap());
}

#[test]
fn dilation_picks_multiples() {
    let a = class(&[1, 2, 3, 4, 5, 6]);
    assert_eq!(a.dilate(2), class(&[2, 4, 6]));
    assert_eq!(a.dilate(4), class(&[4]));
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn rat_class(depth: usize) -> impl Strategy<Value = AdamsClass<Rat>> {
    prop::collection::vec(small_rat(), depth).prop_map(|v| AdamsClass::new(v, int(1)))
}

proptest! {
    #[test]
    fn sym_of_sum_is_convolution(a in rat_class(6), b in rat_class(6)) {
        let lhs = sym_star(&adams_sum(&a, &b), 6).unwrap();
        let rhs = sym_star(&a, 6).unwrap().convolve(&sym_star(&b, 6).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sym_of_tate_is_tate(i in -3i64..=3, q in 2u64..=7, n in 0usize..=6) {
        let t = tate_count(i, q, n.max(1));
        prop_assert_eq!(sym_n(&t, n).unwrap(), q_pow(q, i * n as i64));
        if i >= 0 {
            let order = 2 * 3 * 6 + 1;
            let tp = tate_poincare(i, order, n.max(1)).unwrap();
            prop_assert_eq!(
                sym_n(&tp, n).unwrap(),
                TruncSeries::monomial(int(1), 2 * i as usize * n, order)
            );
        }
    }

    #[test]
    fn odd_class_sym_vanishes_above_rank(g in 0u64..=3) {
        let m = 2 * g;
        let depth = m as usize + 3;
        let s = sym_star(&odd_class_poincare(m, depth, depth), depth).unwrap();
        for n in (m as usize + 1)..=depth {
            prop_assert!(s.get(n).is_zero());
        }
        let at_one: Rat = s.coeffs().iter().map(|c| c.partial_sum_at(&int(1))).sum();
        prop_assert_eq!(at_one, int(1 << m));
    }
}
