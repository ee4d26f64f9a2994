use super::*;
use crate::curve::CurveData;
use crate::lambda::sym_n;
use crate::motive::{count_adams, realize_count, realize_series};
use crate::series::{int, rat, Poly, TruncSeries};

fn elliptic_f2() -> CurveData {
    CurveData::new(1, 2, Poly::from_ints(&[1, 0, 2]))
}

fn ints(c: &[i64], order: usize) -> TruncSeries {
    TruncSeries::from_ints(c, order)
}

#[test]
fn m_c_n_shapes() {
    assert_eq!(m_c_n(1).unwrap(), MotiveExpr::Atom(Atom::MbarC));
    assert_eq!(m_c_n(2).unwrap().to_string(), "Mbar(C) + M(C){1}");
    assert_eq!(
        realize_series(&m_c_n(2).unwrap(), 1, 6).unwrap(),
        ints(&[0, 2, 2, 2, 1], 6)
    );
    assert_eq!(m_c_n(0), Err(BunError::ZeroRank));
}

#[test]
fn closed_formula_examples() {
    let rank_one = realize_series(&bun_closed(1).unwrap(), 1, 6).unwrap();
    assert_eq!(rank_one, ints(&[1, 2, 2, 2, 2, 2, 2], 6));
    let rank_two = realize_series(&bun_closed(2).unwrap(), 0, 6).unwrap();
    assert_eq!(rank_two, ints(&[1, 0, 2, 0, 4, 0, 6], 6));
    let p1 = realize_series(&bun_closed(1).unwrap(), 0, 6).unwrap();
    assert_eq!(p1, ints(&[1, 0, 1, 0, 1, 0, 1], 6));
    assert_eq!(
        bun_closed(3).unwrap().to_string(),
        "Jac * BGm * Z(C,L^1) * Z(C,L^2)"
    );
}

#[test]
fn colimit_examples() {
    assert_eq!(
        bun_colimit(1, 0, 0, 6).unwrap(),
        ints(&[1, 0, 1, 0, 1, 0, 1], 6)
    );
    assert_eq!(
        bun_colimit(2, 0, 0, 6).unwrap(),
        ints(&[1, 0, 2, 0, 4, 0, 6], 6)
    );
    for (n, d) in [(1, 0), (2, 1), (3, -4), (3, 7)] {
        assert_eq!(bun_colimit(n, d, 2, 0).unwrap(), TruncSeries::one(0));
    }
}

#[test]
fn colimit_matches_closed_formula() {
    let order = 12;
    for n in 1..=3u32 {
        for g in 0..=2u32 {
            let closed = realize_series(&bun_closed(n).unwrap(), g, order).unwrap();
            for d in 0..i64::from(n) {
                assert_eq!(
                    bun_colimit(n, d, g, order).unwrap(),
                    closed,
                    "n={n} d={d} g={g}"
                );
            }
        }
    }
}

#[test]
fn divisor_motive_examples() {
    let e = div_motive(1, 3, 3).unwrap();
    assert_eq!(realize_count(&e, &elliptic_f2()).unwrap(), int(1));
    assert_eq!(realize_series(&e, 2, 4).unwrap(), TruncSeries::one(4));
    let e = div_motive(2, 0, 1).unwrap();
    assert_eq!(realize_count(&e, &CurveData::p1(2)).unwrap(), int(53));
    assert_eq!(realize_series(&e, 0, 8).unwrap().coeff(0), &int(1));
    assert_eq!(
        div_motive(2, 3, 1),
        Err(BunError::NegativeLength { n: 2, d: 3, l: 1 })
    );
}

#[test]
fn decomposition_examples() {
    let parts = div_decomposition(1, 1, 4).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0].expr, MotiveExpr::mc().sym(3));
    let parts = div_decomposition(2, 0, 1).unwrap();
    let shown: Vec<String> = parts.iter().map(|s| s.expr.to_string()).collect();
    assert_eq!(shown, ["Sym^2(M(C))", "M(C) * M(C){1}", "(Sym^2(M(C))){2}"]);
    assert_eq!(parts.iter().map(|s| s.twist).collect::<Vec<_>>(), [0, 1, 2]);
    assert_eq!(div_decomposition(3, 1, 1).unwrap().len(), 6);
    assert_eq!(b_summand(&BIndex::new(vec![0, 0])).expr, MotiveExpr::unit());
}

#[test]
fn summands_add_up_to_divisor_motive() {
    let curve = elliptic_f2();
    for n in 1..=3u32 {
        for len in 0..=4i64 {
            let (d, l) = (-len, 0);
            let total = div_motive(n, d, l).unwrap();
            let parts = div_decomposition(n, d, l).unwrap();
            let sum_count: Rat = parts
                .iter()
                .map(|s| realize_count(&s.expr, &curve).unwrap())
                .sum();
            assert_eq!(sum_count, realize_count(&total, &curve).unwrap());
            let order = 10;
            let sum_series = parts.iter().fold(TruncSeries::zero(order), |acc, s| {
                &acc + &realize_series(&s.expr, 1, order).unwrap()
            });
            assert_eq!(sum_series, realize_series(&total, 1, order).unwrap());
        }
    }
}

#[test]
fn transition_and_tuple_examples() {
    assert_eq!(
        transition_support(&BIndex::new(vec![2, 0]), 2),
        BIndex::new(vec![4, 0])
    );
    assert_eq!(
        transition_support(&BIndex::new(vec![0, 2]), 2),
        BIndex::new(vec![2, 2])
    );
    let (tau, h) = tuple_maps(&ITuple::new(vec![0, 1, 1]), 2);
    assert_eq!(tau, BIndex::new(vec![1, 2]));
    assert_eq!(h, ITuple::new(vec![0, 0, 0, 1, 1]));
    let (tau, h) = tuple_maps(&ITuple::new(vec![]), 3);
    assert_eq!(tau, BIndex::new(vec![0, 0, 0]));
    assert_eq!(h, ITuple::new(vec![0, 0, 0]));
}

#[test]
fn tuple_maps_commute_with_support() {
    for n in 1..=3u32 {
        for len in 0..=4 {
            for t in ITuple::all(n, len) {
                let (tau, h) = tuple_maps(&t, n);
                assert_eq!(tuple_maps(&h, n).0, transition_support(&tau, n));
                assert_eq!(h.weight(), t.weight());
                assert_eq!(tau.twist(), t.weight());
            }
        }
    }
}

#[test]
fn index_sets_have_binomial_size() {
    assert_eq!(b_index_set(3, 2).len(), 6);
    assert_eq!(b_index_set(4, 5).len(), 56);
    assert_eq!(b_index_set(1, 7), vec![BIndex::new(vec![7])]);
    assert!(b_index_set(2, 3).iter().all(|m| m.total() == 3));
}

#[test]
fn hecke_examples() {
    let base = MotiveExpr::Atom(Atom::Jac);
    assert_eq!(hecke_motive(0, 2, base.clone()), base);
    let one = hecke_motive(1, 2, MotiveExpr::unit());
    assert_eq!(realize_count(&one, &CurveData::p1(2)).unwrap(), int(9));
    let two = hecke_motive(2, 2, MotiveExpr::unit());
    let factor = &ints(&[1, 2, 1], 8) * &ints(&[1, 0, 1], 8);
    assert_eq!(realize_series(&two, 1, 8).unwrap(), &factor * &factor);
}

#[test]
fn flag_divisor_motive() {
    assert_eq!(flag_div_motive(3, 2, 1).unwrap(), kunneth_factor(3));
    let curve = elliptic_f2();
    let p1 = Rat::from(curve.point_count(1));
    for (n, len) in [(1u32, 3i64), (2, 2), (3, 2)] {
        let e = flag_div_motive(n, -len, 0).unwrap();
        let q = int(2);
        let base = &p1 * (num_traits::pow(q.clone(), n as usize) - int(1)) / (q - int(1));
        assert_eq!(
            realize_count(&e, &curve).unwrap(),
            num_traits::pow(base, len as usize)
        );
        let class = count_adams(&kunneth_factor(n), &curve, len as usize).unwrap();
        let div = div_motive(n, -len, 0).unwrap();
        assert_eq!(
            sym_n(&class, len as usize).unwrap(),
            realize_count(&div, &curve).unwrap()
        );
    }
}

#[test]
fn compact_motive_and_harder_count() {
    assert_eq!(bun_compact(1, 1).unwrap().to_string(), "Jac * BGmC");
    assert_eq!(
        bun_compact(2, 0).unwrap().to_string(),
        "Jac * BGmC{-3} * Z(C,L^-2)"
    );
    let e2 = elliptic_f2();
    assert_eq!(
        realize_count(&bun_compact(1, 1).unwrap(), &e2).unwrap(),
        int(3)
    );
    assert_eq!(harder_count(1, &e2).unwrap(), int(3));
    let p1 = CurveData::p1(2);
    assert_eq!(
        realize_count(&bun_compact(2, 0).unwrap(), &p1).unwrap(),
        rat(1, 3)
    );
    assert_eq!(harder_count(2, &p1).unwrap(), rat(1, 3));
    assert_eq!(harder_count(2, &CurveData::p1(3)).unwrap(), rat(1, 32));
    assert_eq!(harder_count(1, &CurveData::p1(3)).unwrap(), rat(1, 2));
    for n in 1..=3 {
        for curve in [CurveData::p1(3), e2.clone()] {
            let e = bun_compact(n, curve.genus()).unwrap();
            assert_eq!(
                realize_count(&e, &curve).unwrap(),
                harder_count(n, &curve).unwrap()
            );
        }
    }
}

#[test]
fn divisor_motive_stabilizes() {
    let order = 8;
    for n in 1..=3u32 {
        let k = 5usize;
        let reference = realize_series(&div_motive(n, -(k as i64), 0).unwrap(), 1, order).unwrap();
        for extra in 1..=3 {
            let later = realize_series(&div_motive(n, -((k + extra) as i64), 0).unwrap(), 1, order)
                .unwrap();
            assert!(later.agrees_to(&reference, k), "n={n}");
        }
    }
}
