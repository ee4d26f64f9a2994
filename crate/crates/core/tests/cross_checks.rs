use motivic_core::bun::{bun_compact, harder_count};
use motivic_core::curve::catalog::{genus_two_f2, standard_curves};
use motivic_core::curve::{satisfies_functional_equation, CurveSpec};
use motivic_core::lambda::sym_n;
use motivic_core::motive::{count_adams, parse, realize_count};
use motivic_core::oracle::{
    divisor_count, interval_contains, split_bundle_count_p1, ClosedPointCensus,
};
use motivic_core::series::rat;
use motivic_core::Rat;

fn all_curves() -> Vec<(&'static str, CurveSpec)> {
    let mut curves = standard_curves();
    curves.push(("y^2+y=x^5/F2", genus_two_f2()));
    curves
}

#[test]
fn symmetric_powers_three_ways() {
    for (name, spec) in all_curves() {
        let curve = spec.resolve().unwrap();
        let class = count_adams(&parse("M(C)").unwrap(), &curve, 4).unwrap();
        let zeta = curve.sym_counts(4).unwrap();
        let census = ClosedPointCensus::from_counts(&spec.enumerate_counts(4).unwrap()).unwrap();
        for (j, z) in zeta.iter().enumerate() {
            let newton = sym_n(&class, j).unwrap();
            let divisors = divisor_count(&census, j).unwrap();
            assert_eq!(newton, Rat::from(z.clone()), "{name} j={j}");
            assert_eq!(*z, divisors, "{name} j={j}");
        }
    }
}

#[test]
fn weil_data_reproduces_enumeration() {
    for (name, spec) in all_curves() {
        let curve = spec.resolve().unwrap();
        let g = curve.genus();
        assert!(
            satisfies_functional_equation(curve.weil(), g, curve.q()),
            "{name}"
        );
        let depth = spec.enumerable_depth(2 * g + 2);
        let counts = spec.enumerate_counts(depth).unwrap();
        assert_eq!(counts, curve.point_counts(depth as usize), "{name}");
        let census = ClosedPointCensus::from_counts(&curve.point_counts(6)).unwrap();
        assert_eq!(census.depth(), 6);
    }
}

#[test]
fn genus_two_curve_is_supersingular() {
    let curve = genus_two_f2().resolve().unwrap();
    assert_eq!(curve.point_count(1), 3.into());
    assert_eq!(curve.weil().degree(), Some(4));
    assert_eq!(curve.weil().coeff(1), rat(0, 1));
}

#[test]
fn compact_formula_matches_splitting_oracle() {
    let eps = rat(1, 1_000_000_000);
    for q in [2u64, 3] {
        let curve = motivic_core::CurveData::p1(q);
        for n in [1u32, 2, 3] {
            let exact = realize_count(&bun_compact(n, 0).unwrap(), &curve).unwrap();
            assert_eq!(exact, harder_count(n, &curve).unwrap());
            for d in 0..i64::from(n) {
                let (value, bound) = split_bundle_count_p1(n, d, q, &eps).unwrap();
                assert!(
                    interval_contains(&value, &bound, &exact),
                    "n={n} q={q} d={d}"
                );
            }
        }
    }
}

#[test]
fn curve_files_feed_the_realizations() {
    let spec = CurveSpec::from_toml(
        "genus = 1\nq = 2\nmodel = { kind = \"hyperelliptic-odd\", h = [1], f = [0, 0, 0, 1] }\n",
    )
    .unwrap();
    let curve = spec.resolve().unwrap();
    assert_eq!(
        realize_count(&parse("Z(C,L^-2)").unwrap(), &curve).unwrap(),
        rat(3, 1)
    );
    let by_weil = CurveSpec::from_toml("genus = 1\nq = 2\nweil = [1, 0, 2]\n")
        .unwrap()
        .resolve()
        .unwrap();
    assert_eq!(by_weil, curve);
}
