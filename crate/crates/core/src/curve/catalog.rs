//! Small curves used throughout the test suites and benchmarks.

use super::{CurveSpec, ExplicitModel, ModelKind};

/// `P¹` over `F_q`.
pub fn projective_line(q: u64) -> CurveSpec {
    CurveSpec::p1(q)
}

/// `y² + y = x³` over `F_2`, supersingular with `P(T) = 1 + 2T²`.
pub fn supersingular_f2() -> CurveSpec {
    CurveSpec::from_model(
        1,
        2,
        ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[1], &[0, 0, 0, 1]),
    )
}

/// `y² = x³ + x` over `F_5`, with `P(T) = 1 - 2T + 5T²`.
pub fn elliptic_f5() -> CurveSpec {
    CurveSpec::from_model(
        1,
        5,
        ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[], &[0, 1, 0, 1]),
    )
}

/// `y² + y = x⁵` over `F_2`, of genus two.
pub fn genus_two_f2() -> CurveSpec {
    CurveSpec::from_model(
        2,
        2,
        ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[1], &[0, 0, 0, 0, 0, 1]),
    )
}

/// The four curves of the main acceptance grid, with display names.
pub fn standard_curves() -> Vec<(&'static str, CurveSpec)> {
    vec![
        ("P1/F2", projective_line(2)),
        ("P1/F3", projective_line(3)),
        ("y^2+y=x^3/F2", supersingular_f2()),
        ("y^2=x^3+x/F5", elliptic_f5()),
    ]
}
