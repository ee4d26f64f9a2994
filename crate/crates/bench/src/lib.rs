//! Fixtures shared by the benchmarks.

use motivic_core::curve::catalog::standard_curves;
use motivic_core::CurveData;

/// The standard test curves, already resolved to their zeta data.
pub fn resolved_curves() -> Vec<(&'static str, CurveData)> {
    standard_curves()
        .into_iter()
        .map(|(name, spec)| (name, spec.resolve().expect("catalog curves are valid")))
        .collect()
}
