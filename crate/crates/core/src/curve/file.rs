//! TOML curve description files.
//!
//! ```toml
//! genus = 1
//! q = 2
//! model = { kind = "hyperelliptic-odd", h = [1], f = [0, 0, 0, 1] }
//! ```
//!
//! or `weil = [1, 0, 2]` in place of `model`. Unknown fields are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CurveError, CurveSource, CurveSpec, ExplicitModel, ModelKind};
use crate::series::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub genus: u32,
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weil: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<ModelFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub kind: ModelKind,
    #[serde(default)]
    pub h: Vec<i64>,
    #[serde(default)]
    pub f: Vec<i64>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, CurveError> {
        toml::from_str(text).map_err(|e| CurveError::File(e.to_string()))
    }

    pub fn into_spec(self) -> Result<CurveSpec, CurveError> {
        let source = match (self.weil, self.model) {
            (Some(w), None) => CurveSource::Weil(Poly::from_ints(&w)),
            (None, Some(m)) => CurveSource::Model(ExplicitModel {
                kind: m.kind,
                h: m.h,
                f: m.f,
            }),
            _ => {
                return Err(CurveError::File(
                    "exactly one of `weil` and `model` must be given".into(),
                ))
            }
        };
        Ok(CurveSpec {
            genus: self.genus,
            q: self.q,
            source,
        })
    }
}

impl CurveSpec {
    pub fn from_toml(text: &str) -> Result<Self, CurveError> {
        CurveFile::parse(text)?.into_spec()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, CurveError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| CurveError::File(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_file() {
        let spec = CurveSpec::from_toml(
            "genus = 1\nq = 2\nmodel = { kind = \"hyperelliptic-odd\", h = [1], f = [0, 0, 0, 1] }\n",
        )
        .unwrap();
        assert_eq!(spec.genus, 1);
        assert_eq!(
            spec.source,
            CurveSource::Model(ExplicitModel::hyperelliptic(
                ModelKind::HyperellipticOdd,
                &[1],
                &[0, 0, 0, 1]
            ))
        );
    }

    #[test]
    fn weil_file_and_p1() {
        let spec = CurveSpec::from_toml("genus = 1\nq = 5\nweil = [1, -2, 5]").unwrap();
        assert_eq!(spec.source, CurveSource::Weil(Poly::from_ints(&[1, -2, 5])));
        let p1 = CurveSpec::from_toml("genus = 0\nq = 3\n[model]\nkind = \"p1\"\n").unwrap();
        assert_eq!(p1, CurveSpec::p1(3));
    }

    #[test]
    fn rejects_unknown_and_ambiguous() {
        assert!(CurveSpec::from_toml("genus = 0\nq = 2\nweil = [1]\ncolor = 3").is_err());
        assert!(CurveSpec::from_toml("genus = 0\nq = 2").is_err());
        assert!(
            CurveSpec::from_toml("genus = 0\nq = 2\nweil = [1]\nmodel = { kind = \"p1\" }")
                .is_err()
        );
        assert!(CurveSpec::from_toml("genus = 0\nq = 2\nmodel = { kind = \"quartic\" }").is_err());
        assert!(CurveSpec::from_toml("genus = 0\nq = 2.5\nweil = [1]").is_err());
    }
}
