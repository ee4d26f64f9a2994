//! Explicit plane models and brute-force point counting.

use serde::{Deserialize, Serialize};

use super::field::{prime_power, Embedding, GaloisField};
use super::CurveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "p1")]
    P1,
    /// `y^2 + h(x) y = f(x)` with `deg f = 2g + 1`: one point at infinity.
    #[serde(rename = "hyperelliptic-odd")]
    HyperellipticOdd,
    /// `y^2 + h(x) y = f(x)` with `max(2 deg h, deg f) = 2g + 2`.
    #[serde(rename = "hyperelliptic-even")]
    HyperellipticEven,
}

/// A curve model over `F_q`. Coefficient lists are in ascending degree; over a
/// prime field they are read modulo `p`, over `F_{p^k}` they must lie in
/// `[0, q)` and use the digit encoding of [`GaloisField`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitModel {
    pub kind: ModelKind,
    pub h: Vec<i64>,
    pub f: Vec<i64>,
}

impl ExplicitModel {
    pub fn p1() -> Self {
        ExplicitModel {
            kind: ModelKind::P1,
            h: Vec::new(),
            f: Vec::new(),
        }
    }

    pub fn hyperelliptic(kind: ModelKind, h: &[i64], f: &[i64]) -> Self {
        ExplicitModel {
            kind,
            h: h.to_vec(),
            f: f.to_vec(),
        }
    }

    /// Checks the model shape and smoothness over `F_q` and returns its genus.
    pub fn validate(&self, q: u64) -> Result<u32, CurveError> {
        let (p, k) = prime_power(q).ok_or(CurveError::NotPrimePower(q))?;
        if self.kind == ModelKind::P1 {
            return Ok(0);
        }
        let field = GaloisField::new(p, k)?;
        let h = trim(self.coeffs_in(&field, &self.h)?);
        let f = trim(self.coeffs_in(&field, &self.f)?);
        let genus = self.shape_genus(&h, &f)?;
        if p == 2 {
            if h.is_empty() {
                return Err(CurveError::SingularModel(
                    "y^2 = f(x) is inseparable in characteristic 2".into(),
                ));
            }
            if self.kind == ModelKind::HyperellipticEven && deg(&h) != Some(genus as usize + 1) {
                return Err(CurveError::SingularModel(
                    "even model in characteristic 2 needs deg h = g + 1".into(),
                ));
            }
            // singular points lie over roots of h where h'^2 f + f'^2 vanishes
            let dh = derivative(&field, &h);
            let df = derivative(&field, &f);
            let test = add(
                &field,
                &mul(&field, &mul(&field, &dh, &dh), &f),
                &mul(&field, &df, &df),
            );
            if deg(&gcd(&field, &h, &test)) != Some(0) {
                return Err(CurveError::SingularModel(
                    "h and h'^2 f + f'^2 share a root".into(),
                ));
            }
        } else {
            let four_f: Vec<u32> = f.iter().map(|&c| field.mul(field.from_int(4), c)).collect();
            let disc = add(&field, &mul(&field, &h, &h), &four_f);
            let want = match self.kind {
                ModelKind::HyperellipticOdd => 2 * genus as usize + 1,
                _ => 2 * genus as usize + 2,
            };
            if deg(&disc) != Some(want) {
                return Err(CurveError::SingularModel(format!(
                    "h^2 + 4f must have degree {want}"
                )));
            }
            let d_disc = derivative(&field, &disc);
            if deg(&gcd(&field, &disc, &d_disc)) != Some(0) {
                return Err(CurveError::SingularModel(
                    "h^2 + 4f is not squarefree".into(),
                ));
            }
        }
        Ok(genus)
    }

    fn shape_genus(&self, h: &[u32], f: &[u32]) -> Result<u32, CurveError> {
        let dh = deg(h);
        let df = deg(f).ok_or_else(|| CurveError::ModelShape("f must be nonzero".into()))?;
        match self.kind {
            ModelKind::P1 => Ok(0),
            ModelKind::HyperellipticOdd => {
                if df % 2 == 0 {
                    return Err(CurveError::ModelShape(format!(
                        "hyperelliptic-odd needs odd deg f, got {df}"
                    )));
                }
                let g = (df - 1) / 2;
                if dh.is_some_and(|d| d > g) {
                    return Err(CurveError::ModelShape(format!("deg h must be at most {g}")));
                }
                Ok(g as u32)
            }
            ModelKind::HyperellipticEven => {
                let top = df.max(dh.map_or(0, |d| 2 * d));
                if top % 2 == 1 || top < 2 {
                    return Err(CurveError::ModelShape(format!(
                        "hyperelliptic-even needs max(2 deg h, deg f) even and positive, got {top}"
                    )));
                }
                Ok((top as u32 - 2) / 2)
            }
        }
    }

    fn coeffs_in(&self, field: &GaloisField, cs: &[i64]) -> Result<Vec<u32>, CurveError> {
        if field.degree() == 1 {
            return Ok(cs.iter().map(|&c| field.from_int(c)).collect());
        }
        cs.iter()
            .map(|&c| {
                if c >= 0 && (c as u64) < field.size() as u64 {
                    Ok(c as u32)
                } else {
                    Err(CurveError::InvalidCoefficient(c))
                }
            })
            .collect()
    }

    /// `#C(F_{q^r})` by exhaustive enumeration, including points at infinity.
    pub fn count_points(&self, q: u64, r: u32) -> Result<u64, CurveError> {
        let (p, k) = prime_power(q).ok_or(CurveError::NotPrimePower(q))?;
        let big = GaloisField::new(p, k * r)?;
        if self.kind == ModelKind::P1 {
            return Ok(big.size() as u64 + 1);
        }
        let genus = self.validate(q)?;
        let small = GaloisField::new(p, k)?;
        let embed: Embedding = big.embedding_of(&small).expect("F_q embeds in F_{q^r}");
        let lift = |cs: &[i64]| -> Result<Vec<u32>, CurveError> {
            Ok(self
                .coeffs_in(&small, cs)?
                .into_iter()
                .map(|c| embed.apply(&big, c))
                .collect())
        };
        let h = lift(&self.h)?;
        let f = lift(&self.f)?;

        let mut total = 0u64;
        for x in big.elements() {
            total += roots_of_quadratic(&big, big.eval(&h, x), big.eval(&f, x));
        }
        // At infinity the weighted model reads Y^2 + h_{g+1} Y = f_{2g+2}.
        let at = |cs: &[u32], i: usize| cs.get(i).copied().unwrap_or(0);
        let g = genus as usize;
        total += roots_of_quadratic(&big, at(&h, g + 1), at(&f, 2 * g + 2));
        Ok(total)
    }
}

/// Number of `y` with `y^2 + b y = c`.
fn roots_of_quadratic(field: &GaloisField, b: u32, c: u32) -> u64 {
    if field.characteristic() == 2 {
        if b == 0 {
            return 1;
        }
        // y = b u turns this into u^2 + u = c / b^2, solvable iff the trace vanishes
        let t = field.mul(c, field.inv(field.mul(b, b)));
        if field.trace(t) == 0 {
            2
        } else {
            0
        }
    } else {
        let four = field.from_int(4);
        let disc = field.add(field.mul(b, b), field.mul(four, c));
        if disc == 0 {
            1
        } else if field.is_square(disc) {
            2
        } else {
            0
        }
    }
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn deg(v: &[u32]) -> Option<usize> {
    trim(v.to_vec()).len().checked_sub(1)
}

fn add(field: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                field.add(
                    a.get(i).copied().unwrap_or(0),
                    b.get(i).copied().unwrap_or(0),
                )
            })
            .collect(),
    )
}

fn mul(field: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(out)
}

fn derivative(field: &GaloisField, a: &[u32]) -> Vec<u32> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| field.mul(field.from_int(i as i64), c))
            .collect(),
    )
}

fn rem(field: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lc_inv = field.inv(b[db]);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = field.mul(r[dr], lc_inv);
        for (j, &bj) in b.iter().enumerate() {
            r[dr - db + j] = field.sub(r[dr - db + j], field.mul(c, bj));
        }
        r = trim(r);
    }
    r
}

fn gcd(field: &GaloisField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn supersingular_f2() -> ExplicitModel {
        ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[1], &[0, 0, 0, 1])
    }

    #[test]
    fn projective_line_counts() {
        assert_eq!(ExplicitModel::p1().count_points(2, 1).unwrap(), 3);
        assert_eq!(ExplicitModel::p1().count_points(2, 2).unwrap(), 5);
        assert_eq!(ExplicitModel::p1().count_points(9, 1).unwrap(), 10);
    }

    #[test]
    fn supersingular_curve_over_f2() {
        // Affine pairs over F_2: (0,0), (0,1), (1,?) has y^2+y=1 with no root -> 2, plus infinity.
        let e = supersingular_f2();
        assert_eq!(e.validate(2).unwrap(), 1);
        assert_eq!(e.count_points(2, 1).unwrap(), 3);
        assert_eq!(e.count_points(2, 2).unwrap(), 9);
    }

    #[test]
    fn curve_over_f5() {
        // y^2 = x^3 + x: x = 0, 2, 3 give one point each, x = 1, 4 none.
        let e = ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[], &[0, 1, 0, 1]);
        assert_eq!(e.count_points(5, 1).unwrap(), 4);
    }

    #[test]
    fn even_model_points_at_infinity() {
        // y^2 = x^4 + 1 over F_3: leading coefficient 1 is a square -> 2 points at infinity
        let c = ExplicitModel::hyperelliptic(ModelKind::HyperellipticEven, &[], &[1, 0, 0, 0, 1]);
        assert_eq!(c.validate(3).unwrap(), 1);
        // x=0: 1 -> 2; x=1: 2 -> 0; x=2: 17=2 -> 0; plus 2 at infinity
        assert_eq!(c.count_points(3, 1).unwrap(), 4);
    }

    #[test]
    fn singular_models_are_rejected() {
        let cusp = ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[], &[0, 0, 0, 1]);
        assert!(matches!(
            cusp.validate(5),
            Err(CurveError::SingularModel(_))
        ));
        let insep = ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[], &[1, 0, 0, 1]);
        assert!(matches!(
            insep.validate(2),
            Err(CurveError::SingularModel(_))
        ));
        let bad_shape = ExplicitModel::hyperelliptic(ModelKind::HyperellipticOdd, &[], &[1, 0, 1]);
        assert!(matches!(
            bad_shape.validate(5),
            Err(CurveError::ModelShape(_))
        ));
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            supersingular_f2().count_points(2, 20),
            Err(CurveError::TooLarge { .. })
        ));
    }
}
