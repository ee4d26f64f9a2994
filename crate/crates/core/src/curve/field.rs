//! Finite fields `F_{p^m}` with at most a million elements, backed by
//! exponent/logarithm tables.
//!
//! An element is encoded as the integer whose base-`p` digits are its
//! coordinates in the basis `1, x, ..., x^{m-1}` of `F_p[x]/(f)`, where `f` is
//! the lexicographically first primitive polynomial of degree `m`.

use super::CurveError;

pub const MAX_FIELD_SIZE: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    degree: u32,
    size: u32,
    // low coefficients c_0..c_{m-1} of the monic modulus x^m + Σ c_i x^i
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Returns `(p, k)` with `q = p^k` and `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl GaloisField {
    pub fn new(p: u64, degree: u32) -> Result<Self, CurveError> {
        if prime_power(p) != Some((p, 1)) {
            return Err(CurveError::NotPrimePower(p));
        }
        let size = p.checked_pow(degree).filter(|&s| s <= MAX_FIELD_SIZE);
        let Some(size) = size else {
            return Err(CurveError::TooLarge {
                size: p.saturating_pow(degree),
            });
        };
        let (p, size) = (p as u32, size as u32);
        for low in 0..size {
            let modulus = digits(low, p, degree);
            if modulus[0] == 0 {
                continue;
            }
            let mut field = GaloisField {
                p,
                degree,
                size,
                modulus,
                exp: Vec::new(),
                log: Vec::new(),
            };
            if field.build_tables() {
                return Ok(field);
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    /// Fills the tables if `x` generates the multiplicative group.
    fn build_tables(&mut self) -> bool {
        let order = self.size - 1;
        let mut exp = Vec::with_capacity(order as usize);
        let mut e = 1u32;
        for i in 0..order {
            if i > 0 && e == 1 {
                return false;
            }
            exp.push(e);
            e = self.mul_x(e);
        }
        if e != 1 {
            return false;
        }
        let mut log = vec![0u32; self.size as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        self.exp = exp;
        self.log = log;
        true
    }

    fn mul_x(&self, v: u32) -> u32 {
        let p = self.p;
        let m = self.degree as usize;
        let d = digits(v, p, self.degree);
        let top = d[m - 1];
        let mut out = vec![0u32; m];
        for i in (0..m).rev() {
            let shifted = if i > 0 { d[i - 1] } else { 0 };
            out[i] = (shifted + p * p - (top * self.modulus[i]) % p) % p;
        }
        undigits(&out, p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size
    }

    /// The prime-field element `c mod p`.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u32> = digits(a, self.p, self.degree)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        undigits(&d, self.p)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.size - 1;
        let l = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order as u64;
        self.exp[l as usize]
    }

    /// Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let order = self.size - 1;
        self.exp[((order - self.log[a as usize]) % order) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.size - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % order)) % order) as usize]
    }

    /// Nonzero squares are exactly the even powers of the generator (odd `p`).
    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.degree {
            acc = self.add(acc, x);
            x = self.pow(x, self.p as u64);
        }
        acc
    }

    /// Evaluates a polynomial with coefficients in this field (ascending degree).
    pub fn eval(&self, poly: &[u32], x: u32) -> u32 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Embeds `small` into `self`, provided `small.degree()` divides `self.degree()`.
    /// The generator's minimal polynomial is sent to its smallest root here.
    pub fn embedding_of(&self, small: &GaloisField) -> Option<Embedding> {
        if small.p != self.p || !self.degree.is_multiple_of(small.degree) {
            return None;
        }
        let mut modulus: Vec<u32> = small
            .modulus
            .iter()
            .map(|&c| self.from_int(c as i64))
            .collect();
        modulus.push(1);
        let root = self.elements().find(|&x| self.eval(&modulus, x) == 0)?;
        let powers: Vec<u32> = (0..small.degree)
            .map(|i| self.pow(root, i as u64))
            .collect();
        Some(Embedding {
            p: small.p,
            degree: small.degree,
            powers,
        })
    }
}

/// Field homomorphism `F_q -> F_{q^r}` given by the images of `1, θ, ..., θ^{k-1}`.
#[derive(Debug, Clone)]
pub struct Embedding {
    p: u32,
    degree: u32,
    powers: Vec<u32>,
}

impl Embedding {
    pub fn apply(&self, big: &GaloisField, a: u32) -> u32 {
        digits(a, self.p, self.degree)
            .iter()
            .zip(&self.powers)
            .fold(0, |acc, (&d, &pw)| big.add(acc, big.mul(d, pw)))
    }
}

fn digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(v % p);
        v /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}
