use std::fmt;

use rand::Rng;

use super::{FiniteField, PrimeField};
use crate::arith::check_prime;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// Element of `F_{p^m}` as coefficients of `1, X, ..., X^{m-1}` modulo the
/// defining polynomial. Ordering is lexicographic from the constant term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem(Vec<u64>);

impl ExtElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    /// The element as a residue in `F_p`, if it lies in the prime field.
    pub fn as_base(&self) -> Option<u64> {
        if self.0[1..].iter().all(|&c| c == 0) {
            Some(self.0[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `F_{p^m} = F_p[X] / (modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    degree: u32,
    order: u128,
    /// Monic, lowest degree first, length `degree + 1`.
    modulus: Vec<u64>,
}

/// Build `F_{p^m}` using the first monic irreducible of degree `m` in the
/// enumeration order where `c_0` is the least significant base-`p` digit,
/// i.e. lexicographic on `(c_{m-1}, ..., c_0)`.
pub fn build_extension(p: u64, m: u32) -> Result<ExtField> {
    check_prime(p)?;
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let order = (p as u128)
        .checked_pow(m)
        .filter(|&q| q < (1u128 << 126))
        .ok_or(Error::FieldTooLarge { p, degree: m })?;
    let base = PrimeField::new(p)?;
    let ring = PolyRing::new(&base);
    let count = (p as u128).pow(m);
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut rest = idx;
        for _ in 0..m {
            coeffs.push((rest % p as u128) as u64);
            rest /= p as u128;
        }
        coeffs.push(1);
        let candidate = Poly::new(&base, coeffs);
        if ring.is_irreducible(&candidate) {
            return Ok(ExtField {
                p,
                degree: m,
                order,
                modulus: candidate.into_coeffs(),
            });
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

impl ExtField {
    /// Defining polynomial, monic, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn prime_field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("validated at construction")
    }

    /// Build an element from (at most `degree`) coefficients.
    pub fn elem(&self, coeffs: &[u64]) -> ExtElem {
        assert!(coeffs.len() <= self.degree as usize);
        let mut v = vec![0; self.degree as usize];
        for (slot, &c) in v.iter_mut().zip(coeffs) {
            *slot = c % self.p;
        }
        ExtElem(v)
    }

    /// The class of `X`, a generator of the field over `F_p`.
    pub fn generator(&self) -> ExtElem {
        if self.degree == 1 {
            // X = -c_0 in F_p[X]/(X + c_0)
            return self.from_int((self.p - self.modulus[0]) % self.p);
        }
        self.elem(&[0, 1])
    }

    /// Embedding `self -> target`, sending the generator to the smallest root
    /// of `self.modulus()` in `target`.
    pub fn embed_into(&self, target: &ExtField) -> Result<Embedding> {
        if self.p != target.p || !target.degree.is_multiple_of(self.degree) {
            return Err(Error::InternalError(format!(
                "no embedding of F_{}^{} into F_{}^{}",
                self.p, self.degree, target.p, target.degree
            )));
        }
        let lifted = Poly::new(
            target,
            self.modulus.iter().map(|&c| target.from_int(c)).collect(),
        );
        let roots = PolyRing::new(target).roots_in_field(&lifted)?;
        let image = roots
            .into_iter()
            .next()
            .ok_or_else(|| Error::InternalError("modulus has no root in target".into()))?;
        Ok(Embedding {
            target: target.clone(),
            image,
        })
    }

    fn reduce(&self, mut wide: Vec<u64>) -> ExtElem {
        let m = self.degree as usize;
        let p = self.p;
        for k in (m..wide.len()).rev() {
            let c = wide[k];
            if c == 0 {
                continue;
            }
            for i in 0..m {
                let t = c * self.modulus[i] % p;
                let slot = &mut wide[k - m + i];
                *slot = (*slot + p - t) % p;
            }
        }
        wide.truncate(m);
        wide.resize(m, 0);
        ExtElem(wide)
    }
}

impl FiniteField for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> u32 {
        self.degree
    }
    fn order(&self) -> u128 {
        self.order
    }
    fn zero(&self) -> ExtElem {
        ExtElem(vec![0; self.degree as usize])
    }
    fn one(&self) -> ExtElem {
        self.from_int(1)
    }
    fn from_int(&self, n: u64) -> ExtElem {
        let mut v = vec![0; self.degree as usize];
        v[0] = n % self.p;
        ExtElem(v)
    }
    fn is_zero(&self, a: &ExtElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + y) % self.p)
                .collect(),
        )
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect(),
        )
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let m = self.degree as usize;
        let p = self.p as u128;
        let mut wide = vec![0u128; 2 * m - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                wide[i + j] += (x * y) as u128;
            }
        }
        self.reduce(wide.into_iter().map(|c| (c % p) as u64).collect())
    }
    fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> ExtElem {
        ExtElem((0..self.degree).map(|_| rng.gen_range(0..self.p)).collect())
    }
    fn element(&self, mut i: u128) -> ExtElem {
        let mut v = Vec::with_capacity(self.degree as usize);
        for _ in 0..self.degree {
            v.push((i % self.p as u128) as u64);
            i /= self.p as u128;
        }
        ExtElem(v)
    }
}

/// Field embedding `F_{p^m} -> F_{p^n}` determined by the image of the generator.
#[derive(Debug, Clone)]
pub struct Embedding {
    target: ExtField,
    image: ExtElem,
}

impl Embedding {
    pub fn target(&self) -> &ExtField {
        &self.target
    }

    pub fn apply(&self, a: &ExtElem) -> ExtElem {
        let t = &self.target;
        a.coeffs().iter().rev().fold(t.zero(), |acc, &c| {
            t.add(&t.mul(&acc, &self.image), &t.from_int(c))
        })
    }

    pub fn apply_poly(&self, f: &Poly<ExtElem>) -> Poly<ExtElem> {
        Poly::new(
            &self.target,
            f.coeffs().iter().map(|c| self.apply(c)).collect(),
        )
    }
}
