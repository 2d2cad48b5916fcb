//! Dense univariate polynomials over a [`FiniteField`].

mod factor;

use std::cmp::Ordering;

use crate::field::FiniteField;

pub use factor::Factorization;

/// Dense polynomial, coefficients lowest degree first. The zero polynomial has
/// no coefficients; otherwise the leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + Eq> Poly<E> {
    pub fn new<F: FiniteField<Elem = E>>(field: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

impl<E: Ord> Poly<E> {
    /// Canonical order: by degree, then lexicographically by coefficients
    /// from the constant term up.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Evaluate `f(x)` by Horner's rule.
pub fn eval<F: FiniteField>(field: &F, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
    f.coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a, F> {
    field: &'a F,
}

impl<'a, F: FiniteField> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    pub fn poly(&self, coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        Poly::new(self.field, coeffs)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.poly(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    /// The indeterminate `X`.
    pub fn x(&self) -> Poly<F::Elem> {
        self.poly(vec![self.field.zero(), self.field.one()])
    }

    /// `X^n - c`.
    pub fn binomial(&self, n: usize, c: &F::Elem) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); n + 1];
        v[0] = self.field.neg(c);
        v[n] = self.field.add(&v[n], &self.field.one());
        self.poly(v)
    }

    pub fn is_one(&self, f: &Poly<F::Elem>) -> bool {
        f.coeffs.len() == 1 && self.field.is_one(&f.coeffs[0])
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.field.zero();
        let v = (0..n)
            .map(|i| {
                let x = a.coeffs.get(i).unwrap_or(&zero);
                let y = b.coeffs.get(i).unwrap_or(&zero);
                self.field.add(x, y)
            })
            .collect();
        self.poly(v)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.poly(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.field.add(&v[i + j], &self.field.mul(x, y));
            }
        }
        self.poly(v)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, mut exp: u64) -> Poly<F::Elem> {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> (Poly<F::Elem>, Poly<F::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead = b.lead().unwrap();
        let lead_inv = if self.field.is_one(lead) {
            lead.clone()
        } else {
            self.field.inv(lead).expect("nonzero lead")
        };
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (Poly::zero(), a.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.field.mul(&rem[k], &lead_inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                let slot = &mut rem[k - db + i];
                *slot = self.field.sub(slot, &self.field.mul(&c, bc));
            }
            quot[k - db] = c;
        }
        rem.truncate(db);
        (self.poly(quot), self.poly(rem))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(a, b).1
    }

    /// Exact quotient; debug-asserts the remainder vanishes.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.divrem(a, b);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// `(lead, f / lead)`; the zero polynomial maps to `(0, 0)`.
    pub fn monic(&self, f: &Poly<F::Elem>) -> (F::Elem, Poly<F::Elem>) {
        match f.lead() {
            None => (self.field.zero(), Poly::zero()),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero lead");
                (l.clone(), self.scale(f, &inv))
            }
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x).1
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(c, &self.field.from_int(i as u64)))
            .collect();
        self.poly(v)
    }

    pub fn mulmod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    /// `a^exp mod m`.
    pub fn powmod(&self, a: &Poly<F::Elem>, mut exp: u128, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let mut base = self.rem(a, m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mulmod(&acc, &base, m);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mulmod(&base, &base, m);
            }
        }
        acc
    }

    pub fn eval(&self, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        eval(self.field, f, x)
    }

    /// Product of `X - r` over the given roots.
    pub fn from_roots(&self, roots: &[F::Elem]) -> Poly<F::Elem> {
        roots.iter().fold(self.one(), |acc, r| {
            self.mul(&acc, &self.poly(vec![self.field.neg(r), self.field.one()]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn trimming_and_degree() {
        let f = f7();
        let p = Poly::new(&f, vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::new(&f, vec![0, 0]).is_zero());
        assert_eq!(Poly::<u64>::zero().degree(), None);
    }

    #[test]
    fn binomial_and_eval() {
        let f = f7();
        let r = PolyRing::new(&f);
        let b = r.binomial(3, &6);
        assert_eq!(b.coeffs(), &[1, 0, 0, 1]);
        assert_eq!(r.eval(&b, &3), 0);
        assert_eq!(r.eval(&b, &2), 2);
    }

    #[test]
    fn gcd_of_products() {
        let f = f7();
        let r = PolyRing::new(&f);
        let a = r.from_roots(&[1, 2, 3]);
        let b = r.from_roots(&[2, 3, 4]);
        assert_eq!(r.gcd(&a, &b), r.from_roots(&[2, 3]));
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(0u64..13, 0..max_len)
    }

    proptest! {
        #[test]
        fn division_identity(a in arb_poly(12), b in arb_poly(6)) {
            let f = PrimeField::new(13).unwrap();
            let r = PolyRing::new(&f);
            let a = r.poly(a);
            let b = r.poly(b);
            prop_assume!(!b.is_zero());
            let (q, rem) = r.divrem(&a, &b);
            prop_assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
            prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn powmod_matches_repeated_multiplication(a in arb_poly(5), m in arb_poly(5), e in 0u128..40) {
            let f = PrimeField::new(13).unwrap();
            let r = PolyRing::new(&f);
            let a = r.poly(a);
            let m = r.poly(m);
            prop_assume!(m.degree().is_some_and(|d| d > 0));
            let mut naive = r.rem(&r.one(), &m);
            for _ in 0..e {
                naive = r.mulmod(&naive, &a, &m);
            }
            prop_assert_eq!(r.powmod(&a, e, &m), naive);
        }
    }
}
