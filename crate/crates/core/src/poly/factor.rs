//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! splitting, then Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Poly, PolyRing};
use crate::arith;
use crate::error::{Error, Result};
use crate::field::FiniteField;

/// `unit * prod(factor^multiplicity)`, factors monic irreducible and sorted
/// canonically (degree, then coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, u32)>,
}

impl<E: Clone + Eq> Factorization<E> {
    /// Number of irreducible factors counted with multiplicity.
    pub fn count(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }

    /// Degrees of the factors, repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.degree().unwrap_or(0), *m as usize))
            .collect();
        out.sort_unstable();
        out
    }
}

impl<F: FiniteField> PolyRing<'_, F> {
    /// `X^q mod f`, `q` the field size.
    fn frobenius_x(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.powmod(&self.x(), self.field().order(), f)
    }

    pub fn is_squarefree(&self, f: &Poly<F::Elem>) -> bool {
        match f.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.is_one(&self.gcd(f, &self.derivative(f))),
        }
    }

    /// Rabin's test: `f` of degree `n` is irreducible iff `X^{q^n} = X mod f`
    /// and `gcd(f, X^{q^{n/r}} - X) = 1` for each prime `r | n`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let (_, f) = self.monic(f);
        let q = self.field().order();
        let x = self.x();
        // powers[k] = X^{q^k} mod f
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(self.rem(&x, &f));
        for k in 1..=n {
            let next = self.powmod(&powers[k - 1], q, &f);
            powers.push(next);
        }
        if powers[n] != self.rem(&x, &f) {
            return false;
        }
        arith::prime_factors(n as u64).into_iter().all(|r| {
            let h = self.sub(&powers[n / r as usize], &x);
            self.is_one(&self.gcd(&f, &h))
        })
    }

    /// Inverse of `f(X) -> f(X)^p` for `f` whose only nonzero terms sit in
    /// degrees divisible by `p`.
    fn pth_root(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let field = self.field();
        let p = field.characteristic() as usize;
        // c^{1/p} = c^{q/p}
        let root_exp = field.order() / p as u128;
        let v = f
            .coeffs()
            .iter()
            .step_by(p)
            .map(|c| field.pow(c, root_exp))
            .collect();
        self.poly(v)
    }

    /// Squarefree decomposition of a monic `f`: pairs `(g_i, i)` with `g_i`
    /// squarefree, pairwise coprime, and `f = prod g_i^i`.
    pub fn squarefree_decomposition(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, u32)> {
        let mut out = Vec::new();
        if f.degree().is_none_or(|d| d == 0) {
            return out;
        }
        let p = self.field().characteristic() as u32;
        let mut c = self.gcd(f, &self.derivative(f));
        let mut w = self.div_exact(f, &c);
        let mut i = 1;
        while !self.is_one(&w) {
            let y = self.gcd(&w, &c);
            let fac = self.div_exact(&w, &y);
            if !self.is_one(&fac) {
                out.push((fac, i));
            }
            c = self.div_exact(&c, &y);
            w = y;
            i += 1;
        }
        if !self.is_one(&c) {
            let root = self.pth_root(&c);
            for (g, m) in self.squarefree_decomposition(&root) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree `f`: pairs `(d, g_d)`
    /// where `g_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self, f: &Poly<F::Elem>) -> Vec<(usize, Poly<F::Elem>)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = self.x();
        let q = self.field().order();
        let mut h = self.rem(&x, &rest);
        let mut d = 1;
        while rest.degree().is_some_and(|n| n >= 2 * d) {
            h = self.powmod(&h, q, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &x));
            if !self.is_one(&g) {
                rest = self.div_exact(&rest, &g);
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
            d += 1;
        }
        if let Some(n) = rest.degree().filter(|&n| n > 0) {
            out.push((n, rest));
        }
        out
    }

    /// Split a monic squarefree `f` whose irreducible factors all have degree
    /// `d` (Cantor–Zassenhaus).
    pub fn equal_degree<R: Rng + ?Sized>(
        &self,
        f: &Poly<F::Elem>,
        d: usize,
        rng: &mut R,
    ) -> Vec<Poly<F::Elem>> {
        let n = f.degree().expect("nonzero");
        if n == d {
            return vec![f.clone()];
        }
        debug_assert!(n % d == 0);
        let field = self.field();
        let q = field.order();
        loop {
            let w = self.poly((0..n).map(|_| field.random(rng)).collect());
            if w.degree().is_none_or(|k| k == 0) {
                continue;
            }
            let mut g = self.gcd(f, &w);
            if self.is_one(&g) {
                let probe = if q % 2 == 1 {
                    // w^{(q^d - 1)/2} = (w^{1 + q + ... + q^{d-1}})^{(q-1)/2}
                    let mut t = self.rem(&w, f);
                    let mut norm = t.clone();
                    for _ in 1..d {
                        t = self.powmod(&t, q, f);
                        norm = self.mulmod(&norm, &t, f);
                    }
                    let b = self.powmod(&norm, (q - 1) / 2, f);
                    self.sub(&b, &self.one())
                } else {
                    // absolute trace to F_2: sum of w^{2^i}, i < d * log2(q)
                    let k = q.trailing_zeros() as usize * d;
                    let mut t = self.rem(&w, f);
                    let mut tr = t.clone();
                    for _ in 1..k {
                        t = self.mulmod(&t, &t, f);
                        tr = self.add(&tr, &t);
                    }
                    tr
                };
                g = self.gcd(f, &probe);
            }
            if g.degree().is_some_and(|k| k > 0 && k < n) {
                let other = self.div_exact(f, &g);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles. Randomness is drawn from
    /// a ChaCha generator seeded with `seed`; the result does not depend on it.
    pub fn factor(&self, f: &Poly<F::Elem>, seed: u64) -> Result<Factorization<F::Elem>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (unit, monic) = self.monic(f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (g, mult) in self.squarefree_decomposition(&monic) {
            for (d, h) in self.distinct_degree(&g) {
                for fac in self.equal_degree(&h, d, &mut rng) {
                    factors.push((fac, mult));
                }
            }
        }
        factors.sort_by(|(a, m), (b, n)| a.canonical_cmp(b).then(m.cmp(n)));
        Ok(Factorization { unit, factors })
    }

    /// Number and degrees of irreducible factors of a squarefree `f`, read off
    /// the distinct-degree factorization.
    pub fn count_irreducible_factors(&self, f: &Poly<F::Elem>) -> Result<(usize, Vec<usize>)> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_squarefree(f) {
            return Err(Error::NotSquarefree);
        }
        let (_, monic) = self.monic(f);
        let mut degrees = Vec::new();
        for (d, g) in self.distinct_degree(&monic) {
            let n = g.degree().unwrap();
            degrees.extend(std::iter::repeat_n(d, n / d));
        }
        degrees.sort_unstable();
        Ok((degrees.len(), degrees))
    }

    /// All roots of `f` in its coefficient field, ascending, without
    /// multiplicity.
    pub fn roots_in_field(&self, f: &Poly<F::Elem>) -> Result<Vec<F::Elem>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (_, monic) = self.monic(f);
        if monic.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let xq = self.frobenius_x(&monic);
        let split = self.gcd(&monic, &self.sub(&xq, &self.x()));
        if self.is_one(&split) {
            return Ok(Vec::new());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(split.degree().unwrap() as u64);
        let field = self.field();
        let mut roots: Vec<F::Elem> = self
            .equal_degree(&split, 1, &mut rng)
            .into_iter()
            .map(|lin| field.neg(&lin.coeffs()[0]))
            .collect();
        roots.sort();
        Ok(roots)
    }
}
