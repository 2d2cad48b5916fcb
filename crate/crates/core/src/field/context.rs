use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::{build_extension, primitive_root, Embedding, ExtField, FiniteField, PrimeField};
use crate::arith::{self, check_prime};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Arithmetic setting: primes `p`, `ell` with `ell | p - 1`, the smallest
/// primitive root `g` mod `p`, and `zeta = g^((p-1)/ell)`.
///
/// Cloning is cheap; clones share the lazily built caches (extension fields
/// and the expanded `A_ell` polynomial).
#[derive(Debug, Clone)]
pub struct Context {
    p: u64,
    ell: u64,
    g: u64,
    zeta: u64,
    field: PrimeField,
    cache: Arc<ContextCache>,
}

#[derive(Debug, Default)]
struct ContextCache {
    a_poly: OnceLock<Result<Poly<u64>>>,
    extensions: RwLock<BTreeMap<u32, Arc<ExtField>>>,
    embeddings: RwLock<BTreeMap<(u32, u32), Arc<Embedding>>>,
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.ell) == (other.p, other.ell)
    }
}

impl Eq for Context {}

impl Context {
    pub fn new(p: u64, ell: u64) -> Result<Self> {
        check_prime(p)?;
        if !arith::is_prime(ell) {
            return Err(Error::NotPrime(ell));
        }
        if !(p - 1).is_multiple_of(ell) {
            return Err(Error::DivisibilityFail { p, ell });
        }
        let g = primitive_root(p)?;
        let zeta = arith::pow_mod(g, ((p - 1) / ell) as u128, p);
        Ok(Self {
            p,
            ell,
            g,
            zeta,
            field: PrimeField::new(p)?,
            cache: Arc::default(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn zeta(&self) -> u64 {
        self.zeta
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> u64 {
        arith::pow_mod(self.zeta, k.rem_euclid(self.ell as i64) as u128, self.p)
    }

    /// `(p - 1) / ell`.
    pub fn residue_exponent(&self) -> u64 {
        (self.p - 1) / self.ell
    }

    /// Index `n` with `value = zeta^n`, if `value` is an `ell`-th root of unity.
    pub fn unity_index(&self, value: u64) -> Option<u64> {
        let mut cur = 1;
        for n in 0..self.ell {
            if cur == value % self.p {
                return Some(n);
            }
            cur = arith::mul_mod(cur, self.zeta, self.p);
        }
        None
    }

    /// The `ell`-th power residue symbol of `a` as an index in `Z/ell`:
    /// `a^((p-1)/ell) = zeta^n`.
    pub fn power_residue_symbol(&self, a: u64) -> Result<u64> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroArgument);
        }
        let w = arith::pow_mod(a, self.residue_exponent() as u128, self.p);
        self.unity_index(w)
            .ok_or_else(|| Error::InternalError(format!("{w} is not an ell-th root of unity")))
    }

    /// All `ell`-th roots of `a` in `F_p`, ascending; empty if `a` is not an
    /// `ell`-th power.
    pub fn lth_roots(&self, a: u64) -> Result<Vec<u64>> {
        let a = a % self.p;
        if a == 0 {
            return Err(Error::ZeroArgument);
        }
        let Some(e) = arith::discrete_log(self.g, a, self.p - 1, self.p) else {
            return Err(Error::InternalError(format!("no discrete log for {a}")));
        };
        if e % self.ell != 0 {
            return Ok(Vec::new());
        }
        let r = arith::pow_mod(self.g, (e / self.ell) as u128, self.p);
        let mut roots: Vec<u64> = (0..self.ell as i64)
            .map(|i| arith::mul_mod(r, self.zeta_pow(i), self.p))
            .collect();
        roots.sort_unstable();
        Ok(roots)
    }

    /// Canonical `ell`-th root of `a`: the one with smallest representative.
    pub fn lth_root(&self, a: u64) -> Result<Option<u64>> {
        Ok(self.lth_roots(a)?.into_iter().next())
    }

    /// `F_{p^m}`, built once per context.
    pub fn extension(&self, m: u32) -> Result<Arc<ExtField>> {
        if let Some(f) = self.cache.extensions.read().expect("poisoned").get(&m) {
            return Ok(Arc::clone(f));
        }
        let built = Arc::new(build_extension(self.p, m)?);
        let mut map = self.cache.extensions.write().expect("poisoned");
        Ok(Arc::clone(map.entry(m).or_insert(built)))
    }

    /// The embedding `F_{p^m} -> F_{p^n}` of [`ExtField::embed_into`], built
    /// once per context.
    pub fn embedding(&self, m: u32, n: u32) -> Result<Arc<Embedding>> {
        if let Some(e) = self.cache.embeddings.read().expect("poisoned").get(&(m, n)) {
            return Ok(Arc::clone(e));
        }
        let built = Arc::new(self.extension(m)?.embed_into(&*self.extension(n)?)?);
        let mut map = self.cache.embeddings.write().expect("poisoned");
        Ok(Arc::clone(map.entry((m, n)).or_insert(built)))
    }

    pub(crate) fn a_poly_cell(&self) -> &OnceLock<Result<Poly<u64>>> {
        &self.cache.a_poly
    }

    /// `1/2` in `F_p`, the point excluded for `ell = 2`.
    pub fn half(&self) -> u64 {
        self.field.inv(&2).unwrap_or(0)
    }
}
