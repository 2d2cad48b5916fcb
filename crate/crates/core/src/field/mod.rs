//! Finite fields: the prime field `F_p`, explicit extensions `F_{p^m}`, and the
//! arithmetic [`Context`] carrying `p`, `ell`, a primitive root and `zeta_ell`.

mod context;
mod ext;
mod prime;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

pub use context::Context;
pub use ext::{build_extension, Embedding, ExtElem, ExtField};
pub use prime::{primitive_root, PrimeField};

/// Exact arithmetic in a finite field of size `order()`.
///
/// Elements are plain values; the field object carries the modulus. All
/// operations are pure, so a field can be shared freely across threads.
pub trait FiniteField: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> u32;
    /// Number of elements, `p^degree`.
    fn order(&self) -> u128;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under `Z -> F_p -> self`.
    fn from_int(&self, n: u64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Element with index `i` in a fixed enumeration of the field, `i < order()`.
    fn element(&self, i: u128) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u128) -> Self::Elem {
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

    /// Signed integer power; `None` for a negative power of zero.
    fn pow_signed(&self, a: &Self::Elem, exp: i64) -> Option<Self::Elem> {
        if exp >= 0 {
            Some(self.pow(a, exp as u128))
        } else {
            self.inv(a)
                .map(|ai| self.pow(&ai, exp.unsigned_abs() as u128))
        }
    }

    /// The absolute Frobenius `x -> x^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic() as u128)
    }

    fn iter(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}
