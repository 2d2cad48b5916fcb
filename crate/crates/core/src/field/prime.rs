use rand::Rng;

use super::FiniteField;
use crate::arith::{self, check_prime};
use crate::error::Result;

/// The prime field `F_p`, elements as residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduce a signed integer into `[0, p)`.
    pub fn from_signed(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn degree(&self) -> u32 {
        1
    }
    fn order(&self) -> u128 {
        self.p as u128
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_int(&self, n: u64) -> u64 {
        n % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        arith::mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        arith::inv_mod(*a, self.p)
    }
    fn pow(&self, a: &u64, exp: u128) -> u64 {
        arith::pow_mod(*a, exp, self.p)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn element(&self, i: u128) -> u64 {
        debug_assert!(i < self.p as u128);
        i as u64
    }
}

/// Smallest generator of `(Z/p)^*`. For `p = 2` the group is trivial and the
/// answer is 1.
pub fn primitive_root(p: u64) -> Result<u64> {
    check_prime(p)?;
    if p == 2 {
        return Ok(1);
    }
    let qs = arith::prime_factors(p - 1);
    let g = (2..p)
        .find(|&g| {
            qs.iter()
                .all(|&q| arith::pow_mod(g, ((p - 1) / q) as u128, p) != 1)
        })
        .expect("every prime field has a primitive root");
    Ok(g)
}
