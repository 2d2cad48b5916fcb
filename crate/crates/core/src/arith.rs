//! Word-sized modular arithmetic helpers.
//!
//! Moduli are kept below 2^31 so that a product of two residues fits in a `u64`.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest accepted prime modulus (exclusive).
pub const MAX_MODULUS: u64 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= MAX_MODULUS {
        return Err(Error::ModulusTooLarge(p));
    }
    Ok(())
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(a < p && b < p && p < MAX_MODULUS);
    a * b % p
}

pub fn pow_mod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    // extended Euclid on signed values; p < 2^31 so i64 is plenty
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    Some(s0.rem_euclid(p as i64) as u64)
}

/// Multiplicative order of `a` modulo prime `p`, given the factorization of `p - 1`.
pub fn multiplicative_order(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let mut order = p - 1;
    for q in prime_factors(p - 1) {
        while order.is_multiple_of(q) && pow_mod(a, (order / q) as u128, p) == 1 {
            order /= q;
        }
    }
    Some(order)
}

/// Baby-step giant-step discrete logarithm: smallest `e` in `[0, order)` with
/// `base^e = target (mod p)`, where `order` is the order of `base`.
pub fn discrete_log(base: u64, target: u64, order: u64, p: u64) -> Option<u64> {
    let target = target % p;
    if target == 0 {
        return None;
    }
    let m = (order as f64).sqrt().ceil() as u64 + 1;
    let mut table = HashMap::with_capacity(m as usize);
    let mut cur = 1u64;
    for j in 0..m {
        table.entry(cur).or_insert(j);
        cur = mul_mod(cur, base, p);
    }
    // giant step factor base^{-m}
    let giant = inv_mod(pow_mod(base, m as u128, p), p)?;
    let mut gamma = target;
    for i in 0..m {
        if let Some(&j) = table.get(&gamma) {
            let e = i * m + j;
            if e < order {
                return Some(e);
            }
        }
        gamma = mul_mod(gamma, giant, p);
    }
    None
}

/// SplitMix64 finalizer; used to derive per-task seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
