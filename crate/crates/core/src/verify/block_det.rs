use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::field::{primitive_root, FiniteField, PrimeField};
use crate::linalg::determinant;

type Matrix = Vec<Vec<u64>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDetCounterexample {
    pub trial: usize,
    pub zeta: u64,
    pub blocks: Vec<Matrix>,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDetOutcome {
    pub p: u64,
    pub n: usize,
    pub ell: u64,
    pub trials: usize,
    pub passed: usize,
    /// Trials where some block was singular.
    pub singular: usize,
    pub counterexample: Option<BlockDetCounterexample>,
}

impl BlockDetOutcome {
    pub fn ok(&self) -> bool {
        self.counterexample.is_none() && self.passed == self.trials
    }
}

/// The `ell*n x ell*n` matrix whose `(r, c)` block is `zeta^{rc} A_c`.
pub fn block_matrix(field: &PrimeField, zeta: u64, blocks: &[Matrix]) -> Matrix {
    let ell = blocks.len();
    let n = blocks.first().map_or(0, |b| b.len());
    let mut out = vec![vec![0; ell * n]; ell * n];
    for r in 0..ell {
        for (c, block) in blocks.iter().enumerate() {
            let w = field.pow(&zeta, (r * c) as u128);
            for i in 0..n {
                for j in 0..n {
                    out[r * n + i][c * n + j] = field.mul(&w, &block[i][j]);
                }
            }
        }
    }
    out
}

/// `prod_i det(A_i) * (prod_{i<j} (zeta^j - zeta^i))^n`.
fn right_side(field: &PrimeField, zeta: u64, blocks: &[Matrix]) -> u64 {
    let ell = blocks.len();
    let n = blocks[0].len();
    let mut vandermonde = field.one();
    for i in 0..ell {
        for j in i + 1..ell {
            let d = field.sub(&field.pow(&zeta, j as u128), &field.pow(&zeta, i as u128));
            vandermonde = field.mul(&vandermonde, &d);
        }
    }
    blocks
        .iter()
        .fold(field.pow(&vandermonde, n as u128), |acc, b| {
            field.mul(&acc, &determinant(field, b))
        })
}

fn random_block<R: Rng>(field: &PrimeField, n: usize, singular: bool, rng: &mut R) -> Matrix {
    let mut m: Matrix = (0..n)
        .map(|_| (0..n).map(|_| field.random(rng)).collect())
        .collect();
    if singular {
        if n == 1 {
            m[0][0] = 0;
        } else {
            m[n - 1] = m[0].clone();
        }
    }
    m
}

/// Randomized check of the block determinant identity over `F_p`.
///
/// Each trial draws `ell` random `n x n` blocks and a random primitive
/// `ell`-th root of unity, then compares the dense determinant of the block
/// matrix with the product formula.
pub fn check_block_det(
    field: &PrimeField,
    n: usize,
    ell: u64,
    seed: u64,
    trials: usize,
) -> Result<BlockDetOutcome> {
    let p = field.modulus();
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if !is_prime(ell) {
        return Err(Error::UnsupportedEll(ell));
    }
    if !(p - 1).is_multiple_of(ell) {
        return Err(Error::NoRootOfUnity(ell));
    }
    let base_zeta = pow_mod(primitive_root(p)?, ((p - 1) / ell) as u128, p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = BlockDetOutcome {
        p,
        n,
        ell,
        trials,
        passed: 0,
        singular: 0,
        counterexample: None,
    };
    for trial in 0..trials {
        let zeta = field.pow(&base_zeta, rng.gen_range(1..ell) as u128);
        // Force a singular block now and then so the zero case is exercised.
        let singular = rng.gen_ratio(1, 8).then(|| rng.gen_range(0..ell));
        let blocks: Vec<Matrix> = (0..ell)
            .map(|i| random_block(field, n, singular == Some(i), &mut rng))
            .collect();
        if blocks.iter().any(|b| determinant(field, b) == 0) {
            outcome.singular += 1;
        }
        let lhs = determinant(field, &block_matrix(field, zeta, &blocks));
        let rhs = right_side(field, zeta, &blocks);
        if lhs == rhs {
            outcome.passed += 1;
        } else if outcome.counterexample.is_none() {
            outcome.counterexample = Some(BlockDetCounterexample {
                trial,
                zeta,
                blocks,
                lhs,
                rhs,
            });
        }
    }
    Ok(outcome)
}
