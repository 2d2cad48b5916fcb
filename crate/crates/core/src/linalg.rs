//! Dense exact linear algebra over a finite field.

use crate::field::FiniteField;

/// Determinant by Gaussian elimination. `rows` must be square.
pub fn determinant<F: FiniteField>(field: &F, rows: &[Vec<F::Elem>]) -> F::Elem {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut det = field.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !field.is_zero(&m[r][col])) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = field.neg(&det);
        }
        let piv = m[col][col].clone();
        det = field.mul(&det, &piv);
        let piv_inv = field.inv(&piv).expect("nonzero pivot");
        for r in col + 1..n {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let factor = field.mul(&m[r][col], &piv_inv);
            for c in col..n {
                let t = field.mul(&factor, &m[col][c]);
                m[r][c] = field.sub(&m[r][c], &t);
            }
        }
    }
    det
}
