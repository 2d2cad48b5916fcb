//! The Heisenberg group `H(F_ell)` of 3x3 upper unitriangular matrices.
//!
//! Elements are exponent triples `(e_alpha, e_beta, e_c)` for the entries
//! (1,2), (2,3) and (1,3). The lifted Galois generators map to
//! `alpha = (1,0,0)` and `beta = (0,1,0)`; the centre is `{(0,0,c)}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HeisElem {
    pub ell: u64,
    pub e_alpha: u64,
    pub e_beta: u64,
    pub e_c: u64,
}

impl HeisElem {
    pub fn new(ell: u64, e_alpha: i64, e_beta: i64, e_c: i64) -> Self {
        let r = |x: i64| x.rem_euclid(ell as i64) as u64;
        Self {
            ell,
            e_alpha: r(e_alpha),
            e_beta: r(e_beta),
            e_c: r(e_c),
        }
    }

    pub fn identity(ell: u64) -> Self {
        Self::new(ell, 0, 0, 0)
    }

    /// Image of the lift of `t^{1/ell} -> zeta t^{1/ell}`.
    pub fn alpha(ell: u64) -> Self {
        Self::new(ell, 1, 0, 0)
    }

    /// Image of the lift of `(1-t)^{1/ell} -> zeta (1-t)^{1/ell}`.
    pub fn beta(ell: u64) -> Self {
        Self::new(ell, 0, 1, 0)
    }

    pub fn is_identity(&self) -> bool {
        (self.e_alpha, self.e_beta, self.e_c) == (0, 0, 0)
    }

    pub fn is_central(&self) -> bool {
        self.e_alpha == 0 && self.e_beta == 0
    }

    /// Matrix product `self * other`:
    /// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ell != other.ell {
            return Err(Error::MixedModulus(self.ell, other.ell));
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let l = self.ell;
        Self {
            ell: l,
            e_alpha: (self.e_alpha + o.e_alpha) % l,
            e_beta: (self.e_beta + o.e_beta) % l,
            e_c: (self.e_c + o.e_c + self.e_alpha * o.e_beta) % l,
        }
    }

    pub fn inverse(&self) -> Self {
        let l = self.ell;
        Self {
            ell: l,
            e_alpha: (l - self.e_alpha) % l,
            e_beta: (l - self.e_beta) % l,
            e_c: (self.e_alpha * self.e_beta % l + l - self.e_c) % l,
        }
    }

    pub fn pow(&self, n: u64) -> Self {
        (0..n).fold(Self::identity(self.ell), |acc, _| acc.mul_unchecked(self))
    }

    /// Smallest `n >= 1` with `self^n = 1`.
    pub fn order(&self) -> u64 {
        let mut cur = *self;
        let mut n = 1;
        while !cur.is_identity() {
            cur = cur.mul_unchecked(self);
            n += 1;
        }
        n
    }

    /// `g h g^{-1} h^{-1}`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let gh = self.compose(other)?;
        Ok(gh
            .mul_unchecked(&self.inverse())
            .mul_unchecked(&other.inverse()))
    }

    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        Ok(g.compose(self)?.mul_unchecked(&g.inverse()))
    }

    pub fn to_matrix(&self) -> [[u64; 3]; 3] {
        [[1, self.e_alpha, self.e_c], [0, 1, self.e_beta], [0, 0, 1]]
    }
}

impl fmt::Display for HeisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.e_alpha, self.e_beta, self.e_c)
    }
}

/// All `ell^3` elements in lexicographic order.
pub fn elements(ell: u64) -> Vec<HeisElem> {
    let l = ell as i64;
    let mut out = Vec::with_capacity((ell * ell * ell) as usize);
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                out.push(HeisElem::new(ell, a, b, c));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Sorted; the first element is the canonical representative.
    pub elements: Vec<HeisElem>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> &HeisElem {
        &self.elements[0]
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &HeisElem) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn label(&self) -> ClassLabel {
        ClassLabel::of(self.representative())
    }
}

/// Conjugacy classes by brute-force conjugation, ordered by size and then by
/// representative.
pub fn conjugacy_classes(ell: u64) -> Result<Vec<ConjugacyClass>> {
    if !arith::is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let all = elements(ell);
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for x in &all {
        if seen.contains(x) {
            continue;
        }
        let orbit: BTreeSet<HeisElem> = all
            .iter()
            .map(|g| x.conjugate_by(g).expect("same ell"))
            .collect();
        seen.extend(orbit.iter().copied());
        classes.push(ConjugacyClass {
            elements: orbit.into_iter().collect(),
        });
    }
    classes.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| a.representative().cmp(b.representative()))
    });
    Ok(classes)
}

/// Conjugacy class of an element: central classes are singletons; a
/// non-central class is all elements with the given `(e_alpha, e_beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassLabel {
    Central { e_c: u64 },
    NonCentral { e_alpha: u64, e_beta: u64 },
}

impl ClassLabel {
    pub fn of(g: &HeisElem) -> Self {
        if g.is_central() {
            ClassLabel::Central { e_c: g.e_c }
        } else {
            ClassLabel::NonCentral {
                e_alpha: g.e_alpha,
                e_beta: g.e_beta,
            }
        }
    }

    pub fn representative(&self, ell: u64) -> HeisElem {
        match *self {
            ClassLabel::Central { e_c } => HeisElem::new(ell, 0, 0, e_c as i64),
            ClassLabel::NonCentral { e_alpha, e_beta } => {
                HeisElem::new(ell, e_alpha as i64, e_beta as i64, 0)
            }
        }
    }

    pub fn size(&self, ell: u64) -> u64 {
        match self {
            ClassLabel::Central { .. } => 1,
            ClassLabel::NonCentral { .. } => ell,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Central { e_c } => write!(f, "(0,0,{e_c})"),
            ClassLabel::NonCentral { e_alpha, e_beta } => write!(f, "({e_alpha},{e_beta},*)"),
        }
    }
}
