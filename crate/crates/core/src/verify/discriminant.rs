use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Context, ExtElem, ExtField, FiniteField};
use crate::formula::epsilon_in;
use crate::linalg::determinant;
use crate::poly::PolyRing;

/// How to pick among the `ell` roots at each step when building a point of
/// the fibre over `t = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootChoice {
    First,
    Last,
    Seeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantCheck {
    pub p: u64,
    pub ell: u64,
    pub a: u64,
    pub a2: u64,
    /// Degree over `F_p` of the field the fibre points live in.
    pub field_degree: u32,
    pub det_nonzero: bool,
    /// `(det D(a) / det D(a2))^2 = (a(1-a) / (a2(1-a2)))^{ell^2(ell-1)}`.
    pub ratio_holds: bool,
    /// `det D^2` agrees across root choices, for both points.
    pub choice_invariant: bool,
    /// `det D^2 / (a(1-a))^{ell^2(ell-1)}` lies in `F_p`, for both points.
    pub unit_in_prime_field: bool,
}

impl DiscriminantCheck {
    pub fn passed(&self) -> bool {
        self.det_nonzero && self.ratio_holds && self.choice_invariant && self.unit_in_prime_field
    }
}

fn pick<R: Rng>(roots: Vec<ExtElem>, choice: RootChoice, rng: &mut R) -> Result<ExtElem> {
    if roots.is_empty() {
        return Err(Error::InternalError(
            "fibre point not rational over the working field".into(),
        ));
    }
    let i = match choice {
        RootChoice::First => 0,
        RootChoice::Last => roots.len() - 1,
        RootChoice::Seeded(_) => rng.gen_range(0..roots.len()),
    };
    Ok(roots[i].clone())
}

struct Fibre<'a> {
    field: &'a ExtField,
    ell: u64,
    zeta: ExtElem,
}

impl Fibre<'_> {
    fn zeta_pow(&self, k: u64) -> ExtElem {
        self.field.pow(&self.zeta, (k % self.ell) as u128)
    }

    /// `1 - zeta^k t`.
    fn linear(&self, k: u64, t: &ExtElem) -> ExtElem {
        let f = self.field;
        f.sub(&f.one(), &f.mul(&self.zeta_pow(k), t))
    }

    /// `eps_{ell,j}^{1/ell} = e * prod_{m<j} (1 - zeta^m t) / y^j`.
    fn e_shift(&self, j: u64, t: &ExtElem, y: &ExtElem, e: &ExtElem) -> ExtElem {
        let f = self.field;
        let num = (0..j).fold(e.clone(), |acc, m| f.mul(&acc, &self.linear(m, t)));
        f.div(&num, &f.pow(y, j as u128))
            .expect("y != 0 off the branch locus")
    }

    /// Basis element `alpha_{i,j}^k` at the point `(t, y, e)`.
    fn alpha(&self, i: u64, j: u64, k: u64, t: &ExtElem, y: &ExtElem, e: &ExtElem) -> ExtElem {
        let f = self.field;
        let ti = f.pow(t, i as u128);
        if k == 0 {
            return f.mul(&ti, &f.pow(y, j as u128));
        }
        let num = f.mul(&ti, &f.pow(&self.e_shift(j, t, y, e), k as u128));
        let den = (1..self.ell).fold(f.one(), |acc, n| {
            f.mul(
                &acc,
                &f.pow(&self.linear(n + j, t), ((k * n) / self.ell) as u128),
            )
        });
        f.div(&num, &den)
            .expect("1 - zeta^n t != 0 off the branch locus")
    }

    /// Image of the point under `sigma_{xy}^z`.
    fn conjugate(
        &self,
        (x, yy, z): (u64, u64, u64),
        t: &ExtElem,
        y: &ExtElem,
        e: &ExtElem,
    ) -> (ExtElem, ExtElem, ExtElem) {
        let f = self.field;
        (
            f.mul(&self.zeta_pow(x), t),
            f.mul(&self.zeta_pow(yy), y),
            f.mul(&self.zeta_pow(z), &self.e_shift(x, t, y, e)),
        )
    }
}

fn working_field(ctx: &Context) -> Result<Arc<ExtField>> {
    // Frobenius has order dividing ell (odd ell) or 4 (ell = 2) in the
    // Heisenberg group, so every fibre point is rational over this field.
    let degree = if ctx.ell() == 2 { 4 } else { ctx.ell() as u32 };
    ctx.extension(degree)
}

/// `(det D)^2` at `t = a`, where `D` has rows indexed by the `ell^3` Galois
/// images of one fibre point and columns by the basis `alpha_{i,j}^k`.
pub fn discriminant_det_squared(
    ctx: &Context,
    a: u64,
    choice: RootChoice,
) -> Result<(Arc<ExtField>, ExtElem)> {
    let p = ctx.p();
    let a = a % p;
    if a == 0 || a == 1 {
        return Err(Error::DegenerateA(a));
    }
    let ell = ctx.ell();
    let field = working_field(ctx)?;
    let f = &*field;
    let ring = PolyRing::new(f);
    let seed = match choice {
        RootChoice::Seeded(s) => s,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ell as usize;

    let x = pick(
        ring.roots_in_field(&ring.binomial(n, &f.from_int(a)))?,
        choice,
        &mut rng,
    )?;
    let y = pick(
        ring.roots_in_field(&ring.binomial(n, &f.from_int(1 + p - a)))?,
        choice,
        &mut rng,
    )?;
    let zeta = f.from_int(ctx.zeta());
    let eps = epsilon_in(f, &zeta, ell, &x, 0)?;
    let e = pick(
        ring.roots_in_field(&ring.binomial(n, &eps))?,
        choice,
        &mut rng,
    )?;

    let fibre = Fibre {
        field: f,
        ell,
        zeta,
    };
    let mut basis = Vec::with_capacity(n * n * n);
    for k in 0..ell {
        for i in 0..ell {
            for j in 0..ell {
                basis.push((i, j, k));
            }
        }
    }
    let mut rows = Vec::with_capacity(basis.len());
    for sx in 0..ell {
        for sy in 0..ell {
            for sz in 0..ell {
                let (t1, y1, e1) = fibre.conjugate((sx, sy, sz), &x, &y, &e);
                rows.push(
                    basis
                        .iter()
                        .map(|&(i, j, k)| fibre.alpha(i, j, k, &t1, &y1, &e1))
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    let det = determinant(f, &rows);
    let sq = f.mul(&det, &det);
    Ok((field, sq))
}

/// Discriminant check restricted to `ell in {2, 3}`.
pub fn discriminant_ratio_check(
    ctx: &Context,
    a: u64,
    a2: u64,
    seed: u64,
) -> Result<DiscriminantCheck> {
    if !matches!(ctx.ell(), 2 | 3) {
        return Err(Error::UnsupportedEll(ctx.ell()));
    }
    discriminant_ratio_check_any_ell(ctx, a, a2, seed)
}

/// As [`discriminant_ratio_check`] without the `ell` restriction. For
/// `ell = 5` the matrix is `125 x 125` over `F_{p^5}`.
pub fn discriminant_ratio_check_any_ell(
    ctx: &Context,
    a: u64,
    a2: u64,
    seed: u64,
) -> Result<DiscriminantCheck> {
    let p = ctx.p();
    let ell = ctx.ell();
    let exponent = (ell * ell * (ell - 1)) as u128;
    let fp = ctx.field();

    let mut squares = Vec::new();
    let mut choice_invariant = true;
    let mut unit_in_prime_field = true;
    let mut field_degree = 0;
    for point in [a, a2] {
        let (field, sq) = discriminant_det_squared(ctx, point, RootChoice::First)?;
        field_degree = field.degree();
        for alt in [RootChoice::Last, RootChoice::Seeded(seed ^ point)] {
            choice_invariant &= discriminant_det_squared(ctx, point, alt)?.1 == sq;
        }
        let point = point % p;
        let base = fp.pow(&fp.mul(&point, &fp.sub(&1, &point)), exponent);
        let unit = field.div(&sq, &field.from_int(base)).expect("a(1-a) != 0");
        unit_in_prime_field &= unit.as_base().is_some();
        squares.push((field, sq));
    }
    let (field, sq_a) = &squares[0];
    let sq_a2 = &squares[1].1;
    let det_nonzero = !field.is_zero(sq_a) && !field.is_zero(sq_a2);

    let (a, a2) = (a % p, a2 % p);
    let num = fp.mul(&a, &fp.sub(&1, &a));
    let den = fp.mul(&a2, &fp.sub(&1, &a2));
    let target = fp.pow(&fp.div(&num, &den).expect("a2(1-a2) != 0"), exponent);
    let ratio_holds = det_nonzero && field.div(sq_a, sq_a2) == Some(field.from_int(target));

    Ok(DiscriminantCheck {
        p,
        ell,
        a,
        a2,
        field_degree,
        det_nonzero,
        ratio_holds,
        choice_invariant,
        unit_in_prime_field,
    })
}
