//! Ground-truth prime counts above `(t - a)`.
//!
//! The ring of integers of `K = F_p(t)(t^{1/ell}, (1-t)^{1/ell})` is
//! `F_p[t][u, v]` with `u^ell = t`, `v^ell = 1 - t`, so the residue algebra at
//! `(t - a)` is `F_p[u, v] / (u^ell - a, v^ell - (1 - a))`. Factoring `u^ell - a`
//! over `F_p` and then `v^ell - (1 - a)` over each residue field enumerates
//! the primes of `K`. Over each such prime with residue field `F_q` and image
//! `x` of `u`, the primes of `R` correspond to the irreducible factors of
//! `z^ell - eps(x)` over `F_q` (`R/K` is unramified and `eps(x) != 0`, so the
//! binomial is squarefree).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::mix64;
use crate::error::{Error, Result};
use crate::field::{Context, ExtElem, ExtField, FiniteField};
use crate::formula::epsilon_in;
use crate::poly::PolyRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    K,
    R,
}

/// Which factors produced a prime: index of the factor of `u^ell - a`, of
/// `v^ell - (1 - a)` over that residue field, and (level R) of `z^ell - eps`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTrace {
    pub u_factor: usize,
    pub v_factor: usize,
    pub z_factor: Option<usize>,
    pub residue_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitReport {
    pub level: Level,
    pub prime_count: u64,
    /// Residue degrees over `F_p`, ascending.
    pub residue_degrees: Vec<u32>,
    pub trace: Vec<PrimeTrace>,
}

impl SplitReport {
    fn from_trace(level: Level, mut trace: Vec<PrimeTrace>) -> Self {
        trace.sort_by_key(|t| (t.u_factor, t.v_factor, t.z_factor));
        let mut residue_degrees: Vec<u32> = trace.iter().map(|t| t.residue_degree).collect();
        residue_degrees.sort_unstable();
        Self {
            level,
            prime_count: trace.len() as u64,
            residue_degrees,
            trace,
        }
    }

    pub fn degree_sum(&self) -> u64 {
        self.residue_degrees.iter().map(|&d| d as u64).sum()
    }
}

/// A prime of `K` above `(t - a)`: its residue field and the image of `u`.
struct KPrime {
    u_factor: usize,
    v_factor: usize,
    field: Arc<ExtField>,
    x: ExtElem,
}

fn admissible(ctx: &Context, a: u64) -> Result<u64> {
    let a = a % ctx.p();
    if a == 0 || a == 1 {
        return Err(Error::DegenerateA(a));
    }
    Ok(a)
}

fn smallest_root(field: &ExtField, f: &crate::poly::Poly<ExtElem>) -> Result<ExtElem> {
    PolyRing::new(field)
        .roots_in_field(f)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InternalError("irreducible factor has no root in its field".into()))
}

fn k_primes(ctx: &Context, a: u64, seed: u64) -> Result<Vec<KPrime>> {
    let ell = ctx.ell() as usize;
    let base = ctx.extension(1)?;
    let base_ring = PolyRing::new(&*base);
    let u_poly = base_ring.binomial(ell, &base.from_int(a));
    let u_factors = base_ring.factor(&u_poly, mix64(seed))?;

    let mut out = Vec::new();
    for (ui, (g, _)) in u_factors.factors.iter().enumerate() {
        let m = g.degree().expect("nonconstant factor") as u32;
        let field_m = ctx.extension(m)?;
        let ring_m = PolyRing::new(&*field_m);
        let lift = ctx.embedding(1, m)?;
        let x_m = smallest_root(&field_m, &lift.apply_poly(g))?;

        let v_poly = ring_m.binomial(ell, &field_m.from_int(1 + ctx.p() - a));
        let v_factors = ring_m.factor(&v_poly, mix64(seed ^ (ui as u64 + 1)))?;
        for (vi, (h, _)) in v_factors.factors.iter().enumerate() {
            let n = m * h.degree().expect("nonconstant factor") as u32;
            let field_n = ctx.extension(n)?;
            let emb = ctx.embedding(m, n)?;
            out.push(KPrime {
                u_factor: ui,
                v_factor: vi,
                x: emb.apply(&x_m),
                field: field_n,
            });
        }
    }
    Ok(out)
}

/// Primes of `K` above `(t - a)`.
pub fn split_k(ctx: &Context, a: u64, seed: u64) -> Result<SplitReport> {
    let a = admissible(ctx, a)?;
    let trace = k_primes(ctx, a, seed)?
        .into_iter()
        .map(|k| PrimeTrace {
            u_factor: k.u_factor,
            v_factor: k.v_factor,
            z_factor: None,
            residue_degree: k.field.degree(),
        })
        .collect();
    let report = SplitReport::from_trace(Level::K, trace);
    let ell = ctx.ell();
    if report.degree_sum() != ell * ell {
        return Err(Error::InternalError(format!(
            "K-degrees at a = {a} sum to {}, expected {}",
            report.degree_sum(),
            ell * ell
        )));
    }
    Ok(report)
}

/// Degrees of the irreducible factors of `z^ell - eps_{ell,shift}(x)`. The
/// binomial is squarefree, so distinct-degree factorization suffices.
fn z_factor_degrees(ctx: &Context, k: &KPrime, shift: i64) -> Result<Vec<usize>> {
    let field = &*k.field;
    let zeta = field.from_int(ctx.zeta());
    let eps = epsilon_in(field, &zeta, ctx.ell(), &k.x, shift)?;
    if field.is_zero(&eps) {
        return Err(Error::InternalError(
            "eps vanishes at an unramified point".into(),
        ));
    }
    let ring = PolyRing::new(field);
    let z_poly = ring.binomial(ctx.ell() as usize, &eps);
    Ok(ring.count_irreducible_factors(&z_poly)?.1)
}

/// Primes of `R` above `(t - a)`.
///
/// The shift `n` used for `eps_{ell,n}` does not matter (shifts differ by an
/// `ell`-th power); this is re-checked for every shift at every prime of `K`.
pub fn split_r(ctx: &Context, a: u64, seed: u64) -> Result<SplitReport> {
    let a = admissible(ctx, a)?;
    let ell = ctx.ell();
    let mut trace = Vec::new();
    for k in &k_primes(ctx, a, seed)? {
        let degrees = z_factor_degrees(ctx, k, 0)?;
        for shift in 1..ell as i64 {
            if z_factor_degrees(ctx, k, shift)? != degrees {
                return Err(Error::InternalError(format!(
                    "shift {shift} changes the splitting at a = {a}"
                )));
            }
        }
        for (zi, d) in degrees.into_iter().enumerate() {
            trace.push(PrimeTrace {
                u_factor: k.u_factor,
                v_factor: k.v_factor,
                z_factor: Some(zi),
                residue_degree: k.field.degree() * d as u32,
            });
        }
    }
    let report = SplitReport::from_trace(Level::R, trace);
    if report.degree_sum() != ell.pow(3) {
        return Err(Error::InternalError(format!(
            "R-degrees at a = {a} sum to {}, expected {}",
            report.degree_sum(),
            ell.pow(3)
        )));
    }
    Ok(report)
}

/// `ell^2 / ord`, with `ord` the lcm of the orders of the two symbol indices
/// in `Z/ell`: the count of K-primes from the abelian Frobenius.
pub fn expected_k_count(ctx: &Context, a: u64) -> Result<u64> {
    let a = admissible(ctx, a)?;
    let ea = ctx.power_residue_symbol(a)?;
    let eb = ctx.power_residue_symbol(1 + ctx.p() - a)?;
    let ell = ctx.ell();
    Ok(if ea == 0 && eb == 0 { ell * ell } else { ell })
}

/// `ell = 2`, both `a` and `1 - a` squares: count primes of `R` as closed
/// points of the curve `U^2 + V^2 = 2 W^2` over the four points `(+-x, +-y)`
/// of `X^2 + Y^2 = Z^2`, using the covering `(U:V:W) -> (W^2 - U^2 : UV : W^2)`.
///
/// Each fibre has two geometric points; they are either both rational or
/// conjugate over `F_{p^2}`.
pub fn split_r2_curve(ctx: &Context, a: u64) -> Result<SplitReport> {
    if ctx.ell() != 2 {
        return Err(Error::WrongEll {
            expected: 2,
            got: ctx.ell(),
        });
    }
    let a = admissible(ctx, a)?;
    let p = ctx.p();
    let (Some(x), Some(y)) = (ctx.lth_root(a)?, ctx.lth_root(1 + p - a)?) else {
        return Err(Error::SymbolNotTrivial);
    };
    let f = ctx.field();
    let two = 2 % p;
    let mut trace = Vec::new();
    for (xi, xs) in [x, f.neg(&x)].into_iter().enumerate() {
        for (yi, ys) in [y, f.neg(&y)].into_iter().enumerate() {
            let mut rational = 0;
            for u in 1..p {
                let u2 = f.mul(&u, &u);
                let v = f.div(&ys, &u).expect("u != 0");
                let on_curve = f.add(&u2, &f.mul(&v, &v)) == two;
                if on_curve && f.sub(&1, &u2) == xs && f.mul(&u, &v) == ys {
                    rational += 1;
                }
            }
            let closed: Vec<u32> = match rational {
                2 => vec![1, 1],
                0 => vec![2],
                n => {
                    return Err(Error::InternalError(format!(
                        "fibre over ({xs}, {ys}) has {n} rational points"
                    )))
                }
            };
            for (zi, deg) in closed.into_iter().enumerate() {
                trace.push(PrimeTrace {
                    u_factor: xi,
                    v_factor: yi,
                    z_factor: Some(zi),
                    residue_degree: deg,
                });
            }
        }
    }
    Ok(SplitReport::from_trace(Level::R, trace))
}
