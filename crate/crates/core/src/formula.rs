//! The theorem side: `eps_{ell,n}` at specializations, the polynomial
//! `A_ell`, and the predicted Frobenius class and prime count above `(t - a)`.
//!
//! `A_2` is available three ways (recurrence, closed form in `F_p` or
//! `F_{p^2}`, expanded polynomial); `A_ell` for odd `ell` two ways (root
//! average at residue points, expanded polynomial everywhere).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Context, FiniteField, PrimeField};
use crate::heisenberg::{ClassLabel, HeisElem};
use crate::poly::{Poly, PolyRing};

/// `prod_{i=1}^{ell-1} (1 - zeta^{i+n} x)^i` in any field containing `zeta`
/// and `x`. Fails when `x^ell = 1`, where one factor vanishes.
pub fn epsilon_in<F: FiniteField>(
    field: &F,
    zeta: &F::Elem,
    ell: u64,
    x: &F::Elem,
    n: i64,
) -> Result<F::Elem> {
    if field.is_zero(x) {
        return Err(Error::ZeroArgument);
    }
    if field.is_one(&field.pow(x, ell as u128)) {
        return Err(Error::DegenerateSpecialization);
    }
    let one = field.one();
    let mut acc = field.one();
    for i in 1..ell {
        let z = field.pow(zeta, (i as i64 + n).rem_euclid(ell as i64) as u128);
        let factor = field.sub(&one, &field.mul(&z, x));
        acc = field.mul(&acc, &field.pow(&factor, i as u128));
    }
    Ok(acc)
}

/// `eps_{ell,n}` at the point `t^{1/ell} = root_x` of `F_p`.
pub fn epsilon_n(ctx: &Context, root_x: u64, n: i64) -> Result<u64> {
    epsilon_in(ctx.field(), &ctx.zeta(), ctx.ell(), &(root_x % ctx.p()), n)
}

/// `eps_ell(root_x)^((p-1)/ell)`: the residue test for one choice of root.
pub fn epsilon_power(ctx: &Context, root_x: u64) -> Result<u64> {
    let e = epsilon_n(ctx, root_x, 0)?;
    Ok(ctx.field().pow(&e, ctx.residue_exponent() as u128))
}

fn check_admissible(ctx: &Context, a: u64) -> Result<u64> {
    let a = a % ctx.p();
    if a == 0 || a == 1 {
        return Err(Error::DegenerateA(a));
    }
    Ok(a)
}

/// Term `x_n` of `x_{n+1} = 2 x_n + (a - 1) x_{n-1}`, `x_0 = x_1 = 1`, via a
/// 2x2 matrix power.
pub fn a2_sequence(field: &PrimeField, a: u64, n: u64) -> u64 {
    type M = [[u64; 2]; 2];
    let mul = |x: &M, y: &M| -> M {
        let mut out = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = field.add(
                    &field.mul(&x[i][0], &y[0][j]),
                    &field.mul(&x[i][1], &y[1][j]),
                );
            }
        }
        out
    };
    if n == 0 {
        return field.one();
    }
    // (x_{k+1}, x_k) = step^k (x_1, x_0)
    let step: M = [
        [2 % field.modulus(), field.sub(&(a % field.modulus()), &1)],
        [1, 0],
    ];
    let mut acc: M = [[1, 0], [0, 1]];
    let mut base = step;
    let mut e = n - 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    // x_n = row 0 of step^{n-1} applied to (x_1, x_0) = (1, 1)
    field.add(&acc[0][0], &acc[0][1])
}

fn require_ell(ctx: &Context, ell: u64) -> Result<()> {
    if ctx.ell() != ell {
        return Err(Error::WrongEll {
            expected: ell,
            got: ctx.ell(),
        });
    }
    Ok(())
}

/// `A_2(a) = x_{(p-1)/2}` from the recurrence.
pub fn a2_value(ctx: &Context, a: u64) -> Result<u64> {
    require_ell(ctx, 2)?;
    let a = check_admissible(ctx, a)?;
    Ok(a2_sequence(ctx.field(), a, (ctx.p() - 1) / 2))
}

/// `A_2(a) = ((1 - x)^h + (1 + x)^h) / 2` with `x^2 = a`, `h = (p-1)/2`,
/// computed in `F_p` when `a` is a square and in `F_{p^2}` otherwise.
pub fn a2_closed_form(ctx: &Context, a: u64) -> Result<u64> {
    require_ell(ctx, 2)?;
    let a = check_admissible(ctx, a)?;
    let h = ((ctx.p() - 1) / 2) as u128;
    let half = ctx.half();
    if let Some(x) = ctx.lth_root(a)? {
        let f = ctx.field();
        let s = f.add(&f.pow(&f.sub(&1, &x), h), &f.pow(&f.add(&1, &x), h));
        return Ok(f.mul(&s, &half));
    }
    let ext = ctx.extension(2)?;
    let ring = PolyRing::new(&*ext);
    let x = ring
        .roots_in_field(&ring.binomial(2, &ext.from_int(a)))?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InternalError("no square root in F_{p^2}".into()))?;
    let one = ext.one();
    let s = ext.add(
        &ext.pow(&ext.sub(&one, &x), h),
        &ext.pow(&ext.add(&one, &x), h),
    );
    ext.mul(&s, &ext.from_int(half))
        .as_base()
        .ok_or_else(|| Error::InternalError("A_2 closed form left F_p".into()))
}

/// `A_ell(a)` for odd `ell` at a point where `a` has an `ell`-th root `x`
/// in `F_p`: `(1/ell) sum_j eps_{ell,j}(x)^((p-1)/ell)`.
///
/// The value is checked to be the same for all `ell` choices of `x`. When
/// `1 - a` is also an `ell`-th power it is additionally checked against the
/// single-root value `eps_ell(x)^((p-1)/ell)`.
pub fn a_ell_value(ctx: &Context, a: u64) -> Result<u64> {
    if ctx.ell() < 3 {
        return Err(Error::UnsupportedEll(ctx.ell()));
    }
    let a = check_admissible(ctx, a)?;
    let roots = ctx.lth_roots(a)?;
    if roots.is_empty() {
        return Err(Error::NotResidue(a));
    }
    let f = ctx.field();
    let ell_inv = f.inv(&ctx.ell()).expect("ell < p");
    let exp = ctx.residue_exponent() as u128;
    let average = |x: u64| -> Result<u64> {
        let mut sum = 0;
        for j in 0..ctx.ell() as i64 {
            sum = f.add(&sum, &f.pow(&epsilon_n(ctx, x, j)?, exp));
        }
        Ok(f.mul(&sum, &ell_inv))
    };
    let value = average(roots[0])?;
    for &x in &roots[1..] {
        if average(x)? != value {
            return Err(Error::InternalError(format!(
                "A_ell({a}) depends on the choice of root"
            )));
        }
    }
    if ctx.power_residue_symbol(1 + ctx.p() - a)? == 0 {
        for &x in &roots {
            if epsilon_power(ctx, x)? != value {
                return Err(Error::InternalError(format!(
                    "eps_ell({x})^((p-1)/ell) disagrees with A_ell({a})"
                )));
            }
        }
    }
    Ok(value)
}

/// Expand `(1/ell) sum_j eps_{ell,j}(s)^((p-1)/ell)` in `F_p[s]`, check that
/// only powers `s^{k ell}` survive, and contract `s^ell -> x`.
pub fn expand_a_poly(ctx: &Context) -> Result<Poly<u64>> {
    let f = ctx.field();
    let ring = PolyRing::new(f);
    let ell = ctx.ell();
    let exp = ctx.residue_exponent();
    let mut sum = Poly::zero();
    for j in 0..ell as i64 {
        let mut eps = ring.one();
        for i in 1..ell as i64 {
            let lin = ring.poly(vec![1, f.neg(&ctx.zeta_pow(i + j))]);
            eps = ring.mul(&eps, &ring.pow(&lin, i as u64));
        }
        sum = ring.add(&sum, &ring.pow(&eps, exp));
    }
    if let Some(degree) = sum
        .coeffs()
        .iter()
        .enumerate()
        .find(|(k, c)| **c != 0 && !(*k as u64).is_multiple_of(ell))
        .map(|(k, _)| k)
    {
        return Err(Error::PolynomialityViolation { degree });
    }
    let ell_inv = f.inv(&ell).expect("ell < p");
    let contracted = sum
        .coeffs()
        .iter()
        .step_by(ell as usize)
        .map(|c| f.mul(c, &ell_inv))
        .collect();
    Ok(ring.poly(contracted))
}

/// Cached [`expand_a_poly`] for this context.
pub fn a_poly(ctx: &Context) -> Result<&Poly<u64>> {
    ctx.a_poly_cell()
        .get_or_init(|| expand_a_poly(ctx))
        .as_ref()
        .map_err(Clone::clone)
}

/// `A_ell(a)` for any `a` by evaluating the expanded polynomial.
pub fn a_value_poly(ctx: &Context, a: u64) -> Result<u64> {
    let poly = a_poly(ctx)?;
    Ok(crate::poly::eval(ctx.field(), poly, &(a % ctx.p())))
}

/// Four-way classification of `A_2(a)` for `a` outside `{0, 1, 1/2}`, each
/// case corresponding to one pair of quadratic characters of `(a, 1 - a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum A2Case {
    /// `A_2 = +-1`: both `a` and `1 - a` are squares.
    PlusMinusOne,
    /// `A_2 = 0`: `a` square, `1 - a` not.
    Zero,
    /// `A_2^2 = 1/(1-a)`: `a` non-square, `1 - a` square.
    InvOneMinusA,
    /// `A_2^2 = a/(1-a)`: neither is a square.
    AOverOneMinusA,
}

impl A2Case {
    pub const ALL: [A2Case; 4] = [
        A2Case::PlusMinusOne,
        A2Case::Zero,
        A2Case::InvOneMinusA,
        A2Case::AOverOneMinusA,
    ];

    /// Case expected from the quadratic symbol indices (0 = square).
    pub fn from_symbols(e_alpha: u64, e_beta: u64) -> Self {
        match (e_alpha, e_beta) {
            (0, 0) => A2Case::PlusMinusOne,
            (0, _) => A2Case::Zero,
            (_, 0) => A2Case::InvOneMinusA,
            _ => A2Case::AOverOneMinusA,
        }
    }
}

impl fmt::Display for A2Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            A2Case::PlusMinusOne => "plus_minus_one",
            A2Case::Zero => "zero",
            A2Case::InvOneMinusA => "inv_one_minus_a",
            A2Case::AOverOneMinusA => "a_over_one_minus_a",
        };
        f.write_str(s)
    }
}

/// Which of the four case conditions hold for `(a, A_2(a))`, in
/// [`A2Case::ALL`] order.
pub fn a2_case_conditions(ctx: &Context, a: u64, value: u64) -> [bool; 4] {
    let f = ctx.field();
    let one_minus_a = f.sub(&1, &(a % ctx.p()));
    let inv = f.inv(&one_minus_a).unwrap_or(0);
    let sq = f.mul(&value, &value);
    [
        value == 1 || value == ctx.p() - 1,
        value == 0,
        sq == inv,
        sq == f.mul(&(a % ctx.p()), &inv),
    ]
}

fn check_admissible_two(ctx: &Context, a: u64) -> Result<u64> {
    let a = check_admissible(ctx, a)?;
    if ctx.ell() == 2 && a == ctx.half() {
        return Err(Error::DegenerateA(a));
    }
    Ok(a)
}

/// Classify `A_2(a)`; the first matching case in [`A2Case::ALL`] order wins.
pub fn a2_case(ctx: &Context, a: u64) -> Result<A2Case> {
    require_ell(ctx, 2)?;
    let a = check_admissible_two(ctx, a)?;
    let value = a2_value(ctx, a)?;
    let conds = a2_case_conditions(ctx, a, value);
    A2Case::ALL
        .into_iter()
        .zip(conds)
        .find(|(_, c)| *c)
        .map(|(case, _)| case)
        .ok_or_else(|| Error::InternalError(format!("A_2({a}) = {value} matches no case")))
}

/// Theorem-side description of the Frobenius class above `(t - a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobPrediction {
    pub p: u64,
    pub ell: u64,
    pub a: u64,
    /// Power residue symbol index of `a`: the (1,2) entry.
    pub e_alpha: u64,
    /// Power residue symbol index of `1 - a`: the (2,3) entry.
    pub e_beta: u64,
    /// Whether the central coordinate is pinned down (both symbols trivial).
    pub central_resolved: bool,
    /// `A_ell(a)` when it drives the prediction: always for `ell = 2`, and
    /// for odd `ell` when both symbols are trivial.
    pub a_value: Option<u64>,
    pub a2_case: Option<A2Case>,
    pub class: ClassLabel,
    pub predicted_count: u64,
}

/// Predict the number of primes of `R` above `(t - a)`.
///
/// For `ell = 2` the count comes from the `A_2(a)` case table (8, 4 or 2);
/// for odd `ell` it is `ell^3` iff both symbols are trivial and `A_ell(a) = 1`,
/// else `ell^2`. The count is cross-checked against `ell^3 / ord(class)`.
pub fn frobenius_prediction(ctx: &Context, a: u64) -> Result<FrobPrediction> {
    let ell = ctx.ell();
    let a = check_admissible_two(ctx, a)?;
    let e_alpha = ctx.power_residue_symbol(a)?;
    let e_beta = ctx.power_residue_symbol(1 + ctx.p() - a)?;
    let central_resolved = e_alpha == 0 && e_beta == 0;
    let minus_one = ctx.p() - 1;

    let (a_value, a2_case, e_c, predicted_count) = if ell == 2 {
        let value = a2_value(ctx, a)?;
        let case = a2_case(ctx, a)?;
        let conds = a2_case_conditions(ctx, a, value);
        let count = if value == 1 {
            8
        } else if value == minus_one || value == 0 || conds[2] {
            4
        } else if conds[3] {
            2
        } else {
            return Err(Error::InternalError(format!(
                "A_2({a}) = {value} matches no case"
            )));
        };
        let e_c = match (central_resolved, value) {
            (false, _) => None,
            (true, 1) => Some(0),
            (true, v) if v == minus_one => Some(1),
            (true, v) => {
                return Err(Error::InternalError(format!(
                    "A_2({a}) = {v} with both symbols trivial"
                )))
            }
        };
        (Some(value), Some(case), e_c, count)
    } else if central_resolved {
        let value = a_ell_value(ctx, a)?;
        let e_c = ctx.unity_index(value).ok_or_else(|| {
            Error::InternalError(format!("A_ell({a}) = {value} is not a root of unity"))
        })?;
        let count = if value == 1 { ell.pow(3) } else { ell.pow(2) };
        (Some(value), None, Some(e_c), count)
    } else {
        (None, None, None, ell.pow(2))
    };

    let class = match e_c {
        Some(e_c) => ClassLabel::Central { e_c },
        None => ClassLabel::NonCentral { e_alpha, e_beta },
    };
    let by_order = ell.pow(3) / class.representative(ell).order();
    if by_order != predicted_count {
        return Err(Error::InternalError(format!(
            "class {class} has order giving {by_order} primes, table gives {predicted_count}"
        )));
    }
    Ok(FrobPrediction {
        p: ctx.p(),
        ell,
        a,
        e_alpha,
        e_beta,
        central_resolved,
        a_value,
        a2_case,
        class,
        predicted_count,
    })
}

/// Admissible points for scans: `a` outside `{0, 1}`, and outside `1/2` when
/// `ell = 2`.
pub fn admissible_points(ctx: &Context) -> Vec<u64> {
    let half = ctx.half();
    (2..ctx.p())
        .filter(|&a| ctx.ell() != 2 || a != half)
        .collect()
}

/// Frobenius class element for a prediction, for display.
pub fn class_representative(pred: &FrobPrediction) -> HeisElem {
    pred.class.representative(pred.ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;

    fn ctx(p: u64, ell: u64) -> Context {
        Context::new(p, ell).unwrap()
    }

    /// Independent oracle: A_2(a) = sum_j C(h, 2j) a^j, from the binomial
    /// expansion of the definition.
    fn a2_binomial(p: u64, a: u64) -> u64 {
        let f = PrimeField::new(p).unwrap();
        let h = (p - 1) / 2;
        let mut binom = 1u64; // C(h, k)
        let mut acc = 0;
        for k in 0..=h {
            if k % 2 == 0 {
                acc = f.add(&acc, &f.mul(&binom, &f.pow(&a, (k / 2) as u128)));
            }
            binom = f.mul(&binom, &((h - k) % p));
            binom = f.mul(&binom, &f.inv(&((k + 1) % p)).unwrap());
        }
        acc
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_n(&ctx(13, 2), 2, 0).unwrap(), 3);
        assert_eq!(epsilon_n(&ctx(7, 3), 3, 0).unwrap(), 4);
        assert_eq!(epsilon_n(&ctx(31, 3), 4, 0).unwrap(), 4);
        assert_eq!(
            epsilon_n(&ctx(7, 3), 2, 0).unwrap_err(),
            Error::DegenerateSpecialization
        );
        assert_eq!(
            epsilon_n(&ctx(7, 3), 0, 0).unwrap_err(),
            Error::ZeroArgument
        );
    }

    #[test]
    fn shift_identity() {
        for (p, ell) in [(7, 3), (13, 3), (31, 5), (29, 7), (13, 2)] {
            let c = ctx(p, ell);
            let f = c.field();
            for x in 1..p {
                let a = f.pow(&x, ell as u128);
                if a == 1 {
                    continue;
                }
                let base = epsilon_n(&c, x, 0).unwrap();
                for n in 0..ell as i64 {
                    let mut rhs = base;
                    for m in 0..n {
                        let lin = f.sub(&1, &f.mul(&c.zeta_pow(m), &x));
                        rhs = f.mul(&rhs, &f.pow(&lin, ell as u128));
                    }
                    let denom = f.pow(&f.sub(&1, &a), n as u128);
                    rhs = f.div(&rhs, &denom).unwrap();
                    assert_eq!(
                        epsilon_n(&c, x, n).unwrap(),
                        rhs,
                        "p={p} ell={ell} x={x} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn a2_examples() {
        assert_eq!(a2_value(&ctx(5, 2), 4).unwrap(), 0);
        assert_eq!(a2_value(&ctx(13, 2), 4).unwrap(), 1);
        assert_eq!(a2_closed_form(&ctx(5, 2), 4).unwrap(), 0);
        assert_eq!(a2_closed_form(&ctx(13, 2), 4).unwrap(), 1);
        assert_eq!(
            a2_value(&ctx(7, 3), 4).unwrap_err(),
            Error::WrongEll {
                expected: 2,
                got: 3
            }
        );
        assert_eq!(a2_value(&ctx(13, 2), 1).unwrap_err(), Error::DegenerateA(1));
    }

    #[test]
    fn a2_three_routes_agree_with_binomial_oracle() {
        for p in (3..200).filter(|&p| is_prime(p)) {
            let c = ctx(p, 2);
            let f = c.field();
            for a in 2..p {
                let rec = a2_value(&c, a).unwrap();
                assert_eq!(rec, a2_binomial(p, a), "p={p} a={a}");
                assert_eq!(a2_closed_form(&c, a).unwrap(), rec);
                assert_eq!(a_value_poly(&c, a).unwrap(), rec);
                assert_eq!(a2_sequence(f, a, p), 1, "x_p = 1 at p={p} a={a}");
            }
        }
    }

    #[test]
    fn a_ell_examples() {
        assert_eq!(a_ell_value(&ctx(31, 3), 2).unwrap(), 1);
        // 1 - 6 = 2 is not a cube mod 7, so the root average cancels to 0
        let c = ctx(7, 3);
        assert_eq!(a_ell_value(&c, 6).unwrap(), 0);
        assert_eq!(a_value_poly(&c, 6).unwrap(), 0);
        assert_eq!(epsilon_power(&c, 3).unwrap(), 2);
        assert_eq!(epsilon_power(&c, 6).unwrap(), 4);
        assert_eq!(epsilon_power(&c, 5).unwrap(), 1);
        assert_eq!(a_ell_value(&c, 2).unwrap_err(), Error::NotResidue(2));
        assert_eq!(
            a_ell_value(&ctx(13, 2), 4).unwrap_err(),
            Error::UnsupportedEll(2)
        );
    }

    #[test]
    fn a_ell_choice_independent_when_both_trivial() {
        for (p, ell) in [(31, 3), (61, 3), (151, 5), (211, 7), (181, 3)] {
            let c = ctx(p, ell);
            for a in 2..p {
                let both = c.power_residue_symbol(a).unwrap() == 0
                    && c.power_residue_symbol(p + 1 - a).unwrap() == 0;
                if !both {
                    continue;
                }
                let value = a_ell_value(&c, a).unwrap();
                for x in c.lth_roots(a).unwrap() {
                    assert_eq!(epsilon_power(&c, x).unwrap(), value);
                }
                assert_eq!(a_value_poly(&c, a).unwrap(), value);
            }
        }
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_a_poly(&ctx(5, 2)).unwrap().coeffs(), &[1, 1]);
        assert_eq!(expand_a_poly(&ctx(13, 2)).unwrap().coeffs(), &[1, 2, 2, 1]);
        for (p, ell) in [(7, 3), (31, 3), (11, 5), (29, 7), (101, 5)] {
            let c = ctx(p, ell);
            let poly = a_poly(&c).unwrap();
            assert_eq!(poly.coeffs()[0], 1);
            // degree in s before contraction is at most (ell-1)(p-1)/2
            assert!(poly.degree().unwrap() as u64 * ell <= (ell - 1) * (p - 1) / 2);
        }
    }

    /// The expanded polynomial agrees with the definition evaluated through
    /// roots in an extension field, at every point (including non-residues).
    #[test]
    fn poly_matches_definition_in_extension() {
        for (p, ell) in [(7u64, 3u64), (13, 3), (11, 5)] {
            let c = ctx(p, ell);
            let ext = c.extension(ell as u32).unwrap();
            let ring = PolyRing::new(&*ext);
            let zeta = ext.from_int(c.zeta());
            let exp = c.residue_exponent() as u128;
            let ell_inv = ext.from_int(c.field().inv(&ell).unwrap());
            for a in 2..p {
                let roots = ring
                    .roots_in_field(&ring.binomial(ell as usize, &ext.from_int(a)))
                    .unwrap();
                assert_eq!(roots.len() as u64, ell);
                let x = &roots[0];
                let mut sum = ext.zero();
                for j in 0..ell as i64 {
                    let e = epsilon_in(&*ext, &zeta, ell, x, j).unwrap();
                    sum = ext.add(&sum, &ext.pow(&e, exp));
                }
                let value = ext.mul(&sum, &ell_inv).as_base().unwrap();
                assert_eq!(a_value_poly(&c, a).unwrap(), value, "p={p} ell={ell} a={a}");
            }
        }
    }

    #[test]
    fn prediction_examples() {
        let pr = frobenius_prediction(&ctx(13, 2), 4).unwrap();
        assert_eq!(pr.predicted_count, 8);
        assert_eq!(pr.class, ClassLabel::Central { e_c: 0 });
        assert_eq!(
            frobenius_prediction(&ctx(5, 2), 4).unwrap().predicted_count,
            4
        );
        let pr = frobenius_prediction(&ctx(7, 3), 6).unwrap();
        assert_eq!(pr.predicted_count, 9);
        assert_eq!((pr.e_alpha, pr.e_beta), (0, 2));
        assert!(!pr.central_resolved);
        assert_eq!(
            frobenius_prediction(&ctx(13, 2), 7).unwrap_err(),
            Error::DegenerateA(7)
        );
        assert_eq!(
            frobenius_prediction(&ctx(13, 3), 0).unwrap_err(),
            Error::DegenerateA(0)
        );
    }

    #[test]
    fn a2_case_matches_symbols() {
        for p in (3..500).filter(|&p| is_prime(p)) {
            let c = ctx(p, 2);
            for a in admissible_points(&c) {
                let value = a2_value(&c, a).unwrap();
                let conds = a2_case_conditions(&c, a, value);
                assert_eq!(conds.iter().filter(|&&b| b).count(), 1, "p={p} a={a}");
                let expected = A2Case::from_symbols(
                    c.power_residue_symbol(a).unwrap(),
                    c.power_residue_symbol(p + 1 - a).unwrap(),
                );
                assert_eq!(a2_case(&c, a).unwrap(), expected);
            }
        }
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(admissible_points(&ctx(13, 2)).len(), 10);
        assert_eq!(admissible_points(&ctx(31, 3)).len(), 29);
        assert_eq!(admissible_points(&ctx(7, 3)).len(), 5);
    }
}
