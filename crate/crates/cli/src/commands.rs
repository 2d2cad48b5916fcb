use anyhow::Result;
use heisplit_core::formula::{
    a2_value, a_ell_value, a_poly, a_value_poly, admissible_points, frobenius_prediction,
};
use heisplit_core::oracle::{split_k, split_r};
use heisplit_core::report::histogram_rows;
use heisplit_core::verify::{
    chebotarev_stats, check_block_det, discriminant_ratio_check, discriminant_ratio_check_any_ell,
    scan_point, task_seed, verify_theorems_scan, ScanRecord,
};
use heisplit_core::{Context, Error, FrobPrediction};
use serde::Serialize;

use crate::output::{emit, render_records, render_rows};
use crate::{Command, GlobalArgs, Point, SplitMode, Status, Target};

/// Valid contexts for a target; invalid `(p, ell)` pairs are reported and
/// skipped.
pub fn contexts(target: &Target) -> Vec<Context> {
    target
        .p
        .0
        .iter()
        .filter_map(|&p| match Context::new(p, target.ell) {
            Ok(ctx) => Some(ctx),
            Err(e) => {
                eprintln!("warning: skipping p={p} ell={}: {e}", target.ell);
                None
            }
        })
        .collect()
}

fn status_of(e: &anyhow::Error) -> Status {
    match e.downcast_ref::<Error>() {
        Some(Error::InternalError(_)) | Some(Error::Output(_)) | None => Status::Failure,
        Some(_) => Status::Usage,
    }
}

fn joined(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SymbolRow {
    p: u64,
    ell: u64,
    a: u64,
    symbol: u64,
    power: u64,
    seed: u64,
}

#[derive(Serialize)]
struct CoeffRow {
    p: u64,
    ell: u64,
    power: usize,
    coeff: u64,
    seed: u64,
}

#[derive(Serialize)]
struct PolyRow {
    p: u64,
    ell: u64,
    degree: Option<usize>,
    coeffs: Vec<u64>,
    seed: u64,
}

#[derive(Serialize)]
struct ValueRow {
    p: u64,
    ell: u64,
    a: u64,
    a_ell: u64,
    /// The root-average value, where `a` is an `ell`-th power (odd `ell`).
    root_average: Option<u64>,
    seed: u64,
}

#[derive(Serialize)]
struct FrobRow {
    p: u64,
    ell: u64,
    a: u64,
    e_alpha: u64,
    e_beta: u64,
    a_ell: Option<u64>,
    a2_case: Option<String>,
    class: String,
    predicted: u64,
    seed: u64,
}

impl FrobRow {
    fn new(pred: FrobPrediction, seed: u64) -> Self {
        Self {
            p: pred.p,
            ell: pred.ell,
            a: pred.a,
            e_alpha: pred.e_alpha,
            e_beta: pred.e_beta,
            a_ell: pred.a_value,
            a2_case: pred.a2_case.map(|c| c.to_string()),
            class: pred.class.to_string(),
            predicted: pred.predicted_count,
            seed,
        }
    }
}

#[derive(Serialize)]
struct OracleRow {
    p: u64,
    ell: u64,
    a: u64,
    #[serde(rename = "oracle_K")]
    oracle_k: u64,
    #[serde(rename = "oracle_R")]
    oracle_r: u64,
    k_degrees: String,
    r_degrees: String,
    seed: u64,
}

#[derive(Serialize)]
struct BlockDetRow {
    p: u64,
    ell: u64,
    n: usize,
    trials: usize,
    passed: usize,
    singular: usize,
    ok: bool,
    seed: u64,
}

#[derive(Serialize)]
struct DiscRow {
    p: u64,
    ell: u64,
    a: u64,
    a2: u64,
    field_degree: u32,
    det_nonzero: bool,
    ratio_holds: bool,
    choice_invariant: bool,
    unit_in_prime_field: bool,
    passed: bool,
    seed: u64,
}

/// Output text plus whether any verification failed.
struct Produced {
    text: String,
    failed: bool,
}

fn produced(text: String) -> Produced {
    Produced {
        text,
        failed: false,
    }
}

pub fn dispatch(command: &Command, global: &GlobalArgs) -> Status {
    let target = match command {
        Command::Symbol(pt) | Command::Avalue(pt) | Command::Frob(pt) => &pt.target,
        Command::Split { point, .. } | Command::Disc { point, .. } => &point.target,
        Command::Apoly(t) | Command::Scan(t) | Command::Stats(t) => t,
        Command::Verify { target, .. } | Command::Detlemma { target, .. } => target,
        Command::Batch { .. } => unreachable!("handled by the caller"),
    };
    let ctxs = contexts(target);
    if ctxs.is_empty() {
        eprintln!("error: no valid (p, ell) pair");
        return Status::Usage;
    }
    let result = match command {
        Command::Symbol(pt) => symbol(&ctxs, pt, global),
        Command::Apoly(_) => apoly(&ctxs, global),
        Command::Avalue(pt) => avalue(&ctxs, pt, global),
        Command::Frob(pt) => frob(&ctxs, pt, global),
        Command::Split { point, mode } => split(&ctxs, point, *mode, global),
        Command::Scan(_) => scan(&ctxs, global, false),
        Command::Verify { trials, .. } => verify(&ctxs, *trials, global),
        Command::Stats(_) => stats(&ctxs, global),
        Command::Detlemma { n, trials, .. } => detlemma(&ctxs, *n, *trials, global),
        Command::Disc {
            point,
            a2,
            allow_large_ell,
        } => disc(&ctxs, point.a, *a2, *allow_large_ell, global),
        Command::Batch { .. } => unreachable!(),
    };
    match result.and_then(|out| {
        emit(global, &out.text)?;
        Ok(out.failed)
    }) {
        Ok(false) => Status::Ok,
        Ok(true) => Status::Failure,
        Err(e) => {
            eprintln!("error: {e:#}");
            status_of(&e)
        }
    }
}

fn symbol(ctxs: &[Context], pt: &Point, g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    for ctx in ctxs {
        let a = pt.a % ctx.p();
        let symbol = ctx.power_residue_symbol(a)?;
        rows.push(SymbolRow {
            p: ctx.p(),
            ell: ctx.ell(),
            a,
            symbol,
            power: ctx.zeta_pow(symbol as i64),
            seed: g.seed,
        });
    }
    Ok(produced(render_rows(&rows, g.format)?))
}

fn apoly(ctxs: &[Context], g: &GlobalArgs) -> Result<Produced> {
    let mut long = Vec::new();
    let mut wide = Vec::new();
    for ctx in ctxs {
        let poly = a_poly(ctx)?;
        for (power, &coeff) in poly.coeffs().iter().enumerate() {
            long.push(CoeffRow {
                p: ctx.p(),
                ell: ctx.ell(),
                power,
                coeff,
                seed: g.seed,
            });
        }
        wide.push(PolyRow {
            p: ctx.p(),
            ell: ctx.ell(),
            degree: poly.degree(),
            coeffs: poly.coeffs().to_vec(),
            seed: g.seed,
        });
    }
    Ok(produced(match g.format {
        heisplit_core::report::Format::Csv => render_rows(&long, g.format)?,
        heisplit_core::report::Format::Json => render_rows(&wide, g.format)?,
    }))
}

fn avalue(ctxs: &[Context], pt: &Point, g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    for ctx in ctxs {
        let a = pt.a % ctx.p();
        let (a_ell, root_average) = if ctx.ell() == 2 {
            (a2_value(ctx, a)?, None)
        } else {
            let avg = match a_ell_value(ctx, a) {
                Ok(v) => Some(v),
                Err(Error::NotResidue(_)) => None,
                Err(e) => return Err(e.into()),
            };
            (a_value_poly(ctx, a)?, avg)
        };
        rows.push(ValueRow {
            p: ctx.p(),
            ell: ctx.ell(),
            a,
            a_ell,
            root_average,
            seed: g.seed,
        });
    }
    Ok(produced(render_rows(&rows, g.format)?))
}

fn frob(ctxs: &[Context], pt: &Point, g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    for ctx in ctxs {
        rows.push(FrobRow::new(frobenius_prediction(ctx, pt.a)?, g.seed));
    }
    Ok(produced(render_rows(&rows, g.format)?))
}

fn split(ctxs: &[Context], pt: &Point, mode: SplitMode, g: &GlobalArgs) -> Result<Produced> {
    if mode.oracle {
        let mut rows = Vec::new();
        for ctx in ctxs {
            let a = pt.a % ctx.p();
            let seed = task_seed(g.seed, ctx.p(), ctx.ell(), a);
            let k = split_k(ctx, a, seed)?;
            let r = split_r(ctx, a, seed)?;
            rows.push(OracleRow {
                p: ctx.p(),
                ell: ctx.ell(),
                a,
                oracle_k: k.prime_count,
                oracle_r: r.prime_count,
                k_degrees: joined(&k.residue_degrees),
                r_degrees: joined(&r.residue_degrees),
                seed: g.seed,
            });
        }
        return Ok(produced(render_rows(&rows, g.format)?));
    }
    if mode.predict {
        return frob(ctxs, pt, g);
    }
    let mut records: Vec<ScanRecord> = Vec::new();
    let mut failed = false;
    for ctx in ctxs {
        let (record, failures) = scan_point(ctx, pt.a % ctx.p(), g.seed);
        for f in &failures {
            eprintln!(
                "p={} ell={} a={}: {:?}: {}",
                ctx.p(),
                ctx.ell(),
                f.a,
                f.kind,
                f.detail
            );
        }
        failed |= !failures.is_empty();
        records.push(record);
    }
    Ok(Produced {
        text: render_records(&records, g.format)?,
        failed,
    })
}

fn scan(ctxs: &[Context], g: &GlobalArgs, summary: bool) -> Result<Produced> {
    let mut records = Vec::new();
    let mut failed = false;
    for ctx in ctxs {
        let s = verify_theorems_scan(ctx, g.seed);
        for f in &s.failures {
            eprintln!(
                "p={} ell={} a={}: {:?}: {}",
                s.p, s.ell, f.a, f.kind, f.detail
            );
        }
        if summary {
            eprintln!(
                "scan p={} ell={}: {} points, {} agree, {} failures",
                s.p, s.ell, s.summary.records, s.summary.agreements, s.summary.failures
            );
        }
        failed |= !s.passed();
        records.extend(s.records);
    }
    Ok(Produced {
        text: render_records(&records, g.format)?,
        failed,
    })
}

fn verify(ctxs: &[Context], trials: usize, g: &GlobalArgs) -> Result<Produced> {
    let mut out = scan(ctxs, g, true)?;
    for ctx in ctxs {
        let (p, ell) = (ctx.p(), ctx.ell());
        let (mut passed, mut total) = (0, 0);
        for n in 1..=3 {
            let o = check_block_det(ctx.field(), n, ell, g.seed ^ n as u64, trials)?;
            passed += o.passed;
            total += o.trials;
            if let Some(c) = &o.counterexample {
                eprintln!("block determinant p={p} ell={ell} n={n}: counterexample {c:?}");
            }
        }
        out.failed |= passed != total;
        eprintln!("block determinant p={p} ell={ell}: {passed}/{total}");

        if matches!(ell, 2 | 3) {
            let points = admissible_points(ctx);
            let pairs: Vec<(u64, u64)> = points
                .iter()
                .zip(points.iter().rev())
                .map(|(&a, &b)| (a, b))
                .take(3)
                .collect();
            let mut ok = 0;
            for &(a, a2) in &pairs {
                let c = discriminant_ratio_check(ctx, a, a2, g.seed)?;
                if c.passed() {
                    ok += 1;
                } else {
                    eprintln!("discriminant p={p} ell={ell}: failed {c:?}");
                }
            }
            out.failed |= ok != pairs.len();
            eprintln!("discriminant p={p} ell={ell}: {ok}/{} pairs", pairs.len());
        }
    }
    Ok(out)
}

fn stats(ctxs: &[Context], g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    for ctx in ctxs {
        rows.extend(histogram_rows(&chebotarev_stats(ctx)?));
    }
    Ok(produced(render_rows(&rows, g.format)?))
}

fn detlemma(ctxs: &[Context], n: usize, trials: usize, g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    let mut failed = false;
    for ctx in ctxs {
        let o = check_block_det(ctx.field(), n, ctx.ell(), g.seed, trials)?;
        if let Some(c) = &o.counterexample {
            eprintln!(
                "p={} ell={} n={n}: counterexample {c:?}",
                ctx.p(),
                ctx.ell()
            );
        }
        failed |= !o.ok();
        rows.push(BlockDetRow {
            p: o.p,
            ell: o.ell,
            n: o.n,
            trials: o.trials,
            passed: o.passed,
            singular: o.singular,
            ok: o.ok(),
            seed: g.seed,
        });
    }
    Ok(Produced {
        text: render_rows(&rows, g.format)?,
        failed,
    })
}

fn disc(ctxs: &[Context], a: u64, a2: u64, any_ell: bool, g: &GlobalArgs) -> Result<Produced> {
    let mut rows = Vec::new();
    let mut failed = false;
    for ctx in ctxs {
        let c = if any_ell {
            discriminant_ratio_check_any_ell(ctx, a, a2, g.seed)?
        } else {
            discriminant_ratio_check(ctx, a, a2, g.seed)?
        };
        failed |= !c.passed();
        rows.push(DiscRow {
            p: c.p,
            ell: c.ell,
            a: c.a,
            a2: c.a2,
            field_degree: c.field_degree,
            det_nonzero: c.det_nonzero,
            ratio_holds: c.ratio_holds,
            choice_invariant: c.choice_invariant,
            unit_in_prime_field: c.unit_in_prime_field,
            passed: c.passed(),
            seed: g.seed,
        });
    }
    Ok(Produced {
        text: render_rows(&rows, g.format)?,
        failed,
    })
}
