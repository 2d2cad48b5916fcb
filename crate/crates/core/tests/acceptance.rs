//! Acceptance suite: one pass/fail line per criterion. Every check is exact.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::Instant;

use heisplit_core::arith::{is_prime, pow_mod};
use heisplit_core::formula::{
    a2_case, a2_closed_form, a2_sequence, a2_value, a_ell_value, a_value_poly, admissible_points,
    epsilon_n, expand_a_poly,
};
use heisplit_core::linalg::determinant;
use heisplit_core::oracle::{split_r, split_r2_curve};
use heisplit_core::report::{render_scan, Format};
use heisplit_core::verify::{
    block_matrix, check_block_det, discriminant_ratio_check, verify_theorems_scan_with, Exec,
    ScanResult,
};
use heisplit_core::{A2Case, Context, FiniteField, PrimeField, DEFAULT_SEED};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn primes(lo: u64, hi: u64, ell: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&p| is_prime(p) && (p - 1) % ell == 0)
        .collect()
}

/// All scans used by criteria 1-3: `ell = 2, p <= 200`; `ell = 3, p <= 200`;
/// `ell = 5, p <= 100`.
fn scans() -> &'static [ScanResult] {
    static SCANS: OnceLock<Vec<ScanResult>> = OnceLock::new();
    SCANS.get_or_init(|| {
        let mut jobs: Vec<(u64, u64)> = primes(3, 200, 2).into_iter().map(|p| (p, 2)).collect();
        jobs.extend(primes(3, 200, 3).into_iter().map(|p| (p, 3)));
        jobs.extend(primes(3, 100, 5).into_iter().map(|p| (p, 5)));
        jobs.iter()
            .map(|&(p, ell)| {
                let ctx = Context::new(p, ell).unwrap();
                verify_theorems_scan_with(&ctx, DEFAULT_SEED, Exec::Parallel)
            })
            .collect()
    })
}

/// Prime count dictated by the `A_2` case table.
fn a2_table(p: u64, a: u64, value: u64) -> Option<u64> {
    let f = PrimeField::new(p).unwrap();
    let w = f.mul(&f.mul(&value, &value), &f.sub(&1, &a));
    if value == 1 {
        Some(8)
    } else if value == p - 1 || value == 0 || w == 1 {
        Some(4)
    } else if w == a {
        Some(2)
    } else {
        None
    }
}

fn criterion_1() -> Outcome {
    let (mut points, mut bad, mut n_primes) = (0, 0, 0);
    for s in scans().iter().filter(|s| s.ell == 2) {
        n_primes += 1;
        bad += s.failures.len();
        for r in &s.records {
            points += 1;
            let want = r.a_ell.and_then(|v| a2_table(r.p, r.a, v));
            if want.is_none() || want != r.oracle_r {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0 && points > 0,
        format!("ell=2: {n_primes} primes <= 200, {points} points, {bad} mismatches"),
    )
}

fn criterion_2() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for ell in [3, 5] {
        let (mut points, mut full, mut bad) = (0, 0, 0);
        for s in scans().iter().filter(|s| s.ell == ell) {
            bad += s.failures.len();
            for r in &s.records {
                points += 1;
                let trivial = r.e_alpha == Some(0) && r.e_beta == Some(0);
                let want = if trivial && r.a_ell == Some(1) {
                    ell.pow(3)
                } else {
                    ell.pow(2)
                };
                full += (want == ell.pow(3)) as usize;
                if r.oracle_r != Some(want) {
                    bad += 1;
                }
            }
        }
        pass &= bad == 0 && points > 0;
        detail.push(format!(
            "ell={ell}: {points} points ({full} totally split), {bad} mismatches"
        ));
    }
    outcome(pass, detail.join("; "))
}

fn criterion_3() -> Outcome {
    let (mut points, mut bad) = (0, 0);
    for s in scans() {
        let ell = s.ell;
        for r in &s.records {
            points += 1;
            let ok = match r.oracle_r {
                Some(n) if ell == 2 => n > 1,
                Some(n) => n == ell.pow(3) || n == ell.pow(2),
                None => false,
            };
            bad += !ok as usize;
        }
    }
    outcome(
        bad == 0,
        format!("{points} oracle counts checked, {bad} out of bounds"),
    )
}

/// `A_2(a) = sum_j C(h, 2j) a^j`, `h = (p-1)/2`.
fn a2_binomial(f: &PrimeField, a: u64) -> u64 {
    let p = f.modulus();
    let h = (p - 1) / 2;
    let (mut binom, mut acc, mut a_pow) = (1u64, 0u64, 1u64);
    for k in 0..=h {
        if k % 2 == 0 {
            acc = f.add(&acc, &f.mul(&binom, &a_pow));
            a_pow = f.mul(&a_pow, &a);
        }
        binom = f
            .div(&f.mul(&binom, &((h - k) % p)), &((k + 1) % p))
            .unwrap_or(0);
    }
    acc
}

fn criterion_4() -> Outcome {
    let (mut points, mut bad) = (0, 0);
    for p in primes(3, 500, 2) {
        let f = PrimeField::new(p).unwrap();
        let ctx = Context::new(p, 2).unwrap();
        let h = ((p - 1) / 2) as u128;
        for a in admissible_points(&ctx) {
            points += 1;
            let one_minus_a = f.sub(&1, &a);
            let sa = (pow_mod(a, h, p) != 1) as u64;
            let sb = (pow_mod(one_minus_a, h, p) != 1) as u64;
            let value = a2_binomial(&f, a);
            let w = f.mul(&f.mul(&value, &value), &one_minus_a);
            let holds = match (sa, sb) {
                (0, 0) => value == 1 || value == p - 1,
                (0, _) => value == 0,
                (_, 0) => w == 1,
                _ => w == a,
            };
            let lib = a2_case(&ctx, a).ok();
            if !holds || lib != Some(A2Case::from_symbols(sa, sb)) {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{points} points over odd p <= 500, {bad} misclassified"),
    )
}

fn criterion_5() -> Outcome {
    // Direct 2x2 case: det [[1,1],[1,-1]] = -2 = 11 over F_13.
    let f13 = PrimeField::new(13).unwrap();
    let one = vec![vec![1u64]];
    let m = block_matrix(&f13, 12, &[one.clone(), one]);
    let mut pass = determinant(&f13, &m) == 11;

    let mut configs = Vec::new();
    for p in [11u64, 13, 31] {
        for ell in [2u64, 3, 5] {
            if (p - 1) % ell == 0 {
                for n in 1..=4 {
                    configs.push((p, ell, n));
                }
            }
        }
    }
    let per = 1000usize.div_ceil(configs.len());
    let (mut trials, mut passed, mut singular) = (0, 0, 0);
    for (i, &(p, ell, n)) in configs.iter().enumerate() {
        let field = PrimeField::new(p).unwrap();
        let o = check_block_det(&field, n, ell, DEFAULT_SEED ^ i as u64, per).unwrap();
        trials += o.trials;
        passed += o.passed;
        singular += o.singular;
        pass &= o.ok();
    }
    pass &= trials >= 1000;
    outcome(
        pass,
        format!(
            "{passed}/{trials} trials over {} configurations ({singular} with a singular block)",
            configs.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let (mut pairs, mut bad) = (0, 0);
    for p in [13u64, 31] {
        for ell in [2u64, 3] {
            let ctx = Context::new(p, ell).unwrap();
            for i in 0..6 {
                let (a, a2) = (2 + i, p - 1 - i);
                pairs += 1;
                match discriminant_ratio_check(&ctx, a, a2, DEFAULT_SEED) {
                    Ok(c) if c.passed() => {}
                    _ => bad += 1,
                }
            }
        }
    }
    outcome(
        bad == 0 && pairs >= 20,
        format!("{pairs} pairs at p in {{13, 31}}, {bad} failed"),
    )
}

fn criterion_7() -> Outcome {
    let (mut two_points, mut bad) = (0, 0);
    for p in primes(3, 500, 2) {
        let ctx = Context::new(p, 2).unwrap();
        let f = ctx.field();
        for a in 2..p {
            two_points += 1;
            let rec = a2_value(&ctx, a).ok();
            let closed = a2_closed_form(&ctx, a).ok();
            let poly = a_value_poly(&ctx, a).ok();
            let ok = rec.is_some() && rec == closed && rec == poly && a2_sequence(f, a, p) == 1;
            bad += !ok as usize;
        }
    }
    let mut odd_points = 0;
    for ell in [3u64, 5, 7] {
        for p in primes(3, 500, ell) {
            let ctx = Context::new(p, ell).unwrap();
            let f = ctx.field();
            let exp = ctx.residue_exponent() as u128;
            let ell_inv = f.inv(&ell).unwrap();
            for a in 2..p {
                let roots = ctx.lth_roots(a).unwrap();
                if roots.is_empty() {
                    continue;
                }
                odd_points += 1;
                let values: Vec<u64> = roots
                    .iter()
                    .map(|&x| {
                        let s = (0..ell as i64).fold(0, |acc, j| {
                            f.add(&acc, &f.pow(&epsilon_n(&ctx, x, j).unwrap(), exp))
                        });
                        f.mul(&s, &ell_inv)
                    })
                    .collect();
                let lib = a_ell_value(&ctx, a).ok();
                let ok =
                    values.iter().all(|&v| Some(v) == lib) && a_value_poly(&ctx, a).ok() == lib;
                bad += !ok as usize;
            }
        }
    }
    outcome(
        bad == 0,
        format!("ell=2: {two_points} points; ell in {{3,5,7}}: {odd_points} residues; {bad} disagreements"),
    )
}

fn criterion_8() -> Outcome {
    let (mut points, mut bad) = (0, 0);
    for p in primes(3, 200, 2) {
        let ctx = Context::new(p, 2).unwrap();
        for a in admissible_points(&ctx) {
            let trivial = ctx.power_residue_symbol(a).unwrap() == 0
                && ctx.power_residue_symbol(1 + p - a).unwrap() == 0;
            if !trivial {
                continue;
            }
            points += 1;
            let curve = split_r2_curve(&ctx, a).map(|r| r.prime_count).ok();
            let oracle = split_r(&ctx, a, DEFAULT_SEED).map(|r| r.prime_count).ok();
            bad += (curve.is_none() || curve != oracle) as usize;
        }
    }
    outcome(
        bad == 0 && points > 0,
        format!("{points} points with both symbols trivial, {bad} disagreements"),
    )
}

fn criterion_9() -> Outcome {
    let (mut contexts, mut bad, mut max_degree) = (0, 0, 0);
    for ell in [2u64, 3, 5, 7] {
        for p in primes(3, 500, ell) {
            contexts += 1;
            match expand_a_poly(&Context::new(p, ell).unwrap()) {
                Ok(poly) => max_degree = max_degree.max(poly.degree().unwrap_or(0)),
                Err(_) => bad += 1,
            }
        }
    }
    outcome(
        bad == 0,
        format!("{contexts} contexts (ell in {{2,3,5,7}}, p <= 500), {bad} violations, max degree {max_degree}"),
    )
}

fn criterion_10() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let mut compared = 0;
    let mut pass = true;
    for (p, ell) in [(13u64, 2u64), (101, 2), (31, 3), (97, 3), (61, 5)] {
        let ctx = Context::new(p, ell).unwrap();
        let serial = verify_theorems_scan_with(&ctx, DEFAULT_SEED, Exec::Serial);
        let parallel =
            pool.install(|| verify_theorems_scan_with(&ctx, DEFAULT_SEED, Exec::Parallel));
        for format in [Format::Csv, Format::Json] {
            compared += 1;
            pass &= render_scan(&serial.records, format).unwrap()
                == render_scan(&parallel.records, format).unwrap();
        }
        pass &= serial == parallel;
    }
    outcome(
        pass,
        format!("{compared} serial/parallel outputs compared byte for byte"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("ell=2 splitting from the A_2 case table", criterion_1),
        ("odd ell splitting from A_ell", criterion_2),
        ("structural bounds on oracle counts", criterion_3),
        ("A_2 case classification by symbols", criterion_4),
        ("block determinant identity", criterion_5),
        ("discriminant ratio at specializations", criterion_6),
        ("formula cross-agreement", criterion_7),
        ("curve cross-check", criterion_8),
        ("polynomiality of A_ell", criterion_9),
        ("serial/parallel determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        failed += !o.pass as usize;
        println!(
            "criterion {:>2} {}: {name}: {} ({:.1}s)",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
