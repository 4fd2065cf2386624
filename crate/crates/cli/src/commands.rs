use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;

use anyhow::{Context, Result};
use kahler_core::kahler::{run_package, PackageReport, Verdict, REPORT_SCHEMA_VERSION};
use kahler_core::schurkit::{
    expansions_csv, schur_nonneg_grid, schur_nonneg_witness, verify_line_logconcavity,
    verify_pieri, StripKind,
};
use kahler_core::snrep::{
    coinvariant_graded_character_with_cap, graded_character, multiplicity_csv, multiplicity_table,
    novak_graded_character, verify_equivariant_logconcavity, verify_flag_conjecture_with_cap,
    verify_novak_conjecture_with_cap, verify_strong_chain, GradedCharacter,
    DEFAULT_COINVARIANT_CAP, DEFAULT_NOVAK_CAP,
};
use kahler_core::spaces::{dump_json, CaseTag, DimCap, GradedSpace};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{
    Caps, DumpArgs, Format, LineArgs, LogconcavityArgs, NonnegArgs, Output, PieriArgs, Target,
    VerifyArgs, CAP_ENV,
};

/// Precondition failure in the command line itself; exits like a cap violation.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn dim_cap(caps: Caps) -> Result<DimCap> {
    let mut cap = DimCap::default();
    if let Ok(v) = std::env::var(CAP_ENV) {
        cap.total = v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{CAP_ENV}={v:?} is not a positive integer")))?;
    }
    if let Some(t) = caps.cap_total {
        cap.total = t;
    }
    if let Some(d) = caps.cap_degree {
        cap.per_degree = d;
    }
    if cap.total == 0 || cap.per_degree == 0 {
        return Err(usage("dimension caps must be positive"));
    }
    Ok(cap)
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// `(n, m)` jobs in grid order; `m` defaults to `0..=2n` and is pinned to `n`
/// for the usual grading.
fn grid(
    case: CaseTag,
    n: &RangeInclusive<usize>,
    m: &Option<RangeInclusive<usize>>,
) -> Vec<(usize, usize)> {
    let mut jobs = Vec::new();
    for n in n.clone() {
        if case == CaseTag::ExtUsual {
            jobs.push((n, n));
            continue;
        }
        for m in m.clone().unwrap_or(0..=2 * n) {
            jobs.push((n, m));
        }
    }
    jobs
}

/// Runs `f` on every job in parallel, keeping job order; the first error wins.
fn run_jobs<J: Sync, T: Send>(
    jobs: &[J],
    f: impl Fn(&J) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    jobs.par_iter().map(f).collect()
}

fn reject_csv(output: &Output, what: &str) -> Result<()> {
    if output.format == Format::Csv {
        return Err(usage(format!("csv output is not available for {what}")));
    }
    Ok(())
}

pub fn verify(args: &VerifyArgs) -> Result<bool> {
    reject_csv(&args.output, "verify")?;
    let cap = dim_cap(args.caps)?;
    let jobs = grid(args.case, &args.n, &args.m);
    let reports: Vec<PackageReport> = run_jobs(&jobs, |&(n, m)| {
        Ok(run_package(GradedSpace::build_with_cap(
            args.case, n, m, cap,
        )?))
    })?;
    let pass = reports.iter().all(|r| r.pass);
    let text = match args.output.format {
        Format::Markdown => {
            let mut s = format!("# verify {}: {}\n", args.case, word(pass));
            for r in &reports {
                s.push('\n');
                s.push_str(&r.to_markdown());
            }
            s
        }
        _ => pretty(&json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": "verify",
            "case": args.case,
            "pass": pass,
            "reports": reports,
        })),
    };
    emit(&args.output, &text)?;
    Ok(pass)
}

fn word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "FAIL"
    }
}

struct LogJob {
    label: Value,
    pass: bool,
    character: GradedCharacter,
    verdicts: Value,
}

fn table_json(gc: &GradedCharacter) -> Result<Value> {
    let (header, rows) = multiplicity_table(gc)?;
    Ok(json!({"header": header, "rows": rows}))
}

pub fn logconcavity(args: &LogconcavityArgs) -> Result<bool> {
    let cap = dim_cap(args.caps)?;
    let results: Vec<LogJob> = match args.target {
        Target::Poly | Target::Ext => {
            let case = if args.target == Target::Poly {
                CaseTag::Poly
            } else {
                CaseTag::Ext
            };
            run_jobs(&grid(case, &args.n, &args.m), |&(n, m)| {
                let space = GradedSpace::build_with_cap(case, n, m, cap)?;
                let chain = verify_strong_chain(&space)?;
                let character = graded_character(&space);
                // pieces sit two degrees apart; index them by i = (d + m)/2
                let mut by_index = GradedCharacter::new(n);
                for (d, chi) in &character.pieces {
                    by_index.pieces.insert((d + m as i64) / 2, chi.clone());
                }
                let plain = verify_equivariant_logconcavity(&by_index)?;
                Ok(LogJob {
                    label: json!({"n": n, "m": m}),
                    pass: chain.pass && plain.pass,
                    character,
                    verdicts: json!({"strong_chain": chain, "logconcavity": plain}),
                })
            })?
        }
        Target::Coinvariant | Target::Novak => {
            let ns: Vec<usize> = args.n.clone().collect();
            run_jobs(&ns, |&n| {
                let (verdict, character) = if args.target == Target::Coinvariant {
                    let cap_n = args.cap_n.unwrap_or(DEFAULT_COINVARIANT_CAP);
                    (
                        verify_flag_conjecture_with_cap(n, cap_n)?,
                        coinvariant_graded_character_with_cap(n, cap_n)?,
                    )
                } else {
                    let cap_n = args.cap_n.unwrap_or(DEFAULT_NOVAK_CAP);
                    (
                        verify_novak_conjecture_with_cap(n, cap_n)?,
                        novak_graded_character(n),
                    )
                };
                Ok(LogJob {
                    label: json!({"n": n}),
                    pass: verdict.pass,
                    character,
                    verdicts: json!({"logconcavity": verdict}),
                })
            })?
        }
    };
    let pass = results.iter().all(|r| r.pass);
    let target = format!("{:?}", args.target).to_lowercase();
    let text = match args.output.format {
        Format::Csv => {
            let [only] = results.as_slice() else {
                return Err(usage("csv output needs a single (n, m) job"));
            };
            multiplicity_csv(&only.character)?
        }
        Format::Markdown => {
            let mut s = format!("# logconcavity {target}: {}\n", word(pass));
            for r in &results {
                let (header, rows) = multiplicity_table(&r.character)?;
                let _ = writeln!(s, "\n## {}: {}\n", r.label, word(r.pass));
                let _ = writeln!(s, "| {} |", header.join(" | "));
                let _ = writeln!(s, "|{}", "---|".repeat(header.len()));
                for row in rows {
                    let _ = writeln!(s, "| {} |", row.join(" | "));
                }
            }
            s
        }
        Format::Json => {
            let jobs = results
                .iter()
                .map(|r| {
                    Ok(json!({
                        "job": r.label,
                        "pass": r.pass,
                        "multiplicities": table_json(&r.character)?,
                        "verdicts": r.verdicts,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            pretty(&json!({
                "schema_version": REPORT_SCHEMA_VERSION,
                "command": "logconcavity",
                "target": target,
                "pass": pass,
                "jobs": jobs,
            }))
        }
    };
    emit(&args.output, &text)?;
    Ok(pass)
}

pub fn schur_nonneg(args: &NonnegArgs) -> Result<bool> {
    let pairs = match (&args.lambda, &args.mu) {
        (Some(l), Some(m)) => vec![(l.clone(), m.clone())],
        _ => schur_nonneg_grid(args.max_size, args.max_len),
    };
    let records = run_jobs(&pairs, |(l, m)| {
        Ok((l.clone(), m.clone(), schur_nonneg_witness(l, m)?))
    })?;
    let pass = records.iter().all(|(_, _, w)| w.is_nonnegative());
    let text = match args.output.format {
        Format::Csv => expansions_csv(&records),
        Format::Markdown => {
            let mut s = format!(
                "# schur nonneg: {} ({} pairs)\n\n| λ | μ | result | terms |\n|---|---|---|---|\n",
                word(pass),
                records.len()
            );
            for (l, m, w) in &records {
                let _ = writeln!(
                    s,
                    "| {l} | {m} | {} | {} |",
                    word(w.is_nonnegative()),
                    w.terms.len()
                );
            }
            s
        }
        Format::Json => pretty(&json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": "schur-nonneg",
            "pass": pass,
            "pairs": records.iter().map(|(l, m, w)| json!({
                "lambda": l.to_string(),
                "mu": m.to_string(),
                "pass": w.is_nonnegative(),
                "witness": w.to_json(),
            })).collect::<Vec<_>>(),
        })),
    };
    emit(&args.output, &text)?;
    Ok(pass)
}

pub fn schur_pieri(args: &PieriArgs) -> Result<bool> {
    reject_csv(&args.output, "schur pieri")?;
    let kind = if args.column {
        StripKind::Column
    } else {
        StripKind::Row
    };
    let v = verify_pieri(&args.lambda, args.k, kind);
    emit_verdict(&args.output, "schur-pieri", &v)?;
    Ok(v.pass)
}

pub fn schur_line(args: &LineArgs) -> Result<bool> {
    reject_csv(&args.output, "schur line")?;
    let v = verify_line_logconcavity(&args.start, &args.step, args.count, args.rank)?;
    emit_verdict(&args.output, "schur-line", &v)?;
    Ok(v.pass)
}

fn emit_verdict(output: &Output, command: &str, v: &Verdict) -> Result<()> {
    let text = match output.format {
        Format::Markdown => {
            let mut s = format!("# {command}: {}\n\n", word(v.pass));
            if let Value::Object(map) = &v.details {
                for (k, val) in map {
                    let _ = writeln!(s, "- {k}: `{val}`");
                }
            }
            s
        }
        _ => pretty(&json!({
            "schema_version": REPORT_SCHEMA_VERSION,
            "command": command,
            "pass": v.pass,
            "details": v.details,
        })),
    };
    emit(output, &text)
}

pub fn dump(args: &DumpArgs) -> Result<bool> {
    let space = GradedSpace::build_with_cap(args.case, args.n, args.m, dim_cap(args.caps)?)?;
    let text = dump_json(&space);
    match &args.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(true)
}

/// Exit code for an error: 2 for caps and preconditions, 1 otherwise.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    use kahler_core::Error as E;
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(E::NotACharacter { .. } | E::NonSymmetric | E::DimensionMismatch { .. }) | None => 1,
        Some(_) => 2,
    }
}
