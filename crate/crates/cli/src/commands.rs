use std::fmt;
use std::io::{self, Read, Write};
use std::path::Path;

use hvec_core::rational::{to_decimal_string, to_fraction_string};
use hvec_core::verify::{
    compressed_socles, read_hvector_lines, type2_grid, write_csv, ItemError, SourceLabel,
};
use hvec_core::{
    betti_edge, check_bounds, compressed_mc_bounds, dim_n, enumerate_osequences, fl_numbers,
    generic_hvector, hvector_from_invsys, invariants, mc_bounds_from_shifts, parse_polys,
    recover_socle, run_batch, BatchOptions, BatchResult, BoundReport, CompressedProfile, Error,
    FamilySpec, HVector, Rational, ShiftExtremes, SocleRecovery,
};
use serde_json::{json, Value};

use crate::args::{
    BoundsArgs, Command, CompressedCmd, FamilyKind, Format, InvsysArgs, VerifyArgs,
};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String, io::Error),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
            CliError::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::RetryExhausted { .. }) => 3,
        _ => 2,
    }
}

fn io_err(what: impl Into<String>) -> impl FnOnce(io::Error) -> CliError {
    let what = what.into();
    move |e| CliError::Io(what, e)
}

fn read_source(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(io_err("standard input"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err(path.display().to_string()))
    }
}

fn write_json(out: &mut Vec<u8>, v: &Value) {
    serde_json::to_writer_pretty(&mut *out, v).expect("in-memory write");
    out.push(b'\n');
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "absent".to_string(), |x| x.to_string())
}

fn csv_unsupported(cmd: &str) -> CliError {
    CliError::Input(format!("{cmd} has no csv output; use text or json"))
}

pub fn run(cmd: Command, out: &mut Vec<u8>) -> CliResult<u8> {
    match cmd {
        Command::Invariants { h, format } => cmd_invariants(&h, format, out),
        Command::Compressed(CompressedCmd::Gen {
            r,
            socle,
            raw,
            format,
        }) => {
            let p = fl_numbers(r, &socle)?;
            let p = if raw { p } else { p.require_compressed()? };
            cmd_compressed_gen(&p, format, out)
        }
        Command::Compressed(CompressedCmd::Recover { h, format }) => {
            cmd_compressed_recover(&h, format, out)
        }
        Command::Bounds(args) => cmd_bounds(&args, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Invsys(args) => cmd_invsys(&args, out),
    }
}

fn cmd_invariants(h: &HVector, format: Format, out: &mut Vec<u8>) -> CliResult<u8> {
    let inv = invariants(h);
    let e = h.multiplicity();
    let profile: Vec<String> = inv.profile.values().iter().map(i128::to_string).collect();
    match format {
        Format::Text => {
            writeln!(out, "h: {h}").unwrap();
            writeln!(
                out,
                "t={} i={} j={} m={} e={e}",
                inv.t,
                opt(inv.i),
                opt(inv.j),
                opt(inv.m)
            )
            .unwrap();
            writeln!(out, "profile: {}", profile.join(",")).unwrap();
        }
        Format::Json => write_json(
            out,
            &json!({
                "h": h,
                "e": e,
                "t": inv.t,
                "i": inv.i,
                "j": inv.j,
                "m": inv.m,
                "profile": inv.profile.values().iter().map(|&v| v as i64).collect::<Vec<_>>(),
            }),
        ),
        Format::Csv => return Err(csv_unsupported("invariants")),
    }
    Ok(0)
}

fn cmd_compressed_gen(p: &CompressedProfile, format: Format, out: &mut Vec<u8>) -> CliResult<u8> {
    let codim3 = p.codimension() == 3 && p.is_compressed_valid();
    let edge = if codim3 { Some(betti_edge(p)?) } else { None };
    let mc = if codim3 { Some(compressed_mc_bounds(p)?) } else { None };
    match format {
        Format::Text => {
            writeln!(out, "H: {}", p.upper_bound()).unwrap();
            writeln!(out, "socle: {}", p.socle()).unwrap();
            writeln!(out, "e: {}", p.upper_bound().multiplicity()).unwrap();
            writeln!(out, "{:>3} {:>8} {:>8} {:>8}", "d", "N(r,d)", "r_d", "H_d").unwrap();
            for (d, r) in p.r_values().iter().enumerate() {
                let n = dim_n(p.codimension(), d)?;
                let hd = p.upper_bound().at(d as i64);
                writeln!(out, "{d:>3} {n:>8} {r:>8} {hd:>8}").unwrap();
            }
            writeln!(out, "b={} t={}", p.pivot(), p.initial_degree()).unwrap();
            if !p.is_compressed_valid() {
                writeln!(out, "compressed: no (socle below the pivot degree)").unwrap();
            }
            if let Some(edge) = edge {
                writeln!(
                    out,
                    "beta_2,t+2={} D={}",
                    edge.beta_2_t_plus_2, edge.difference
                )
                .unwrap();
            }
            if let Some(mc) = &mc {
                writeln!(out, "case: {}", mc.case.as_str()).unwrap();
                writeln!(
                    out,
                    "mc bounds: {} <= {} <= {}",
                    to_fraction_string(&mc.lower),
                    p.upper_bound().multiplicity(),
                    to_fraction_string(&mc.upper)
                )
                .unwrap();
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(p).expect("serializable");
            v["e"] = json!(p.upper_bound().multiplicity());
            v["extremely_compressed"] = json!(p.extremely_compressed());
            v["compressed"] = json!(p.is_compressed_valid());
            v["betti_edge"] = serde_json::to_value(&edge).expect("serializable");
            v["mc_bounds"] = serde_json::to_value(&mc).expect("serializable");
            write_json(out, &v);
        }
        Format::Csv => return Err(csv_unsupported("compressed gen")),
    }
    Ok(0)
}

fn cmd_compressed_recover(h: &HVector, format: Format, out: &mut Vec<u8>) -> CliResult<u8> {
    let rec = recover_socle(h)?;
    match format {
        Format::Text => match &rec {
            SocleRecovery::Compressed(s) => writeln!(out, "{s}").unwrap(),
            SocleRecovery::NotCompressed => writeln!(out, "not compressed").unwrap(),
        },
        Format::Json => write_json(
            out,
            &json!({
                "h": h,
                "compressed": rec.socle().is_some(),
                "socle": rec.socle(),
            }),
        ),
        Format::Csv => return Err(csv_unsupported("compressed recover")),
    }
    Ok(0)
}

fn load_shifts(args: &BoundsArgs) -> CliResult<Option<ShiftExtremes>> {
    if let Some(path) = &args.shifts {
        let text = read_source(path)?;
        let s = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(Some(s));
    }
    Ok(match (&args.min_shifts, &args.max_shifts) {
        (Some(min), Some(max)) => Some(ShiftExtremes {
            min_shifts: min.clone(),
            max_shifts: max.clone(),
        }),
        _ => None,
    })
}

fn with_decimal(r: &Rational, decimal: bool) -> String {
    if decimal {
        format!("{} (~{})", to_fraction_string(r), to_decimal_string(r, 4))
    } else {
        to_fraction_string(r)
    }
}

fn bound_line(
    name: &str,
    value: &Option<Rational>,
    verdict: hvec_core::Verdict,
    sharp: bool,
    decimal: bool,
) -> String {
    let Some(v) = value else {
        return format!("{name}=absent inapplicable");
    };
    let verdict = match verdict {
        hvec_core::Verdict::Fails => "FAILS".to_string(),
        other => other.to_string(),
    };
    let sharp = if sharp { " sharp" } else { "" };
    format!("{name}={} {verdict}{sharp}", with_decimal(v, decimal))
}

fn cmd_bounds(args: &BoundsArgs, out: &mut Vec<u8>) -> CliResult<u8> {
    let report = check_bounds(&args.h, args.level)?;
    let shifts = load_shifts(args)?;
    let shift_bounds = shifts.as_ref().map(mc_bounds_from_shifts).transpose()?;
    let e = Rational::from_integer(report.e.into());
    match args.format {
        Format::Text => {
            writeln!(out, "h: {}", report.h).unwrap();
            writeln!(
                out,
                "e={} t={} i={} j={} m={}",
                report.e,
                report.inv.t,
                opt(report.inv.i),
                opt(report.inv.j),
                opt(report.inv.m)
            )
            .unwrap();
            let lower = bound_line(
                "lower",
                &report.lower,
                report.lower_holds,
                report.lower_sharp,
                args.decimal,
            );
            let upper = bound_line(
                "upper",
                &report.upper,
                report.upper_holds,
                report.upper_sharp,
                args.decimal,
            );
            writeln!(out, "{lower}\n{upper}").unwrap();
            if report.lower_sharp && report.upper_sharp {
                writeln!(out, "both sharp").unwrap();
            }
            writeln!(out, "flags: {}", report.flags_string()).unwrap();
            writeln!(out, "tags: {}", report.tags_string()).unwrap();
            if let Some((lo, hi)) = &shift_bounds {
                let rel = |a: &Rational, b: &Rational| if a < b { "<" } else if a == b { "=" } else { ">" };
                writeln!(
                    out,
                    "shift bounds: {} {} {} {} {}",
                    with_decimal(lo, args.decimal),
                    rel(lo, &e),
                    report.e,
                    rel(&e, hi),
                    with_decimal(hi, args.decimal)
                )
                .unwrap();
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serializable");
            if let Some((lo, hi)) = &shift_bounds {
                v["shift_bounds"] = json!({
                    "lower": to_fraction_string(lo),
                    "upper": to_fraction_string(hi),
                    "brackets_e": lo <= &e && &e <= hi,
                });
            }
            write_json(out, &v);
        }
        Format::Csv => {
            write_csv(std::slice::from_ref(&report), &mut *out)
                .map_err(|e| CliError::Input(e.to_string()))?;
        }
    }
    Ok(if report.any_failure() { 1 } else { 0 })
}

fn family_items(args: &VerifyArgs, kind: FamilyKind) -> CliResult<Vec<HVector>> {
    let max_c = args.max_c.expect("required by clap");
    Ok(match kind {
        FamilyKind::Type2 => type2_grid(args.p.iter().copied(), max_c)
            .into_iter()
            .map(|(_, _, h)| h)
            .collect(),
        FamilyKind::Iii => FamilySpec::IiiList {
            max_c,
            max_entry: args.max_entry,
        }
        .generate()?,
        FamilyKind::CompressedLevel => compressed_socles(max_c, args.max_type)
            .into_iter()
            .filter(|p| p.socle().is_level() && p.upper_bound().codimension() == 3)
            .map(|p| p.upper_bound().clone())
            .collect(),
    })
}

fn cmd_verify(args: &VerifyArgs, out: &mut Vec<u8>) -> CliResult<u8> {
    let mut opts = BatchOptions {
        assume_level: args.level,
        jobs: args.jobs.max(1),
        keep_reports: args.format == Format::Csv,
        label: SourceLabel::Candidate,
    };
    let result: BatchResult = if let Some(path) = &args.input {
        opts.label = SourceLabel::Input;
        run_batch(read_hvector_lines(&read_source(path)?), &opts)
    } else if let Some(kind) = args.family {
        opts.label = SourceLabel::Family;
        run_batch(family_items(args, kind)?.into_iter().map(Ok), &opts)
    } else {
        let max_c = args.max_c.expect("required by clap");
        let items = enumerate_osequences(max_c, args.max_entry, args.prefix.as_deref());
        run_batch(items.map(Ok::<_, ItemError>), &opts)
    };
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &result).expect("in-memory write");
            out.push(b'\n');
        }
        Format::Csv => {
            write_csv(&result.reports, &mut *out).map_err(|e| CliError::Input(e.to_string()))?;
        }
        Format::Text => render_batch_text(&result, out),
    }
    for e in &result.errors {
        match e.line {
            Some(line) => eprintln!("line {line}: {}: {}", e.input, e.message),
            None => eprintln!("{}: {}", e.input, e.message),
        }
    }
    Ok(if result.any_failure() {
        1
    } else if !result.errors.is_empty() {
        2
    } else {
        0
    })
}

fn render_batch_text(r: &BatchResult, out: &mut Vec<u8>) {
    let label = match r.label {
        SourceLabel::Family => "family",
        SourceLabel::Candidate => "candidate (level not asserted)",
        SourceLabel::Input => "input",
    };
    writeln!(out, "source: {label}").unwrap();
    writeln!(out, "total: {}", r.total).unwrap();
    writeln!(out, "lower: holds={} fails={} inapplicable={}", r.holds.lower, r.fails.lower, r.inapplicable.lower).unwrap();
    writeln!(out, "upper: holds={} fails={} inapplicable={}", r.holds.upper, r.fails.upper, r.inapplicable.upper).unwrap();
    writeln!(out, "sharp: {}", r.sharp_hits.len()).unwrap();
    writeln!(out, "failures: {}", r.failures.len()).unwrap();
    for f in &r.failures {
        writeln!(out, "  {}  {}  [{}]", f.h, failure_summary(&f.report), f.report.tags_string()).unwrap();
    }
    if !r.errors.is_empty() {
        writeln!(out, "errors: {}", r.errors.len()).unwrap();
    }
}

fn failure_summary(r: &BoundReport) -> String {
    let frac = |v: &Option<Rational>| v.as_ref().map(to_fraction_string).unwrap_or_default();
    format!(
        "e={} lower={} {} upper={} {}",
        r.e,
        frac(&r.lower),
        r.lower_holds,
        frac(&r.upper),
        r.upper_holds
    )
}

fn cmd_invsys(args: &InvsysArgs, out: &mut Vec<u8>) -> CliResult<u8> {
    let (h, run) = if let Some(path) = &args.file {
        let set = parse_polys(&read_source(path)?)?;
        (hvector_from_invsys(&set)?, None)
    } else {
        let degrees = args.degrees.as_deref().expect("required by clap");
        let run = generic_hvector(degrees, args.seed, args.attempts, args.expect.as_ref())?;
        (run.h.clone(), Some(run))
    };
    match args.format {
        Format::Text => {
            writeln!(out, "{h}").unwrap();
            if let Some(run) = &run {
                writeln!(out, "seed: {} (attempt {} of {})", run.seed, run.attempts.len(), args.attempts).unwrap();
            }
        }
        Format::Json => {
            let mut v = json!({ "h": h, "e": h.multiplicity() });
            if let Some(run) = &run {
                v["seed"] = json!(run.seed);
                v["attempts"] = run
                    .attempts
                    .iter()
                    .map(|(s, h)| json!({ "seed": s, "h": h }))
                    .collect();
            }
            write_json(out, &v);
        }
        Format::Csv => return Err(csv_unsupported("invsys")),
    }
    Ok(0)
}
