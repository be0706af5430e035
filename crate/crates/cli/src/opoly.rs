use std::time::{Duration, Instant};

use clap::Subcommand;
use ovalcodes::opoly::{
    catalog, check_no_affine_root, check_oval_polynomial, check_slope_condition, check_two_to_one,
    lookup_probe, Verdict, SLOPE_DEFAULT_MAX_M,
};
use ovalcodes::Family;
use serde_json::json;

use crate::{FieldArgs, Outcome};

#[derive(Subcommand)]
pub enum OpolyCommand {
    /// List every family instance applicable at m.
    List {
        #[command(flatten)]
        field: FieldArgs,
        /// Print JSON records instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run every oval-polynomial criterion on one family instance.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::NAMES))]
        family: String,
        /// Exponent for the translation family, x^(2^h).
        #[arg(long)]
        h: Option<u32>,
        #[command(flatten)]
        field: FieldArgs,
        /// Largest m for the cubic slope check.
        #[arg(long, default_value_t = SLOPE_DEFAULT_MAX_M)]
        slope_max_m: u32,
    },
}

pub fn run(cmd: OpolyCommand) -> anyhow::Result<Outcome> {
    match cmd {
        OpolyCommand::List { field, json } => list(&field, json),
        OpolyCommand::Verify {
            family,
            h,
            field,
            slope_max_m,
        } => verify(&family, h, &field, slope_max_m),
    }
}

fn list(field: &FieldArgs, as_json: bool) -> anyhow::Result<Outcome> {
    let ctx = field.ctx()?;
    let specs = catalog(&ctx)?;
    if as_json {
        let rows: Vec<_> = specs
            .iter()
            .map(|s| {
                let r = s.to_record();
                json!({
                    "family": r.family,
                    "m": r.m,
                    "params": r.params,
                    "binary_coefficients": s.has_binary_coefficients(),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(Outcome::Pass);
    }
    println!("{:<14} {:<18} binary", "family", "params");
    for s in &specs {
        let params: Vec<String> = s
            .params(ctx.m())
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let params = if params.is_empty() {
            "-".to_string()
        } else {
            params.join(",")
        };
        let binary = if s.has_binary_coefficients() {
            "yes"
        } else {
            "no"
        };
        println!("{:<14} {:<18} {binary}", s.name(), params);
    }
    Ok(Outcome::Pass)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn line(name: &str, verdict: &Verdict, took: Duration, note: &str) {
    let (status, witness) = match verdict {
        Ok(()) => ("PASS", String::new()),
        Err(v) => ("FAIL", format!("  witness: {v}")),
    };
    println!(
        "  {name:<16} {status}  {:>10.3} ms{witness}{note}",
        took.as_secs_f64() * 1e3
    );
}

fn verify(
    family: &str,
    h: Option<u32>,
    field: &FieldArgs,
    slope_max_m: u32,
) -> anyhow::Result<Outcome> {
    let ctx = field.ctx()?;
    let spec = lookup_probe(family, h, &ctx)?;
    let table = spec.table(&ctx)?;
    let binary = spec.has_binary_coefficients();
    println!(
        "{spec} at m={} (q={}), {} coefficients",
        ctx.m(),
        ctx.q(),
        if binary { "binary" } else { "non-binary" }
    );
    if let Some(reason) = spec.applicability_reason() {
        println!("  note: outside the family's listed range ({reason})");
    }

    let (oval, t) = timed(|| check_oval_polynomial(&ctx, &table));
    line("oval polynomial", &oval, t, "");
    let (two, t) = timed(|| check_two_to_one(&ctx, &table));
    line("two-to-one", &two, t, "");
    let (slope, t) = timed(|| check_slope_condition(&ctx, &table, slope_max_m));
    let slope = match slope {
        Ok(v) => {
            line("slope condition", &v, t, "");
            Some(v)
        }
        Err(e) if e.is_budget() => {
            println!(
                "  {:<16} SKIP  m={} exceeds --slope-max-m {slope_max_m}",
                "slope condition",
                ctx.m()
            );
            None
        }
        Err(e) => return Err(e.into()),
    };
    let (root, t) = timed(|| check_no_affine_root(&ctx, &table));
    let hypotheses = ctx.m() % 2 == 1 && binary;
    let note = if hypotheses {
        ""
    } else {
        "  (informational: needs odd m and binary coefficients)"
    };
    line("no affine root", &root, t, note);

    let mut failed = oval.is_err() || two.is_err() || slope.is_some_and(|v| v.is_err());
    failed |= hypotheses && root.is_err();
    println!("result: {}", if failed { "FAIL" } else { "PASS" });
    Ok(if failed { Outcome::Fail } else { Outcome::Pass })
}
