use std::sync::Arc;

use anyhow::bail;
use clap::{Subcommand, ValueEnum};
use ovalcodes::constructions::enumerator_formula;
use ovalcodes::opoly::{catalog, lookup_probe};
use ovalcodes::{verify_claim, Budget, Claim, ClaimReport, Family, FieldCtx, OvalPolySpec};

use crate::Outcome;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ClaimArg {
    /// Extended hyperoval code is [q+3,3,q] NMDS.
    #[value(name = "3.1", alias = "extended")]
    Extended,
    /// G_f is [q+1,3,q-2] NMDS.
    #[value(name = "4.1", alias = "cf")]
    Cf,
    /// G_f with the extra column is [q+2,3,q-1] NMDS.
    #[value(name = "5.1", alias = "cfbar")]
    CfBar,
}

impl From<ClaimArg> for Claim {
    fn from(c: ClaimArg) -> Self {
        match c {
            ClaimArg::Extended => Claim::Extended,
            ClaimArg::Cf => Claim::Cf,
            ClaimArg::CfBar => Claim::CfBar,
        }
    }
}

#[derive(Subcommand)]
pub enum VerifyCommand {
    /// Build the code, enumerate it and compare with the closed form.
    Theorem {
        #[arg(long, value_enum)]
        id: ClaimArg,
        /// Family to check (default: every catalog member).
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::NAMES))]
        family: Option<String>,
        #[arg(long)]
        h: Option<u32>,
        /// Extension degree (default: sweep 3..=8).
        #[arg(long)]
        m: Option<u32>,
    },
}

pub fn run(cmd: VerifyCommand, budget: Budget) -> anyhow::Result<Outcome> {
    let VerifyCommand::Theorem { id, family, h, m } = cmd;
    let claim = Claim::from(id);
    match (family, m) {
        (Some(family), Some(m)) => single(claim, &family, h, m, budget),
        (family, m) => sweep(claim, family.as_deref(), h, m, budget),
    }
}

fn single(
    claim: Claim,
    family: &str,
    h: Option<u32>,
    m: u32,
    budget: Budget,
) -> anyhow::Result<Outcome> {
    let ctx = Arc::new(FieldCtx::new(m)?);
    let spec = lookup_probe(family, h, &ctx)?;
    let r = verify_claim(claim, &spec, &ctx, budget)?;
    print_detail(&r);
    Ok(verdict(&r))
}

fn verdict(r: &ClaimReport) -> Outcome {
    if r.passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn print_detail(r: &ClaimReport) {
    println!("{}: {}", r.label, r.report.summary());
    println!(
        "closed form: {}",
        enumerator_formula(r.claim.construction())
    );
    println!("{:>8} {:>16} {:>16}", "weight", "expected", "computed");
    for (w, e, c) in counts_row(r) {
        let mark = if e == c { "" } else { "  <-- differs" };
        println!("{w:>8} {e:>16} {c:>16}{mark}");
    }
    for (name, ok) in r.checks() {
        println!("  {name:<16} {}", if ok { "PASS" } else { "FAIL" });
    }
    println!(
        "pairing: {} minimum-weight words, {} dual weight-3 words ({} and {} up to scalars), {} unpaired",
        r.pairing.primal_count,
        r.pairing.dual_weight3_count,
        r.pairing.primal_projective,
        r.pairing.dual_weight3_projective,
        r.pairing.unpaired.len()
    );
    println!("result: {}", if r.passed() { "PASS" } else { "FAIL" });
}

fn sweep(
    claim: Claim,
    family: Option<&str>,
    h: Option<u32>,
    m: Option<u32>,
    budget: Budget,
) -> anyhow::Result<Outcome> {
    let degrees: Vec<u32> = m.map_or_else(|| (3..=8).collect(), |m| vec![m]);
    let mut failures = 0;
    let mut checked = 0;
    for m in degrees {
        let ctx = Arc::new(FieldCtx::new(m)?);
        let specs: Vec<OvalPolySpec> = match family {
            Some(name) => match lookup_probe(name, h, &ctx) {
                Ok(spec) => vec![spec],
                Err(e) => {
                    println!("m={m} {name}: skipped ({e})");
                    continue;
                }
            },
            None => catalog(&ctx)?,
        };
        for spec in specs {
            if let Err(e) = claim.check_hypotheses(&spec, &ctx) {
                println!("m={m} {spec}: skipped ({e})");
                continue;
            }
            let r = verify_claim(claim, &spec, &ctx, budget)?;
            checked += 1;
            let status = if r.passed() { "PASS" } else { "FAIL" };
            println!("m={m} {spec}: {} {status}", r.report.summary());
            if !r.passed() {
                failures += 1;
                for d in &r.diff {
                    println!(
                        "    weight {}: expected {}, computed {}",
                        d.weight, d.expected, d.computed
                    );
                }
                for (name, ok) in r.checks() {
                    if !ok {
                        println!("    {name}: FAIL");
                    }
                }
            }
        }
    }
    if checked == 0 {
        bail!("no family satisfied the hypotheses of {claim}");
    }
    println!("{checked} checked, {failures} failed");
    Ok(if failures == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

/// `(weight, expected, computed)` for every weight where either count is
/// nonzero.
fn counts_row(r: &ClaimReport) -> Vec<(usize, String, String)> {
    (0..=r.report.n)
        .map(|w| {
            (
                w,
                r.expected.count(w).to_string(),
                r.report.weights.count(w).to_string(),
            )
        })
        .filter(|(_, e, c)| e != "0" || c != "0")
        .collect()
}
