use std::path::PathBuf;

use anyhow::Context;
use clap::{Subcommand, ValueEnum};
use ovalcodes::lincode::{distribution_csv, distribution_json};
use ovalcodes::opoly::lookup_probe;
use ovalcodes::{classify, Budget, CodeFile, Construction, Family};
use serde_json::json;

use crate::{write_file, FieldArgs, Outcome};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConstructionArg {
    HyperovalMds,
    Extended,
    Cf,
    Cfbar,
}

impl From<ConstructionArg> for Construction {
    fn from(c: ConstructionArg) -> Self {
        match c {
            ConstructionArg::HyperovalMds => Construction::HyperovalMds,
            ConstructionArg::Extended => Construction::Extended,
            ConstructionArg::Cf => Construction::Cf,
            ConstructionArg::Cfbar => Construction::CfBar,
        }
    }
}

#[derive(Subcommand)]
pub enum CodeCommand {
    /// Write a generator matrix as JSON.
    Build {
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Family::NAMES))]
        family: String,
        #[arg(long)]
        h: Option<u32>,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Parameters, class, bounds and weight distribution of a matrix file.
    Analyze {
        file: PathBuf,
        /// Print the weight distribution as `weight,count` CSV.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
}

pub fn run(cmd: CodeCommand, budget: Budget) -> anyhow::Result<Outcome> {
    match cmd {
        CodeCommand::Build {
            construction,
            family,
            h,
            field,
            out,
        } => build(construction.into(), &family, h, &field, &out),
        CodeCommand::Analyze { file, csv, json } => analyze(&file, csv, json, budget),
    }
}

fn build(
    construction: Construction,
    family: &str,
    h: Option<u32>,
    field: &FieldArgs,
    out: &PathBuf,
) -> anyhow::Result<Outcome> {
    let ctx = field.ctx()?;
    let spec = lookup_probe(family, h, &ctx)?;
    let g = construction.build(&spec, &ctx)?;
    let file = CodeFile::from_matrix(&g, construction.label(&spec));
    write_file(out, &file.to_json())?;
    eprintln!(
        "wrote {} ({}x{} over GF({}))",
        out.display(),
        g.k(),
        g.n(),
        g.q()
    );
    Ok(Outcome::Pass)
}

fn analyze(path: &PathBuf, csv: bool, as_json: bool, budget: Budget) -> anyhow::Result<Outcome> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = CodeFile::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    let g = file.to_matrix()?;
    let report = classify(&g, budget)?;
    if csv {
        print!("{}", distribution_csv(&report.weights));
    } else if as_json {
        let mut value = serde_json::to_value(&report)?;
        let obj = value.as_object_mut().expect("report is a struct");
        obj.insert("label".into(), json!(file.label));
        obj.insert("summary".into(), json!(report.summary()));
        obj.insert(
            "weights".into(),
            serde_json::from_str(&distribution_json(&report.weights))?,
        );
        obj.insert(
            "dual_weights".into(),
            serde_json::from_str(&distribution_json(&report.dual_weights))?,
        );
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        if !file.label.is_empty() {
            println!("{}", file.label);
        }
        println!("{}", report.summary());
        let d_dual = report.d_dual.map_or("-".to_string(), |d| d.to_string());
        println!(
            "n={} k={} q={} d={} d_dual={d_dual}",
            report.n, report.k, report.q, report.d
        );
        println!("class: {}", report.class);
        println!("singleton defect: {}", report.singleton_defect);
        println!("griesmer gap: {}", report.griesmer_gap);
        println!("distance optimality: {:?}", report.distance_optimal);
        println!("weights: {}", report.weights);
        println!("dual weights: {}", report.dual_weights);
    }
    Ok(Outcome::Pass)
}
