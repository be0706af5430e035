//! File formats: generator matrices as JSON, weight distributions as CSV or
//! a JSON array.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::matrix::GeneratorMatrix;
use super::weights::WeightDistribution;
use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};

/// On-disk form of a generator matrix.
///
/// ```json
/// {"m": 3, "modulus": 11, "q": 8, "k": 3, "n": 9, "generator": [[...]], "label": "Gf/segre/m=3"}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub m: u32,
    pub modulus: u32,
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub generator: Vec<Vec<u32>>,
    #[serde(default)]
    pub label: String,
}

impl CodeFile {
    pub fn from_matrix(g: &GeneratorMatrix, label: impl Into<String>) -> Self {
        let ctx = g.ctx();
        CodeFile {
            m: ctx.m(),
            modulus: ctx.modulus(),
            q: ctx.q(),
            k: g.k(),
            n: g.n(),
            generator: g.rows().map(|r| r.iter().map(|x| x.0).collect()).collect(),
            label: label.into(),
        }
    }

    /// Rebuilds the matrix, checking the redundant header fields against the
    /// data.
    pub fn to_matrix(&self) -> Result<GeneratorMatrix> {
        let ctx = Arc::new(FieldCtx::with_params(self.m, Some(self.modulus), None)?);
        if ctx.q() != self.q {
            return Err(Error::MalformedMatrix(format!(
                "q={} does not match m={}",
                self.q, self.m
            )));
        }
        if self.generator.len() != self.k {
            return Err(Error::MalformedMatrix(format!(
                "header says k={}, found {} rows",
                self.k,
                self.generator.len()
            )));
        }
        if let Some(row) = self.generator.iter().find(|r| r.len() != self.n) {
            return Err(Error::MalformedMatrix(format!(
                "header says n={}, found a row of length {}",
                self.n,
                row.len()
            )));
        }
        let rows = self
            .generator
            .iter()
            .map(|r| r.iter().map(|&v| ctx.elem(v)).collect::<Result<Vec<Fe>>>())
            .collect::<Result<Vec<_>>>()?;
        GeneratorMatrix::new(ctx, rows)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> std::io::Result<Result<Self>> {
        Ok(Self::from_json(&std::fs::read_to_string(path)?))
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }
}

/// `weight,count` CSV with one line per weight `0..=n`.
pub fn distribution_csv(w: &WeightDistribution) -> String {
    let mut s = String::from("weight,count\n");
    for (i, c) in w.counts().iter().enumerate() {
        writeln!(s, "{i},{c}").unwrap();
    }
    s
}

/// Parses the CSV written by [`distribution_csv`]. Weights may appear in any
/// order; missing weights count as zero.
pub fn distribution_from_csv(text: &str) -> Result<WeightDistribution> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    if lines.next().map(str::trim) != Some("weight,count") {
        return Err(Error::InconsistentDistribution(
            "missing header `weight,count`".into(),
        ));
    }
    let mut terms = Vec::new();
    for line in lines {
        let bad = || Error::InconsistentDistribution(format!("bad CSV line `{line}`"));
        let (w, c) = line.trim().split_once(',').ok_or_else(bad)?;
        let w: usize = w.trim().parse().map_err(|_| bad())?;
        let c: num_bigint::BigUint = c.trim().parse().map_err(|_| bad())?;
        terms.push((w, c));
    }
    let n = terms.iter().map(|(w, _)| *w).max().unwrap_or(0);
    let mut counts = vec![num_bigint::BigUint::default(); n + 1];
    for (w, c) in terms {
        counts[w] += c;
    }
    Ok(WeightDistribution::new(counts))
}

/// JSON array `[A_0, ..., A_n]`. Counts are numbers, so values beyond
/// `u64` are written as decimal strings.
pub fn distribution_json(w: &WeightDistribution) -> String {
    let items: Vec<serde_json::Value> = w
        .counts()
        .iter()
        .map(|c| match u64::try_from(c) {
            Ok(v) => serde_json::Value::from(v),
            Err(_) => serde_json::Value::from(c.to_string()),
        })
        .collect();
    serde_json::Value::Array(items).to_string()
}
