//! Full analysis of one algebra, serialized to JSON or rendered as Markdown.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{CartanAlgebra, GroupAction, Provenance};
use crate::coxeter::{
    coxeter_matrix, homological_form, is_cyclotomic_type, periodicity, symmetry_factor, FormClass, Period,
};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::spectral::{measures, verify_inequality_chain, ChainVerdict, SpectralReport, DEFAULT_ROOT_TOLERANCE};

/// Significant digits kept for real values in reports.
pub const REPORT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operation {
    Factorize,
    Periodicity,
    Hform,
    Measures,
    Symmetry,
}

impl Operation {
    pub const ALL: [Operation; 5] = [
        Operation::Factorize,
        Operation::Periodicity,
        Operation::Hform,
        Operation::Measures,
        Operation::Symmetry,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Operation::Factorize => "factorize",
            Operation::Periodicity => "periodicity",
            Operation::Hform => "hform",
            Operation::Measures => "measures",
            Operation::Symmetry => "symmetry",
        }
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operation::ALL
            .into_iter()
            .find(|op| op.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown operation {s:?}")))
    }
}

/// Parses a comma-separated operation list.
pub fn parse_operations(s: &str) -> Result<BTreeSet<Operation>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisOptions {
    pub operations: BTreeSet<Operation>,
    pub tolerance: f64,
    /// Group used by the symmetry operation.
    pub action: Option<GroupAction>,
}

impl Default for AnalysisOptions {
    /// Everything except symmetry, which needs an action.
    fn default() -> Self {
        AnalysisOptions {
            operations: [
                Operation::Factorize,
                Operation::Periodicity,
                Operation::Hform,
                Operation::Measures,
            ]
            .into_iter()
            .collect(),
            tolerance: DEFAULT_ROOT_TOLERANCE,
            action: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub action: GroupAction,
    pub restricted: IntPoly,
    pub cofactor: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub labels: Vec<String>,
    pub provenance: Provenance,
    pub charpoly: IntPoly,
    pub factors: BTreeMap<u64, u32>,
    pub residual: IntPoly,
    pub factorization: String,
    pub cyclotomic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<IntPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonalizable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<Period>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hform: Option<FormClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radical_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measures: Option<SpectralReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryReport>,
}

/// Runs the requested operations. The cyclotomic factorization is always
/// computed since every other operation depends on it.
pub fn analyze(a: &CartanAlgebra, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let m = coxeter_matrix(a)?;
    let (cyclotomic, fac) = is_cyclotomic_type(&m)?;
    let mut report = AnalysisReport {
        n: a.n(),
        labels: a.labels().to_vec(),
        provenance: a.provenance().clone(),
        charpoly: m.charpoly().clone(),
        factorization: fac.to_string(),
        factors: fac.factors,
        residual: fac.residual,
        cyclotomic,
        minpoly: None,
        diagonalizable: None,
        period: None,
        hform: None,
        radical_rank: None,
        measures: None,
        chain: None,
        symmetry: None,
    };
    let ops = &opts.operations;
    if ops.contains(&Operation::Periodicity) {
        let p = periodicity(&m)?;
        report.minpoly = Some(m.minpoly().clone());
        report.diagonalizable = Some(p.is_diagonalizable);
        report.period = Some(p.period);
    }
    if ops.contains(&Operation::Hform) {
        let h = homological_form(a)?;
        report.hform = Some(h.classification);
        report.radical_rank = Some(h.radical_rank);
    }
    if ops.contains(&Operation::Measures) {
        let s = measures(&m, opts.tolerance)?;
        report.chain = Some(verify_inequality_chain(&s, cyclotomic));
        report.measures = Some(s.rounded(REPORT_DIGITS));
    }
    if ops.contains(&Operation::Symmetry) {
        let action = opts
            .action
            .clone()
            .ok_or_else(|| Error::Parse("the symmetry operation needs an action".into()))?;
        let (restricted, cofactor) = symmetry_factor(a, &action)?;
        report.symmetry = Some(SymmetryReport {
            action,
            restricted,
            cofactor,
        });
    }
    Ok(report)
}

fn provenance_name(p: &Provenance) -> String {
    match p {
        Provenance::Family { name, .. } => name.clone(),
        Provenance::Canonical { weights } => format!("canonical {weights:?}"),
        Provenance::ExtendedCanonical { weights } => format!("extended canonical {weights:?}"),
        Provenance::TruncatedLinear { n, r } => format!("truncated linear ({n}, {r})"),
        other => serde_json::to_value(other)
            .ok()
            .and_then(|v| v.get("kind").and_then(|k| k.as_str()).map(str::to_string))
            .unwrap_or_else(|| "algebra".into()),
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Coxeter analysis: {}\n", provenance_name(&self.provenance));
        let _ = writeln!(s, "| quantity | value |");
        let _ = writeln!(s, "|---|---|");
        let mut row = |k: &str, v: String| {
            let _ = writeln!(s, "| {k} | {v} |");
        };
        row("vertices", self.n.to_string());
        row("Coxeter polynomial", format!("`{}`", self.charpoly));
        row("factorization", format!("`{}`", self.factorization));
        row("cyclotomic type", self.cyclotomic.to_string());
        if let Some(mp) = &self.minpoly {
            row("minimal polynomial", format!("`{mp}`"));
        }
        if let Some(d) = self.diagonalizable {
            row("diagonalizable", d.to_string());
        }
        if let Some(p) = self.period {
            row("period", p.to_string());
        }
        if let Some(h) = self.hform {
            row("homological form", h.to_string());
        }
        if let Some(r) = self.radical_rank {
            row("radical rank", r.to_string());
        }
        if let Some(m) = &self.measures {
            row("spectral radius", m.spectral_radius.to_string());
            row("Mahler measure", m.mahler.to_string());
            row("energy", m.energy.to_string());
            row("Frobenius norm", m.frobenius.to_string());
            row("spectral Frobenius norm", m.spectral_frobenius.to_string());
            row("certified", m.certified.to_string());
        }
        if let Some(c) = &self.chain {
            row(
                "inequality chain",
                if c.holds { "holds".into() } else { c.failures.join("; ") },
            );
        }
        if let Some(sym) = &self.symmetry {
            row("invariant factor", format!("`{}`", sym.restricted));
            row("complementary factor", format!("`{}`", sym.cofactor));
        }
        s
    }
}
