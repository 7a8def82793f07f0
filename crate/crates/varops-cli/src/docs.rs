//! Machine-readable report documents. Human-readable text is derived from
//! these, never the other way around.

use serde::Serialize;

use varops::io::{witness_strings, UnaryMapFile};
use varops::report::CheckReport;
use varops::{Carrier, Witness};

/// Everything needed to reproduce a run byte-for-byte.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<String>,
    pub horizon: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub output_path: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDoc {
    pub property: String,
    pub verdict: bool,
    pub witness: Option<Vec<String>>,
    pub horizon: usize,
}

impl ReportDoc {
    pub fn from_report(report: &CheckReport, carrier: Option<&Carrier>) -> Self {
        Self {
            property: report.property.clone(),
            verdict: report.verdict,
            witness: report
                .witness
                .as_ref()
                .map(|w| witness_with_optional_carrier(w, carrier)),
            horizon: report.horizon_used,
        }
    }
}

fn witness_with_optional_carrier(witness: &Witness, carrier: Option<&Carrier>) -> Vec<String> {
    match (witness, carrier) {
        (w, Some(c)) => witness_strings(c, w),
        (Witness::Values(names), None) => names.clone(),
        (Witness::RealWords(words), None) => words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect(),
        (Witness::Words(_), None) => vec!["<words without carrier>".to_string()],
    }
}

#[derive(Debug, Serialize)]
pub struct KernelSummary {
    pub classes: usize,
    pub single_letter_congruence: bool,
}

#[derive(Debug, Serialize)]
pub struct CheckDoc {
    pub manifest: RunManifest,
    pub reports: Vec<ReportDoc>,
    pub skipped: Vec<String>,
    pub kernel: KernelSummary,
    pub gate: Vec<String>,
    pub overall_pass: bool,
}

#[derive(Debug, Serialize)]
pub struct SynthDoc {
    pub manifest: RunManifest,
    pub mode: String,
    pub conditions: Vec<ReportDoc>,
    pub overall: bool,
    pub chosen_g: Option<UnaryMapFile>,
    pub table: Option<varops::io::TableFile>,
}

#[derive(Debug, Serialize)]
pub struct QinvMember {
    pub map: UnaryMapFile,
    pub symmetric: bool,
}

#[derive(Debug, Serialize)]
pub struct QinvDoc {
    pub manifest: RunManifest,
    pub base: UnaryMapFile,
    pub count: usize,
    pub members: Vec<QinvMember>,
}

#[derive(Debug, Serialize)]
pub struct FamilyFactorizationDoc {
    pub inner: String,
    pub outer: String,
    pub max_sample_error: f64,
}

#[derive(Debug, Serialize)]
pub struct FamilyDoc {
    pub manifest: RunManifest,
    pub family: String,
    pub parameters: std::collections::BTreeMap<String, f64>,
    pub epsilon_standard: bool,
    pub reports: Vec<ReportDoc>,
    pub skipped: Vec<String>,
    pub factorization: Option<FamilyFactorizationDoc>,
    pub overall_pass: bool,
}

#[derive(Debug, Serialize)]
pub struct DemoAssertion {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct DemoDoc {
    pub manifest: RunManifest,
    pub demo: String,
    pub values: serde_json::Map<String, serde_json::Value>,
    pub assertions: Vec<DemoAssertion>,
    pub overall: bool,
}
