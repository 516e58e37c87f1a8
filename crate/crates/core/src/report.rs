//! Serialization of obstruction reports: canonical JSON and a plain-text
//! rendering of the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::obstruct::{CriterionId, ObstructionReport, Verdict};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub algebra: String,
    pub subalgebra: String,
    pub dim: usize,
    pub codim: usize,
    pub h_basis: Vec<String>,
    pub auxiliary: BTreeMap<String, String>,
    pub diagnostics: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionDoc {
    pub id: CriterionId,
    pub fired: bool,
    pub verdict: Verdict,
    pub witness: BTreeMap<String, String>,
    pub diagnostics: BTreeMap<String, String>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Versions {
    pub locmod: String,
    pub format: u32,
}

/// The serialized view of an [`ObstructionReport`]. Typed certificates are
/// not part of it; their content appears in the witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub space: SpaceDoc,
    pub verdict: Verdict,
    pub criteria: Vec<CriterionDoc>,
    pub caveats: Vec<String>,
    pub versions: Versions,
}

impl From<&ObstructionReport> for ReportDoc {
    fn from(r: &ObstructionReport) -> Self {
        ReportDoc {
            space: SpaceDoc {
                algebra: r.space.algebra.clone(),
                subalgebra: r.space.subalgebra.clone(),
                dim: r.space.dim,
                codim: r.space.codim,
                h_basis: r.space.h_basis.clone(),
                auxiliary: r.space.auxiliary.clone(),
                diagnostics: r.diagnostics.clone(),
            },
            verdict: r.verdict,
            criteria: r
                .criteria
                .iter()
                .map(|c| CriterionDoc {
                    id: c.id,
                    fired: c.fired(),
                    verdict: c.verdict,
                    witness: c.witness.clone(),
                    diagnostics: c.diagnostics.clone(),
                    caveats: c.caveats.clone(),
                })
                .collect(),
            caveats: r.caveats.clone(),
            versions: Versions { locmod: env!("CARGO_PKG_VERSION").to_string(), format: FORMAT_VERSION },
        }
    }
}

/// Pretty JSON with keys sorted at every level.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's default map is ordered, so a round trip through Value sorts keys
    let v = serde_json::to_value(value).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

pub fn parse_report_json(text: &str) -> serde_json::Result<ReportDoc> {
    serde_json::from_str(text)
}

pub fn emit_report(report: &ObstructionReport, format: Format) -> String {
    let doc = ReportDoc::from(report);
    match format {
        Format::Json => canonical_json(&doc),
        Format::Human => human(&doc),
    }
}

/// Several reports; JSON output is an array.
pub fn emit_reports(reports: &[ObstructionReport], format: Format) -> String {
    match format {
        Format::Json => canonical_json(&reports.iter().map(ReportDoc::from).collect::<Vec<_>>()),
        Format::Human => reports.iter().map(|r| human(&ReportDoc::from(r))).collect::<Vec<_>>().join("\n"),
    }
}

fn human(doc: &ReportDoc) -> String {
    let mut out = String::new();
    let s = &doc.space;
    let _ = writeln!(out, "{} / {}  (dim {}, codim {})", s.algebra, s.subalgebra, s.dim, s.codim);
    let _ = writeln!(out, "h = span({})", s.h_basis.join(", "));
    for (k, v) in &s.auxiliary {
        let _ = writeln!(out, "{k} = {v}");
    }
    let _ = writeln!(out, "verdict: {}", doc.verdict);
    let _ = writeln!(out, "criteria:");
    for c in &doc.criteria {
        let _ = writeln!(out, "  {:<24}{}", c.id.as_str(), c.verdict);
        for (k, v) in &c.witness {
            let _ = writeln!(out, "      {k}: {v}");
        }
        for (k, v) in &c.diagnostics {
            let _ = writeln!(out, "      [{k}] {v}");
        }
        for cav in &c.caveats {
            let _ = writeln!(out, "      caveat: {cav}");
        }
    }
    if !s.diagnostics.is_empty() {
        let _ = writeln!(out, "diagnostics:");
        for (k, v) in &s.diagnostics {
            let _ = writeln!(out, "  {k}: {v}");
        }
    }
    if !doc.caveats.is_empty() {
        let _ = writeln!(out, "caveats:");
        for c in &doc.caveats {
            let _ = writeln!(out, "  - {c}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, catalog_get};

    #[test]
    fn sl2_parabolic_witness() {
        let r = catalog_get("sl2/n").unwrap().run();
        let json: serde_json::Value = serde_json::from_str(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(json["verdict"], "OBSTRUCTED");
        let trace = json["criteria"].as_array().unwrap().iter().find(|c| c["id"] == "prop-trace-free").unwrap();
        assert_eq!(trace["witness"]["normalizer_element"], "H");
        assert_eq!(trace["witness"]["trace"], "-2");
        assert_eq!(trace["fired"], true);
    }

    #[test]
    fn inapplicable_carries_the_failed_precondition() {
        let r = catalog_get("su2/0").unwrap().run();
        let doc = ReportDoc::from(&r);
        let c = doc.criteria.iter().find(|c| c.id == CriterionId::ExNonunimodular).unwrap();
        assert_eq!(c.verdict, Verdict::Inapplicable);
        assert!(c.witness.contains_key("failed_precondition"));
    }

    #[test]
    fn json_round_trip_and_stability() {
        for e in catalog() {
            let r = e.run();
            let text = emit_report(&r, Format::Json);
            assert_eq!(parse_report_json(&text).unwrap(), ReportDoc::from(&r), "{}", e.name);
            assert_eq!(text, emit_report(&e.run(), Format::Json));
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = emit_report(&catalog_get("aff/0").unwrap().run(), Format::Json);
        let top: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(top, ["caveats", "criteria", "space", "verdict", "versions"]);
    }

    #[test]
    fn human_mentions_every_criterion() {
        let r = catalog_get("sl2/a").unwrap().run();
        let text = emit_report(&r, Format::Human);
        assert!(text.contains("verdict: OBSTRUCTED"));
        for id in CriterionId::ALL {
            assert!(text.contains(id.as_str()));
        }
    }
}
