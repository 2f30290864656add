//! Deterministic rendering of batch results as JSON lines or plain text.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::batch::{RecordOutcome, Summary};
use crate::bridges::{bridge_decomposition, BridgePresentation};
use crate::certify::{
    invariant_summary_as_given, Certificate, InvariantSummary, NontrivialStatus, Primeness,
    Splitness, SCHEMA_VERSION,
};
use crate::diagram::LinkDiagram;

#[derive(Serialize)]
struct Line<'a, T: Serialize> {
    index: usize,
    input: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

fn error_line(index: usize, input: &str, error: &str) -> String {
    json!({ "index": index, "input": input, "error": error, "schema": SCHEMA_VERSION }).to_string()
}

/// One JSON object per record, then a summary line.
pub fn render_json_lines<T: Serialize>(outcomes: &[RecordOutcome<T>], summary: &Summary) -> String {
    let mut out = String::new();
    for o in outcomes {
        let line = match &o.result {
            Ok(body) => serde_json::to_string(&Line {
                index: o.index,
                input: &o.input,
                body,
            })
            .expect("report values serialize"),
            Err(e) => error_line(o.index, &o.input, e),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&json!({ "summary": summary, "schema": SCHEMA_VERSION }).to_string());
    out.push('\n');
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn orientation_text(flips: &[bool]) -> String {
    flips.iter().map(|&f| if f { '-' } else { '+' }).collect()
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn splitness_text(s: Splitness) -> &'static str {
    match s {
        Splitness::SplitCertified => "split-certified",
        Splitness::NonsplitCertified => "nonsplit-certified",
        Splitness::Inconclusive => "inconclusive",
    }
}

fn primeness_text(p: Primeness) -> &'static str {
    match p {
        Primeness::PrimeCertified => "prime-certified",
        Primeness::Inconclusive => "inconclusive",
    }
}

fn nontrivial_text(s: NontrivialStatus) -> &'static str {
    match s {
        NontrivialStatus::Certified => "certified",
        NontrivialStatus::NotCertified => "not-certified",
        NontrivialStatus::AssertedByFlag => "asserted-by-flag",
    }
}

fn invariants_text(out: &mut String, inv: &InvariantSummary) {
    let _ = writeln!(
        out,
        "  crossings {}, components {}, writhe {}, seifert circles {}, euler characteristic {}, genus {}, bridges {}",
        inv.crossings,
        inv.components,
        inv.writhe,
        inv.seifert_circles,
        opt(inv.euler_characteristic),
        opt(inv.genus),
        opt(inv.bridge_number),
    );
    if inv.components > 1 {
        let rows: Vec<String> = inv
            .linking_matrix
            .entries()
            .iter()
            .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        let _ = writeln!(out, "  linking matrix [{}]", rows.join("; "));
    }
}

fn summary_text(out: &mut String, s: &Summary) {
    let _ = writeln!(
        out,
        "summary: {} records, {} analyzed, {} errors; nonsplit {}, split {}, splitness inconclusive {}; prime {}, primeness inconclusive {}",
        s.records,
        s.analyzed,
        s.errors,
        s.nonsplit_certified,
        s.split_certified,
        s.splitness_inconclusive,
        s.prime_certified,
        s.primeness_inconclusive,
    );
}

fn record_header(out: &mut String, index: usize, input: &str) {
    let _ = writeln!(out, "#{index} {input}");
}

pub fn render_certificates_text(
    outcomes: &[RecordOutcome<Certificate>],
    summary: &Summary,
) -> String {
    let mut out = String::new();
    for o in outcomes {
        record_header(&mut out, o.index, &o.input);
        match &o.result {
            Err(e) => {
                let _ = writeln!(out, "  error: {e}");
            }
            Ok(c) => {
                let positivity = match &c.positivity.witness_orientation {
                    Some(w) => format!("yes ({})", orientation_text(w)),
                    None => "no".to_string(),
                };
                let _ = writeln!(
                    out,
                    "  positive {positivity}, connected {}, prime diagram {}, nontrivial {}",
                    yes_no(c.connectivity),
                    yes_no(c.diagram_prime.prime),
                    nontrivial_text(c.nontrivial.status),
                );
                let _ = writeln!(
                    out,
                    "  splitness {}, primeness {}",
                    splitness_text(c.splitness),
                    primeness_text(c.primeness),
                );
                invariants_text(&mut out, &c.invariants);
            }
        }
    }
    summary_text(&mut out, summary);
    out
}

pub fn render_invariants_text(
    outcomes: &[RecordOutcome<InvariantsReport>],
    summary: &Summary,
) -> String {
    let mut out = String::new();
    for o in outcomes {
        record_header(&mut out, o.index, &o.input);
        match &o.result {
            Err(e) => {
                let _ = writeln!(out, "  error: {e}");
            }
            Ok(r) => invariants_text(&mut out, &r.invariants),
        }
    }
    summary_text(&mut out, summary);
    out
}

/// Bridge decomposition of one record; `note` says why it is absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub bridges: Option<BridgePresentation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub schema: u32,
}

pub fn bridge_report(d: &LinkDiagram) -> BridgeReport {
    let (bridges, note) = match bridge_decomposition(d) {
        Ok(b) => (Some(b), None),
        Err(e) => (None, Some(e.to_string())),
    };
    BridgeReport {
        bridges,
        note,
        schema: SCHEMA_VERSION,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsReport {
    pub invariants: InvariantSummary,
    pub schema: u32,
}

pub fn invariants_report(d: &LinkDiagram) -> InvariantsReport {
    InvariantsReport {
        invariants: invariant_summary_as_given(d),
        schema: SCHEMA_VERSION,
    }
}

pub fn render_bridges_text(outcomes: &[RecordOutcome<BridgeReport>], summary: &Summary) -> String {
    let mut out = String::new();
    let arcs = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    for o in outcomes {
        record_header(&mut out, o.index, &o.input);
        match &o.result {
            Err(e) => {
                let _ = writeln!(out, "  error: {e}");
            }
            Ok(BridgeReport {
                bridges: None,
                note,
                ..
            }) => {
                let _ = writeln!(out, "  {}", note.as_deref().unwrap_or("no bridges"));
            }
            Ok(BridgeReport {
                bridges: Some(bridges),
                ..
            }) => {
                let _ = writeln!(out, "  bridges {}", bridges.n);
                for b in &bridges.over_bridges {
                    let _ = writeln!(
                        out,
                        "  over  component {} arcs [{}]",
                        b.component,
                        arcs(&b.arcs)
                    );
                }
                for b in &bridges.under_bridges {
                    let _ = writeln!(
                        out,
                        "  under component {} arcs [{}]",
                        b.component,
                        arcs(&b.arcs)
                    );
                }
            }
        }
    }
    summary_text(&mut out, summary);
    out
}
