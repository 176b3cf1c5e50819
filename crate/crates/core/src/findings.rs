//! Findings: JSONL records of claim checks, each carrying enough data
//! (graph6 plus subset masks) to be re-checked independently.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::graph6::to_graph6;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Finding {
    #[serde(rename = "claim-id")]
    pub claim_id: String,
    pub graph6: String,
    #[serde(rename = "witness-masks")]
    pub witness_masks: Vec<u64>,
    pub detail: String,
}

impl Finding {
    pub fn new(claim_id: &str, g: &Graph, witness_masks: Vec<u64>, detail: impl Into<String>) -> Self {
        Finding {
            claim_id: claim_id.to_string(),
            graph6: to_graph6(g),
            witness_masks,
            detail: detail.into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finding serializes")
    }
}

/// Sorts by `(graph6, masks)` within each claim so merged parallel output is
/// deterministic.
pub fn sort_findings(findings: &mut [Finding]) {
    findings.sort_by(|a, b| {
        (&a.claim_id, &a.graph6, &a.witness_masks, &a.detail)
            .cmp(&(&b.claim_id, &b.graph6, &b.witness_masks, &b.detail))
    });
}

pub fn write_jsonl<W: Write>(mut out: W, findings: &[Finding]) -> io::Result<()> {
    for f in findings {
        writeln!(out, "{}", f.to_json())?;
    }
    Ok(())
}
