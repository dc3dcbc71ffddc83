//! Canonical JSON for findings, compatibility reports, diffs and
//! completeness scores. Every encoder has a decoder so renderings read back
//! to equal values.

use std::collections::BTreeMap;

use super::canonical::{to_text, Json, ObjBuilder};
use super::decode::{
    boolean, read_root, real, string, token, uint32, Decoder, ParseDiagnostic, ParseMode, Reader,
};
use super::diff::{ChangeKind, DiffEntry, DocumentDiff};
use super::json::Node;
use crate::compat::{CompatibilityReport, Verdict};
use crate::completeness::{CompletenessScore, Ratio};
use crate::findings::{Code, Dimension, Finding, Severity};

/// A value with a canonical JSON rendering that reads back losslessly.
pub trait ReportJson: Sized {
    fn to_json(&self) -> Json;

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>>;

    fn to_json_text(&self) -> String {
        to_text(&self.to_json())
    }
}

fn decode_text<T>(text: &str, read: Reader<T>) -> Result<T, Vec<ParseDiagnostic>> {
    read_root(text, ParseMode::Strict, read).map(|p| p.value)
}

fn finding_json(f: &Finding) -> Json {
    ObjBuilder::new()
        .field("severity", Json::str(f.severity.as_str()))
        .field("code", Json::str(f.code.as_str()))
        .field("path", Json::str(&f.path))
        .field("message", Json::str(&f.message))
        .field("dimension", Json::str(f.dimension.as_str()))
        .build()
}

fn finding(d: &mut Decoder, node: &Node, path: &str) -> Option<Finding> {
    let f = d.object(node, path, &["severity", "code", "path", "message", "dimension"])?;
    let severity: Option<Severity> = d.req(&f, "severity", token);
    let code: Option<Code> = d.req(&f, "code", token);
    let location = d.req(&f, "path", string);
    let message = d.req(&f, "message", string);
    let dimension: Option<Dimension> = d.req(&f, "dimension", token);
    Some(Finding {
        severity: severity?,
        code: code?,
        path: location?,
        message: message?,
        dimension: dimension?,
    })
}

fn findings(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<Finding>> {
    d.list(node, path, finding)
}

impl ReportJson for Vec<Finding> {
    fn to_json(&self) -> Json {
        ObjBuilder::new()
            .field("findings", Json::Arr(self.iter().map(finding_json).collect()))
            .build()
    }

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>> {
        decode_text(text, findings_root)
    }
}

fn findings_root(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<Finding>> {
    let f = d.object(node, path, &["findings"])?;
    d.req(&f, "findings", findings)
}

fn scores(d: &mut Decoder, node: &Node, path: &str) -> Option<BTreeMap<Dimension, f64>> {
    let keys: Vec<&str> = Dimension::ALL.iter().map(|dim| dim.as_str()).collect();
    let f = d.object(node, path, &keys)?;
    let mut out = BTreeMap::new();
    let mut ok = true;
    for dim in Dimension::ALL {
        if f.has(dim.as_str()) {
            match d.req(&f, dim.as_str(), real) {
                Some(v) => {
                    out.insert(dim, v);
                }
                None => ok = false,
            }
        }
    }
    ok.then_some(out)
}

impl ReportJson for CompatibilityReport {
    fn to_json(&self) -> Json {
        let scores = self
            .dimension_scores
            .iter()
            .map(|(dim, v)| (dim.as_str().to_string(), Json::Real(*v)))
            .collect();
        ObjBuilder::new()
            .field("verdict", Json::str(self.verdict.as_str()))
            .field("component_id", Json::str(&self.component_id))
            .field("context_id", Json::str(&self.context_id))
            .field("dimension_scores", Json::Obj(scores))
            .field(
                "findings",
                Json::Arr(self.findings.iter().map(finding_json).collect()),
            )
            .build()
    }

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>> {
        decode_text(text, compatibility_report)
    }
}

fn compatibility_report(d: &mut Decoder, node: &Node, path: &str) -> Option<CompatibilityReport> {
    let f = d.object(
        node,
        path,
        &[
            "verdict",
            "component_id",
            "context_id",
            "dimension_scores",
            "findings",
        ],
    )?;
    let verdict: Option<Verdict> = d.req(&f, "verdict", token);
    let component_id = d.req(&f, "component_id", string);
    let context_id = d.req(&f, "context_id", string);
    let dimension_scores = d.req(&f, "dimension_scores", scores);
    let findings = d.req(&f, "findings", findings);
    Some(CompatibilityReport {
        verdict: verdict?,
        findings: findings?,
        dimension_scores: dimension_scores?,
        component_id: component_id?,
        context_id: context_id?,
    })
}

fn diff_entry(d: &mut Decoder, node: &Node, path: &str) -> Option<DiffEntry> {
    let f = d.object(node, path, &["path", "change", "breaking", "detail"])?;
    let location = d.req(&f, "path", string);
    let change: Option<ChangeKind> = d.req(&f, "change", token);
    let breaking = d.req(&f, "breaking", boolean);
    let detail = d.req(&f, "detail", string);
    Some(DiffEntry {
        path: location?,
        change: change?,
        breaking: breaking?,
        detail: detail?,
    })
}

fn diff_entries(d: &mut Decoder, node: &Node, path: &str) -> Option<Vec<DiffEntry>> {
    d.list(node, path, diff_entry)
}

impl ReportJson for DocumentDiff {
    fn to_json(&self) -> Json {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                ObjBuilder::new()
                    .field("path", Json::str(&e.path))
                    .field("change", Json::str(e.change.as_str()))
                    .field("breaking", Json::Bool(e.breaking))
                    .field("detail", Json::str(&e.detail))
                    .build()
            })
            .collect();
        ObjBuilder::new().field("entries", Json::Arr(entries)).build()
    }

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>> {
        decode_text(text, document_diff)
    }
}

fn document_diff(d: &mut Decoder, node: &Node, path: &str) -> Option<DocumentDiff> {
    let f = d.object(node, path, &["entries"])?;
    let entries = d.req(&f, "entries", diff_entries)?;
    Some(DocumentDiff { entries })
}

fn ratio(d: &mut Decoder, node: &Node, path: &str) -> Option<Ratio> {
    let f = d.object(node, path, &["present", "required"])?;
    let present = d.req(&f, "present", uint32);
    let required = d.req(&f, "required", uint32);
    Some(Ratio {
        present: present?,
        required: required?,
    })
}

impl ReportJson for CompletenessScore {
    fn to_json(&self) -> Json {
        let mut b = ObjBuilder::new();
        for (name, r) in self.ratios() {
            let value = Json::opt(r.as_ref(), |r| {
                ObjBuilder::new()
                    .field("present", Json::Int(i64::from(r.present)))
                    .field("required", Json::Int(i64::from(r.required)))
                    .build()
            });
            b = b.field(name, value);
        }
        b.field("overall", Json::Real(self.overall)).build()
    }

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>> {
        decode_text(text, completeness_score)
    }
}

fn completeness_score(d: &mut Decoder, node: &Node, path: &str) -> Option<CompletenessScore> {
    let f = d.object(
        node,
        path,
        &[
            "model_card",
            "hardware",
            "software",
            "autonomy",
            "considerations",
            "overall",
        ],
    )?;
    let model_card = d.opt(&f, "model_card", ratio);
    let hardware = d.opt(&f, "hardware", ratio);
    let software = d.opt(&f, "software", ratio);
    let autonomy = d.opt(&f, "autonomy", ratio);
    let considerations = d.opt(&f, "considerations", ratio);
    let overall = d.req(&f, "overall", real);
    Some(CompletenessScore {
        model_card: model_card?,
        hardware: hardware?,
        software: software?,
        autonomy: autonomy?,
        considerations: considerations?,
        overall: overall?,
    })
}

/// What `validate` reports: the findings and the template completeness.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
    pub completeness: CompletenessScore,
}

impl ReportJson for ValidationReport {
    fn to_json(&self) -> Json {
        ObjBuilder::new()
            .field(
                "findings",
                Json::Arr(self.findings.iter().map(finding_json).collect()),
            )
            .field("completeness", self.completeness.to_json())
            .build()
    }

    fn from_json_text(text: &str) -> Result<Self, Vec<ParseDiagnostic>> {
        decode_text(text, validation_report)
    }
}

fn validation_report(d: &mut Decoder, node: &Node, path: &str) -> Option<ValidationReport> {
    let f = d.object(node, path, &["findings", "completeness"])?;
    let findings = d.req(&f, "findings", findings);
    let completeness = d.req(&f, "completeness", completeness_score);
    Some(ValidationReport {
        findings: findings?,
        completeness: completeness?,
    })
}
