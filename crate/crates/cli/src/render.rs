//! Text, markdown and JSON renderings of reports.

use std::fmt::Write as _;

use aicd_core::findings::tally;
use aicd_core::io::canonical::format_real;
use aicd_core::io::{DocumentDiff, ReportJson, ValidationReport};
use aicd_core::{CompatibilityReport, CompletenessScore, Finding, Severity};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

/// Anything `render_report` accepts.
pub enum Report<'a> {
    Findings(&'a [Finding]),
    Validation(&'a ValidationReport),
    Compatibility(&'a CompatibilityReport),
    Diff(&'a DocumentDiff),
    Completeness(&'a CompletenessScore),
}

/// Renders a report. `color` adds ANSI styling to the text format only.
pub fn render_report(report: Report<'_>, format: Format, color: bool) -> String {
    match format {
        Format::Json => match report {
            Report::Findings(f) => f.to_vec().to_json_text(),
            Report::Validation(v) => v.to_json_text(),
            Report::Compatibility(c) => c.to_json_text(),
            Report::Diff(d) => d.to_json_text(),
            Report::Completeness(s) => s.to_json_text(),
        },
        Format::Text => {
            let mut out = String::new();
            match report {
                Report::Findings(f) => findings_text(&mut out, f, color),
                Report::Validation(v) => {
                    findings_text(&mut out, &v.findings, color);
                    completeness_text(&mut out, &v.completeness);
                }
                Report::Compatibility(c) => compatibility_text(&mut out, c, color),
                Report::Diff(d) => diff_text(&mut out, d),
                Report::Completeness(s) => completeness_text(&mut out, s),
            }
            out
        }
        Format::Markdown => {
            let mut out = String::new();
            match report {
                Report::Findings(f) => findings_markdown(&mut out, f),
                Report::Validation(v) => {
                    findings_markdown(&mut out, &v.findings);
                    out.push('\n');
                    completeness_markdown(&mut out, &v.completeness);
                }
                Report::Compatibility(c) => compatibility_markdown(&mut out, c),
                Report::Diff(d) => diff_markdown(&mut out, d),
                Report::Completeness(s) => completeness_markdown(&mut out, s),
            }
            out
        }
    }
}

/// Control characters shown as escapes so each finding stays on one line.
fn one_line(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{{{:x}}}", u32::from(c));
            }
            c => out.push(c),
        }
    }
    out
}

fn cell(text: &str) -> String {
    one_line(text).replace('|', "\\|")
}

fn width(text: &str) -> usize {
    text.chars().count()
}

fn paint(text: &str, severity: Severity, color: bool) -> String {
    if !color {
        return text.to_string();
    }
    let code = match severity {
        Severity::Error => "31",
        Severity::Warning => "33",
        Severity::Info => "36",
    };
    format!("\x1b[{code}m{text}\x1b[0m")
}

/// Left-aligned columns separated by two spaces; the last column is not padded.
fn table(out: &mut String, header: &[&str], rows: &[Vec<String>], styles: &[Option<Severity>], color: bool) {
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(c));
        }
    }
    let line = |out: &mut String, cells: &[String], style: Option<Severity>| {
        let last = cells.len() - 1;
        let mut text = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i == last {
                text.push_str(c);
            } else {
                let padded = format!("{c:<w$}  ", w = widths[i]);
                match (i, style) {
                    (0, Some(severity)) => {
                        text.push_str(&paint(c, severity, color));
                        text.push_str(&padded[c.len()..]);
                    }
                    _ => text.push_str(&padded),
                }
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    line(out, &header, None);
    for (row, style) in rows.iter().zip(styles) {
        line(out, row, *style);
    }
}

fn markdown_table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
}

const FINDING_COLUMNS: [&str; 4] = ["SEVERITY", "CODE", "PATH", "MESSAGE"];

fn finding_rows(findings: &[Finding], escape: fn(&str) -> String) -> Vec<Vec<String>> {
    findings
        .iter()
        .map(|f| {
            vec![
                f.severity.to_string(),
                f.code.as_str().to_string(),
                escape(&f.path),
                escape(&f.message),
            ]
        })
        .collect()
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn summary(findings: &[Finding]) -> String {
    let t = tally(findings);
    let status = if t.errors == 0 { "OK" } else { "FAILED" };
    let mut line = format!(
        "{status}: {}, {}",
        plural(t.errors, "error"),
        plural(t.warnings, "warning")
    );
    if t.infos > 0 {
        let _ = write!(line, ", {}", plural(t.infos, "info"));
    }
    line
}

fn findings_text(out: &mut String, findings: &[Finding], color: bool) {
    if !findings.is_empty() {
        let rows = finding_rows(findings, one_line);
        let styles: Vec<Option<Severity>> = findings.iter().map(|f| Some(f.severity)).collect();
        table(out, &FINDING_COLUMNS, &rows, &styles, color);
    }
    out.push_str(&summary(findings));
    out.push('\n');
}

fn findings_markdown(out: &mut String, findings: &[Finding]) {
    if !findings.is_empty() {
        markdown_table(out, &FINDING_COLUMNS, &finding_rows(findings, cell));
        out.push('\n');
    }
    out.push_str(&summary(findings));
    out.push('\n');
}

fn score_list(report: &CompatibilityReport) -> String {
    report
        .dimension_scores
        .iter()
        .map(|(d, s)| format!("{d} {}", format_real(*s)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn verdict_line(report: &CompatibilityReport) -> String {
    format!(
        "verdict: {} (component {}, context {})",
        report.verdict,
        one_line(&report.component_id),
        one_line(&report.context_id)
    )
}

fn compatibility_text(out: &mut String, report: &CompatibilityReport, color: bool) {
    findings_text(out, &report.findings, color);
    let _ = writeln!(out, "scores: {}", score_list(report));
    let _ = writeln!(out, "{}", verdict_line(report));
}

fn compatibility_markdown(out: &mut String, report: &CompatibilityReport) {
    findings_markdown(out, &report.findings);
    out.push('\n');
    let rows: Vec<Vec<String>> = report
        .dimension_scores
        .iter()
        .map(|(d, s)| vec![d.to_string(), format_real(*s)])
        .collect();
    markdown_table(out, &["DIMENSION", "SCORE"], &rows);
    out.push('\n');
    let _ = writeln!(out, "{}", verdict_line(report));
}

const DIFF_COLUMNS: [&str; 4] = ["CHANGE", "BREAKING", "PATH", "DETAIL"];

fn diff_rows(diff: &DocumentDiff, escape: fn(&str) -> String) -> Vec<Vec<String>> {
    diff.entries
        .iter()
        .map(|e| {
            vec![
                e.change.as_str().to_string(),
                if e.breaking { "yes" } else { "no" }.to_string(),
                escape(&e.path),
                escape(&e.detail),
            ]
        })
        .collect()
}

fn diff_summary(diff: &DocumentDiff) -> String {
    format!(
        "{}, {} breaking",
        plural(diff.entries.len(), "change"),
        diff.breaking_count()
    )
}

fn diff_text(out: &mut String, diff: &DocumentDiff) {
    if !diff.is_empty() {
        let styles = vec![None; diff.entries.len()];
        table(out, &DIFF_COLUMNS, &diff_rows(diff, one_line), &styles, false);
    }
    let _ = writeln!(out, "{}", diff_summary(diff));
}

fn diff_markdown(out: &mut String, diff: &DocumentDiff) {
    if !diff.is_empty() {
        markdown_table(out, &DIFF_COLUMNS, &diff_rows(diff, cell));
        out.push('\n');
    }
    let _ = writeln!(out, "{}", diff_summary(diff));
}

fn completeness_rows(score: &CompletenessScore) -> Vec<Vec<String>> {
    score
        .ratios()
        .iter()
        .map(|(name, r)| match r {
            Some(r) => vec![name.to_string(), format!("{}/{}", r.present, r.required)],
            None => vec![name.to_string(), "n/a".to_string()],
        })
        .collect()
}

fn completeness_text(out: &mut String, score: &CompletenessScore) {
    let parts: Vec<String> = completeness_rows(score)
        .into_iter()
        .map(|r| r.join(" "))
        .collect();
    let _ = writeln!(
        out,
        "completeness: {}; overall {}",
        parts.join(", "),
        format_real(score.overall)
    );
}

fn completeness_markdown(out: &mut String, score: &CompletenessScore) {
    let mut rows = completeness_rows(score);
    rows.push(vec!["overall".to_string(), format_real(score.overall)]);
    markdown_table(out, &["TEMPLATE", "COMPLETENESS"], &rows);
}

#[cfg(test)]
mod tests {
    use super::*;
    use aicd_core::{Code, Dimension, Verdict};
    use std::collections::BTreeMap;

    fn report(findings: Vec<Finding>) -> CompatibilityReport {
        CompatibilityReport {
            verdict: Verdict::from_findings(&findings),
            findings,
            dimension_scores: BTreeMap::from([(Dimension::Signal, 1.0)]),
            component_id: "cam".into(),
            context_id: "car".into(),
        }
    }

    #[test]
    fn empty_findings_text() {
        assert_eq!(
            render_report(Report::Findings(&[]), Format::Text, false),
            "OK: 0 errors, 0 warnings\n"
        );
    }

    #[test]
    fn one_warning_markdown_has_one_row() {
        let r = report(vec![Finding::new(
            Code::UnmatchedSignal,
            Dimension::Signal,
            "signals[0]",
            "a | b",
        )]);
        let text = render_report(Report::Compatibility(&r), Format::Markdown, false);
        let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("| Warning")).collect();
        assert_eq!(rows, ["| Warning | UNMATCHED_SIGNAL | signals[0] | a \\| b |"]);
        assert!(text.contains("verdict: ConditionallyCompatible"));
    }

    #[test]
    fn json_reads_back() {
        let r = report(vec![Finding::new(
            Code::RangeExceeded,
            Dimension::Signal,
            "signals[0]",
            "x",
        )]);
        let text = render_report(Report::Compatibility(&r), Format::Json, false);
        assert_eq!(CompatibilityReport::from_json_text(&text).unwrap(), r);
    }

    #[test]
    fn text_columns_align() {
        let r = report(vec![
            Finding::new(
                Code::RangeExceeded,
                Dimension::Signal,
                "signals[0].characteristics[0]",
                "m1",
            ),
            Finding::new(
                Code::UnmatchedSignal,
                Dimension::Signal,
                "signals[1]",
                "line\nbreak",
            ),
        ]);
        let text = render_report(Report::Compatibility(&r), Format::Text, false);
        let lines: Vec<&str> = text.lines().collect();
        let col = lines[0].find("MESSAGE").unwrap();
        assert_eq!(lines[1].find("m1").unwrap(), col);
        assert_eq!(lines[2].find("line\\nbreak").unwrap(), col);
        assert!(text.contains("FAILED: 1 error, 1 warning\n"));
    }

    #[test]
    fn color_only_when_asked() {
        let r = report(vec![Finding::new(
            Code::RangeExceeded,
            Dimension::Signal,
            "p",
            "m",
        )]);
        let plain = render_report(Report::Compatibility(&r), Format::Text, false);
        let styled = render_report(Report::Compatibility(&r), Format::Text, true);
        assert!(!plain.contains('\x1b'));
        assert!(styled.contains("\x1b[31mError\x1b[0m"));
        let stripped = styled.replace("\x1b[31m", "").replace("\x1b[0m", "");
        assert_eq!(stripped, plain);
    }
}
