//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed; exits non-zero on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use aicd_core::compat::match_signal;
use aicd_core::completeness::{AUTONOMY_FEATURES, CONSIDERATION_ENTRIES, MODEL_CARD_SECTIONS};
use aicd_core::io::{parse_document, scaffold_template, serialize_document, ParseMode, TemplateKind};
use aicd_core::model::*;
use aicd_core::testgen::{Gen, MUTABLE_ERROR_RULES};
use aicd_core::{assess_compatibility, score_completeness, validate_document, Code, Severity};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

// 1. Canonical round trip of generated documents.
fn round_trip() -> Outcome {
    let start = Instant::now();
    for seed in 0..1000u64 {
        let doc = Gen::new(seed).document();
        let text = serialize_document(&doc);
        let back = parse_document(&text, ParseMode::Strict)
            .map_err(|d| format!("seed {seed}: parse failed: {d:?}"))?
            .value;
        ensure(back == doc, || format!("seed {seed}: parsed value differs"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("1000 documents in {:.2}s", elapsed.as_secs_f64()))
}

// 2. Taxonomy against a table written out independently.
const TABLE: [&str; 8] = ["KKK", "UKK", "KKU", "KUK", "KUU", "UUK", "UKU", "UUU"];

fn unknowns(row: usize) -> BTreeSet<usize> {
    TABLE[row]
        .char_indices()
        .filter(|(_, c)| *c == 'U')
        .map(|(i, _)| i)
        .collect()
}

fn taxonomy() -> Outcome {
    let k = |c: char| {
        if c == 'U' {
            Knowledge::Unknown
        } else {
            Knowledge::Known
        }
    };
    for (row, token) in TABLE.iter().enumerate() {
        let t: Vec<char> = token.chars().collect();
        let class = classify_change_uncertainty(k(t[0]), k(t[1]), k(t[2]));
        ensure(usize::from(class.index()) == row + 1, || {
            format!("{token} classified as {}", class.index())
        })?;
    }
    let mut cases = 0;
    for mask in 0u16..256 {
        let rows: Vec<usize> = (0..8).filter(|r| mask & (1 << r) != 0).collect();
        let handled: BTreeSet<UncertaintyClass> = rows.iter().map(|&r| UncertaintyClass::ALL[r]).collect();
        for demanded in 0..8 {
            let expected = rows.iter().any(|&h| unknowns(h).is_superset(&unknowns(demanded)));
            let actual = covers_uncertainty(&handled, UncertaintyClass::ALL[demanded]);
            ensure(expected == actual, || {
                format!("handled {rows:?}, demanded row {demanded}")
            })?;
            cases += 1;
        }
    }
    let c = |i| UncertaintyClass::from_index(i).unwrap();
    ensure(UncertaintyClass::ALL.iter().all(|&d| c(8).covers(d)), || {
        "class 8 misses a class".into()
    })?;
    let by_one: Vec<u8> = UncertaintyClass::ALL
        .iter()
        .filter(|&&d| c(1).covers(d))
        .map(|d| d.index())
        .collect();
    ensure(by_one == [1], || format!("class 1 covers {by_one:?}"))?;
    Ok(format!("{cases} cases agree"))
}

// 3. Each seeded single-rule mutation yields exactly its Error code.
fn mutation_kill() -> Outcome {
    ensure(MUTABLE_ERROR_RULES.len() >= 9, || "fewer than 9 rules".into())?;
    let mut g = Gen::new(0xacce97);
    let mut killed = 0;
    for &rule in MUTABLE_ERROR_RULES {
        for i in 0..20 {
            let clean = g.full_document();
            let mutant = g.mutate(&clean, rule);
            let errors: BTreeSet<Code> = validate_document(&mutant)
                .into_iter()
                .filter(|f| f.severity == Severity::Error)
                .map(|f| f.code)
                .collect();
            ensure(errors == BTreeSet::from([rule]), || {
                format!("{rule:?} mutant {i}: {errors:?}")
            })?;
            killed += 1;
        }
    }
    Ok(format!(
        "{} rules, {killed}/{killed} mutants killed, no extra errors",
        MUTABLE_ERROR_RULES.len()
    ))
}

// 4. Template sizes and exact ratio after removing one section.
fn completeness_constants() -> Outcome {
    let doc = Gen::new(4).full_document();
    let s = score_completeness(&doc);
    let required = [
        s.model_card.map(|r| r.required),
        s.autonomy.map(|r| r.required),
        s.considerations.map(|r| r.required),
    ];
    ensure(
        [MODEL_CARD_SECTIONS, AUTONOMY_FEATURES, CONSIDERATION_ENTRIES] == [9, 14, 7]
            && required == [Some(9), Some(14), Some(7)],
        || format!("denominators {required:?}"),
    )?;

    let mut g = Gen::new(44);
    let mut doc = loop {
        let d = g.full_document();
        let card = d.model_card.as_ref().unwrap();
        if ModelCardSection::ALL.iter().all(|&s| card.is_filled(s)) {
            break d;
        }
    };
    doc.model_card
        .as_mut()
        .unwrap()
        .clear(ModelCardSection::QuantitativeAnalyses);
    let r = score_completeness(&doc).model_card.unwrap();
    ensure(
        (r.present, r.required) == (8, 9) && (r.value() - 8.0 / 9.0).abs() < 1e-12,
        || format!("{}/{}", r.present, r.required),
    )?;
    Ok("denominators 9/14/7, one section removed gives 8/9".into())
}

// 5. Tightening the host never improves the verdict.
fn monotonicity() -> Outcome {
    let mut lowered = 0;
    for seed in 0..500u64 {
        let mut g = Gen::new(seed);
        let doc = g.scenario_document();
        let ctx = g.context_for(&doc);
        let (tighter, how) = g.tighten(&ctx);
        let verdict = |c: &SystemContext| {
            assess_compatibility(&doc, c)
                .map(|r| r.verdict)
                .map_err(|e| format!("seed {seed}: {e}"))
        };
        let (before, after) = (verdict(&ctx)?, verdict(&tighter)?);
        ensure(after <= before, || {
            format!("seed {seed} {how:?}: {before} -> {after}")
        })?;
        lowered += usize::from(after < before);
    }
    ensure(lowered > 0, || "no tightening changed any verdict".into())?;
    Ok(format!("500 triples, verdict never improved ({lowered} lowered)"))
}

// 6. Engine containment against plain interval arithmetic.
fn oracle(inner: (f64, f64), outer: (f64, f64)) -> (bool, f64) {
    let ((a, b), (lo, hi)) = (inner, outer);
    let contained = lo <= a && b <= hi;
    if b == a {
        return (contained, if contained { 1.0 } else { 0.0 });
    }
    let below = (lo.min(b) - a).max(0.0);
    let above = (b - hi.max(a)).max(0.0);
    (contained, (b - a - below - above) / (b - a))
}

fn containment_oracle() -> Outcome {
    let mut g = Gen::new(6);
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let rng = g.rng();
        let mut pair = || {
            let x: f64 = rng.gen_range(-1e3..1e3);
            let y: f64 = if rng.gen_bool(0.05) {
                x
            } else {
                rng.gen_range(-1e3..1e3)
            };
            (x.min(y), x.max(y))
        };
        let (accepted, offered) = (pair(), pair());
        let envelope = |r: (f64, f64)| QuantityEnvelope::interval("q", "u", r.0, r.1);
        let component = SignalSpec {
            signal_id: "s".into(),
            kind: SignalKind::Information,
            direction: Direction::In,
            characteristics: vec![envelope(accepted)],
        };
        let mut ctx = bare_context();
        ctx.offered_signals.push(SignalSpec {
            signal_id: "h".into(),
            kind: SignalKind::Information,
            direction: Direction::Out,
            characteristics: vec![envelope(offered)],
        });
        let findings = match_signal(&component, 0, &ctx);
        let (contained, overlap) = oracle(offered, accepted);
        let exceeded = findings.iter().any(|f| f.code == Code::RangeExceeded);
        ensure(exceeded != contained, || {
            format!("pair {i}: {offered:?} in {accepted:?}")
        })?;
        if !contained {
            let reported: f64 = findings
                .iter()
                .find(|f| f.code == Code::RangeOverlap)
                .and_then(|f| f.message.strip_prefix("overlap fraction "))
                .and_then(|m| m.parse().ok())
                .ok_or_else(|| format!("pair {i}: no overlap reported"))?;
            worst = worst.max((reported - overlap).abs());
        }
    }
    ensure(worst <= 1e-9, || format!("overlap error {worst:e}"))?;
    Ok(format!(
        "1000 pairs, 0 disagreements, max overlap error {worst:e}"
    ))
}

fn bare_context() -> SystemContext {
    SystemContext {
        context_id: "host".into(),
        offered_signals: Vec::new(),
        accepted_signals: Vec::new(),
        environment: Vec::new(),
        available_transports: Vec::new(),
        change_profile: [UncertaintyClass::ALL[0]].into(),
        required_ilities: Vec::new(),
        required_verification: BTreeSet::new(),
        requires_online_adaptation: false,
        peer_interface_count: 0,
        human_interaction_expected: false,
    }
}

// 7. CLI golden scenarios.
fn golden() -> Outcome {
    let scenarios = common::scenarios();
    ensure(scenarios.len() >= 12, || {
        format!("only {} scenarios", scenarios.len())
    })?;
    let failed: Vec<String> = scenarios
        .iter()
        .filter(|d| common::check_scenario(d, false).is_err())
        .map(|d| d.file_name().unwrap().to_string_lossy().into_owned())
        .collect();
    ensure(failed.is_empty(), || format!("mismatched: {}", failed.join(", ")))?;
    Ok(format!(
        "{} scenarios byte-identical with exact exit codes",
        scenarios.len()
    ))
}

// 8. Scaffolds validate cleanly, in the library and through the binary.
fn scaffolds() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for kind in [TemplateKind::Hw, TemplateKind::Sw, TemplateKind::Ai] {
        let errors = validate_document(&scaffold_template(kind))
            .into_iter()
            .filter(|f| f.severity == Severity::Error)
            .count();
        ensure(errors == 0, || format!("{kind} scaffold has {errors} errors"))?;
        let path = dir.path().join(format!("{kind}.aicd.json"));
        let aicd = |args: &[&std::ffi::OsStr]| {
            Command::new(env!("CARGO_BIN_EXE_aicd"))
                .args(args)
                .env("NO_COLOR", "1")
                .output()
                .map(|o| o.status.code())
                .map_err(|e| e.to_string())
        };
        let kind_text = kind.to_string();
        let written = aicd(&[
            "scaffold".as_ref(),
            "--kind".as_ref(),
            kind_text.as_ref(),
            "--out".as_ref(),
            path.as_os_str(),
        ])?;
        let checked = aicd(&["validate".as_ref(), "--strict-parse".as_ref(), path.as_os_str()])?;
        ensure(written == Some(0) && checked == Some(0), || {
            format!("{kind}: scaffold exit {written:?}, validate exit {checked:?}")
        })?;
    }
    Ok("hw, sw and ai scaffolds have zero Error findings".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("round trip", round_trip),
        ("uncertainty taxonomy", taxonomy),
        ("validator mutation kill", mutation_kill),
        ("completeness constants", completeness_constants),
        ("compat monotonicity", monotonicity),
        ("containment oracle", containment_oracle),
        ("CLI golden suite", golden),
        ("scaffolds self-validate", scaffolds),
    ];
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
