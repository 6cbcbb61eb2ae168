//! Replay of the example corpus.
//!
//! A corpus file is a JSON array of cases
//! `{"id", "anchor", "argv": [...], "expected": {...}}`. `argv` is a
//! subcommand line without the program name. `expected` is matched as a
//! subset of the report: objects key by key, arrays element by element,
//! `{">=": x}` / `{"<=": x}` compare numbers, and a top-level `"error"`
//! key expects a usage error whose message contains the given text.

use std::path::Path;
use std::time::Instant;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::commands::{Command, CorpusArgs};
use crate::report::report;
use crate::{evaluate, Cli, Outcome};

const SHIPPED: &[(&str, &str)] = &[
    ("forms.json", include_str!("../corpus/forms.json")),
    ("dims.json", include_str!("../corpus/dims.json")),
    ("restriction.json", include_str!("../corpus/restriction.json")),
    ("extension.json", include_str!("../corpus/extension.json")),
    ("morse.json", include_str!("../corpus/morse.json")),
    ("errors.json", include_str!("../corpus/errors.json")),
];

#[derive(Debug, Clone)]
struct Case {
    id: String,
    anchor: String,
    argv: Vec<String>,
    expected: Value,
}

fn load(source: &str, text: &str) -> Result<Vec<Case>, String> {
    let parsed: Value = serde_json::from_str(text).map_err(|e| format!("{source}: {e}"))?;
    let Value::Array(items) = parsed else {
        return Err(format!("{source}: expected an array of cases"));
    };
    items
        .into_iter()
        .enumerate()
        .map(|(i, item)| {
            let field = |k: &str| item.get(k).and_then(Value::as_str).map(str::to_owned);
            let id = field("id").ok_or_else(|| format!("{source}[{i}]: missing id"))?;
            let anchor = field("anchor").ok_or_else(|| format!("{source}: {id}: missing anchor"))?;
            let argv = item
                .get("argv")
                .and_then(Value::as_array)
                .and_then(|a| a.iter().map(|s| s.as_str().map(str::to_owned)).collect())
                .ok_or_else(|| format!("{source}: {id}: argv must be an array of strings"))?;
            let expected = item
                .get("expected")
                .filter(|e| e.is_object())
                .cloned()
                .ok_or_else(|| format!("{source}: {id}: expected must be an object"))?;
            Ok(Case { id, anchor, argv, expected })
        })
        .collect()
}

fn load_dir(dir: &Path) -> Result<Vec<(String, String)>, String> {
    let entries = std::fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut files: Vec<_> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok((p.display().to_string(), text))
        })
        .collect()
}

fn as_number(v: &Value) -> Option<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => {
            let (p, q) = s.split_once('/').unwrap_or((s, "1"));
            Some(p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?)
        }
        _ => None,
    }
}

fn comparator(expected: &Map<String, Value>) -> Option<(&str, f64)> {
    if expected.len() != 1 {
        return None;
    }
    let (op, bound) = expected.iter().next()?;
    matches!(op.as_str(), ">=" | "<=").then(|| Some((op.as_str(), as_number(bound)?)))?
}

fn compare(expected: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), _) if comparator(e).is_some() => {
            let (op, bound) = comparator(e).unwrap();
            let ok = as_number(actual).is_some_and(|a| if op == ">=" { a >= bound } else { a <= bound });
            if !ok {
                out.push(format!("{path}: expected {op} {bound}, got {actual}"));
            }
        }
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let sub = format!("{path}.{k}");
                match a.get(k) {
                    Some(av) => compare(ev, av, &sub, out),
                    None => out.push(format!("{sub}: missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                out.push(format!("{path}: expected {} elements, got {}", e.len(), a.len()));
                return;
            }
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                compare(ev, av, &format!("{path}[{i}]"), out);
            }
        }
        (Value::Number(_), Value::Number(_)) if as_number(expected) == as_number(actual) => {}
        _ if expected == actual => {}
        _ => out.push(format!("{path}: expected {expected}, got {actual}")),
    }
}

/// Mismatches between a case expectation and its outcome; empty on success.
fn judge(case: &Case) -> (Option<String>, Vec<String>) {
    let mut argv = vec!["folex".to_string()];
    argv.extend(case.argv.iter().cloned());
    let outcome = match Cli::try_parse_from(&argv) {
        Err(e) => {
            let text = e.to_string();
            let msg: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            Outcome::Usage(msg.join(" "))
        }
        Ok(cli) if matches!(cli.command, Command::Corpus(_)) => {
            Outcome::Usage("corpus cases cannot nest".into())
        }
        Ok(cli) => evaluate(&cli),
    };
    let mut mismatches = Vec::new();
    let want_error = case.expected.get("error");
    let verdict = match (&outcome, want_error) {
        (Outcome::Usage(msg), Some(Value::String(needle))) => {
            if !msg.contains(needle.as_str()) {
                mismatches.push(format!("error {msg:?} does not mention {needle:?}"));
            }
            Some("error".to_string())
        }
        (Outcome::Usage(msg), _) => {
            mismatches.push(format!("unexpected error: {msg}"));
            None
        }
        (Outcome::Report { .. }, Some(_)) => {
            mismatches.push("expected an error, got a report".into());
            None
        }
        (Outcome::Report { value, failed }, None) => {
            if let Some(msg) = failed {
                mismatches.push(msg.clone());
            }
            compare(&case.expected, value, "$", &mut mismatches);
            value.get("verdict").and_then(Value::as_str).map(str::to_owned)
        }
    };
    (verdict, mismatches)
}

/// Runs the shipped corpus, or every `*.json` file in `--dir`.
pub fn run(args: &CorpusArgs, assert: Option<&str>) -> Outcome {
    let sources = match &args.dir {
        Some(dir) => match load_dir(dir) {
            Ok(s) => s,
            Err(e) => return Outcome::Usage(e),
        },
        None => SHIPPED.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect(),
    };
    let mut cases = Vec::new();
    for (name, text) in &sources {
        match load(name, text) {
            Ok(c) => cases.extend(c),
            Err(e) => return Outcome::Usage(e),
        }
    }
    let mut ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
    ids.sort_unstable();
    if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
        return Outcome::Usage(format!("duplicate case id {}", w[0]));
    }

    let results: Vec<_> = cases
        .par_iter()
        .map(|case| {
            let start = Instant::now();
            let (verdict, mismatches) = judge(case);
            (verdict, mismatches, start.elapsed())
        })
        .collect();

    let mut rows = Vec::with_capacity(cases.len());
    let mut failed = 0usize;
    for (case, (verdict, mismatches, elapsed)) in cases.iter().zip(results) {
        let mut row = Map::new();
        row.insert("id".into(), case.id.clone().into());
        row.insert("anchor".into(), case.anchor.clone().into());
        row.insert("verdict".into(), verdict.map_or(Value::Null, Value::from));
        let pass = mismatches.is_empty();
        failed += usize::from(!pass);
        row.insert("status".into(), (if pass { "pass" } else { "fail" }).into());
        if !pass {
            row.insert("mismatches".into(), mismatches.into());
        }
        if args.timings {
            row.insert("millis".into(), (elapsed.as_secs_f64() * 1000.0).round().into());
        }
        rows.push(Value::Object(row));
    }

    let mut m = report("corpus");
    let mut warnings = Vec::new();
    if cases.is_empty() {
        warnings.push(Value::from("no corpus cases found"));
        eprintln!("warning: no corpus cases found");
    }
    m.insert("total".into(), cases.len().into());
    m.insert("passed".into(), (cases.len() - failed).into());
    m.insert("failed".into(), failed.into());
    m.insert("cases".into(), rows.into());
    m.insert("warnings".into(), warnings.into());
    let verdict = if failed == 0 { "pass" } else { "fail" };
    m.insert("verdict".into(), verdict.into());
    let failed_msg = if failed > 0 {
        Some(format!("{failed} corpus case(s) failed"))
    } else {
        assert
            .filter(|want| *want != verdict)
            .map(|want| format!("verdict {verdict:?} does not match asserted {want:?}"))
    };
    Outcome::Report { value: m.into(), failed: failed_msg }
}
