//! Replay of stored fixture files.
//!
//! A fixture is a JSON object with `name`, `provenance`, `kind`, `inputs`
//! and either `checks` (kind `check`) or `expect` (every other kind).
//! Files are read in sorted path order so the report is deterministic.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use schubert_core::{
    connectivity, multiply_all, BoxJson, BoxedPartition, ClassJson, Criterion, PartitionBox,
    SchubertClass,
};

use crate::{read_json, trimmed, CliError};

#[derive(Debug, Serialize)]
pub struct Report {
    pub fixtures: Vec<FixtureReport>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct FixtureReport {
    pub file: String,
    pub name: String,
    pub kind: String,
    pub results: Vec<CaseResult>,
}

#[derive(Debug, Serialize)]
pub struct CaseResult {
    pub label: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

/// The inputs to use for `criterion` in a fixture or request document:
/// a matching per-check `inputs` override, else the top-level `inputs`.
pub fn inputs_for<'a>(doc: &'a Value, criterion: &str) -> Option<&'a Value> {
    let override_ = doc
        .get("checks")
        .and_then(Value::as_array)
        .and_then(|checks| {
            checks
                .iter()
                .find(|c| c.get("criterion").and_then(Value::as_str) == Some(criterion))
        })
        .and_then(|c| c.get("inputs"));
    override_.or_else(|| doc.get("inputs"))
}

pub fn replay_dir(dir: &Path) -> Result<Report, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut paths = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().and_then(|e| e.to_str()) == Some("json") {
            paths.push(path);
        }
    }
    paths.sort();

    let mut fixtures = Vec::new();
    for path in &paths {
        let doc = read_json(path)?;
        let file = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        fixtures.push(replay(&file, &doc)?);
    }
    let (passed, failed) = fixtures
        .iter()
        .flat_map(|f| &f.results)
        .fold((0, 0), |(p, f), r| if r.pass { (p + 1, f) } else { (p, f + 1) });
    Ok(Report {
        fixtures,
        passed,
        failed,
    })
}

fn text(doc: &Value, key: &str, file: &str) -> Result<String, CliError> {
    doc.get(key)
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| CliError::Input(format!("{file}: missing string field {key:?}")))
}

fn field<'a>(doc: &'a Value, key: &str, file: &str) -> Result<&'a Value, CliError> {
    doc.get(key)
        .ok_or_else(|| CliError::Input(format!("{file}: missing field {key:?}")))
}

fn decode<T: serde::de::DeserializeOwned>(v: &Value, what: &str) -> Result<T, String> {
    serde_json::from_value(v.clone()).map_err(|e| format!("{what}: {e}"))
}

/// Replays one fixture. Structural problems in the file are errors;
/// evaluation errors become failing cases.
pub fn replay(file: &str, doc: &Value) -> Result<FixtureReport, CliError> {
    let name = text(doc, "name", file)?;
    let kind = text(doc, "kind", file)?;
    field(doc, "provenance", file)?;
    let inputs = field(doc, "inputs", file)?;
    let mut results = Vec::new();
    if kind == "check" {
        let checks = field(doc, "checks", file)?
            .as_array()
            .ok_or_else(|| CliError::Input(format!("{file}: \"checks\" must be an array")))?;
        for c in checks {
            let criterion = text(c, "criterion", file)?;
            let expected = field(c, "expect", file)?.clone();
            let actual = match criterion.parse::<Criterion>() {
                Ok(crit) => {
                    let used = c.get("inputs").unwrap_or(inputs);
                    match connectivity::evaluate(crit, used) {
                        Ok(cert) => json!({"holds": cert.holds}),
                        Err(e) => json!({"error": e.to_string()}),
                    }
                }
                Err(e) => json!({"error": e}),
            };
            results.push(case(criterion, expected, actual));
        }
    } else {
        let expected = field(doc, "expect", file)?.clone();
        let actual = match compute(&kind, inputs) {
            Ok(v) => v,
            Err(e) => json!({"error": e}),
        };
        let pass = matches(&kind, &expected, &actual);
        results.push(CaseResult {
            label: kind.clone(),
            expected,
            actual,
            pass,
        });
    }
    Ok(FixtureReport {
        file: file.to_string(),
        name,
        kind,
        results,
    })
}

fn case(label: String, expected: Value, actual: Value) -> CaseResult {
    let pass = expected == actual;
    CaseResult {
        label,
        expected,
        actual,
        pass,
    }
}

fn frame_and_mu(inputs: &Value) -> Result<(PartitionBox, BoxedPartition), String> {
    let frame = decode::<BoxJson>(inputs.get("box").unwrap_or(&Value::Null), "box")?
        .to_box()
        .map_err(|e| e.to_string())?;
    let parts: Vec<u32> = decode(inputs.get("mu").unwrap_or(&Value::Null), "mu")?;
    let mu = BoxedPartition::new(frame, &parts).map_err(|e| e.to_string())?;
    Ok((frame, mu))
}

/// Partitions with trailing zeros dropped, as a sorted set.
fn partition_set(items: impl IntoIterator<Item = BoxedPartition>) -> Value {
    let set: BTreeSet<Vec<u32>> = items.into_iter().map(|p| trimmed(p.parts())).collect();
    json!(set)
}

fn compute(kind: &str, inputs: &Value) -> Result<Value, String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    match kind {
        "mu_j" => {
            let (_, mu) = frame_and_mu(inputs)?;
            let items = mu
                .descent_set()
                .into_iter()
                .map(|j| mu.mu_j(j))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(&e))?;
            Ok(partition_set(items))
        }
        "dual_mu_j" => {
            // μ^(j) computed on μ* in the transposed box, read back by conjugation
            let (_, mu) = frame_and_mu(inputs)?;
            let star = mu.conjugate().map_err(|e| err(&e))?;
            let items = star
                .descent_set()
                .into_iter()
                .map(|j| star.mu_j(j).and_then(|p| p.conjugate()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(&e))?;
            Ok(partition_set(items))
        }
        "delta" => {
            let (_, mu) = frame_and_mu(inputs)?;
            Ok(json!(mu.delta()))
        }
        "mult" => {
            let frame = decode::<BoxJson>(inputs.get("box").unwrap_or(&Value::Null), "box")?
                .to_box()
                .map_err(|e| err(&e))?;
            let factors: Vec<Vec<u32>> =
                decode(inputs.get("factors").unwrap_or(&Value::Null), "factors")?;
            let classes = factors
                .iter()
                .map(|p| BoxedPartition::new(frame, p).map(SchubertClass::basis))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(&e))?;
            let refs: Vec<&SchubertClass> = classes.iter().collect();
            let prod = multiply_all(&refs).map_err(|e| err(&e))?;
            serde_json::to_value(ClassJson::from(&prod)).map_err(|e| err(&e))
        }
        other => Err(format!("unknown fixture kind {other:?}")),
    }
}

fn matches(kind: &str, expected: &Value, actual: &Value) -> bool {
    match kind {
        // compared as sets of trimmed partitions
        "mu_j" | "dual_mu_j" => {
            let norm = |v: &Value| -> Option<BTreeSet<Vec<u32>>> {
                let raw: Vec<Vec<u32>> = serde_json::from_value(v.clone()).ok()?;
                Some(raw.iter().map(|p| trimmed(p)).collect())
            };
            matches!((norm(expected), norm(actual)), (Some(a), Some(b)) if a == b)
        }
        // compared as classes, so term order in the file does not matter
        "mult" => {
            let class = |v: &Value| {
                serde_json::from_value::<ClassJson>(v.clone())
                    .ok()
                    .and_then(|j| j.to_class().ok())
            };
            matches!((class(expected), class(actual)), (Some(a), Some(b)) if a == b)
        }
        _ => expected == actual,
    }
}
