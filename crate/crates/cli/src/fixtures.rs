//! The bundled example corpus: command lines with expected outputs.

use clap::Parser;
use serde::Deserialize;
use serde_json::Value;

use crate::value::Val;
use crate::{build_context, execute, parse_poly, Cli, CliError, Cmd, RingArgs};

const CORPUS: &str = include_str!("../fixtures/examples.json");

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Copied from a worked example.
    Transcribed,
    /// Computed independently of this implementation.
    Derived,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    /// Exact JSON.
    Value(Value),
    /// A skew polynomial in text form.
    Poly(String),
    PolyList(Vec<String>),
    /// A matrix, compared after sorting its rows.
    SortedRows(Value),
    /// An array, compared as a set.
    Set(Vec<Value>),
}

#[derive(Clone, Debug, Deserialize)]
pub struct Expectation {
    pub path: String,
    pub origin: Origin,
    #[serde(flatten)]
    pub expected: Expected,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub description: String,
    pub args: Vec<String>,
    pub expect: Vec<Expectation>,
}

pub fn corpus() -> Vec<Fixture> {
    serde_json::from_str(CORPUS).expect("bundled corpus is valid")
}

pub fn list() -> Val {
    Val::List(
        corpus()
            .into_iter()
            .map(|f| Val::obj(vec![("id", Val::Str(f.id)), ("description", Val::Str(f.description))]))
            .collect(),
    )
}

fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').filter(|s| !s.is_empty()).try_fold(v, |v, key| match key.parse::<usize>() {
        Ok(i) => v.get(i),
        Err(_) => v.get(key),
    })
}

fn ring_args(cmd: &Cmd) -> Option<&RingArgs> {
    match cmd {
        Cmd::Autos(r) | Cmd::Circulant { ring: r, .. } => Some(r),
        Cmd::Reduce(a) | Cmd::Control(a) | Cmd::Classify(a) => Some(&a.ring),
        Cmd::Generator { args, .. } | Cmd::Dual { args, .. } | Cmd::Distance { args, .. } => Some(&args.ring),
        Cmd::Heller { .. } | Cmd::Examples { .. } => None,
    }
}

fn poly_json(text: &str, cmd: &Cmd) -> Result<Value, CliError> {
    let ring = ring_args(cmd).ok_or_else(|| CliError::Usage("polynomial expectation without a ring".into()))?;
    let ctx = build_context(ring)?;
    Ok(Val::Skew(parse_poly(text, &ctx)?).to_json())
}

fn sorted(v: &Value) -> Value {
    let mut rows = v.as_array().cloned().unwrap_or_default();
    rows.sort_by_key(|r| r.to_string());
    Value::Array(rows)
}

fn check(fixture: &Fixture, cmd: &Cmd, out: &Value) -> Result<Vec<String>, CliError> {
    let mut failures = Vec::new();
    for e in &fixture.expect {
        let got = lookup(out, &e.path).cloned().unwrap_or(Value::Null);
        let ok = match &e.expected {
            Expected::Value(v) => got == *v,
            Expected::Poly(t) => got == poly_json(t, cmd)?,
            Expected::PolyList(ts) => {
                got == Value::Array(ts.iter().map(|t| poly_json(t, cmd)).collect::<Result<_, _>>()?)
            }
            Expected::SortedRows(v) => sorted(&got) == sorted(v),
            Expected::Set(vs) => {
                let mut a: Vec<String> = got.as_array().map(|a| a.iter().map(Value::to_string).collect()).unwrap_or_default();
                let mut b: Vec<String> = vs.iter().map(Value::to_string).collect();
                a.sort();
                b.sort();
                a == b
            }
        };
        if !ok {
            failures.push(format!("{}: got {got}", e.path));
        }
    }
    Ok(failures)
}

fn run_one(f: &Fixture) -> Result<Vec<String>, CliError> {
    let argv = std::iter::once("skewcyclic".to_string()).chain(f.args.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Usage(format!("fixture {}: {e}", f.id)))?;
    if matches!(cli.cmd, Cmd::Examples { .. }) {
        return Err(CliError::Usage(format!("fixture {} replays the corpus", f.id)));
    }
    let (val, _) = execute(&cli.cmd)?;
    check(f, &cli.cmd, &val.to_json())
}

/// Replays the fixtures selected by `id` (exact id, dotted prefix, or `all`).
pub fn run(id: &str) -> Result<(Val, Option<CliError>), CliError> {
    let chosen: Vec<Fixture> = corpus()
        .into_iter()
        .filter(|f| id == "all" || f.id == id || f.id.starts_with(&format!("{id}.")))
        .collect();
    if chosen.is_empty() {
        return Err(CliError::Usage(format!("no fixture matches {id:?}")));
    }
    let mut failed = Vec::new();
    let results = chosen
        .iter()
        .map(|f| {
            let failures = match run_one(f) {
                Ok(v) => v,
                Err(e) => vec![format!("{}: {e}", e.name())],
            };
            if !failures.is_empty() {
                failed.push(f.id.clone());
            }
            Val::obj(vec![
                ("id", Val::Str(f.id.clone())),
                ("status", Val::Str(if failures.is_empty() { "PASS" } else { "FAIL" }.into())),
                ("checks", Val::Int(f.expect.len() as u64)),
                ("failures", Val::List(failures.into_iter().map(Val::Str).collect())),
            ])
        })
        .collect();
    let summary = Val::obj(vec![
        ("passed", Val::Int((chosen.len() - failed.len()) as u64)),
        ("failed", Val::Int(failed.len() as u64)),
        ("results", Val::List(results)),
    ]);
    let failure = (!failed.is_empty()).then(|| CliError::FixtureMismatch(format!("failing fixtures: {}", failed.join(", "))));
    Ok((summary, failure))
}

/// One line per fixture, then the totals.
pub fn summary_text(summary: &Val) -> String {
    let v = summary.to_json();
    let mut out = String::new();
    for r in v["results"].as_array().into_iter().flatten() {
        let (status, id) = (r["status"].as_str().unwrap_or(""), r["id"].as_str().unwrap_or(""));
        out.push_str(&format!("{status} {id}\n"));
        for f in r["failures"].as_array().into_iter().flatten() {
            out.push_str(&format!("    {}\n", f.as_str().unwrap_or("")));
        }
    }
    out.push_str(&format!("{} passed, {} failed\n", v["passed"], v["failed"]));
    out
}
