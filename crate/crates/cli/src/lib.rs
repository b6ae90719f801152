//! The `hecke` command line: argument parsing, preset resolution and dispatch.
//!
//! Every subcommand produces a JSON value; `--json` prints it verbatim (pretty, with
//! deterministic key and element order), the default table format renders it as
//! indented text, and `orbit-diagram --format dot` prints Graphviz. Hard failures
//! (count mismatches, duplicate cosets, unstable levels, mismatching identities, or a
//! failed verdict under `--expect-pass`) give a nonzero exit code.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coset_decomposer::{case_mixed_tables, gln_mixed_table, spherical_cells, MixedClassTable};
use exact_algebra::orbit_to_json;
use padic_models::{default_level, enumerate_cells, match_classes, shape_census, u_orbit_partition, ModelPreset};
use root_datum::{Preset, RootDatum, RootDatumConfig};
use satake::{macdonald, orbit_decomposition, TransformTable};
use schwartz_lab::{
    explicit_hecke_image, frakh1, gsp4_zeta_verdict, h_tau1_action, hecke_act, psi, support_stabilizer_indices,
    trace_check, trace_preimage, FiniteSchwartz, Level, TraceOutcome,
};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use thiserror::Error;
use weyl_engine::{weak_order_diagram, WeylGroup};
use zeta_checker::{tilde_hecke, zeta_verdict, LayerChoice};

/// Failures surfaced by the command line.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad or inconsistent arguments.
    #[error("usage: {0}")]
    Usage(String),
    /// A computation failed; the message names the failing module.
    #[error("{0}")]
    Computation(String),
    /// A verdict or identity check failed.
    #[error("check failed: {0}")]
    CheckFailed(String),
    /// Reading or writing a file failed.
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

macro_rules! from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Computation(e.to_string())
            }
        }
    )*};
}

from_error!(
    root_datum::RootDatumError,
    satake::SatakeError,
    coset_decomposer::DecomposeError,
    zeta_checker::ZetaError,
    padic_models::PadicError,
    schwartz_lab::SchwartzError,
    weyl_engine::WeylError,
    serde_json::Error
);

/// Output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Indented human-readable text.
    Table,
    /// Pretty-printed JSON.
    Json,
    /// Graphviz (orbit diagrams only).
    Dot,
}

/// Layer choices for the `GL_{2m}` verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Layer {
    /// The anticyclotomic layer.
    Standard,
    /// The product-of-determinants layer.
    Product,
}

/// Command line of `hecke`.
#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Spherical Hecke algebras, Hecke polynomials and zeta-element criteria"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// The subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Preset selection shared by the subcommands.
#[derive(Debug, Args, Clone)]
pub struct PresetArgs {
    /// `gl2`, `gl2-toy`, `gln`, `glN`, `gsp4` or `gu4`.
    #[arg(long)]
    pub preset: Option<String>,
    /// `n` for `--preset gln`.
    #[arg(long)]
    pub n: Option<usize>,
    /// `m` for `--preset gln` (then `n = 2m`).
    #[arg(long)]
    pub m: Option<usize>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Satake transform of `Kϖ^λK` and its orbit decomposition.
    Satake {
        #[command(flatten)]
        preset: PresetArgs,
        /// Root-datum config file (JSON, `{"version": 1, "datum": {...}}`) for split data.
        #[arg(long)]
        config: Option<PathBuf>,
        /// The cocharacter, e.g. `2,2,1`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
    },
    /// The Hecke polynomial as (degree, λ, coefficient) triples.
    Heckepoly {
        #[command(flatten)]
        preset: PresetArgs,
        /// The twist `c`.
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// Schubert-cell decomposition of `Kϖ^λK/K`.
    Decompose {
        #[command(flatten)]
        preset: PresetArgs,
        /// The cocharacter.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
    },
    /// Weak-order diagram of the Weyl orbit of `λ`.
    OrbitDiagram {
        #[command(flatten)]
        preset: PresetArgs,
        /// The cocharacter.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
    },
    /// Mixed class table of an operator.
    Mixed {
        #[command(flatten)]
        preset: PresetArgs,
        /// Operator word, e.g. `w0r2` or `rho^3`; omit to list every table.
        #[arg(long)]
        word: Option<String>,
        /// `k` for the `GL_{2m}` operator `Kϱ^kK`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The zeta-element verdict.
    ZetaCheck {
        #[command(flatten)]
        preset: PresetArgs,
        /// The twist `c`.
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        /// The layer for `GL_{2m}`.
        #[arg(long, value_enum, default_value = "standard")]
        layer: Layer,
        /// The prime for the concrete GSp4 checks.
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// Exit nonzero unless the verdict passes.
        #[arg(long)]
        expect_pass: bool,
    },
    /// The GSp4 Schwartz-space identities and verdict at a prime.
    Schwartz {
        /// The prime.
        #[arg(long, default_value_t = 3)]
        p: u32,
        /// The twist `c`.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        c: i64,
        /// Which checks to run.
        #[arg(long, value_enum, default_value = "all")]
        check: SchwartzCheck,
        /// Write the computed functions as point/value lists to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Exit nonzero unless the verdict passes.
        #[arg(long)]
        expect_pass: bool,
    },
    /// Concrete enumeration at a prime: counts, shape census and (optionally) U-orbits.
    Verify {
        #[command(flatten)]
        preset: PresetArgs,
        /// The prime.
        #[arg(long)]
        p: u32,
        /// The cocharacter.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lambda: Vec<i64>,
        /// Also compute the U-orbit partition and match it with the mixed table.
        #[arg(long)]
        orbits: bool,
        /// Truncation level for the orbit partition (default: 2 + the largest |valuation|).
        #[arg(long)]
        level: Option<u32>,
    },
}

/// Checks of the `schwartz` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchwartzCheck {
    /// Everything below plus the verdict.
    All,
    /// The explicit Hecke images.
    Hecke,
    /// `𝔥′₁,*(φ) = ψ`.
    Frakh1,
    /// The trace criterion and preimage for `ψ`.
    Trace,
    /// Only the verdict.
    Verdict,
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    /// The machine-readable result.
    pub value: Value,
    /// Graphviz text, for diagrams.
    pub dot: Option<String>,
    /// Whether a check that was asked to pass failed.
    pub failed: Option<String>,
}

impl Report {
    fn new(value: Value) -> Self {
        Report {
            value,
            dot: None,
            failed: None,
        }
    }
}

/// Versioned root-datum config file.
#[derive(Debug, Deserialize)]
struct ConfigFile {
    version: u32,
    datum: RootDatumConfig,
}

fn resolve_preset(args: &PresetArgs) -> Result<Preset, CliError> {
    let name = args
        .preset
        .as_deref()
        .ok_or_else(|| CliError::Usage("--preset is required".into()))?;
    let lower = name.to_ascii_lowercase();
    if lower == "gln" {
        return match (args.n, args.m) {
            (Some(n), None) if n >= 2 => Ok(Preset::Gln(n)),
            (None, Some(m)) if m >= 1 => Ok(Preset::Gln(2 * m)),
            _ => Err(CliError::Usage(
                "--preset gln needs exactly one of --n (≥ 2) or --m (≥ 1)".into(),
            )),
        };
    }
    if args.n.is_some() || args.m.is_some() {
        return Err(CliError::Usage(format!(
            "--n/--m only apply to --preset gln, not {name}"
        )));
    }
    Ok(name.parse::<Preset>()?)
}

fn dominant(datum: &RootDatum, lambda: &[i64]) -> Result<Vec<i64>, CliError> {
    if lambda.len() != datum.rank() {
        return Err(CliError::Usage(format!(
            "λ = {lambda:?} has length {}, the preset has rank {}",
            lambda.len(),
            datum.rank()
        )));
    }
    Ok(datum.dominant_rep(lambda))
}

fn normalize_word(w: &str) -> String {
    w.replace("varrho", "ϱ")
        .replace("rho", "ρ")
        .replace('r', "ρ")
        .replace('ϱ', "ρ")
        .replace('^', "")
}

fn satake_cmd(preset: &PresetArgs, config: &Option<PathBuf>, lambda: &[i64]) -> Result<Report, CliError> {
    let (name, datum, entry) = match config {
        Some(path) => {
            let file: ConfigFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            if file.version != 1 {
                return Err(CliError::Usage(format!("unsupported config version {}", file.version)));
            }
            let datum = RootDatum::new(file.datum)?;
            let lam = dominant(&datum, lambda)?;
            let entry = macdonald(&datum, &WeylGroup::new(&datum), &lam)?;
            (datum.name().to_string(), datum, entry)
        }
        None => {
            let p = resolve_preset(preset)?;
            let datum = p.datum();
            let lam = dominant(&datum, lambda)?;
            let table = TransformTable::build(p, std::slice::from_ref(&lam))?;
            let entry = table.get(&lam)?.clone();
            (p.name(), datum, entry)
        }
    };
    let lam = datum.dominant_rep(lambda);
    let orbits = orbit_decomposition(&datum, &entry)?;
    Ok(Report::new(json!({
        "preset": name,
        "lambda": lam,
        "transform": orbit_to_json(&entry),
        "orbits": orbits.iter().map(|(mu, c)| json!({"mu": mu, "coeff": c.to_string()})).collect::<Vec<_>>(),
    })))
}

fn heckepoly_cmd(preset: &PresetArgs, c: i64) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let p = if p == Preset::Gl2 { Preset::Gln(2) } else { p };
    let poly = tilde_hecke(p, c)?;
    Ok(Report::new(json!({
        "preset": p.name(),
        "c": c,
        "terms": poly.terms.iter().map(|t| json!({
            "degree": t.x_degree,
            "lambda": t.lambda,
            "coeff": t.coeff.to_string(),
        })).collect::<Vec<_>>(),
    })))
}

fn decompose_cmd(preset: &PresetArgs, lambda: &[i64]) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let lam = dominant(&p.datum(), lambda)?;
    let mut v = spherical_cells(p, &lam)?.to_json();
    v["preset"] = json!(p.name());
    v["lambda"] = json!(lam);
    Ok(Report::new(v))
}

fn orbit_diagram_cmd(preset: &PresetArgs, lambda: &[i64]) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let datum = p.datum();
    let lam = dominant(&datum, lambda)?;
    let d = weak_order_diagram(&datum, &lam)?;
    let mut v = d.to_json();
    v["preset"] = json!(p.name());
    v["chain"] = json!(d.chain().is_some());
    Ok(Report {
        value: v,
        dot: Some(d.to_dot()),
        failed: None,
    })
}

fn mixed_cmd(preset: &PresetArgs, word: &Option<String>, k: Option<usize>) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let tables: Vec<MixedClassTable> = match (p, k) {
        (Preset::Gln(n), Some(k)) if n % 2 == 0 => vec![gln_mixed_table(n / 2, k)?],
        (_, Some(_)) => return Err(CliError::Usage("--k applies to --preset gln with even n".into())),
        _ => case_mixed_tables(p)?,
    };
    let chosen: Vec<&MixedClassTable> = match word {
        None => tables.iter().collect(),
        Some(w) => {
            let target = normalize_word(w);
            let found: Vec<_> = tables.iter().filter(|t| normalize_word(&t.word) == target).collect();
            if found.is_empty() {
                let words: Vec<&str> = tables.iter().map(|t| t.word.as_str()).collect();
                return Err(CliError::Usage(format!(
                    "no operator {w:?}; available: {}",
                    words.join(", ")
                )));
            }
            found
        }
    };
    Ok(Report::new(json!({
        "preset": p.name(),
        "tables": chosen.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
    })))
}

fn zeta_cmd(preset: &PresetArgs, c: i64, layer: Layer, prime: u32, expect_pass: bool) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let (value, pass) = if p == Preset::Gsp4 {
        let v = gsp4_zeta_verdict(c, prime)?;
        (v.to_json(), v.pass)
    } else {
        let choice = match layer {
            Layer::Standard => LayerChoice::Standard,
            Layer::Product => LayerChoice::ProductDeterminant,
        };
        let v = zeta_verdict(p, c, choice)?;
        (v.to_json(), v.overall)
    };
    Ok(Report {
        value,
        dot: None,
        failed: (expect_pass && !pass).then(|| format!("{} verdict for c = {c} did not pass", p.name())),
    })
}

fn schwartz_cmd(
    prime: u32,
    c: i64,
    check: SchwartzCheck,
    dump: &Option<PathBuf>,
    expect_pass: bool,
) -> Result<Report, CliError> {
    let mut checks = Vec::new();
    let mut dumped = Map::new();
    let mut failures = Vec::new();
    let run = |which: SchwartzCheck| check == SchwartzCheck::All || check == which;
    if run(SchwartzCheck::Hecke) {
        let level = Level::default_for(prime, 2)?;
        let phi = FiniteSchwartz::box_fn(level, [0; 4])?;
        for lambda in [[1, 1, 1], [2, 2, 1], [2, 1, 2]] {
            let got = hecke_act(&lambda, &phi)?;
            let ok = got.assert_eq(&explicit_hecke_image(&lambda, level)?, "Hecke image");
            if let Err(e) = &ok {
                failures.push(e.to_string());
            }
            checks.push(json!({"check": format!("hecke {lambda:?}"), "pass": ok.is_ok()}));
            dumped.insert(format!("hecke{lambda:?}"), got.to_json());
        }
    }
    if run(SchwartzCheck::Frakh1) || run(SchwartzCheck::Trace) {
        let level = Level::default_for(prime, 1)?;
        let phi = FiniteSchwartz::box_fn(level, [0; 4])?;
        let target = psi(level)?;
        if run(SchwartzCheck::Frakh1) {
            let got = frakh1(&phi)?;
            let ok = got.assert_eq(&target, "𝔥′₁(φ) = ψ");
            if let Err(e) = &ok {
                failures.push(e.to_string());
            }
            checks.push(json!({"check": "frakh1 = psi", "pass": ok.is_ok()}));
            dumped.insert("frakh1".into(), got.to_json());
        }
        if run(SchwartzCheck::Trace) {
            let w = h_tau1_action(level)?;
            let indices = support_stabilizer_indices(target.values(), &w)?;
            let ok = trace_check(target.values(), &w)?;
            let pre = trace_preimage(target.values(), &w)?;
            let round_trip = matches!(pre, TraceOutcome::Preimage(_));
            if !(ok && round_trip) {
                failures.push("trace criterion for ψ".into());
            }
            checks.push(json!({
                "check": "trace criterion for psi",
                "maxStabilizerIndex": indices.iter().max(),
                "pass": ok,
                "preimageRoundTrip": round_trip,
            }));
            if let TraceOutcome::Preimage(v) = pre {
                dumped.insert("psiPreimage".into(), FiniteSchwartz::from_values(level, v)?.to_json());
            }
        }
        dumped.insert("psi".into(), target.to_json());
    }
    let verdict = gsp4_zeta_verdict(c, prime)?;
    checks.push(json!({"check": "verdict", "pass": verdict.pass}));
    if let Some(path) = dump {
        std::fs::write(path, serde_json::to_string_pretty(&Value::Object(dumped))?)?;
    }
    let failed = if !failures.is_empty() {
        Some(failures.join("; "))
    } else if expect_pass && !verdict.pass {
        Some(format!("GSp4 verdict for c = {c} at p = {prime} did not pass"))
    } else {
        None
    };
    Ok(Report {
        value: json!({"p": prime, "c": c, "checks": checks, "verdict": verdict.to_json()}),
        dot: None,
        failed,
    })
}

fn verify_cmd(
    preset: &PresetArgs,
    prime: u32,
    lambda: &[i64],
    orbits: bool,
    level: Option<u32>,
) -> Result<Report, CliError> {
    let p = resolve_preset(preset)?;
    let model = ModelPreset::new(p, prime)?;
    let lam = dominant(&p.datum(), lambda)?;
    let enumeration = enumerate_cells(&model, &lam)?;
    let census = shape_census(&model, &lam)?;
    let mut v = json!({
        "preset": p.name(),
        "p": prime,
        "lambda": lam,
        "cells": enumeration.cell_words,
        "count": enumeration.cosets.len(),
        "shapes": census.iter().map(|(mu, n)| json!({"mu": mu, "count": n})).collect::<Vec<_>>(),
    });
    if orbits {
        let keys = enumeration.keys();
        let partition = u_orbit_partition(&model, &keys, level.unwrap_or_else(|| default_level(&keys)))?;
        v["orbits"] = partition.to_json();
        let table = case_mixed_tables(p)
            .ok()
            .and_then(|ts| ts.into_iter().find(|t| t.operator == lam));
        if let Some(t) = table {
            let matched = match_classes(&model, &t, &keys, &partition)?;
            v["classes"] = json!({
                "word": t.word,
                "classOrbit": matched.class_orbit,
                "bijective": matched.bijective,
            });
            if !matched.bijective {
                return Ok(Report {
                    value: v,
                    dot: None,
                    failed: Some("mixed classes do not match the U-orbits bijectively".into()),
                });
            }
        }
    }
    Ok(Report::new(v))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Satake { preset, config, lambda } => satake_cmd(preset, config, lambda),
        Command::Heckepoly { preset, c } => heckepoly_cmd(preset, *c),
        Command::Decompose { preset, lambda } => decompose_cmd(preset, lambda),
        Command::OrbitDiagram { preset, lambda } => orbit_diagram_cmd(preset, lambda),
        Command::Mixed { preset, word, k } => mixed_cmd(preset, word, *k),
        Command::ZetaCheck {
            preset,
            c,
            layer,
            p,
            expect_pass,
        } => zeta_cmd(preset, *c, *layer, *p, *expect_pass),
        Command::Schwartz {
            p,
            c,
            check,
            dump,
            expect_pass,
        } => schwartz_cmd(*p, *c, *check, dump, *expect_pass),
        Command::Verify {
            preset,
            p,
            lambda,
            orbits,
            level,
        } => verify_cmd(preset, *p, lambda, *orbits, *level),
    }
}

/// Renders a JSON value as indented text.
pub fn render_table(v: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("-".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            Value::Array(a) if a.iter().all(|x| x.is_number()) => Some(format!(
                "({})",
                a.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )),
            _ => None,
        }
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    match scalar(x) {
                        Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                        None => {
                            out.push_str(&format!("{pad}-\n"));
                            walk(x, indent + 1, out);
                        }
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

/// Parses `argv`, runs it and returns `(exit code, stdout, stderr)`.
pub fn dispatch<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    let format = if cli.json { Format::Json } else { cli.format };
    match run(&cli) {
        Ok(report) => {
            let text = match (format, &report.dot) {
                (Format::Dot, Some(dot)) => dot.clone(),
                (Format::Dot, None) => {
                    return (
                        2,
                        String::new(),
                        "usage: --format dot applies to orbit-diagram only\n".into(),
                    )
                }
                (Format::Json, _) => format!("{}\n", serde_json::to_string_pretty(&report.value).expect("valid JSON")),
                (Format::Table, _) => render_table(&report.value),
            };
            match report.failed {
                Some(why) => (1, text, format!("check failed: {why}\n")),
                None => (0, text, String::new()),
            }
        }
        Err(e @ CliError::Usage(_)) => (2, String::new(), format!("{e}\n")),
        Err(e) => (1, String::new(), format!("error: {e}\n")),
    }
}
