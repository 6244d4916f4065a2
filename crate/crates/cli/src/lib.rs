//! Command implementations behind the `lpcoh` binary. Each command returns a
//! JSON report and a human-readable rendering of the same data.

pub mod format;

use std::fmt::Write as _;
use std::path::Path;

use lpcoh::complexes::CochainComplex;
use lpcoh::engine::{self, EngineConfig, EngineError};
use lpcoh::library;
use lpcoh::lp_module::Bimodule;
use lpcoh::{QModule, QPair, Rational};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::format::{PairFile, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("input fails validation: {0}")]
    Axiom(String),
    #[error("input has no module section, which `{0}` needs")]
    MissingModule(&'static str),
    #[error("unknown example {0:?}; see `lpcoh examples list`")]
    UnknownExample(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::MissingModule(_) | CliError::UnknownExample(_) => 2,
            CliError::Axiom(_) => 3,
            CliError::Engine(EngineError::BudgetExceeded { .. } | EngineError::DegreeCap { .. }) => 4,
            CliError::Engine(_) => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse(_) => "parse",
            CliError::Axiom(_) => "axiom",
            CliError::MissingModule(_) => "missing_module",
            CliError::UnknownExample(_) => "unknown_example",
            CliError::Engine(EngineError::BudgetExceeded { .. } | EngineError::DegreeCap { .. }) => "budget",
            CliError::Engine(_) => "invariant",
        }
    }
}

/// A finished command: the `result` section of the JSON report, the human
/// rendering, and the exit code.
#[derive(Debug, Clone)]
pub struct Output {
    pub result: Value,
    pub human: String,
    pub code: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Lp,
    Ce,
    Hochschild,
    Qext,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::Lp => "lp",
            Which::Ce => "ce",
            Which::Hochschild => "hochschild",
            Which::Qext => "qext",
        }
    }

    fn label(self) -> &'static str {
        match self {
            Which::Lp => "H_LP^n",
            Which::Ce => "HL^n(L, P)",
            Which::Hochschild => "HH^n(A, M)",
            Which::Qext => "Ext^n(Omega^1(A), M)",
        }
    }
}

/// Input file contents with their SHA-256.
pub struct Input {
    pub text: String,
    pub sha256: String,
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let sha256 = hex::encode(Sha256::digest(text.as_bytes()));
    Ok(Input { text, sha256 })
}

/// The full JSON report around a command result.
pub fn envelope(command: &[String], input_sha256: Option<&str>, body: (&str, Value)) -> Value {
    json!({
        "tool": "lpcoh",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input_sha256": input_sha256,
        body.0: body.1,
    })
}

fn q(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn vectors(vs: &[Vec<Rational>]) -> Value {
    Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(q).collect())).collect())
}

fn render_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

struct Check {
    name: &'static str,
    outcome: Option<Result<(), (String, String)>>,
}

fn check<E: std::fmt::Display + std::fmt::Debug>(name: &'static str, r: Result<(), E>) -> Check {
    Check {
        name,
        outcome: Some(r.map_err(|e| (e.to_string(), format!("{e:?}")))),
    }
}

fn skipped(name: &'static str) -> Check {
    Check { name, outcome: None }
}

pub fn cmd_validate(input: &Input) -> Result<Output, CliError> {
    let file = format::parse(&input.text)?;
    let a = file.algebra();
    let l = file.lie_algebra();
    let mut checks = vec![
        check("algebra", a.as_ref().map(|_| ())),
        check("lie_algebra", l.as_ref().map(|_| ())),
    ];
    let pair = match (a, l) {
        (Ok(a), Ok(l)) => {
            let p = QPair::new(a, l, file.mu());
            checks.push(check("pair", p.as_ref().map(|_| ())));
            p.ok()
        }
        _ => {
            checks.push(skipped("pair"));
            None
        }
    };
    let module_names = ["bimodule", "lie_module_m", "lie_module_p", "module"];
    if let Some((b, ml, p, sigma)) = file.module_parts() {
        match pair {
            Some(pair) => {
                checks.push(check("bimodule", b.validate(pair.algebra())));
                checks.push(check("lie_module_m", ml.validate(pair.lie(), "M")));
                checks.push(check("lie_module_p", p.validate(pair.lie(), "P")));
                checks.push(check("module", QModule::new(pair, b, ml, p, sigma).map(|_| ())));
            }
            None => checks.extend(module_names.map(skipped)),
        }
    }
    let valid = checks.iter().all(|c| matches!(c.outcome, Some(Ok(()))));
    let mut human = String::new();
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            let (status, message, witness) = match &c.outcome {
                Some(Ok(())) => ("pass", None, None),
                Some(Err((m, w))) => ("fail", Some(m.clone()), Some(w.clone())),
                None => ("skipped", None, None),
            };
            let _ = write!(human, "{:<14}{status}", c.name);
            if let Some(m) = &message {
                let _ = write!(human, ": {m}");
            }
            human.push('\n');
            json!({ "check": c.name, "status": status, "message": message, "witness": witness })
        })
        .collect();
    human.push_str(if valid {
        "all checks passed\n"
    } else {
        "validation failed\n"
    });
    Ok(Output {
        result: json!({ "valid": valid, "has_module": file.module.is_some(), "checks": rows }),
        human,
        code: if valid { 0 } else { 3 },
    })
}

fn load_pair(file: &PairFile) -> Result<QPair, CliError> {
    file.pair().map_err(|e| CliError::Axiom(e.to_string()))
}

fn load_module(file: &PairFile, command: &'static str) -> Result<QModule, CliError> {
    let pair = load_pair(file)?;
    match file.module(pair) {
        Some(m) => m.map_err(|e| CliError::Axiom(e.to_string())),
        None => Err(CliError::MissingModule(command)),
    }
}

/// Representative vectors per degree.
type Reps = Vec<Vec<Vec<Rational>>>;

fn cohomology_of(
    c: &CochainComplex<Rational>,
    degrees: std::ops::RangeInclusive<usize>,
    reps: bool,
) -> Result<(Vec<usize>, Option<Reps>), EngineError> {
    if !reps {
        let all = c.cohomology_dims(*degrees.end()).map_err(EngineError::from)?;
        return Ok((all[*degrees.start()..].to_vec(), None));
    }
    let mut dims = Vec::new();
    let mut out = Vec::new();
    for n in degrees {
        let h = c.cohomology(n).map_err(EngineError::from)?;
        dims.push(h.dim);
        out.push(h.representatives.basis().to_vec());
    }
    Ok((dims, Some(out)))
}

pub fn cmd_cohom(input: &Input, which: Which, n: usize, reps: bool, cfg: &EngineConfig) -> Result<Output, CliError> {
    let file = format::parse(&input.text)?;
    let (dims, representatives) = match which {
        Which::Lp => {
            let m = load_module(&file, "cohom lp")?;
            check_cap(n, cfg)?;
            cohomology_of(&engine::lp_total_complex(&m, n + 1, cfg)?, 0..=n, reps)?
        }
        Which::Ce => {
            let m = load_module(&file, "cohom ce")?;
            check_cap(n, cfg)?;
            cohomology_of(&engine::ce_complex(m.pair().lie(), m.p(), n + 1), 0..=n, reps)?
        }
        Which::Hochschild => {
            let pair = load_pair(&file)?;
            let a = pair.algebra().clone();
            // coefficients in M when a module is given, in A otherwise
            let bimodule = match file.module(pair) {
                Some(m) => m.map_err(|e| CliError::Axiom(e.to_string()))?.bimodule().clone(),
                None => Bimodule::regular(&a),
            };
            check_cap(n, cfg)?;
            cohomology_of(
                &engine::hochschild_cochain_complex(&a, &bimodule, n + 1, cfg)?,
                0..=n,
                reps,
            )?
        }
        Which::Qext => {
            let m = load_module(&file, "cohom qext")?;
            check_cap(n, cfg)?;
            cohomology_of(&engine::q_total_complex(&m, n + 2, cfg)?, 1..=n + 1, reps)?
        }
    };
    let mut human = format!("{}\n{:<8}dim\n", which.label(), "n");
    for (k, d) in dims.iter().enumerate() {
        let _ = writeln!(human, "{k:<8}{d}");
        if let Some(r) = &representatives {
            for v in &r[k] {
                let _ = writeln!(human, "        {}", render_vector(v));
            }
        }
    }
    let mut result = json!({ "which": which.name(), "max_degree": n, "dims": dims });
    if let Some(r) = &representatives {
        result["representatives"] = Value::Array(r.iter().map(|vs| vectors(vs)).collect());
    }
    Ok(Output { result, human, code: 0 })
}

fn check_cap(n: usize, cfg: &EngineConfig) -> Result<(), CliError> {
    if n > cfg.max_degree {
        return Err(EngineError::DegreeCap {
            requested: n,
            cap: cfg.max_degree,
        }
        .into());
    }
    Ok(())
}

pub fn cmd_les(input: &Input, n: usize, cfg: &EngineConfig) -> Result<Output, CliError> {
    let file = format::parse(&input.text)?;
    let m = load_module(&file, "les")?;
    check_cap(n, cfg)?;
    let r = engine::les_report(&m, n, cfg)?;
    let degrees: Vec<Value> = r
        .les
        .degrees
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "ext": d.sub_dim,
                "ext_index": d.degree.checked_sub(1),
                "h_lp": d.total_dim,
                "hl": d.quot_dim,
                "connecting_rank": d.connecting_rank(),
            })
        })
        .collect();
    let mut human = String::new();
    let row = |label: &str, cells: Vec<String>| {
        let mut s = format!("{label:<12}");
        for c in cells {
            let _ = write!(s, "{c:>5}");
        }
        s.push('\n');
        s
    };
    let ds = &r.les.degrees;
    human += &row("n", ds.iter().map(|d| d.degree.to_string()).collect());
    human += &row("Ext^(n-1)", ds.iter().map(|d| d.sub_dim.to_string()).collect());
    human += &row("H_LP^n", ds.iter().map(|d| d.total_dim.to_string()).collect());
    human += &row("HL^n", ds.iter().map(|d| d.quot_dim.to_string()).collect());
    human += &row("rank ∂^n", ds.iter().map(|d| d.connecting_rank().to_string()).collect());
    let _ = writeln!(human, "exact at every slot through degree {n}");
    let _ = writeln!(human, "matches standalone Ext, H_LP and HL computations");
    Ok(Output {
        result: json!({
            "max_degree": n,
            "exact": true,
            "consistent": true,
            "degrees": degrees,
            "top_sub_cokernel_dim": r.les.top_sub_cokernel_dim,
            "standalone": { "ext": r.ext, "h_lp": r.lp, "hl": r.ce },
        }),
        human,
        code: 0,
    })
}

pub fn cmd_examples_list() -> Output {
    let mut human = String::new();
    let items: Vec<Value> = library::EXAMPLE_NAMES
        .iter()
        .map(|name| {
            let d = library::example_description(name).unwrap_or_default();
            let _ = writeln!(human, "{name:<22}{d}");
            json!({ "name": name, "description": d })
        })
        .collect();
    Output {
        result: json!({ "examples": items }),
        human,
        code: 0,
    }
}

/// The canonical file for a bundled example.
pub fn example_file(name: &str) -> Result<String, CliError> {
    let m: QModule = library::example(name).ok_or_else(|| CliError::UnknownExample(name.to_string()))?;
    Ok(PairFile::from_module(&m).emit())
}
