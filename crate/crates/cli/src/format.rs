//! The JSON input format: structure constants as sparse index/value
//! entries, every value an exact rational written as a `"p/q"` string.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "algebra": { "dim": 1, "unit": ["1"], "mult": [[0, 0, 0, "1"]] },
//!   "lie": { "dim": 1, "bracket": [] },
//!   "mu": [],
//!   "module": {
//!     "m": { "dim": 0, "left": [], "right": [], "lie": [] },
//!     "p": { "dim": 1, "action": [] },
//!     "sigma": []
//!   }
//! }
//! ```
//!
//! `mult` entries `[i, j, k, c]` mean `e_i e_j` has coefficient `c` on `e_k`;
//! `bracket` entries likewise for `[x_i, x_j]`, and an entry `[i, j, k, c]`
//! without a listed partner `[j, i, k, _]` implies `[x_j, x_i]_k = -c`. Matrix
//! families (`mu`, `left`, `right`, `lie`, `action`) use `[index, row, col, c]`.
//! `sigma` entries `[m, a, alpha, c]` give the `e_m` coefficient of
//! `σ(e_a ⊗ p_alpha)`.

use std::collections::BTreeSet;
use std::fmt;

use lpcoh::lp_module::{Bimodule, LieModule, ModuleError};
use lpcoh::structures::{AssocAlgebra, LeibnizPair, LieAlgebra, StructureError};
use lpcoh::{Matrix, QModule, QPair, Rational};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational serialized as its canonical `"p/q"` string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar(pub Rational);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<Rational>()
            .map(Scalar)
            .map_err(|_| serde::de::Error::custom(format!("invalid rational {s:?}")))
    }
}

pub type Entry = (usize, usize, usize, Scalar);

/// Bimodule, Lie action on `M`, Lie module `P`, and `σ`.
pub type ModuleParts = (
    Bimodule<Rational>,
    LieModule<Rational>,
    LieModule<Rational>,
    Matrix<Rational>,
);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub unit: Vec<Scalar>,
    pub mult: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub dim: usize,
    pub bracket: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MSpec {
    pub dim: usize,
    pub left: Vec<Entry>,
    pub right: Vec<Entry>,
    pub lie: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PSpec {
    pub dim: usize,
    pub action: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub m: MSpec,
    pub p: PSpec,
    pub sigma: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub field: String,
    pub algebra: AlgebraSpec,
    pub lie: LieSpec,
    pub mu: Vec<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Content { path: String, message: String },
}

impl ParseError {
    fn content(path: impl fmt::Display, message: impl Into<String>) -> Self {
        ParseError::Content {
            path: path.to_string(),
            message: message.into(),
        }
    }
}

/// Parses and checks indices, lengths and duplicates. Axioms are not checked.
pub fn parse(text: &str) -> Result<PairFile, ParseError> {
    let file: PairFile = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.check_shape()?;
    Ok(file)
}

fn check_entries(path: &str, entries: &[Entry], bounds: [usize; 3]) -> Result<(), ParseError> {
    let mut seen = BTreeSet::new();
    for (n, (a, b, c, _)) in entries.iter().enumerate() {
        for (idx, bound) in [*a, *b, *c].into_iter().zip(bounds) {
            if idx >= bound {
                return Err(ParseError::content(
                    format!("{path}[{n}]"),
                    format!("index {idx} out of range (bound {bound})"),
                ));
            }
        }
        if !seen.insert((*a, *b, *c)) {
            return Err(ParseError::content(format!("{path}[{n}]"), "duplicate entry"));
        }
    }
    Ok(())
}

impl PairFile {
    fn check_shape(&self) -> Result<(), ParseError> {
        if self.field != "Q" {
            return Err(ParseError::content(
                "field",
                format!("unsupported field {:?}; only \"Q\" is available", self.field),
            ));
        }
        let (da, dl) = (self.algebra.dim, self.lie.dim);
        if self.algebra.unit.len() != da {
            return Err(ParseError::content(
                "algebra.unit",
                format!("expected {da} coordinates, found {}", self.algebra.unit.len()),
            ));
        }
        check_entries("algebra.mult", &self.algebra.mult, [da, da, da])?;
        check_entries("lie.bracket", &self.lie.bracket, [dl, dl, dl])?;
        check_entries("mu", &self.mu, [dl, da, da])?;
        if let Some(m) = &self.module {
            let (dm, dp) = (m.m.dim, m.p.dim);
            check_entries("module.m.left", &m.m.left, [da, dm, dm])?;
            check_entries("module.m.right", &m.m.right, [da, dm, dm])?;
            check_entries("module.m.lie", &m.m.lie, [dl, dm, dm])?;
            check_entries("module.p.action", &m.p.action, [dl, dp, dp])?;
            check_entries("module.sigma", &m.sigma, [dm, da, dp])?;
        }
        Ok(())
    }

    pub fn algebra(&self) -> Result<AssocAlgebra<Rational>, StructureError> {
        let triples: Vec<_> = self
            .algebra
            .mult
            .iter()
            .map(|(i, j, k, c)| (*i, *j, *k, c.0.clone()))
            .collect();
        let unit = self.algebra.unit.iter().map(|c| c.0.clone()).collect();
        AssocAlgebra::from_triples(self.algebra.dim, &triples, unit)
    }

    pub fn lie_algebra(&self) -> Result<LieAlgebra<Rational>, StructureError> {
        let d = self.lie.dim;
        let given: BTreeSet<(usize, usize, usize)> = self.lie.bracket.iter().map(|(i, j, k, _)| (*i, *j, *k)).collect();
        let mut bracket = vec![Rational::from(0); d * d * d];
        for (i, j, k, c) in &self.lie.bracket {
            bracket[(i * d + j) * d + k] = c.0.clone();
            if i != j && !given.contains(&(*j, *i, *k)) {
                bracket[(j * d + i) * d + k] = -c.0.clone();
            }
        }
        LieAlgebra::new(d, bracket)
    }

    pub fn mu(&self) -> Vec<Matrix<Rational>> {
        matrices(&self.mu, self.lie.dim, self.algebra.dim)
    }

    pub fn pair(&self) -> Result<QPair, StructureError> {
        LeibnizPair::new(self.algebra()?, self.lie_algebra()?, self.mu())
    }

    /// The coefficient data of the module part, without validation.
    pub fn module_parts(&self) -> Option<ModuleParts> {
        let spec = self.module.as_ref()?;
        let (da, dl) = (self.algebra.dim, self.lie.dim);
        let (dm, dp) = (spec.m.dim, spec.p.dim);
        let bimodule = Bimodule {
            dim: dm,
            left: matrices(&spec.m.left, da, dm),
            right: matrices(&spec.m.right, da, dm),
        };
        let m_lie = LieModule {
            dim: dm,
            action: matrices(&spec.m.lie, dl, dm),
        };
        let p = LieModule {
            dim: dp,
            action: matrices(&spec.p.action, dl, dp),
        };
        let mut sigma = Matrix::zeros(dm, da * dp);
        for (m, a, alpha, c) in &spec.sigma {
            sigma.set(*m, a * dp + alpha, c.0.clone());
        }
        Some((bimodule, m_lie, p, sigma))
    }

    /// The module over an already validated `pair`, if the file has one.
    pub fn module(&self, pair: QPair) -> Option<Result<QModule, ModuleError>> {
        let (b, ml, p, sigma) = self.module_parts()?;
        Some(QModule::new(pair, b, ml, p, sigma))
    }

    pub fn from_pair(pair: &QPair) -> Self {
        let a = pair.algebra();
        let l = pair.lie();
        let (da, dl) = (a.dim(), l.dim());
        let mut mult = Vec::new();
        for i in 0..da {
            for j in 0..da {
                for k in 0..da {
                    push(&mut mult, (i, j, k), a.constant(i, j, k));
                }
            }
        }
        let mut bracket = Vec::new();
        for i in 0..dl {
            for j in i + 1..dl {
                for k in 0..dl {
                    push(&mut bracket, (i, j, k), l.constant(i, j, k));
                }
            }
        }
        PairFile {
            field: "Q".into(),
            algebra: AlgebraSpec {
                dim: da,
                unit: a.unit().iter().map(|c| Scalar(c.clone())).collect(),
                mult,
            },
            lie: LieSpec { dim: dl, bracket },
            mu: entries(pair.actions()),
            module: None,
        }
    }

    pub fn from_module(module: &QModule) -> Self {
        let mut file = PairFile::from_pair(module.pair());
        let (da, dp) = (module.pair().dim_a(), module.dim_p());
        let mut sigma = Vec::new();
        for m in 0..module.dim_m() {
            for a in 0..da {
                for alpha in 0..dp {
                    push(&mut sigma, (m, a, alpha), module.sigma().get(m, a * dp + alpha));
                }
            }
        }
        let b = module.bimodule();
        file.module = Some(ModuleSpec {
            m: MSpec {
                dim: module.dim_m(),
                left: entries(&b.left),
                right: entries(&b.right),
                lie: entries(&module.m_lie().action),
            },
            p: PSpec {
                dim: dp,
                action: entries(&module.p().action),
            },
            sigma,
        });
        file
    }

    /// Canonical text: pretty JSON with each entry on one line.
    pub fn emit(&self) -> String {
        inline_leaf_arrays(&serde_json::to_string_pretty(self).expect("serializable"))
    }
}

fn push(out: &mut Vec<Entry>, (a, b, c): (usize, usize, usize), v: &Rational) {
    if *v != Rational::from(0) {
        out.push((a, b, c, Scalar(v.clone())));
    }
}

fn entries(mats: &[Matrix<Rational>]) -> Vec<Entry> {
    let mut out = Vec::new();
    for (x, m) in mats.iter().enumerate() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                push(&mut out, (x, r, c), m.get(r, c));
            }
        }
    }
    out
}

fn matrices(entries: &[Entry], count: usize, dim: usize) -> Vec<Matrix<Rational>> {
    let mut out = vec![Matrix::zeros(dim, dim); count];
    for (x, r, c, v) in entries {
        out[*x].set(*r, *c, v.0.clone());
    }
    out
}

/// Joins arrays whose elements are all scalars onto a single line.
fn inline_leaf_arrays(pretty: &str) -> String {
    let lines: Vec<&str> = pretty.lines().collect();
    let mut out = String::new();
    let mut k = 0;
    while k < lines.len() {
        let line = lines[k];
        if line.ends_with('[') {
            let close = lines[k + 1..].iter().position(|l| l.trim_start().starts_with(']'));
            if let Some(off) = close {
                let inner = &lines[k + 1..k + 1 + off];
                if inner.iter().all(|l| !l.contains(['[', '{'])) {
                    let items: Vec<&str> = inner.iter().map(|l| l.trim()).collect();
                    out.push_str(line);
                    out.push_str(&items.join(" "));
                    out.push_str(lines[k + 1 + off].trim_start());
                    out.push('\n');
                    k += off + 2;
                    continue;
                }
            }
        }
        out.push_str(line);
        out.push('\n');
        k += 1;
    }
    out
}
