//! Structured verification outcomes shared by the Pᴺ certificates and the ℙ¹ lab.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::kring::{KClass, LineBundleSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

/// An exact value recorded in a report. Numbers are kept as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Scalar(String),
    List(Vec<String>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => f.write_str(s),
            Value::List(items) => write!(f, "[{}]", items.join(", ")),
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Scalar(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Scalar(s)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Scalar(b.to_string())
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Scalar(n.to_string())
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Scalar(n.to_string())
    }
}

impl From<&BigInt> for Value {
    fn from(n: &BigInt) -> Self {
        Value::Scalar(n.to_string())
    }
}

impl From<BigInt> for Value {
    fn from(n: BigInt) -> Self {
        Value::Scalar(n.to_string())
    }
}

/// A class is recorded by its coordinates in the basis `1, t, ..., t^N`.
impl From<&KClass> for Value {
    fn from(c: &KClass) -> Self {
        Value::List(c.coeffs().iter().map(ToString::to_string).collect())
    }
}

/// A split bundle is recorded as its twists with repetition, e.g. `["1", "1"]`.
impl From<&LineBundleSum> for Value {
    fn from(s: &LineBundleSum) -> Self {
        if s.is_effective() {
            Value::List(s.twists().iter().map(ToString::to_string).collect())
        } else {
            Value::Scalar(s.to_string())
        }
    }
}

impl From<Vec<i64>> for Value {
    fn from(v: Vec<i64>) -> Self {
        Value::List(v.iter().map(ToString::to_string).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub description: String,
    pub values: BTreeMap<String, Value>,
}

impl Step {
    pub fn new(description: impl Into<String>) -> Self {
        Self { description: description.into(), values: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_owned(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub steps: Vec<Step>,
}

impl Report {
    pub fn new(claim: &str, params: &[(&str, String)], verdict: Verdict, steps: Vec<Step>) -> Self {
        Self {
            claim: claim.to_owned(),
            params: params.iter().map(|(k, v)| ((*k).to_owned(), v.clone())).collect(),
            verdict,
            steps,
        }
    }

    pub fn step(&self, description_prefix: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.description.starts_with(description_prefix))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "params: {}", params.join(" "))?;
        writeln!(f, "verdict: {}", self.verdict)?;
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "  [{}] {}", i + 1, step.description)?;
            for (k, v) in &step.values {
                writeln!(f, "      {k} = {v}")?;
            }
        }
        Ok(())
    }
}
