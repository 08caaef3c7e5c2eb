//! JSON schema of `--json` output: one object per invocation. Rationals are
//! strings `"p/q"` (or `"inf"`), words are strings over `0`/`1`, and integers
//! that can grow without bound are decimal strings.

use farey_core::numbers::Rational;
use farey_core::words::Word;
use serde::{Deserialize, Serialize};

/// `word`, and each entry of `step-t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordOut {
    pub slope: Rational,
    pub word: Word,
}

/// `cf`: `cf` is written `[a0;a1,...,an]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfOut {
    pub value: Rational,
    pub cf: String,
}

/// `path`: matrix rows are `[[n, m], [t, s]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathOut {
    pub value: Rational,
    pub path: String,
    pub matrix: [[String; 2]; 2],
}

/// `index` and `unindex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexOut {
    pub value: Rational,
    pub index: String,
}

/// `dual`: both fields are rationals, or both are words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualOut {
    pub input: String,
    pub dual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeriveRow {
    pub word: Word,
    pub slope: Rational,
    /// Decimal integer, or `"inf"` for a single letter.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeriveOut {
    pub rows: Vec<DeriveRow>,
}

/// `step-t`: the starting word followed by its images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTOut {
    pub words: Vec<WordOut>,
}

/// `orbit`: `points[k]` is the k-th iterate, starting at `k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOut {
    pub map: String,
    pub points: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SturmianOut {
    pub slope: String,
    pub length: usize,
    pub guaranteed_length: usize,
    pub symbols: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FordOut {
    pub svg: String,
}

/// Visit frequency of `Z_k` in the open interval `(a, b)` over `k = 1..=steps`;
/// `expected` is `rho(b) - rho(a)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrequencyOut {
    pub interval: (Rational, Rational),
    pub observed: f64,
    pub expected: f64,
    pub steps: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkOut {
    pub reports: Vec<FrequencyOut>,
}

/// One node of `enumerate`; `word` is present with `--words`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeOut {
    pub index: u64,
    pub value: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateOut {
    pub nodes: Vec<NodeOut>,
}

/// `tokens`: `row` is written like `(D2A3)DA3DA5DA3D`, jump in parentheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokensOut {
    pub level: u32,
    pub from_origin: bool,
    pub row: String,
}
