//! The catalog of claims checked by [`crate::verify::verify_paper`].
//!
//! Claims live in `data/claims.jsonl`, one JSON record per line, and are
//! compiled into the crate. Hypotheses and predictions are structured so the
//! checker can evaluate them at concrete parameter points.

use serde::{Deserialize, Serialize};

use crate::bounds::stated_upper_bound;

const CATALOG: &str = include_str!("../data/claims.jsonl");

/// A parameter point `(n, k, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub n: u64,
    pub k: u64,
    pub q: u32,
}

impl Point {
    pub fn new(n: u64, k: u64, q: u32) -> Self {
        Point { n, k, q }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Hypothesis {
    Always,
    AllOf { parts: Vec<Hypothesis> },
    QEquals { q: u32 },
    KEquals { k: u64 },
    KEqualsNMinus { offset: u64 },
    KAtLeast { min: u64 },
    NAtLeast { min: u64 },
    NResidue { modulus: u64, residues: Vec<u64> },
    NDivisibleBy { divisor: u64 },
    NNotDivisibleBy { divisor: u64 },
}

impl Hypothesis {
    pub fn accepts(&self, pt: &Point) -> bool {
        match self {
            Hypothesis::Always => true,
            Hypothesis::AllOf { parts } => parts.iter().all(|h| h.accepts(pt)),
            Hypothesis::QEquals { q } => pt.q == *q,
            Hypothesis::KEquals { k } => pt.k == *k,
            Hypothesis::KEqualsNMinus { offset } => pt.n >= *offset && pt.k == pt.n - offset,
            Hypothesis::KAtLeast { min } => pt.k >= *min,
            Hypothesis::NAtLeast { min } => pt.n >= *min,
            Hypothesis::NResidue { modulus, residues } => residues.contains(&(pt.n % modulus)),
            Hypothesis::NDivisibleBy { divisor } => pt.n % divisor == 0,
            Hypothesis::NNotDivisibleBy { divisor } => pt.n % divisor != 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    StatedBound,
    FloorThreeNOverEight,
    N,
    NMinusOne,
    Two,
}

impl Formula {
    pub fn eval(self, pt: &Point) -> u64 {
        match self {
            Formula::StatedBound => {
                stated_upper_bound(pt.n, pt.k as u32, pt.q).expect("k >= 1 at claim points")
            }
            Formula::FloorThreeNOverEight => 3 * pt.n / 8,
            Formula::N => pt.n,
            Formula::NMinusOne => pt.n.saturating_sub(1),
            Formula::Two => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Prediction {
    /// A structural statement checked on sampled or listed codes.
    Property { description: String },
    /// `LCD[n,k]_q <= formula`.
    UpperBound { formula: Formula },
    /// `LCD[n,k]_q == formula`.
    Equals { formula: Formula },
    /// `LCD[n+1,k]_q >= LCD[n,k]_q`.
    Monotone,
    /// A named construction is LCD with the given distance and Gram matrix.
    Construction {
        family: String,
        distance: Formula,
        printed_gram: Option<Vec<Vec<u8>>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub statement: String,
    pub hypothesis: Hypothesis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_hypothesis: Option<String>,
    pub prediction: Prediction,
}

/// Parses a catalog in the `claims.jsonl` format. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<ClaimRecord>, serde_json::Error> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(serde_json::from_str)
        .collect()
}

/// The built-in claim catalog.
pub fn paper_claims() -> Vec<ClaimRecord> {
    parse_catalog(CATALOG).expect("built-in claim catalog is well formed")
}

/// The raw text of the built-in catalog.
pub fn catalog_text() -> &'static str {
    CATALOG
}
