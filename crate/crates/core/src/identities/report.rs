use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combin::IntVector;
use crate::exactalg::{FieldElem, XPolynomial};
use crate::families::XRational;

/// Renderings longer than this are cut, with a marker.
pub const WITNESS_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A failing instance: the sub-identity, its indices and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub indices: BTreeMap<String, Vec<i32>>,
    pub lhs: String,
    pub rhs: String,
}

/// A bounded range of indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub n: usize,
    pub min_entry: i32,
    pub max_entry: i32,
    pub max_weight: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub shards: Vec<Shard>,
    pub cases: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: Params,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: Option<u64>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line per report plus one per witness.
    pub fn render_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        let mut out = format!("{status} {} ({} cases", self.identity, self.params.cases);
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!(", {ms} ms"));
        }
        out.push(')');
        for w in &self.witnesses {
            let idx: Vec<String> =
                w.indices.iter().map(|(k, v)| format!("{k}=({})", IntVector::from(v.as_slice()))).collect();
            out.push_str(&format!("\n  {} [{}]\n    lhs: {}\n    rhs: {}", w.case, idx.join(" "), w.lhs, w.rhs));
        }
        out
    }
}

pub(crate) fn truncate(mut s: String) -> String {
    if s.len() > WITNESS_LIMIT {
        let total = s.len();
        let mut cut = WITNESS_LIMIT;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(&format!(" ...[truncated, {total} bytes]"));
    }
    s
}

/// Canonical text of a compared value.
pub trait Render {
    fn render_text(&self) -> String;
}

impl Render for FieldElem {
    fn render_text(&self) -> String {
        self.render()
    }
}

impl Render for XPolynomial {
    fn render_text(&self) -> String {
        self.render()
    }
}

impl Render for XRational {
    fn render_text(&self) -> String {
        self.render()
    }
}

impl Render for i64 {
    fn render_text(&self) -> String {
        self.to_string()
    }
}

/// Collects witnesses for one case.
pub struct Case {
    indices: BTreeMap<String, Vec<i32>>,
    witnesses: Vec<Witness>,
}

impl Case {
    pub fn new(indices: &[(&str, &IntVector)]) -> Self {
        Case {
            indices: indices.iter().map(|(k, v)| (k.to_string(), v.entries().to_vec())).collect(),
            witnesses: Vec::new(),
        }
    }

    pub fn check<T: Render + PartialEq>(&mut self, case: &str, lhs: &T, rhs: &T) {
        if lhs != rhs {
            self.fail(case, lhs.render_text(), rhs.render_text());
        }
    }

    pub fn check_true(&mut self, case: &str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(case, detail(), "true".to_string());
        }
    }

    pub fn fail(&mut self, case: &str, lhs: String, rhs: String) {
        self.witnesses.push(Witness {
            case: case.to_string(),
            indices: self.indices.clone(),
            lhs: truncate(lhs),
            rhs: truncate(rhs),
        });
    }

    pub fn into_witnesses(self) -> Vec<Witness> {
        self.witnesses
    }
}

/// Runs `body`, turning an error into a witness.
pub fn run_case<E: std::fmt::Display>(
    indices: &[(&str, &IntVector)],
    body: impl FnOnce(&mut Case) -> Result<(), E>,
) -> Vec<Witness> {
    let mut case = Case::new(indices);
    if let Err(e) = body(&mut case) {
        case.fail("evaluation error", format!("error: {e}"), String::new());
    }
    case.into_witnesses()
}
