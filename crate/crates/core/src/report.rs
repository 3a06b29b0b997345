//! Structured results of the executable checks.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BidegreeCheck {
    pub deg: i64,
    pub wt: i64,
    pub lhs_rank: usize,
    pub rhs_rank: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub window: (i64, i64),
    pub per_bidegree: Vec<BidegreeCheck>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    /// Verdict is PASS iff every row is ok and `extra_ok` holds.
    pub fn new(
        check: &str,
        params: Value,
        window: (i64, i64),
        per_bidegree: Vec<BidegreeCheck>,
        extra_ok: bool,
        notes: Vec<String>,
    ) -> Self {
        let ok = extra_ok && per_bidegree.iter().all(|r| r.ok);
        CheckReport {
            check: check.to_string(),
            params,
            window,
            per_bidegree,
            verdict: Verdict::from_ok(ok),
            notes,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &BidegreeCheck> {
        self.per_bidegree.iter().filter(|r| !r.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict}: {} {} on window [{}, {}], {} bidegrees checked",
            self.check,
            self.params,
            self.window.0,
            self.window.1,
            self.per_bidegree.len()
        );
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        for r in self.failures() {
            let _ = writeln!(
                out,
                "  fails at ({}, {}): lhs rank {}, rhs rank {}",
                r.deg, r.wt, r.lhs_rank, r.rhs_rank
            );
        }
        out
    }
}
