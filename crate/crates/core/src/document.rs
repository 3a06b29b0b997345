//! JSON documents for presentations and basis tables, plus the fixed-width
//! text rendering of tables.
//!
//! Presentation:
//! ```json
//! {"coeffs": {"kind": "ZpLocal", "p": 5}, "m": 0,
//!  "gens": [{"name": "v1", "deg": 8, "wt": 0, "kind": "polynomial"}],
//!  "roots": [],
//!  "root": {"a": "v1", "m": 4}}
//! ```
//! `root` is optional and describes a root adjunction to perform on top of
//! the presentation. Basis tables:
//! ```json
//! {"window": [0, 16], "m": 0, "entries": [{"deg": 0, "wt": 0, "labels": ["1"]}]}
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{GeneratorKind, GeneratorSpec, PresentedAlgebra, RootRelation};
use crate::basis::BasisTable;
use crate::coeffs::CoefficientRing;
use crate::error::{Error, Result};
use crate::grading::{Bidegree, WeightMonoid};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub deg: i64,
    pub wt: i64,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootDoc {
    pub gen: String,
    pub m: u32,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdjunctionDoc {
    pub a: String,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub coeffs: CoefficientRing,
    #[serde(default)]
    pub m: u64,
    #[serde(default)]
    pub gens: Vec<GeneratorDoc>,
    #[serde(default)]
    pub roots: Vec<RootDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<AdjunctionDoc>,
}

pub fn parse_presentation(json: &str) -> Result<PresentationDoc> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}

/// Validates a presentation document and freezes its generator order.
pub fn make_algebra(doc: &PresentationDoc) -> Result<PresentedAlgebra> {
    let mut builder = PresentedAlgebra::builder(doc.coeffs).modulus(doc.m);
    for g in &doc.gens {
        let kind: GeneratorKind = g.kind.parse()?;
        let mut spec = GeneratorSpec::new(g.name.clone(), g.deg, g.wt, kind);
        spec.cap = g.cap;
        builder = builder.gen(spec);
    }
    for r in &doc.roots {
        builder = builder.root(&r.gen, r.m, &r.target);
    }
    builder.build()
}

pub fn to_document(alg: &PresentedAlgebra) -> PresentationDoc {
    let gens = alg
        .generators()
        .iter()
        .map(|g| GeneratorDoc {
            name: g.name.clone(),
            deg: g.bidegree.deg,
            wt: g.bidegree.wt,
            kind: g.kind.to_string(),
            cap: g.cap,
        })
        .collect();
    let roots = alg
        .roots()
        .iter()
        .map(|r: &RootRelation| RootDoc {
            gen: alg.generators()[r.generator].name.clone(),
            m: r.exponent,
            target: alg.format_element(&r.target),
        })
        .collect();
    PresentationDoc {
        coeffs: alg.coeffs(),
        m: alg.weights().modulus,
        gens,
        roots,
        root: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryDoc {
    pub deg: i64,
    pub wt: i64,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub window: (i64, i64),
    #[serde(default)]
    pub m: u64,
    pub entries: Vec<TableEntryDoc>,
}

impl From<&BasisTable> for TableDoc {
    fn from(t: &BasisTable) -> Self {
        TableDoc {
            window: t.window,
            m: t.modulus,
            entries: t
                .entries
                .iter()
                .map(|(b, l)| TableEntryDoc {
                    deg: b.deg,
                    wt: b.wt,
                    labels: l.clone(),
                })
                .collect(),
        }
    }
}

impl TableDoc {
    pub fn into_table(self) -> Result<BasisTable> {
        if self.window.0 > self.window.1 {
            return Err(Error::InvalidWindow(self.window.0, self.window.1));
        }
        let weights = WeightMonoid::new(self.m);
        let mut t = BasisTable::new(self.window, self.m);
        for e in self.entries {
            let b = Bidegree::new(e.deg, weights.normalize(e.wt));
            if !t.in_window(b.deg) {
                return Err(Error::Parse(format!("entry at degree {} lies outside the window", b.deg)));
            }
            t.extend(b, e.labels);
        }
        Ok(t)
    }
}

pub fn table_to_json(t: &BasisTable) -> String {
    serde_json::to_string_pretty(&TableDoc::from(t)).expect("table serializes")
}

pub fn table_from_json(json: &str) -> Result<BasisTable> {
    let doc: TableDoc = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_table()
}

/// Fixed-width rendering: one line per bidegree, sorted by (deg, wt).
pub fn render_table_text(t: &BasisTable) -> String {
    let weights = WeightMonoid::new(t.modulus);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# window [{}, {}], weights in {}",
        t.window.0, t.window.1, weights
    );
    let _ = writeln!(out, "{:>6} {:>6} {:>5}  basis", "deg", "wt", "rank");
    for (b, labels) in &t.entries {
        let _ = writeln!(
            out,
            "{:>6} {:>6} {:>5}  {}",
            b.deg,
            b.wt,
            labels.len(),
            labels.join(", ")
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{enumerate_basis, table_diff};

    const KU5: &str = r#"{
        "coeffs": {"kind": "ZpLocal", "p": 5},
        "m": 4,
        "gens": [
            {"name": "v1", "deg": 8, "wt": 0, "kind": "polynomial"},
            {"name": "u", "deg": 2, "wt": 1, "kind": "polynomial"}
        ],
        "roots": [{"gen": "u", "m": 4, "target": "v1"}]
    }"#;

    #[test]
    fn presentation_document_round_trip() {
        let doc = parse_presentation(KU5).unwrap();
        let alg = make_algebra(&doc).unwrap();
        assert_eq!(alg.weights().modulus, 4);
        let again = make_algebra(&to_document(&alg)).unwrap();
        assert_eq!(alg, again);
    }

    #[test]
    fn table_json_round_trip_compares_equal() {
        let alg = make_algebra(&parse_presentation(KU5).unwrap()).unwrap();
        let t = enumerate_basis(&alg, (0, 16)).unwrap();
        let back = table_from_json(&table_to_json(&t)).unwrap();
        assert_eq!(back, t);
        assert!(table_diff(&t, &back).unwrap().is_empty());
    }

    #[test]
    fn bad_kind_is_a_parse_error() {
        let doc = r#"{"coeffs": {"kind": "Fp", "p": 5},
            "gens": [{"name": "x", "deg": 2, "wt": 0, "kind": "free"}]}"#;
        let err = make_algebra(&parse_presentation(doc).unwrap()).unwrap_err();
        assert_eq!(err.name(), "Parse");
    }
}
