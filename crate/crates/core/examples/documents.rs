// Reading a presentation document and writing basis tables as JSON.
//
// cargo run --example documents

use std::error::Error;

use rootadj::basis::{enumerate_basis, table_diff};
use rootadj::document::{make_algebra, parse_presentation, table_from_json, table_to_json, to_document};

const KU5: &str = r#"{
    "coeffs": {"kind": "ZpLocal", "p": 5},
    "m": 4,
    "gens": [
        {"name": "v1", "deg": 8, "wt": 0, "kind": "polynomial"},
        {"name": "u", "deg": 2, "wt": 1, "kind": "polynomial"}
    ],
    "roots": [{"gen": "u", "m": 4, "target": "v1"}]
}"#;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alg = make_algebra(&parse_presentation(KU5)?)?;
    let table = enumerate_basis(&alg, (0, 12))?;
    let json = table_to_json(&table);
    println!("{json}");
    assert!(table_diff(&table_from_json(&json)?, &table)?.is_empty());
    println!("{}", serde_json::to_string(&to_document(&alg))?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
