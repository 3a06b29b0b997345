// Frobenius orbits on the weights, which splittings apply, and the HH
// table of a root adjunction assembled from HH(A) and HH(A | a).
//
// cargo run --example splitting

use std::error::Error;

use rootadj::document::render_table_text;
use rootadj::root::{preset, PresetParams};
use rootadj::splitting::{assemble_from_algebra, frobenius_orbits, tc_k_summand_report, thh_splitting_check};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (m, p) in [(4, 5), (4, 3), (6, 3)] {
        println!("Z/{m} under ·{p}: {}", frobenius_orbits(m, p)?);
    }
    for (m, p, connective) in [(4, 5, true), (3, 3, true), (24, 5, false)] {
        let r = tc_k_summand_report(m, p, true, connective)?;
        println!("m = {m}, p = {p}: {}", r.claims.join("; "));
    }

    let ell = preset("ell", PresetParams::new(5))?;
    let t = assemble_from_algebra(&ell.algebra, "v1", 4, (0, 20))?;
    print!("{}", render_table_text(&t));
    print!("{}", thh_splitting_check(&ell.algebra, "v1", 4, (0, 80))?.render_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
