// Adjoining roots: the hypothesis report, ku from ell, quotients and the
// named presets.
//
// cargo run --example root_adjunction

use std::error::Error;

use rootadj::basis::enumerate_basis;
use rootadj::document::render_table_text;
use rootadj::root::{adjoin_root, check_hypothesis, eliminate_roots, preset, preset_from_str, quotient_by, PresetParams, RootAdjunctionRequest};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ell = preset("ell", PresetParams::new(5))?;
    let req = RootAdjunctionRequest::parse(ell.algebra.clone(), "v1", 4)?;
    println!("{:?}", check_hypothesis(&req));

    let ku = adjoin_root(&req)?;
    print!("{}", render_table_text(&enumerate_basis(&ku, (0, 16))?));

    // a fifth root of v1^5 is admissible, but p | m makes it wild
    let wild = RootAdjunctionRequest::parse(ell.algebra.clone(), "v1^5", 5)?;
    let report = check_hypothesis(&wild);
    println!("m = 5: accepted {}, tame {}", report.accepted, report.tame);

    let (plain, iso) = eliminate_roots(&ku)?;
    println!("ku as a free algebra: {:?}", plain.generators().iter().map(|g| &g.name).collect::<Vec<_>>());
    println!("v1 ↦ {}", plain.format_element(iso.image_of("v1")?));

    let ku_mod_z = quotient_by(&ku, &ku.generator("z")?)?;
    print!("ku/z\n{}", render_table_text(&enumerate_basis(&ku_mod_z, (0, 16))?));

    for name in ["ko(7)", "Kn(2,3)", "two_periodic_K(1,5)", "En_hat(2,5,2)"] {
        let p = preset_from_str(name)?;
        println!("{name}: {}", p.description);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
