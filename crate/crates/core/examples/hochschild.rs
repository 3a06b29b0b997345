// HKR models of HH and log HH, the Connes operator, induced maps and the
// weight-zero isomorphism check.
//
// cargo run --example hochschild

use std::error::Error;

use rootadj::algebra::{GeneratorSpec, PresentedAlgebra};
use rootadj::coeffs::CoefficientRing;
use rootadj::document::render_table_text;
use rootadj::hkr::{describe_image, hh, hh_to_log_hh, induced_hh_map, log_hh, weight_zero_iso_check};
use rootadj::map::AlgebraMap;
use rootadj::regrading::collapse_algebra;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let z5 = CoefficientRing::zp_local(5)?;
    let sigma = PresentedAlgebra::builder(z5)
        .gen(GeneratorSpec::polynomial("s2", 2, 1))
        .build()?;

    let model = hh(&sigma)?;
    let a = model.algebra();
    let s3 = a.pow(&a.generator("s2")?, 3);
    println!("d(s2^3) = {}", a.format_element(&model.connes_d(&s3)));
    print!("HH\n{}", render_table_text(&model.basis((0, 9))?));
    print!("log HH\n{}", render_table_text(&log_hh(&sigma, "s2")?.basis((0, 9))?));

    let phi = hh_to_log_hh(&sigma, "s2")?;
    println!("{}", describe_image(&phi, &phi.source().generator("ds2")?));

    let s4 = PresentedAlgebra::builder(z5)
        .gen(GeneratorSpec::polynomial("s4", 4, 0))
        .build()?;
    // s4 ↦ s2^2 only respects weights once they are read mod 2
    let target = collapse_algebra(&sigma, 2)?;
    let square = target.pow(&target.generator("s2")?, 2);
    let f = AlgebraMap::new(s4, target, vec![("s4".into(), square)])?;
    let hf = induced_hh_map(&f)?;
    println!("{}", describe_image(&hf, &hf.source().generator("ds4")?));

    for (m, k, p) in [(2, 2, 3), (3, 2, 3)] {
        let r = weight_zero_iso_check(m, k, p, (0, 30))?;
        print!("{}", r.render_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
