// The cofiber sequence HH(A) → HH(A | g) → Σ HH(A/g) and log-étaleness of
// tame root adjunctions, checked bidegree by bidegree.
//
// cargo run --example cofiber_and_etale

use std::error::Error;

use rootadj::algebra::{GeneratorSpec, PresentedAlgebra};
use rootadj::coeffs::CoefficientRing;
use rootadj::hkr::{cofiber_check, log_etale_check};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alg = PresentedAlgebra::builder(CoefficientRing::zp_local(5)?)
        .gen(GeneratorSpec::polynomial("v1", 8, 0))
        .gen(GeneratorSpec::polynomial("s4", 4, 1))
        .build()?;
    for g in ["v1", "s4"] {
        print!("{}", cofiber_check(&alg, g, (0, 40))?.render_text());
    }

    let base = PresentedAlgebra::builder(CoefficientRing::fp(5)?)
        .gen(GeneratorSpec::polynomial("v2", 48, 0))
        .build()?;
    let r = log_etale_check(&base, "v2", 24, (0, 120))?;
    print!("{}", r.render_text());
    match log_etale_check(&base, "v2", 5, (0, 120)) {
        Err(e) => println!("m = 5: {e}"),
        Ok(_) => unreachable!("p divides m"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
