// Presentations, exact bases and Poincaré data.
//
// cargo run --example basis_tables

use std::error::Error;

use rootadj::algebra::{GeneratorSpec, PresentedAlgebra};
use rootadj::basis::{enumerate_basis, poincare_per_weight};
use rootadj::coeffs::CoefficientRing;
use rootadj::document::render_table_text;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Z_(5)[x, y] ⊗ Λ(e) with x in weight 1 and y in weight -1
    let alg = PresentedAlgebra::builder(CoefficientRing::zp_local(5)?)
        .gen(GeneratorSpec::polynomial("x", 2, 1))
        .gen(GeneratorSpec::polynomial("y", 4, -1))
        .gen(GeneratorSpec::exterior("e", 3, 0))
        .build()?;

    let e = alg.generator("e")?;
    let x = alg.generator("x")?;
    let ex = alg.multiply(&e, &x);
    println!("e·x = {}", alg.format_element(&ex));
    println!("e·e = {}", alg.format_element(&alg.multiply(&e, &e)));

    let t = enumerate_basis(&alg, (0, 10))?;
    print!("{}", render_table_text(&t));
    for (wt, series) in poincare_per_weight(&t) {
        println!("weight {wt}: {series:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
