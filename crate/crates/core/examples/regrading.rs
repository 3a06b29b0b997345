// Changing the weight grading of a table: collapse, dilation,
// restriction and the weight-zero functors.
//
// cargo run --example regrading

use std::error::Error;

use rootadj::algebra::{GeneratorSpec, PresentedAlgebra};
use rootadj::basis::{enumerate_basis, table_diff};
use rootadj::coeffs::CoefficientRing;
use rootadj::document::render_table_text;
use rootadj::regrading::{collapse_weights, dilate_weights, restrict_weights, weight_connective_cover, RegradingFunctor};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alg = PresentedAlgebra::builder(CoefficientRing::zp_local(3)?)
        .gen(GeneratorSpec::laurent("s", 2, 1))
        .build()?;
    let t = enumerate_basis(&alg, (-6, 6))?;

    print!("collapsed to Z/3\n{}", render_table_text(&collapse_weights(&t, 3)?));
    print!("connective cover\n{}", render_table_text(&weight_connective_cover(&t)?));

    let there_and_back = restrict_weights(&dilate_weights(&t, 4)?, 4)?;
    assert!(table_diff(&there_and_back, &t)?.is_empty());
    println!("restrict ∘ dilate by 4 is the identity");

    let w0 = RegradingFunctor::EvalWeightZero.apply(&t)?;
    println!("weight zero part has rank {}", w0.total_rank());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
