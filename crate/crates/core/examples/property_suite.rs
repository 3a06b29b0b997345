// Seeded random checks of weight additivity, graded commutativity,
// d² = 0, Leibniz and naturality.
//
// cargo run --example property_suite -- 42

use std::error::Error;

use rootadj::properties::run_property_suite;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let r = run_property_suite(seed, 250)?;
    println!("seed {seed}: {:?}, {} failures", r.checked, r.failures.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
