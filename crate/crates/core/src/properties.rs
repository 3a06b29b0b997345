//! Seeded randomized checks of the structural identities: weight
//! additivity, graded commutativity, `d² = 0`, the Leibniz rule and
//! naturality of induced maps.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Element, GeneratorSpec, Monomial, PresentedAlgebra};
use crate::basis::enumerate_monomials;
use crate::coeffs::{CoefficientRing, Scalar};
use crate::error::Result;
use crate::grading::Bidegree;
use crate::hkr::{hh, induced_hh_map, log_hh, HkrModule};
use crate::map::AlgebraMap;

struct Case {
    name: &'static str,
    module: HkrModule,
    pools: Vec<Vec<Monomial>>,
    /// An induced map out of `module` and the model it lands in.
    naturality: Option<(AlgebraMap, HkrModule)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub pairs: usize,
    /// property name → number of instances checked
    pub checked: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn pools(alg: &PresentedAlgebra, window: (i64, i64)) -> Result<Vec<Vec<Monomial>>> {
    let mut by: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
    for m in enumerate_monomials(alg, window)? {
        by.entry(alg.monomial_bidegree(&m)).or_default().push(m);
    }
    Ok(by.into_values().collect())
}

fn case(name: &'static str, module: HkrModule, window: (i64, i64)) -> Result<Case> {
    let pools = pools(module.algebra(), window)?;
    Ok(Case {
        name,
        module,
        pools,
        naturality: None,
    })
}

fn cases() -> Result<Vec<Case>> {
    let z5 = CoefficientRing::zp_local(5)?;
    let f5 = CoefficientRing::fp(5)?;
    let two = PresentedAlgebra::builder(z5)
        .gen(GeneratorSpec::polynomial("x", 2, 1))
        .gen(GeneratorSpec::polynomial("y", 4, -1))
        .build()?;
    let periodic = PresentedAlgebra::builder(f5)
        .gen(GeneratorSpec::laurent("v1", 8, 0))
        .gen(GeneratorSpec::polynomial("w", 2, 3).with_cap(5))
        .build()?;
    let modular = PresentedAlgebra::builder(CoefficientRing::zp_local(3)?)
        .modulus(4)
        .gen(GeneratorSpec::polynomial("s", 2, 1))
        .gen(GeneratorSpec::polynomial("u", 0, 2).with_cap(3))
        .build()?;

    let src = PresentedAlgebra::builder(z5).gen(GeneratorSpec::polynomial("s4", 4, 0)).build()?;
    let tgt = PresentedAlgebra::builder(z5).gen(GeneratorSpec::polynomial("s2", 2, 0)).build()?;
    let img = tgt.pow(&tgt.generator("s2")?, 2);
    let f = induced_hh_map(&AlgebraMap::new(src.clone(), tgt.clone(), vec![("s4".into(), img)])?)?;
    let mut natural = case("hh(Z_(5)[s4]) → hh(Z_(5)[s2])", hh(&src)?, (0, 40))?;
    natural.naturality = Some((f, hh(&tgt)?));

    Ok(vec![
        case("hh(Z_(5)[x, y])", hh(&two)?, (0, 24))?,
        case("log_hh(Z_(5)[x, y] | x)", log_hh(&two, "x")?, (0, 24))?,
        case("hh(F_5[v1^±, w], w capped)", hh(&periodic)?, (-16, 24))?,
        case("hh(Z_(3)[s, u]), weights in Z/4", hh(&modular)?, (0, 16))?,
        natural,
    ])
}

fn random_element(rng: &mut ChaCha8Rng, alg: &PresentedAlgebra, pools: &[Vec<Monomial>]) -> Element {
    let pool = pools.choose(rng).expect("non-empty basis");
    let terms = pool.iter().filter_map(|m| {
        let c: i64 = rng.gen_range(-4..=4);
        (c != 0).then(|| (m.clone(), Scalar::from_integer(c.into())))
    });
    let x = alg.normalize(Element::from_terms(terms));
    if x.is_zero() {
        alg.monomial_element(pool[0].clone(), Scalar::from_integer(1.into()))
    } else {
        x
    }
}

fn sign(alg: &PresentedAlgebra, x: &Element, y: &Element) -> Scalar {
    let dx = alg.bidegree(x).map_or(0, |b| b.deg);
    let dy = alg.bidegree(y).map_or(0, |b| b.deg);
    let s: i64 = if (dx * dy) % 2 == 0 { 1 } else { -1 };
    Scalar::from_integer(s.into())
}

/// Runs `pairs` random element pairs, cycling through a fixed list of
/// presentations.
pub fn run_property_suite(seed: u64, pairs: usize) -> Result<PropertyReport> {
    let cases = cases()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut tick = |name: &str| *checked.entry(name.to_string()).or_default() += 1;
    for i in 0..pairs {
        let c = &cases[i % cases.len()];
        let alg = c.module.algebra();
        let x = random_element(&mut rng, alg, &c.pools);
        let y = random_element(&mut rng, alg, &c.pools);
        let show = |e: &Element| alg.format_element(e);
        let xy = alg.multiply(&x, &y);
        let yx = alg.multiply(&y, &x);

        tick("weight additivity");
        if !xy.is_zero() {
            let expected = (alg.bidegree(&x).unwrap() + alg.bidegree(&y).unwrap()).in_monoid(alg.weights());
            if alg.bidegree(&xy) != Some(expected) {
                failures.push(format!("[{}] bidegree of ({})·({}) is not {expected}", c.name, show(&x), show(&y)));
            }
        }

        tick("graded commutativity");
        if xy != alg.scale(&sign(alg, &x, &y), &yx) {
            failures.push(format!("[{}] ({})·({}) ≠ ±({})·({})", c.name, show(&x), show(&y), show(&y), show(&x)));
        }

        tick("d² = 0");
        if !c.module.connes_d(&c.module.connes_d(&x)).is_zero() {
            failures.push(format!("[{}] d²({}) ≠ 0", c.name, show(&x)));
        }

        tick("Leibniz");
        let lhs = c.module.connes_d(&xy);
        let one = Scalar::from_integer(1.into());
        let dx_sign = if alg.bidegree(&x).is_some_and(|b| b.is_odd()) { -one } else { one };
        let rhs = alg.add(
            &alg.multiply(&c.module.connes_d(&x), &y),
            &alg.scale(&dx_sign, &alg.multiply(&x, &c.module.connes_d(&y))),
        );
        if lhs != rhs {
            failures.push(format!("[{}] Leibniz fails on ({}, {})", c.name, show(&x), show(&y)));
        }

        if let Some((f, target)) = &c.naturality {
            tick("naturality");
            if f.apply(&c.module.connes_d(&x)) != target.connes_d(&f.apply(&x)) {
                failures.push(format!("[{}] f∘d ≠ d∘f on {}", c.name, show(&x)));
            }
        }
    }
    Ok(PropertyReport {
        seed,
        pairs,
        checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_clean_and_reproducible() {
        let a = run_property_suite(0, 200).unwrap();
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a.checked["Leibniz"], 200);
        assert_eq!(a.checked["naturality"], 40);
        assert_eq!(run_property_suite(0, 200).unwrap(), a);
    }
}
