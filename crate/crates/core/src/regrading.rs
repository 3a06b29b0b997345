//! Grading-change functors on basis tables and, where they make sense, on
//! presentations (by reweighting generators).
//!
//! | functor | effect on weights |
//! |---|---|
//! | collapse to `n` | `i ↦ i mod n`, slices with equal residue are merged |
//! | dilate by `s` | `i ↦ s·i` |
//! | restrict by `s` | keep weights in `sZ`, `s·i ↦ i` |
//! | weight-zero part | keep weight 0 only, as an ungraded table |
//! | include weight zero | re-embed an ungraded table in weight 0 of `Z/m` |
//! | connective cover | drop negative weights |
//! | weight-zero truncation | keep weight 0 only |

use crate::algebra::{GeneratorSpec, PresentedAlgebra};
use crate::basis::BasisTable;
use crate::error::{Error, Result};
use crate::grading::{Bidegree, WeightMonoid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegradingFunctor {
    Collapse(u64),
    Restrict(i64),
    Dilate(i64),
    IncludeWeightZero(u64),
    EvalWeightZero,
    WeightConnectiveCover,
    WeightZeroTruncation,
}

impl RegradingFunctor {
    pub fn apply(&self, t: &BasisTable) -> Result<BasisTable> {
        match *self {
            RegradingFunctor::Collapse(n) => collapse_weights(t, n),
            RegradingFunctor::Restrict(s) => restrict_weights(t, s),
            RegradingFunctor::Dilate(s) => dilate_weights(t, s),
            RegradingFunctor::IncludeWeightZero(m) => include_weight_zero(t, m),
            RegradingFunctor::EvalWeightZero => Ok(weight_zero_part(t)),
            RegradingFunctor::WeightConnectiveCover => weight_connective_cover(t),
            RegradingFunctor::WeightZeroTruncation => weight_zero_truncation(t),
        }
    }
}

fn compatible(from: u64, to: u64) -> bool {
    match (from, to) {
        (0, _) => true,
        (_, 0) => false,
        (f, t) => f % t == 0,
    }
}

fn remap(t: &BasisTable, modulus: u64, f: impl Fn(i64) -> Option<i64>) -> BasisTable {
    let mut out = BasisTable::new(t.window, modulus);
    for (b, labels) in &t.entries {
        if let Some(wt) = f(b.wt) {
            out.extend(Bidegree::new(b.deg, wt), labels.iter().cloned());
        }
    }
    out
}

/// Left Kan extension along `Z → Z/n` or `Z/(sn) → Z/n`.
pub fn collapse_weights(t: &BasisTable, n: u64) -> Result<BasisTable> {
    if !compatible(t.modulus, n) {
        return Err(Error::IncompatibleModulus {
            from: t.modulus,
            to: n,
        });
    }
    Ok(remap(t, n, Some))
}

fn require_integral(t: &BasisTable) -> Result<()> {
    if t.modulus != 0 {
        return Err(Error::NonZeroModulus(t.modulus));
    }
    Ok(())
}

pub fn dilate_weights(t: &BasisTable, s: i64) -> Result<BasisTable> {
    require_integral(t)?;
    if s == 0 {
        return Err(Error::ZeroDilation);
    }
    Ok(remap(t, 0, |w| Some(s * w)))
}

pub fn restrict_weights(t: &BasisTable, s: i64) -> Result<BasisTable> {
    require_integral(t)?;
    if s == 0 {
        return Err(Error::ZeroDilation);
    }
    Ok(remap(t, 0, |w| (w % s == 0).then(|| w / s)))
}

/// Evaluation at weight 0. The result is an ungraded table, i.e. a
/// `Z`-graded one concentrated in weight 0.
pub fn weight_zero_part(t: &BasisTable) -> BasisTable {
    remap(t, 0, |w| (w == 0).then_some(0))
}

pub fn include_weight_zero(t: &BasisTable, m: u64) -> Result<BasisTable> {
    if let Some(b) = t.entries.keys().find(|b| b.wt != 0) {
        return Err(Error::NotConcentrated(b.wt));
    }
    Ok(t.with_modulus(m))
}

pub fn weight_connective_cover(t: &BasisTable) -> Result<BasisTable> {
    require_integral(t)?;
    Ok(remap(t, 0, |w| (w >= 0).then_some(w)))
}

pub fn weight_zero_truncation(t: &BasisTable) -> Result<BasisTable> {
    require_integral(t)?;
    Ok(remap(t, 0, |w| (w == 0).then_some(0)))
}

fn reweighted(
    alg: &PresentedAlgebra,
    modulus: u64,
    f: impl Fn(i64) -> i64,
) -> Result<PresentedAlgebra> {
    let gens: Vec<GeneratorSpec> = alg
        .generators()
        .iter()
        .map(|g| GeneratorSpec {
            bidegree: Bidegree::new(g.bidegree.deg, f(g.bidegree.wt)),
            ..g.clone()
        })
        .collect();
    PresentedAlgebra::new(
        alg.coeffs(),
        WeightMonoid::new(modulus),
        gens,
        alg.roots().to_vec(),
    )
}

pub fn collapse_algebra(alg: &PresentedAlgebra, n: u64) -> Result<PresentedAlgebra> {
    let from = alg.weights().modulus;
    if !compatible(from, n) {
        return Err(Error::IncompatibleModulus { from, to: n });
    }
    reweighted(alg, n, |w| w)
}

pub fn dilate_algebra(alg: &PresentedAlgebra, s: i64) -> Result<PresentedAlgebra> {
    let m = alg.weights().modulus;
    if m != 0 {
        return Err(Error::NonZeroModulus(m));
    }
    if s == 0 {
        return Err(Error::ZeroDilation);
    }
    reweighted(alg, 0, |w| s * w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{enumerate_basis, table_diff};
    use crate::coeffs::CoefficientRing;

    fn zp(p: u64) -> CoefficientRing {
        CoefficientRing::zp_local(p).unwrap()
    }

    fn free(name: &str, deg: i64, wt: i64) -> PresentedAlgebra {
        PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::polynomial(name, deg, wt))
            .build()
            .unwrap()
    }

    #[test]
    fn collapse_to_own_modulus_is_identity() {
        let alg = PresentedAlgebra::builder(zp(5))
            .modulus(4)
            .gen(GeneratorSpec::polynomial("u", 2, 1))
            .build()
            .unwrap();
        let t = enumerate_basis(&alg, (0, 20)).unwrap();
        assert_eq!(collapse_weights(&t, 4).unwrap(), t);
        assert_eq!(collapse_weights(&t, 3).unwrap_err().name(), "IncompatibleModulus");
    }

    #[test]
    fn collapse_negative_weight_generator() {
        // oracle: sigma^j has weight -j, which lands in (-j mod 3)
        let t = enumerate_basis(&free("s", 2, -1), (0, 20)).unwrap();
        let c = collapse_weights(&t, 3).unwrap();
        for j in 0..=10i64 {
            let wt = (-j).rem_euclid(3);
            assert_eq!(c.labels(Bidegree::new(2 * j, wt)).len(), 1, "j = {j}");
        }
        assert_eq!(c.total_rank(), t.total_rank());
    }

    #[test]
    fn dilate_restrict_triangle() {
        let t = enumerate_basis(&free("s", 2, 1), (0, 30)).unwrap();
        for s in [-3, 2, 5] {
            assert_eq!(restrict_weights(&dilate_weights(&t, s).unwrap(), s).unwrap(), t);
        }
        assert_eq!(dilate_weights(&t, 0).unwrap_err(), Error::ZeroDilation);
    }

    #[test]
    fn dilation_matches_reweighted_generator() {
        let t = enumerate_basis(&free("s", 2, 1), (0, 30)).unwrap();
        let direct = enumerate_basis(&free("s", 2, 4), (0, 30)).unwrap();
        assert!(table_diff(&dilate_weights(&t, 4).unwrap(), &direct).unwrap().is_empty());
        let alg = dilate_algebra(&free("s", 2, 1), 4).unwrap();
        assert_eq!(enumerate_basis(&alg, (0, 30)).unwrap(), direct);
    }

    #[test]
    fn restrict_form_algebra_by_two() {
        // Z[s2] ⊗ Λ(ds2), both of weight 1: s^j (2j, j), s^j ds (2j+3, j+1)
        let alg = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::polynomial("s2", 2, 1))
            .gen(GeneratorSpec::exterior("ds2", 3, 1))
            .build()
            .unwrap();
        let t = enumerate_basis(&alg, (0, 21)).unwrap();
        let r = restrict_weights(&t, 2).unwrap();
        let mut oracle = BasisTable::new((0, 21), 0);
        for j in 0..=10i64 {
            if j % 2 == 0 {
                oracle.push(Bidegree::new(2 * j, j / 2), format!("s2^{j}"));
            }
            if (j + 1) % 2 == 0 {
                oracle.push(Bidegree::new(2 * j + 3, (j + 1) / 2), format!("s2^{j}*ds2"));
            }
        }
        assert!(table_diff(&r, &oracle).unwrap().is_empty());
    }

    #[test]
    fn weight_zero_round_trip_and_errors() {
        let t = enumerate_basis(&free("v", 4, 0), (0, 12)).unwrap();
        assert_eq!(weight_zero_part(&include_weight_zero(&t, 4).unwrap()), t);
        let graded = enumerate_basis(&free("s", 2, 1), (0, 4)).unwrap();
        assert_eq!(
            include_weight_zero(&graded, 3).unwrap_err(),
            Error::NotConcentrated(1)
        );
        let trunc = weight_zero_truncation(&graded).unwrap();
        assert_eq!(trunc.total_rank(), 1);
        assert_eq!(trunc.labels(Bidegree::ZERO), ["1"]);
    }

    #[test]
    fn connective_cover_drops_negative_weights() {
        let alg = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::laurent("s", 2, 1))
            .gen(GeneratorSpec::exterior("ds", 3, 1))
            .build()
            .unwrap();
        let t = enumerate_basis(&alg, (-10, 10)).unwrap();
        let cover = weight_connective_cover(&t).unwrap();
        assert!(cover.entries.keys().all(|b| b.wt >= 0));
        assert_eq!(
            cover.total_rank(),
            t.entries.iter().filter(|(b, _)| b.wt >= 0).map(|(_, l)| l.len()).sum::<usize>()
        );
        assert_eq!(weight_connective_cover(&cover).unwrap(), cover);
        let modular = t.with_modulus(2);
        assert_eq!(weight_connective_cover(&modular).unwrap_err(), Error::NonZeroModulus(2));
    }
}
