//! Weight-splitting combinatorics: Frobenius orbits on `Z/m`, which
//! summand decompositions of TC and K-theory apply, and assembly of the
//! HH table of a root adjunction from `HH(A)` and `HH(A | a)`.

use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::algebra::{Element, PresentedAlgebra};
use crate::basis::{enumerate_basis, table_diff, BasisTable};
use crate::error::{Error, Result};
use crate::grading::Bidegree;
use crate::hkr::{hh, log_hh};
use crate::report::{BidegreeCheck, CheckReport};
use crate::root::{adjoin_root, check_hypothesis, RootAdjunctionRequest};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub m: u64,
    pub p: u64,
    pub blocks: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn is_full_splitting(&self) -> bool {
        self.blocks.len() as u64 == self.m
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(u64::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        f.write_str(&blocks.join(" "))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orbits of `w ↦ p·w` on `Z/m` when `gcd(p, m) = 1`; otherwise only
/// weight zero is split off. Blocks are sorted, and ordered by their least
/// element.
pub fn frobenius_orbits(m: u64, p: u64) -> Result<OrbitPartition> {
    if m == 0 {
        return Err(Error::BadWeight("m must be at least 1".into()));
    }
    let blocks = if gcd(p, m) != 1 {
        let mut blocks = vec![vec![0]];
        if m > 1 {
            blocks.push((1..m).collect());
        }
        blocks
    } else {
        let mut seen = vec![false; m as usize];
        let mut blocks = Vec::new();
        for start in 0..m {
            if seen[start as usize] {
                continue;
            }
            let mut block = Vec::new();
            let mut w = start;
            while !seen[w as usize] {
                seen[w as usize] = true;
                block.push(w);
                w = w * (p % m) % m;
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    };
    Ok(OrbitPartition { m, p, blocks })
}

/// Which splitting statements apply to `A → A(√[m]{a})`. Purely
/// declarative: nothing here computes TC or K-theory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandReport {
    pub m: u64,
    pub p: u64,
    pub tame: bool,
    pub positive_degree: bool,
    pub connective: bool,
    pub orbits: OrbitPartition,
    /// Number of TC summands, one per orbit block.
    pub tc_summands: Option<usize>,
    pub k_summands: Option<usize>,
    /// The K-theory statement only holds `T(i)`-locally for `i` at least this.
    pub telescopic_from: Option<u32>,
    pub claims: Vec<String>,
}

pub fn tc_k_summand_report(m: u64, p: u64, positive_degree: bool, connective: bool) -> Result<SummandReport> {
    let orbits = frobenius_orbits(m, p)?;
    let tame = !m.is_multiple_of(p);
    let blocks = orbits.blocks.len();
    let mut claims = Vec::new();
    let (mut tc, mut k, mut telescopic) = (None, None, None);
    if !tame {
        claims.push(format!("no splitting claimed: p = {p} divides m = {m}"));
    } else if connective {
        tc = Some(blocks);
        claims.push(format!(
            "TC(A(√a)) splits into {blocks} summands indexed by {orbits}, weight 0 summand = TC(A)"
        ));
        if positive_degree {
            k = Some(blocks);
            claims.push(format!(
                "K(A(√a)) splits into {blocks} summands, weight 0 summand = K(A)"
            ));
        } else {
            claims.push("deg(a) = 0: no K-theory statement".to_string());
        }
    } else if positive_degree {
        k = Some(2);
        telescopic = Some(2);
        claims.push(
            "K(A) → K(A(√a)) is the inclusion of a wedge summand T(i)-locally for every i ≥ 2: 2 summands"
                .to_string(),
        );
    } else {
        claims.push("non-connective with deg(a) = 0: no splitting claimed".to_string());
    }
    if tame && orbits.is_full_splitting() {
        claims.push("full splitting: p ≡ 1 mod m".to_string());
    }
    Ok(SummandReport {
        m,
        p,
        tame,
        positive_degree,
        connective,
        orbits,
        tc_summands: tc,
        k_summands: k,
        telescopic_from: telescopic,
        claims,
    })
}

/// Weight 0 is `thh_a`; weight `i` is `log_thh_a` moved up `ik` degrees.
/// `log_thh_a` should cover `[lo − (m−1)k, hi]` for the result to be
/// complete on `thh_a`'s window.
pub fn assemble_thh_table(thh_a: &BasisTable, log_thh_a: &BasisTable, m: u64, k: i64) -> Result<BasisTable> {
    for t in [thh_a, log_thh_a] {
        if let Some(b) = t.entries.keys().find(|b| b.wt != 0) {
            return Err(Error::InputNotWeightZero(b.wt));
        }
    }
    if m == 0 {
        return Err(Error::BadWeight("m must be at least 1".into()));
    }
    let window = thh_a.window;
    let mut out = BasisTable::new(window, m);
    for (b, labels) in &thh_a.entries {
        out.extend(*b, labels.iter().cloned());
    }
    for i in 1..m as i64 {
        let shift = i * k;
        for (b, labels) in &log_thh_a.entries {
            out.extend(
                Bidegree::new(b.deg + shift, i),
                labels.iter().map(|l| format!("Σ^{shift}({l})")),
            );
        }
    }
    Ok(out)
}

fn root_request(alg: &PresentedAlgebra, a: &Element, m: u32) -> Result<(RootAdjunctionRequest, i64)> {
    let req = RootAdjunctionRequest::new(alg.clone(), a.clone(), m);
    let report = check_hypothesis(&req);
    if !report.accepted {
        return Err(Error::HypothesisFailed(report.problems.join("; ")));
    }
    if !report.tame {
        return Err(Error::WildPrime {
            p: alg.prime(),
            m: m as u64,
        });
    }
    Ok((req, report.k.expect("accepted requests have k")))
}

/// `assemble_thh_table(hh(A), log_hh(A, g), m, k)` with the windows chosen
/// so the result is complete on `window`.
pub fn assemble_from_algebra(alg: &PresentedAlgebra, g: &str, m: u32, window: (i64, i64)) -> Result<BasisTable> {
    let a = alg.generator(g)?;
    let (_, k) = root_request(alg, &a, m)?;
    let thh = hh(alg)?.basis(window)?;
    let low = window.0 - (m as i64 - 1) * k.max(0);
    let log = log_hh(alg, g)?.basis((low, window.1))?;
    assemble_thh_table(&thh, &log, m as u64, k)
}

fn compare(check: &str, params: serde_json::Value, lhs: &BasisTable, rhs: &BasisTable) -> Result<CheckReport> {
    let bad = table_diff(lhs, rhs)?;
    let mut keys: Vec<Bidegree> = lhs.entries.keys().chain(rhs.entries.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let rows = keys
        .into_iter()
        .map(|b| BidegreeCheck {
            deg: b.deg,
            wt: b.wt,
            lhs_rank: lhs.rank(b),
            rhs_rank: rhs.rank(b),
            ok: !bad.contains(&b),
        })
        .collect();
    Ok(CheckReport::new(check, params, lhs.window, rows, true, Vec::new()))
}

/// The assembled table against `hh` of the adjoined algebra, computed
/// directly.
pub fn thh_splitting_check(alg: &PresentedAlgebra, g: &str, m: u32, window: (i64, i64)) -> Result<CheckReport> {
    let assembled = assemble_from_algebra(alg, g, m, window)?;
    let (req, k) = root_request(alg, &alg.generator(g)?, m)?;
    let direct = hh(&adjoin_root(&req)?)?.basis(window)?;
    compare(
        "split-thh",
        json!({"g": g, "m": m, "k": k, "p": alg.prime()}),
        &direct,
        &assembled,
    )
}

/// Each weight slice of `A(√[m]{a})` against the basis of `A` shifted by `ik`.
pub fn adjunction_splitting_check(alg: &PresentedAlgebra, a: &Element, m: u32, window: (i64, i64)) -> Result<CheckReport> {
    let req = RootAdjunctionRequest::new(alg.clone(), a.clone(), m);
    let k = check_hypothesis(&req).k.unwrap_or(0);
    let adjoined = enumerate_basis(&adjoin_root(&req)?, window)?;
    let mut expected = BasisTable::new(window, m as u64);
    for i in 0..m as i64 {
        let base = enumerate_basis(alg, (window.0 - i * k, window.1 - i * k))?;
        for (b, labels) in &base.entries {
            expected.extend(Bidegree::new(b.deg + i * k, i), labels.iter().cloned());
        }
    }
    compare(
        "adjoin-split",
        json!({"a": alg.format_element(a), "m": m, "k": k, "p": alg.prime()}),
        &adjoined,
        &expected,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;
    use crate::coeffs::CoefficientRing;

    fn blocks(m: u64, p: u64) -> Vec<Vec<u64>> {
        frobenius_orbits(m, p).unwrap().blocks
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(blocks(4, 5), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(blocks(4, 3), vec![vec![0], vec![1, 3], vec![2]]);
        assert_eq!(blocks(6, 3), vec![vec![0], vec![1, 2, 3, 4, 5]]);
        assert_eq!(blocks(1, 7), vec![vec![0]]);
        assert_eq!(frobenius_orbits(4, 3).unwrap().to_string(), "{0} {1,3} {2}");
    }

    #[test]
    fn summand_reports() {
        let r = tc_k_summand_report(4, 5, true, true).unwrap();
        assert_eq!((r.tc_summands, r.k_summands), (Some(4), Some(4)));
        assert!(r.claims.iter().any(|c| c.contains("weight 0 summand = K(A)")));
        let wild = tc_k_summand_report(3, 3, true, true).unwrap();
        assert!(!wild.tame);
        assert_eq!((wild.tc_summands, wild.k_summands), (None, None));
        let nc = tc_k_summand_report(24, 5, true, false).unwrap();
        assert_eq!((nc.k_summands, nc.telescopic_from), (Some(2), Some(2)));
    }

    #[test]
    fn assemble_examples() {
        let mut unit = BasisTable::new((0, 10), 0);
        unit.push(Bidegree::ZERO, "1");
        let out = assemble_thh_table(&unit, &unit, 2, 2).unwrap();
        assert_eq!(out.rank(Bidegree::ZERO), 1);
        assert_eq!(out.rank(Bidegree::new(2, 1)), 1);
        assert_eq!(out.total_rank(), 2);
        let same = assemble_thh_table(&unit, &unit, 1, 2).unwrap();
        assert!(table_diff(&same, &unit).unwrap().is_empty());
        let mut graded = BasisTable::new((0, 10), 0);
        graded.push(Bidegree::new(2, 1), "x");
        assert_eq!(
            assemble_thh_table(&graded, &unit, 2, 2).unwrap_err(),
            Error::InputNotWeightZero(1)
        );
    }

    #[test]
    fn assembly_matches_direct_computation() {
        let ell = PresentedAlgebra::builder(CoefficientRing::zp_local(5).unwrap())
            .gen(GeneratorSpec::polynomial("v1", 8, 0))
            .build()
            .unwrap();
        let r = thh_splitting_check(&ell, "v1", 4, (0, 80)).unwrap();
        assert!(r.passed(), "{}", r.render_text());
        let v1 = ell.generator("v1").unwrap();
        assert!(adjunction_splitting_check(&ell, &v1, 4, (0, 80)).unwrap().passed());
    }
}
