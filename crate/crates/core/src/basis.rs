//! Bigraded basis tables and monomial enumeration.

use std::collections::BTreeMap;

use crate::algebra::{Monomial, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::grading::{Bidegree, WeightMonoid};

/// Degreewise skeleton of a bigraded module: for each bidegree inside the
/// degree window, the ordered list of basis labels. Bidegrees of rank zero
/// are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisTable {
    pub window: (i64, i64),
    pub modulus: u64,
    pub entries: BTreeMap<Bidegree, Vec<String>>,
}

impl BasisTable {
    pub fn new(window: (i64, i64), modulus: u64) -> Self {
        BasisTable {
            window,
            modulus,
            entries: BTreeMap::new(),
        }
    }

    pub fn weights(&self) -> WeightMonoid {
        WeightMonoid::new(self.modulus)
    }

    pub fn in_window(&self, deg: i64) -> bool {
        self.window.0 <= deg && deg <= self.window.1
    }

    /// Appends a label; weights are reduced, out-of-window degrees dropped.
    pub fn push(&mut self, b: Bidegree, label: impl Into<String>) {
        if !self.in_window(b.deg) {
            return;
        }
        let b = b.in_monoid(self.weights());
        self.entries.entry(b).or_default().push(label.into());
    }

    pub fn extend(&mut self, b: Bidegree, labels: impl IntoIterator<Item = String>) {
        for l in labels {
            self.push(b, l);
        }
    }

    pub fn rank(&self, b: Bidegree) -> usize {
        self.entries.get(&b).map_or(0, Vec::len)
    }

    pub fn labels(&self, b: Bidegree) -> &[String] {
        self.entries.get(&b).map_or(&[], Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    /// Sum of ranks over all weights, per degree.
    pub fn ranks_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for (b, l) in &self.entries {
            *out.entry(b.deg).or_insert(0) += l.len();
        }
        out
    }

    pub fn weight_set(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.entries.keys().map(|b| b.wt).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn is_weight_zero_concentrated(&self) -> bool {
        self.entries.keys().all(|b| b.wt == 0)
    }

    /// Keeps only the entries of one weight.
    pub fn weight_slice(&self, wt: i64) -> BasisTable {
        let wt = self.weights().normalize(wt);
        BasisTable {
            window: self.window,
            modulus: self.modulus,
            entries: self
                .entries
                .iter()
                .filter(|(b, _)| b.wt == wt)
                .map(|(b, l)| (*b, l.clone()))
                .collect(),
        }
    }

    /// Moves every entry up by `by` degrees and clips to `window`.
    pub fn shifted(&self, by: i64, window: (i64, i64)) -> BasisTable {
        let mut out = BasisTable::new(window, self.modulus);
        for (b, l) in &self.entries {
            out.extend(b.shift_deg(by), l.iter().cloned());
        }
        out
    }

    /// Same entries, reinterpreted with another weight modulus.
    pub fn with_modulus(&self, modulus: u64) -> BasisTable {
        let mut out = BasisTable::new(self.window, modulus);
        for (b, l) in &self.entries {
            out.extend(*b, l.iter().cloned());
        }
        out
    }
}

/// Exponent range of one generator during enumeration.
#[derive(Debug, Clone, Copy)]
struct Range {
    lo: Option<i64>,
    hi: Option<i64>,
    deg: i64,
}

impl Range {
    /// (min, max) of `e * deg`; `None` means unbounded in that direction.
    fn degree_span(&self) -> (Option<i64>, Option<i64>) {
        if self.deg == 0 {
            return (Some(0), Some(0));
        }
        let at = |e: Option<i64>| e.map(|e| e * self.deg);
        if self.deg > 0 {
            (at(self.lo), at(self.hi))
        } else {
            (at(self.hi), at(self.lo))
        }
    }
}

fn check_finite(alg: &PresentedAlgebra, ranges: &[Range]) -> Result<()> {
    let mut lines = Vec::new();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for (g, r) in alg.generators().iter().zip(ranges) {
        match (r.lo, r.hi) {
            (None, None) => lines.push(&g.name),
            (Some(_), None) if r.deg > 0 => up.push(&g.name),
            (Some(_), None) => down.push(&g.name),
            (None, Some(_)) if r.deg > 0 => down.push(&g.name),
            (None, Some(_)) => up.push(&g.name),
            _ => {}
        }
    }
    let unbounded = lines.len() + up.len() + down.len();
    if !lines.is_empty() && unbounded >= 2 {
        return Err(Error::InfiniteSlice(format!(
            "invertible generator `{}` combines with another unbounded generator",
            lines[0]
        )));
    }
    if let (Some(a), Some(b)) = (up.first(), down.first()) {
        return Err(Error::InfiniteSlice(format!(
            "`{a}` and `{b}` have unbounded exponents of opposite degree sign"
        )));
    }
    Ok(())
}

fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// All normal-form monomials with degree in the window, in lexicographic
/// exponent order.
pub fn enumerate_monomials(alg: &PresentedAlgebra, window: (i64, i64)) -> Result<Vec<Monomial>> {
    let (lo, hi) = window;
    if lo > hi {
        return Err(Error::InvalidWindow(lo, hi));
    }
    let n = alg.len();
    let ranges: Vec<Range> = (0..n)
        .map(|i| {
            let (elo, ehi) = alg.exponent_bounds(i);
            Range {
                lo: elo,
                hi: ehi,
                deg: alg.generators()[i].bidegree.deg,
            }
        })
        .collect();
    check_finite(alg, &ranges)?;

    // degree span of the generators i.. (suffix)
    let mut smin = vec![Some(0); n + 1];
    let mut smax = vec![Some(0); n + 1];
    for i in (0..n).rev() {
        let (a, b) = ranges[i].degree_span();
        smin[i] = add_opt(smin[i + 1], a);
        smax[i] = add_opt(smax[i + 1], b);
    }

    let mut out = Vec::new();
    let mut exps = vec![0i64; n];
    dfs(0, 0, &ranges, &smin, &smax, window, &mut exps, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    i: usize,
    cur: i64,
    ranges: &[Range],
    smin: &[Option<i64>],
    smax: &[Option<i64>],
    window: (i64, i64),
    exps: &mut Vec<i64>,
    out: &mut Vec<Monomial>,
) -> Result<()> {
    let (lo, hi) = window;
    if i == ranges.len() {
        if lo <= cur && cur <= hi {
            out.push(Monomial(exps.clone()));
        }
        return Ok(());
    }
    let r = ranges[i];
    let (rest_min, rest_max) = (smin[i + 1], smax[i + 1]);
    let (mut elo, mut ehi) = (r.lo, r.hi);
    if r.deg != 0 {
        // need cur + e*deg + rest_min <= hi and cur + e*deg + rest_max >= lo
        let upper_from = rest_min.map(|m| hi - cur - m);
        let lower_from = rest_max.map(|m| lo - cur - m);
        let (bound_hi, bound_lo) = if r.deg > 0 {
            (
                upper_from.map(|v| div_floor(v, r.deg)),
                lower_from.map(|v| div_ceil(v, r.deg)),
            )
        } else {
            (
                lower_from.map(|v| div_floor(v, r.deg)),
                upper_from.map(|v| div_ceil(v, r.deg)),
            )
        };
        ehi = match (ehi, bound_hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        elo = match (elo, bound_lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
    let (Some(elo), Some(ehi)) = (elo, ehi) else {
        return Err(Error::InfiniteSlice(format!(
            "exponent of generator #{i} is unbounded within the window"
        )));
    };
    for e in elo..=ehi {
        exps[i] = e;
        dfs(i + 1, cur + e * r.deg, ranges, smin, smax, window, exps, out)?;
    }
    exps[i] = 0;
    Ok(())
}

pub fn enumerate_basis(alg: &PresentedAlgebra, window: (i64, i64)) -> Result<BasisTable> {
    let monos = enumerate_monomials(alg, window)?;
    let mut table = BasisTable::new(window, alg.weights().modulus);
    for m in &monos {
        table.push(alg.monomial_bidegree(m), alg.monomial_label(m));
    }
    Ok(table)
}

/// weight → [(degree, rank)] with degrees ascending.
pub fn poincare_per_weight(table: &BasisTable) -> BTreeMap<i64, Vec<(i64, usize)>> {
    let mut out: BTreeMap<i64, Vec<(i64, usize)>> = BTreeMap::new();
    for (b, l) in &table.entries {
        out.entry(b.wt).or_default().push((b.deg, l.len()));
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Bidegrees at which the two tables have different rank.
pub fn table_diff(a: &BasisTable, b: &BasisTable) -> Result<Vec<Bidegree>> {
    if a.window != b.window {
        return Err(Error::WindowMismatch(a.window.0, a.window.1, b.window.0, b.window.1));
    }
    let mut keys: Vec<Bidegree> = a.entries.keys().chain(b.entries.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys.into_iter().filter(|k| a.rank(*k) != b.rank(*k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;
    use crate::coeffs::CoefficientRing;

    fn ell5() -> PresentedAlgebra {
        PresentedAlgebra::builder(CoefficientRing::zp_local(5).unwrap())
            .gen(GeneratorSpec::polynomial("v1", 8, 0))
            .build()
            .unwrap()
    }

    #[test]
    fn empty_presentation_has_unit_only() {
        let alg = PresentedAlgebra::builder(CoefficientRing::zp_local(5).unwrap())
            .build()
            .unwrap();
        let t = enumerate_basis(&alg, (0, 10)).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.labels(Bidegree::ZERO), ["1"]);
    }

    #[test]
    fn ell_basis_and_poincare() {
        let t = enumerate_basis(&ell5(), (0, 16)).unwrap();
        let p = poincare_per_weight(&t);
        assert_eq!(p.len(), 1);
        assert_eq!(p[&0], vec![(0, 1), (8, 1), (16, 1)]);
        assert_eq!(t.labels(Bidegree::new(16, 0)), ["v1^2"]);
        assert!(poincare_per_weight(&BasisTable::new((0, 1), 0)).is_empty());
    }

    #[test]
    fn diff_against_empty() {
        let t = enumerate_basis(&ell5(), (0, 8)).unwrap();
        assert_eq!(table_diff(&t, &t).unwrap(), vec![]);
        let empty = BasisTable::new((0, 8), 0);
        assert_eq!(
            table_diff(&t, &empty).unwrap(),
            vec![Bidegree::new(0, 0), Bidegree::new(8, 0)]
        );
        let other = BasisTable::new((0, 9), 0);
        assert_eq!(table_diff(&t, &other).unwrap_err().name(), "WindowMismatch");
    }

    #[test]
    fn infinite_slices_are_rejected() {
        let r = CoefficientRing::fp(5).unwrap();
        let alg = PresentedAlgebra::builder(r)
            .gen(GeneratorSpec::laurent("u", 2, 0))
            .gen(GeneratorSpec::polynomial("x", 4, 0))
            .build()
            .unwrap();
        assert_eq!(enumerate_basis(&alg, (0, 4)).unwrap_err().name(), "InfiniteSlice");
        let alg = PresentedAlgebra::builder(r)
            .gen(GeneratorSpec::polynomial("x", 2, 0))
            .gen(GeneratorSpec::polynomial("y", -2, 0))
            .build()
            .unwrap();
        assert_eq!(enumerate_basis(&alg, (0, 4)).unwrap_err().name(), "InfiniteSlice");
        assert_eq!(enumerate_basis(&alg, (4, 0)).unwrap_err().name(), "InvalidWindow");
    }

    #[test]
    fn negative_degree_polynomial_generators() {
        let r = CoefficientRing::fp(5).unwrap();
        let alg = PresentedAlgebra::builder(r)
            .gen(GeneratorSpec::polynomial("t", -2, 0))
            .gen(GeneratorSpec::exterior("l", 9, 0))
            .build()
            .unwrap();
        let t = enumerate_basis(&alg, (-4, 9)).unwrap();
        // 1, t, t^2, and l*t^j for 9-2j >= -4
        assert_eq!(t.total_rank(), 3 + 7);
    }
}
