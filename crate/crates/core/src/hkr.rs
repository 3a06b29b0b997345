//! Hochschild homology of free bigraded algebras through the HKR model
//! `HH(R) = R ⊗ Λ(dx)`, its logarithmic variant, induced maps and the
//! checks built on them.
//!
//! A form `dx` sits in bidegree `|x| + (1, 0)`. Declaring `g` logarithmic
//! replaces `dg` by `dlog_g` in bidegree `(1, 0)`, with `dg = g·dlog_g`.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde_json::json;

use crate::algebra::{Element, GeneratorKind, GeneratorSpec, Monomial, PresentedAlgebra};
use crate::basis::{enumerate_basis, enumerate_monomials, BasisTable};
use crate::coeffs::{CoefficientRing, Scalar};
use crate::error::{Error, Result};
use crate::grading::{Bidegree, WeightMonoid};
use crate::linalg::{determinant, rank_mod_p};
use crate::map::AlgebraMap;
use crate::report::{BidegreeCheck, CheckReport};
use crate::root::{adjoin_root, check_hypothesis, eliminate_roots, quotient_by, RootAdjunctionRequest};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkrModule {
    base: PresentedAlgebra,
    algebra: PresentedAlgebra,
    log: Vec<bool>,
}

pub fn form_name(name: &str, log: bool) -> String {
    if log {
        format!("dlog_{name}")
    } else {
        format!("d{name}")
    }
}

fn check_admissible(alg: &PresentedAlgebra) -> Result<()> {
    for g in alg.generators() {
        if !matches!(g.kind, GeneratorKind::Polynomial | GeneratorKind::Laurent) {
            return Err(Error::UnsupportedPresentation(format!(
                "`{}` is {}; the HKR model needs a free commutative algebra",
                g.name, g.kind
            )));
        }
    }
    Ok(())
}

impl HkrModule {
    fn build(base: &PresentedAlgebra, log: Vec<bool>) -> Result<Self> {
        debug_assert!(base.roots().is_empty());
        check_admissible(base)?;
        let mut gens = base.generators().to_vec();
        for (g, &is_log) in base.generators().iter().zip(&log) {
            let b = if is_log {
                Bidegree::new(1, 0)
            } else {
                g.bidegree.shift_deg(1)
            };
            gens.push(GeneratorSpec::exterior(form_name(&g.name, is_log), b.deg, b.wt));
        }
        let algebra = PresentedAlgebra::new(base.coeffs(), base.weights(), gens, Vec::new())?;
        Ok(HkrModule {
            base: base.clone(),
            algebra,
            log,
        })
    }

    pub fn base(&self) -> &PresentedAlgebra {
        &self.base
    }

    /// The bigraded algebra `R ⊗ Λ(forms)`.
    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn is_log(&self, i: usize) -> bool {
        self.log[i]
    }

    pub fn form_at(&self, i: usize) -> Element {
        self.algebra.generator_at(self.base.len() + i)
    }

    /// Includes an element of the base algebra.
    pub fn embed(&self, x: &Element) -> Element {
        x.padded(self.algebra.len())
    }

    pub fn basis(&self, window: (i64, i64)) -> Result<BasisTable> {
        enumerate_basis(&self.algebra, window)
    }

    /// The Connes operator: the derivation with `x ↦ dx`, `dx ↦ 0`.
    pub fn connes_d(&self, x: &Element) -> Element {
        let alg = &self.algebra;
        let n = self.base.len();
        let mut acc = Element::zero();
        for (mono, c) in x.terms() {
            let e = mono.exponents();
            let mut forms = vec![0; alg.len()];
            forms[n..].copy_from_slice(&e[n..]);
            let forms = alg.monomial_element(Monomial(forms), Scalar::one());
            for i in (0..n).filter(|&i| e[i] != 0) {
                let mut b = e[..n].to_vec();
                if !self.log[i] {
                    b[i] -= 1;
                }
                b.resize(alg.len(), 0);
                let coeff = c * Scalar::from_integer(e[i].into());
                let term = alg.monomial_element(Monomial(b), coeff);
                let term = alg.multiply(&alg.multiply(&term, &self.form_at(i)), &forms);
                acc = alg.add(&acc, &term);
            }
        }
        acc
    }

    /// `dlog` of a unit multiple of a monomial, when every factor is
    /// logarithmic or invertible.
    fn dlog_of(&self, x: &Element) -> Option<Element> {
        let (mono, _) = x.as_single_term()?;
        let alg = &self.algebra;
        let mut acc = Element::zero();
        for (i, &e) in mono.exponents().iter().enumerate().take(self.base.len()) {
            if e == 0 {
                continue;
            }
            let piece = if self.log[i] {
                self.form_at(i)
            } else if self.base.generators()[i].kind == GeneratorKind::Laurent {
                let inv = alg.invert_monomial(&alg.generator_at(i))?;
                alg.multiply(&inv, &self.form_at(i))
            } else {
                return None;
            };
            acc = alg.add(&acc, &alg.scale(&Scalar::from_integer(e.into()), &piece));
        }
        Some(acc)
    }
}

/// Root relations `z^m = c·g` are eliminated first, so the base of the
/// result may be a re-presentation of `alg`.
fn free_presentation(alg: &PresentedAlgebra) -> Result<PresentedAlgebra> {
    if alg.roots().is_empty() {
        Ok(alg.clone())
    } else {
        Ok(eliminate_roots(alg)?.0)
    }
}

/// `HH(R)` for a free (polynomial / Laurent) presentation, or one whose
/// root relations can be eliminated.
pub fn hh(alg: &PresentedAlgebra) -> Result<HkrModule> {
    let alg = free_presentation(alg)?;
    HkrModule::build(&alg, vec![false; alg.len()])
}

/// `HH(R | g)`: `dg` is replaced by `dlog_g` in bidegree `(1, 0)`.
pub fn log_hh(alg: &PresentedAlgebra, g: &str) -> Result<HkrModule> {
    let alg = &free_presentation(alg)?;
    let i = alg.gen_index(g)?;
    let mut log = vec![false; alg.len()];
    log[i] = true;
    HkrModule::build(alg, log)
}

/// The map of HKR models induced by `f: source.base → target.base`.
pub fn induced_map(f: &AlgebraMap, source: &HkrModule, target: &HkrModule) -> Result<AlgebraMap> {
    if f.source() != source.base() || f.target() != target.base() {
        return Err(Error::MapError(
            "map does not go between the base algebras of the given models".into(),
        ));
    }
    let mut assignment = Vec::new();
    for (i, g) in source.base().generators().iter().enumerate() {
        let img = target.embed(f.image_of(&g.name)?);
        let form = if source.is_log(i) {
            target.dlog_of(&img).ok_or_else(|| {
                Error::MapError(format!(
                    "image `{}` of log generator `{}` is not a log unit monomial",
                    target.algebra().format_element(&img),
                    g.name
                ))
            })?
        } else {
            target.connes_d(&img)
        };
        assignment.push((g.name.clone(), img));
        assignment.push((form_name(&g.name, source.is_log(i)), form));
    }
    AlgebraMap::new(source.algebra().clone(), target.algebra().clone(), assignment)
}

pub fn induced_hh_map(f: &AlgebraMap) -> Result<AlgebraMap> {
    induced_map(f, &hh(f.source())?, &hh(f.target())?)
}

/// The canonical map `HH(R) → HH(R | g)`, `dg ↦ g·dlog_g`.
pub fn hh_to_log_hh(alg: &PresentedAlgebra, g: &str) -> Result<AlgebraMap> {
    let alg = &free_presentation(alg)?;
    induced_map(&AlgebraMap::identity(alg), &hh(alg)?, &log_hh(alg, g)?)
}

/// Coordinates of `x` against an indexed basis containing all its monomials.
fn coordinates(x: &Element, index: &BTreeMap<&Monomial, usize>, len: usize) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); len];
    for (m, c) in x.terms() {
        let j = *index.get(m).expect("image lies in the enumerated basis");
        row[j] = c.clone();
    }
    row
}

fn group_by_bidegree(alg: &PresentedAlgebra, monos: Vec<Monomial>) -> BTreeMap<Bidegree, Vec<Monomial>> {
    let mut out: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
    for m in monos {
        out.entry(alg.monomial_bidegree(&m)).or_default().push(m);
    }
    out
}

/// Checks that `HH(Z_(p)[s_mk]) → HH(Z_(p)[s_k])_0` induced by
/// `s_mk ↦ s_k^m` is an isomorphism in every degree of `window`. For
/// `k = 0` the generators carry caps `C` and `C·m + m − 1`.
pub fn weight_zero_iso_check(m: u32, k: i64, p: u64, window: (i64, i64)) -> Result<CheckReport> {
    if m == 0 {
        return Err(Error::BadRootRelation("m must be positive".into()));
    }
    let ring = CoefficientRing::zp_local(p)?;
    let cap = 8u32;
    let mk = m as i64 * k;
    let mut src_gen = GeneratorSpec::polynomial(format!("s{mk}"), mk, 0);
    let mut tgt_gen = GeneratorSpec::polynomial(format!("s{k}"), k, 1);
    if k == 0 {
        src_gen = src_gen.with_cap(cap);
        tgt_gen = tgt_gen.with_cap(cap * m + m - 1);
    }
    let src_name = src_gen.name.clone();
    let tgt_name = tgt_gen.name.clone();
    let src = PresentedAlgebra::new(ring, WeightMonoid::new(m as u64), vec![src_gen], Vec::new())?;
    let tgt = PresentedAlgebra::new(ring, WeightMonoid::new(m as u64), vec![tgt_gen], Vec::new())?;
    let image = tgt.pow(&tgt.generator(&tgt_name)?, m);
    let f = AlgebraMap::new(src.clone(), tgt.clone(), vec![(src_name, image)])?;
    let hf = induced_hh_map(&f)?;
    let (hs, ht) = (hf.source(), hf.target());

    let src_monos = group_by_bidegree(hs, enumerate_monomials(hs, window)?);
    let tgt_monos = group_by_bidegree(ht, enumerate_monomials(ht, window)?);
    let mut degrees: Vec<i64> = src_monos.keys().chain(tgt_monos.keys()).map(|b| b.deg).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let empty = Vec::new();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for deg in degrees {
        let b = Bidegree::new(deg, 0);
        let s = src_monos.get(&b).unwrap_or(&empty);
        let t = tgt_monos.get(&b).unwrap_or(&empty);
        let index: BTreeMap<&Monomial, usize> = t.iter().enumerate().map(|(j, m)| (m, j)).collect();
        let matrix: Vec<Vec<Scalar>> = s
            .iter()
            .map(|mono| coordinates(&hf.apply(&hs.monomial_element(mono.clone(), Scalar::one())), &index, t.len()))
            .collect();
        let ok = if s.len() == t.len() {
            let det = determinant(&matrix);
            let unit = ring.is_unit(&det);
            if !unit {
                notes.push(format!("degree {deg}: determinant {}", ring.describe(&det)));
            }
            unit
        } else {
            false
        };
        rows.push(BidegreeCheck {
            deg,
            wt: 0,
            lhs_rank: s.len(),
            rhs_rank: t.len(),
            ok,
        });
    }
    Ok(CheckReport::new(
        "hhmap-check",
        json!({"m": m, "k": k, "p": p}),
        window,
        rows,
        true,
        notes,
    ))
}

/// Monomial of `from` re-indexed into `to` by generator name.
fn transport(from: &PresentedAlgebra, to: &PresentedAlgebra, m: &Monomial) -> Result<Monomial> {
    let mut e = vec![0; to.len()];
    for (g, &x) in from.generators().iter().zip(m.exponents()) {
        if x != 0 {
            e[to.gen_index(&g.name)?] = x;
        }
    }
    Ok(Monomial(e))
}

/// Verifies the cofiber sequence `HH(A) → HH(A | g) → Σ HH(A/g)` on
/// `window`: ranks add up, and the images of `HH(A)` together with
/// `dlog_g·HH(A/g)` form a basis of `HH(A | g)` modulo `p`.
pub fn cofiber_check(alg: &PresentedAlgebra, g: &str, window: (i64, i64)) -> Result<CheckReport> {
    let gi = alg.gen_index(g)?;
    let phi = hh_to_log_hh(alg, g)?;
    let (h, l) = (phi.source(), phi.target());
    let quotient = hh(&quotient_by(alg, &alg.generator_at(gi))?)?;
    let q = quotient.algebra();
    let dlog = l.generator(&form_name(g, true))?;
    let shift = Bidegree::new(1, 0);

    let h_monos = group_by_bidegree(h, enumerate_monomials(h, window)?);
    let l_monos = group_by_bidegree(l, enumerate_monomials(l, window)?);
    let q_window = (window.0 - shift.deg, window.1 - shift.deg);
    let mut q_monos: BTreeMap<Bidegree, Vec<Monomial>> = BTreeMap::new();
    for m in enumerate_monomials(q, q_window)? {
        let b = (q.monomial_bidegree(&m) + shift).in_monoid(l.weights());
        q_monos.entry(b).or_default().push(m);
    }

    let mut keys: Vec<Bidegree> = h_monos.keys().chain(l_monos.keys()).chain(q_monos.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let empty = Vec::new();
    let mut rows = Vec::new();
    for b in keys {
        let hb = h_monos.get(&b).unwrap_or(&empty);
        let lb = l_monos.get(&b).unwrap_or(&empty);
        let qb = q_monos.get(&b).unwrap_or(&empty);
        let index: BTreeMap<&Monomial, usize> = lb.iter().enumerate().map(|(j, m)| (m, j)).collect();
        let mut matrix = Vec::new();
        for m in hb {
            let img = phi.apply(&h.monomial_element(m.clone(), Scalar::one()));
            matrix.push(coordinates(&img, &index, lb.len()));
        }
        for m in qb {
            let x = l.monomial_element(transport(q, l, m)?, Scalar::one());
            matrix.push(coordinates(&l.multiply(&dlog, &x), &index, lb.len()));
        }
        let rhs = hb.len() + qb.len();
        let ok = rhs == lb.len() && rank_mod_p(alg.coeffs(), &matrix) == rhs;
        rows.push(BidegreeCheck {
            deg: b.deg,
            wt: b.wt,
            lhs_rank: lb.len(),
            rhs_rank: rhs,
            ok,
        });
    }
    Ok(CheckReport::new(
        "cofiber-check",
        json!({"g": g, "p": alg.prime()}),
        window,
        rows,
        true,
        Vec::new(),
    ))
}

/// Whether `HH(A) → HH(A | g)` is bijective on `window`: equal ranks and
/// an invertible matrix modulo `p` in every bidegree. Expected exactly when
/// `g` is invertible.
pub fn log_comparison_check(alg: &PresentedAlgebra, g: &str, window: (i64, i64)) -> Result<CheckReport> {
    let phi = hh_to_log_hh(alg, g)?;
    let (h, l) = (phi.source(), phi.target());
    let h_monos = group_by_bidegree(h, enumerate_monomials(h, window)?);
    let l_monos = group_by_bidegree(l, enumerate_monomials(l, window)?);
    let mut keys: Vec<Bidegree> = h_monos.keys().chain(l_monos.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let empty = Vec::new();
    let mut rows = Vec::new();
    for b in keys {
        let hb = h_monos.get(&b).unwrap_or(&empty);
        let lb = l_monos.get(&b).unwrap_or(&empty);
        let index: BTreeMap<&Monomial, usize> = lb.iter().enumerate().map(|(j, m)| (m, j)).collect();
        let matrix: Vec<Vec<Scalar>> = hb
            .iter()
            .map(|m| coordinates(&phi.apply(&h.monomial_element(m.clone(), Scalar::one())), &index, lb.len()))
            .collect();
        let ok = hb.len() == lb.len() && rank_mod_p(alg.coeffs(), &matrix) == hb.len();
        rows.push(BidegreeCheck {
            deg: b.deg,
            wt: b.wt,
            lhs_rank: hb.len(),
            rhs_rank: lb.len(),
            ok,
        });
    }
    Ok(CheckReport::new(
        "hh-loghh-iso",
        json!({"g": g, "p": alg.prime()}),
        window,
        rows,
        true,
        Vec::new(),
    ))
}

fn fresh_name(alg: &PresentedAlgebra, stem: &str) -> String {
    let taken = |n: &str| alg.generators().iter().any(|g| g.name == n);
    if !taken(stem) {
        return stem.to_string();
    }
    (1..)
        .map(|i| format!("{stem}_{i}"))
        .find(|n| !taken(n))
        .expect("some name is free")
}

/// Log-étaleness of `A → A(√[m]{g})` for `p ∤ m`: the weight `i` part of
/// `HH(A(√[m]{g}) | z)` agrees with `Σ^{ik} HH(A | g)` for every `0 ≤ i < m`.
pub fn log_etale_check(alg: &PresentedAlgebra, g: &str, m: u32, window: (i64, i64)) -> Result<CheckReport> {
    let p = alg.prime();
    if (m as u64).is_multiple_of(p) {
        return Err(Error::WildPrime { p, m: m as u64 });
    }
    let gi = alg.gen_index(g)?;
    let z = fresh_name(alg, "z");
    let req = RootAdjunctionRequest::new(alg.clone(), alg.generator_at(gi), m).named(z.clone());
    let k = check_hypothesis(&req).k.unwrap_or(0);
    let adjoined = adjoin_root(&req)?;
    let (plain, _) = eliminate_roots(&adjoined)?;
    let lhs = log_hh(&plain, &z)?.basis(window)?;
    let base = log_hh(alg, g)?;
    let mut rows = Vec::new();
    for i in 0..m as i64 {
        let slice = lhs.weight_slice(i);
        let expected = base
            .basis((window.0 - i * k, window.1 - i * k))?
            .shifted(i * k, window);
        let mut degs: Vec<i64> = slice
            .ranks_by_degree()
            .into_keys()
            .chain(expected.ranks_by_degree().into_keys())
            .collect();
        degs.sort_unstable();
        degs.dedup();
        let (ls, es) = (slice.ranks_by_degree(), expected.ranks_by_degree());
        for deg in degs {
            let a = ls.get(&deg).copied().unwrap_or(0);
            let b = es.get(&deg).copied().unwrap_or(0);
            rows.push(BidegreeCheck {
                deg,
                wt: i,
                lhs_rank: a,
                rhs_rank: b,
                ok: a == b,
            });
        }
    }
    Ok(CheckReport::new(
        "logetale-check",
        json!({"g": g, "m": m, "k": k, "p": p}),
        window,
        rows,
        true,
        Vec::new(),
    ))
}

/// Human-readable image of a basis element, e.g. `ds4 ↦ 2*s2*ds2`.
pub fn describe_image(f: &AlgebraMap, x: &Element) -> String {
    format!(
        "{} ↦ {}",
        f.source().format_element(x),
        f.target().format_element(&f.apply(x))
    )
}
