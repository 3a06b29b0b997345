//! Root adjunction `A(√[m]{a})` at the level of homotopy rings.
//!
//! For `A` concentrated in weight 0 and `a` of degree `mk` (with `k` even),
//! the adjunction is `π_*A[z]/(z^m − a)` with `z` in bidegree `(k, 1)` and
//! weights taken mod `m`. Its weight-`i` piece is `Σ^{ik}` of the base for
//! `0 <= i < m`.
//!
//! The output only depends on `π_*A` and `a`. The spectrum-level
//! construction may depend on the chosen `S[σ_mk]`-algebra structure on `A`;
//! nothing computed here sees that choice.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Element, GeneratorKind, GeneratorSpec, Monomial, PresentedAlgebra, RootRelation};
use crate::coeffs::{CoefficientRing, Scalar};
use crate::error::{Error, Result};
use crate::grading::WeightMonoid;
use crate::map::AlgebraMap;

#[derive(Debug, Clone)]
pub struct RootAdjunctionRequest {
    pub base: PresentedAlgebra,
    pub a: Element,
    pub m: u32,
    /// Degree of the root; inferred as `deg(a) / m` when absent.
    pub k: Option<i64>,
    pub root_name: String,
}

impl RootAdjunctionRequest {
    pub fn new(base: PresentedAlgebra, a: Element, m: u32) -> Self {
        RootAdjunctionRequest {
            base,
            a,
            m,
            k: None,
            root_name: "z".to_string(),
        }
    }

    /// `a` given as an expression in the base generators.
    pub fn parse(base: PresentedAlgebra, a: &str, m: u32) -> Result<Self> {
        let a = base.parse_element(a)?;
        Ok(Self::new(base, a, m))
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.root_name = name.into();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub accepted: bool,
    /// `p ∤ m`, the condition behind every splitting result.
    pub tame: bool,
    pub positive_degree: bool,
    pub k: Option<i64>,
    pub problems: Vec<String>,
}

pub fn check_hypothesis(req: &RootAdjunctionRequest) -> HypothesisReport {
    let mut problems = Vec::new();
    let p = req.base.prime();
    let m = req.m as i64;
    if m <= 0 {
        problems.push("m must be positive".to_string());
    }
    for g in req.base.generators() {
        if g.bidegree.wt != 0 {
            problems.push(format!("base generator `{}` has nonzero weight", g.name));
        }
    }
    if req.base.gen_index(&req.root_name).is_ok() {
        problems.push(format!("root name `{}` is already a generator", req.root_name));
    }
    let bideg = req.base.bidegree(&req.a);
    let mut k = req.k;
    match bideg {
        None => problems.push("a must be nonzero and homogeneous".to_string()),
        Some(b) => {
            if b.wt != 0 {
                problems.push(format!("a has weight {} instead of 0", b.wt));
            }
            if m > 0 {
                match k {
                    Some(k) if k * m != b.deg => {
                        problems.push(format!("deg(a) = {} is not m·k = {}", b.deg, m * k))
                    }
                    Some(_) => {}
                    None if b.deg % m == 0 => k = Some(b.deg / m),
                    None => problems.push(format!(
                        "deg(a) = {} = {m}·k has no integral solution",
                        b.deg
                    )),
                }
            }
        }
    }
    if let Some(kv) = k {
        if kv < 0 || kv % 2 != 0 {
            problems.push(format!("k = {kv} must be even and non-negative"));
        }
    }
    HypothesisReport {
        accepted: problems.is_empty(),
        tame: m > 0 && !(m as u64).is_multiple_of(p),
        positive_degree: bideg.is_some_and(|b| b.deg > 0),
        k,
        problems,
    }
}

/// `π_*A[z]/(z^m − a)`, weights mod `m`, `z` in bidegree `(k, 1)`.
pub fn adjoin_root(req: &RootAdjunctionRequest) -> Result<PresentedAlgebra> {
    let report = check_hypothesis(req);
    if !report.accepted {
        return Err(Error::HypothesisFailed(report.problems.join("; ")));
    }
    let k = report.k.expect("accepted requests have k");
    let base = &req.base;
    let mut gens = base.generators().to_vec();
    gens.push(GeneratorSpec::polynomial(req.root_name.clone(), k, 1));
    let n = gens.len();
    let mut roots: Vec<RootRelation> = base
        .roots()
        .iter()
        .map(|r| RootRelation {
            generator: r.generator,
            exponent: r.exponent,
            target: r.target.padded(n),
        })
        .collect();
    roots.push(RootRelation {
        generator: n - 1,
        exponent: req.m,
        target: req.a.padded(n),
    });
    PresentedAlgebra::new(base.coeffs(), WeightMonoid::new(req.m as u64), gens, roots)
}

/// Index of `g` if `x = c·g` for a unit `c` and a single generator `g`.
fn unit_multiple_of_generator(alg: &PresentedAlgebra, x: &Element) -> Option<(usize, Scalar)> {
    let (m, c) = x.as_single_term()?;
    if !alg.coeffs().is_unit(c) {
        return None;
    }
    let mut idx = None;
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 if idx.is_none() => idx = Some(i),
            _ => return None,
        }
    }
    idx.map(|i| (i, c.clone()))
}

fn drop_terms_with(x: &Element, removed: &BTreeSet<usize>) -> Element {
    Element::from_terms(
        x.terms()
            .filter(|(m, _)| removed.iter().all(|&i| m.exponents()[i] == 0))
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn project_element(x: &Element, keep: &[usize]) -> Element {
    Element::from_terms(x.terms().map(|(m, c)| {
        let e = keep.iter().map(|&i| m.exponents()[i]).collect();
        (Monomial(e), c.clone())
    }))
}

/// The quotient `A/a` for `a` a unit multiple of a polynomial generator
/// (possibly a root generator). Setting generators to zero is propagated
/// through root relations: a relation `z^m = a` whose target dies turns `z`
/// into a truncated generator (`z^m = 0`); a root generator that is killed
/// forces its target to vanish, which is only supported when that target
/// is itself a unit multiple of a generator.
pub fn quotient_by(alg: &PresentedAlgebra, a: &Element) -> Result<PresentedAlgebra> {
    let (g, _) = unit_multiple_of_generator(alg, a).ok_or_else(|| {
        Error::UnsupportedDivisor(format!(
            "`{}` is not a unit multiple of a single generator",
            alg.format_element(a)
        ))
    })?;
    let spec = &alg.generators()[g];
    if spec.kind != GeneratorKind::Polynomial {
        return Err(Error::UnsupportedDivisor(format!(
            "`{}` is a {} generator; only polynomial generators can be divided out",
            spec.name, spec.kind
        )));
    }

    let mut removed = BTreeSet::from([g]);
    loop {
        let mut changed = false;
        for r in alg.roots() {
            let reduced = drop_terms_with(&r.target, &removed);
            if removed.contains(&r.generator) {
                if reduced.is_zero() {
                    continue;
                }
                let (h, _) = unit_multiple_of_generator(alg, &reduced).ok_or_else(|| {
                    Error::UnsupportedDivisor(format!(
                        "killing `{}` forces `{}` = 0, which is not a generator",
                        alg.generators()[r.generator].name,
                        alg.format_element(&reduced)
                    ))
                })?;
                if alg.generators()[h].kind != GeneratorKind::Polynomial {
                    return Err(Error::UnsupportedDivisor(format!(
                        "killing `{}` would kill the unit `{}`",
                        alg.generators()[r.generator].name,
                        alg.generators()[h].name
                    )));
                }
                changed |= removed.insert(h);
            } else if reduced.is_zero() && r.exponent == 1 {
                changed |= removed.insert(r.generator);
            }
        }
        if !changed {
            break;
        }
    }

    let keep: Vec<usize> = (0..alg.len()).filter(|i| !removed.contains(i)).collect();
    let mut gens = Vec::new();
    let mut roots = Vec::new();
    for (new_i, &old_i) in keep.iter().enumerate() {
        let mut spec = alg.generators()[old_i].clone();
        if let Some(r) = alg.root_of(old_i) {
            let reduced = drop_terms_with(&r.target, &removed);
            if reduced.is_zero() {
                spec.kind = GeneratorKind::Truncated(r.exponent);
            } else {
                roots.push(RootRelation {
                    generator: new_i,
                    exponent: r.exponent,
                    target: project_element(&reduced, &keep),
                });
            }
        }
        gens.push(spec);
    }
    PresentedAlgebra::new(alg.coeffs(), alg.weights(), gens, roots)
}

/// Rewrites every root relation `z^m = c·g` (`g` a generator, `c` a unit)
/// by eliminating `g = c⁻¹ z^m`; `z` takes the place of `g` and becomes
/// Laurent when `g` was. Returns the plain presentation and the
/// isomorphism onto it.
pub fn eliminate_roots(alg: &PresentedAlgebra) -> Result<(PresentedAlgebra, AlgebraMap)> {
    let mut current = alg.clone();
    let mut images: Vec<Element> = (0..alg.len()).map(|i| alg.generator_at(i)).collect();
    while let Some(r) = current.roots().first().cloned() {
        let (next, step) = eliminate_one(&current, &r)?;
        images = images.iter().map(|x| step.apply(x)).collect();
        current = next;
    }
    let assignment = alg
        .generators()
        .iter()
        .zip(images)
        .map(|(g, x)| (g.name.clone(), x))
        .collect();
    let map = AlgebraMap::new(alg.clone(), current.clone(), assignment)?;
    Ok((current, map))
}

fn eliminate_one(alg: &PresentedAlgebra, r: &RootRelation) -> Result<(PresentedAlgebra, AlgebraMap)> {
    let z = r.generator;
    let zname = &alg.generators()[z].name;
    let (g, c) = unit_multiple_of_generator(alg, &r.target).ok_or_else(|| {
        Error::UnsupportedPresentation(format!(
            "root relation `{zname}`^{} = `{}` does not target a single generator",
            r.exponent,
            alg.format_element(&r.target)
        ))
    })?;
    let gspec = &alg.generators()[g];
    let m = r.exponent as i64;
    let kind = match gspec.kind {
        GeneratorKind::Laurent => GeneratorKind::Laurent,
        GeneratorKind::Polynomial => GeneratorKind::Polynomial,
        other => {
            return Err(Error::UnsupportedPresentation(format!(
                "cannot eliminate {other} generator `{}`",
                gspec.name
            )))
        }
    };
    let new_z = GeneratorSpec {
        name: zname.clone(),
        bidegree: alg.generators()[z].bidegree,
        kind,
        cap: gspec.cap.map(|cap| cap * r.exponent + r.exponent - 1),
    };
    // z moves into the slot of g
    let mut gens = Vec::new();
    let mut new_index = vec![usize::MAX; alg.len()];
    for (i, spec) in alg.generators().iter().enumerate() {
        if i == z {
            continue;
        }
        new_index[i] = gens.len();
        gens.push(if i == g { new_z.clone() } else { spec.clone() });
    }
    new_index[z] = new_index[g];
    let zi = new_index[g];
    let bare = PresentedAlgebra::bare(alg.coeffs(), alg.weights(), gens.clone());

    let c_inv = alg.coeffs().inverse(&c).expect("unit");
    let z_new = bare.generator_at(zi);
    let g_image = bare.scale(&c_inv, &bare.pow(&z_new, r.exponent));
    let image_of = |i: usize| -> Element {
        if i == g {
            g_image.clone()
        } else {
            bare.generator_at(new_index[i])
        }
    };
    let subst = |x: &Element| -> Element {
        let mut acc = Element::zero();
        for (mono, coeff) in x.terms() {
            let mut term = bare.scalar(coeff.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = image_of(i);
                let f = if e > 0 {
                    bare.pow(&base, e as u32)
                } else {
                    let inv = bare.invert_monomial(&base).expect("Laurent images are units");
                    bare.pow(&inv, (-e) as u32)
                };
                term = bare.multiply(&term, &f);
            }
            acc = bare.add(&acc, &term);
        }
        acc
    };

    let mut roots = Vec::new();
    for other in alg.roots() {
        if other.generator == z {
            continue;
        }
        if other.generator == g {
            // g^n = s  ⇒  z^{mn} = c^n s
            let cn = num::pow::pow(c.clone(), other.exponent as usize);
            roots.push(RootRelation {
                generator: zi,
                exponent: (m as u32) * other.exponent,
                target: bare.scale(&cn, &subst(&other.target)),
            });
        } else {
            roots.push(RootRelation {
                generator: new_index[other.generator],
                exponent: other.exponent,
                target: subst(&other.target),
            });
        }
    }
    let next = PresentedAlgebra::new(alg.coeffs(), alg.weights(), gens, roots)?;
    let assignment = alg
        .generators()
        .iter()
        .enumerate()
        .map(|(i, spec)| (spec.name.clone(), next.normalize(image_of(i))))
        .collect();
    let step = AlgebraMap::new(alg.clone(), next.clone(), assignment)?;
    Ok((next, step))
}

// ---- presets ----

/// Where a stored generator differs from the customary one by inversion,
/// e.g. the periodic root `u` is stored in degree 2 while the customary
/// generator `u^{-1}` has degree -2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeConvention {
    pub stored: String,
    pub stored_degree: i64,
    pub customary: String,
    pub customary_degree: i64,
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub algebra: PresentedAlgebra,
    pub distinguished: Element,
    pub distinguished_name: String,
    /// Ranks over the ground ring get multiplied by this after base change
    /// to `W(F_{p^n})` / `F_{p^n}`; 1 when no such base change is meant.
    pub rank_multiplier: u32,
    pub convention: Option<DegreeConvention>,
    pub description: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresetParams {
    pub p: u64,
    pub n: u32,
    pub cap: u32,
}

impl PresetParams {
    pub fn new(p: u64) -> Self {
        PresetParams { p, n: 1, cap: 4 }
    }
}

fn vn_degree(p: u64, n: u32) -> i64 {
    2 * (p.pow(n) as i64 - 1)
}

fn finish(
    name: String,
    algebra: PresentedAlgebra,
    distinguished: &str,
    rank_multiplier: u32,
    convention: Option<DegreeConvention>,
    description: String,
) -> Result<Preset> {
    let d = algebra.generator(distinguished)?;
    Ok(Preset {
        name,
        algebra,
        distinguished: d,
        distinguished_name: distinguished.to_string(),
        rank_multiplier,
        convention,
        description,
    })
}

fn adjoin_named(base: &Preset, m: u32, root: &str) -> Result<PresentedAlgebra> {
    adjoin_root(&RootAdjunctionRequest::new(base.algebra.clone(), base.distinguished.clone(), m).named(root))
}

/// Named models: `ell`, `ku`, `ko`, `kn`, `Kn`, `En_hat`, `two_periodic_K`.
/// All are uncompleted: per-bidegree ranks agree with the completed spectra.
pub fn preset(name: &str, params: PresetParams) -> Result<Preset> {
    let PresetParams { p, n, cap } = params;
    if n == 0 && matches!(name, "kn" | "Kn" | "En_hat" | "two_periodic_K") {
        return Err(Error::UnknownPreset(format!("{name} needs height n >= 1")));
    }
    let zp = CoefficientRing::zp_local(p)?;
    let fp = CoefficientRing::fp(p)?;
    let vn = format!("v{n}");
    match name {
        "ell" => {
            let alg = PresentedAlgebra::builder(zp)
                .gen(GeneratorSpec::polynomial("v1", vn_degree(p, 1), 0))
                .build()?;
            finish(format!("ell({p})"), alg, "v1", 1, None, format!("Z_({p})[v1], |v1| = {}", vn_degree(p, 1)))
        }
        "ku" => {
            let ell = preset("ell", params)?;
            let alg = adjoin_named(&ell, (p - 1) as u32, "u")?;
            finish(
                format!("ku({p})"),
                alg,
                "u",
                1,
                None,
                format!("ell({p}) with u^{} = v1, |u| = 2, weights mod {}", p - 1, p - 1),
            )
        }
        "ko" => {
            let ell = preset("ell", params)?;
            let m = ((p - 1) / 2) as u32;
            let alg = adjoin_named(&ell, m, "alpha")?;
            finish(
                format!("ko({p})"),
                alg,
                "alpha",
                1,
                None,
                format!("ell({p}) with alpha^{m} = v1, |alpha| = 4, weights mod {m}"),
            )
        }
        "kn" => {
            let alg = PresentedAlgebra::builder(fp)
                .gen(GeneratorSpec::polynomial(vn.clone(), vn_degree(p, n), 0))
                .build()?;
            finish(format!("kn({n},{p})"), alg, &vn, 1, None, format!("F_{p}[{vn}]"))
        }
        "Kn" => {
            let alg = PresentedAlgebra::builder(fp)
                .gen(GeneratorSpec::laurent(vn.clone(), vn_degree(p, n), 0))
                .build()?;
            finish(format!("Kn({n},{p})"), alg, &vn, 1, None, format!("F_{p}[{vn}^±]"))
        }
        "En_hat" => {
            let mut b = PresentedAlgebra::builder(zp);
            for i in 1..n {
                b = b.gen(GeneratorSpec::polynomial(format!("u{i}"), 0, 0).with_cap(cap));
            }
            let alg = b
                .gen(GeneratorSpec::laurent(vn.clone(), vn_degree(p, n), 0))
                .build()?;
            finish(
                format!("En_hat({n},{p},{cap})"),
                alg,
                &vn,
                1,
                None,
                {
                    let us: Vec<String> = (1..n).map(|i| format!("u{i}")).collect();
                    let us = if us.is_empty() { String::new() } else { format!("[{}]", us.join(", ")) };
                    format!("Z_({p}){us}[{vn}^±], degree-0 exponents capped at {cap}")
                },
            )
        }
        "two_periodic_K" => {
            let kn = preset("Kn", params)?;
            let m = (p.pow(n) - 1) as u32;
            let alg = adjoin_named(&kn, m, "u")?;
            finish(
                format!("two_periodic_K({n},{p})"),
                alg,
                "u",
                n,
                Some(DegreeConvention {
                    stored: "u".into(),
                    stored_degree: 2,
                    customary: "u^-1".into(),
                    customary_degree: -2,
                }),
                if n == 1 {
                    format!("F_{p}[{vn}^±] with u^{m} = {vn}")
                } else {
                    format!("F_{p}[{vn}^±] with u^{m} = {vn}; over F_{{p^{n}}} ranks are multiplied by {n}")
                },
            )
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Parses `ku(5)`, `kn(1,5)`, `En_hat(2,5,3)` and similar.
pub fn preset_from_str(s: &str) -> Result<Preset> {
    let s = s.trim();
    let (name, args) = match s.find('(') {
        Some(i) if s.ends_with(')') => (&s[..i], &s[i + 1..s.len() - 1]),
        _ => return Err(Error::UnknownPreset(s.to_string())),
    };
    let nums: Vec<u64> = args
        .split(',')
        .map(|a| a.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::UnknownPreset(s.to_string()))?;
    let params = match (name, nums.as_slice()) {
        ("ell" | "ku" | "ko", [p]) => PresetParams::new(*p),
        ("kn" | "Kn" | "two_periodic_K", [n, p]) => PresetParams { p: *p, n: *n as u32, cap: 4 },
        ("En_hat", [n, p, cap]) => PresetParams { p: *p, n: *n as u32, cap: *cap as u32 },
        _ => return Err(Error::UnknownPreset(s.to_string())),
    };
    preset(name, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{enumerate_basis, table_diff};
    use crate::regrading::weight_zero_part;

    fn ell(p: u64) -> Preset {
        preset("ell", PresetParams::new(p)).unwrap()
    }

    #[test]
    fn hypothesis_reports() {
        let r = check_hypothesis(&RootAdjunctionRequest::parse(ell(5).algebra, "v1", 4).unwrap());
        assert!(r.accepted && r.tame && r.positive_degree);
        assert_eq!(r.k, Some(2));

        let r = check_hypothesis(&RootAdjunctionRequest::parse(ell(5).algebra, "v1", 5).unwrap());
        assert!(!r.accepted);

        // |v1| = 4 for p = 3, so use a = v1^3 of degree 12 = 3·4
        let r = check_hypothesis(&RootAdjunctionRequest::parse(ell(3).algebra, "v1^3", 3).unwrap());
        assert!(r.accepted);
        assert!(!r.tame);

        // k must be even
        let alg = PresentedAlgebra::builder(CoefficientRing::zp_local(5).unwrap())
            .gen(GeneratorSpec::polynomial("x", 6, 0))
            .build()
            .unwrap();
        let r = check_hypothesis(&RootAdjunctionRequest::parse(alg, "x", 2).unwrap());
        assert!(!r.accepted);
    }

    #[test]
    fn ku_from_ell() {
        let ku = preset("ku", PresetParams::new(5)).unwrap();
        assert_eq!(ku.algebra.weights().modulus, 4);
        let u = &ku.distinguished;
        let v1 = ku.algebra.generator("v1").unwrap();
        assert_eq!(ku.algebra.pow(u, 4), v1);
        let t = enumerate_basis(&ku.algebra, (0, 40)).unwrap();
        let l = enumerate_basis(&ell(5).algebra, (0, 40)).unwrap();
        assert!(table_diff(&weight_zero_part(&t), &l).unwrap().is_empty());
    }

    #[test]
    fn trivial_root() {
        let req = RootAdjunctionRequest::parse(ell(5).algebra, "v1", 1).unwrap().with_k(8);
        let alg = adjoin_root(&req).unwrap();
        let t = enumerate_basis(&alg, (0, 40)).unwrap();
        let l = enumerate_basis(&ell(5).algebra, (0, 40)).unwrap();
        assert!(table_diff(&t, &l).unwrap().is_empty());
        let z = alg.generator("z").unwrap();
        assert_eq!(z, alg.generator("v1").unwrap());
    }

    #[test]
    fn ko_preset() {
        let ko = preset("ko", PresetParams::new(5)).unwrap();
        let alpha = &ko.algebra.generators()[ko.algebra.gen_index("alpha").unwrap()];
        assert_eq!((alpha.bidegree.deg, alpha.bidegree.wt), (4, 1));
        assert_eq!(ko.algebra.weights().modulus, 2);
    }

    #[test]
    fn quotients() {
        let l = ell(5);
        let q = quotient_by(&l.algebra, &l.distinguished).unwrap();
        assert!(q.is_empty());

        let ku = preset("ku", PresetParams::new(5)).unwrap();
        let q = quotient_by(&ku.algebra, &ku.distinguished).unwrap();
        let t = enumerate_basis(&q, (0, 40)).unwrap();
        assert_eq!(t.total_rank(), 1);
        assert!(t.is_weight_zero_concentrated());

        // v1 = 0 in ku leaves u^4 = 0
        let v1 = ku.algebra.generator("v1").unwrap();
        let q = quotient_by(&ku.algebra, &v1).unwrap();
        assert_eq!(q.generators()[0].kind, GeneratorKind::Truncated(4));
        assert_eq!(enumerate_basis(&q, (0, 40)).unwrap().total_rank(), 4);

        let k1 = preset("Kn", PresetParams::new(5)).unwrap();
        let err = quotient_by(&k1.algebra, &k1.distinguished).unwrap_err();
        assert_eq!(err.name(), "UnsupportedDivisor");

        let two_v1 = l.algebra.parse_element("2*v1 + v1^2").unwrap();
        assert_eq!(quotient_by(&l.algebra, &two_v1).unwrap_err().name(), "UnsupportedDivisor");
    }

    #[test]
    fn eliminate_ku_root() {
        let ku = preset("ku", PresetParams::new(5)).unwrap();
        let (plain, iso) = eliminate_roots(&ku.algebra).unwrap();
        assert_eq!(plain.len(), 1);
        assert!(plain.roots().is_empty());
        let v1 = ku.algebra.generator("v1").unwrap();
        assert_eq!(plain.format_element(&iso.apply(&v1)), "u^4");
        let a = enumerate_basis(&ku.algebra, (0, 60)).unwrap();
        let b = enumerate_basis(&plain, (0, 60)).unwrap();
        assert!(table_diff(&a, &b).unwrap().is_empty());
    }

    #[test]
    fn eliminate_periodic_root() {
        let k = preset("two_periodic_K", PresetParams::new(5)).unwrap();
        let (plain, _) = eliminate_roots(&k.algebra).unwrap();
        assert_eq!(plain.generators()[0].kind, GeneratorKind::Laurent);
        assert_eq!(k.rank_multiplier, 1);
        let a = enumerate_basis(&k.algebra, (-20, 20)).unwrap();
        let b = enumerate_basis(&plain, (-20, 20)).unwrap();
        assert!(table_diff(&a, &b).unwrap().is_empty());
        // rank one in each even degree, weight -d/2... stored u has weight 1, degree 2
        for d in (-20..=20).step_by(2) {
            let wt = (d / 2i64).rem_euclid(4);
            assert_eq!(b.rank(crate::grading::Bidegree::new(d, wt)), 1);
        }
    }

    #[test]
    fn preset_parsing() {
        assert_eq!(preset_from_str("ku(7)").unwrap().name, "ku(7)");
        let e = preset_from_str("En_hat(2,5,3)").unwrap();
        assert_eq!(e.algebra.len(), 2);
        assert_eq!(preset_from_str("tmf(5)").unwrap_err().name(), "UnknownPreset");
        assert_eq!(preset("tmf", PresetParams::new(5)).unwrap_err().name(), "UnknownPreset");
    }
}
