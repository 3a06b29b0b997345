//! The `V(1)`-homotopy tables of `K(ku_p)` and `K(ko_p)` as weighted
//! `F_p[b]`-modules (resp. `F_p[b²]`-modules), their weight pieces, the
//! even-weight reassembly, and the `T(2)`-local presentations.
//!
//! Only the module structure over the polynomial base is modelled; the
//! tables carry no products.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::basis::BasisTable;
use crate::coeffs::is_prime;
use crate::error::{Error, Result};
use crate::grading::Bidegree;
use crate::report::{BidegreeCheck, CheckReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedClass {
    pub name: String,
    pub deg: i64,
    /// Weight in `Z/(p−1)`.
    pub wt: i64,
}

/// `F_p[base] ⊗ Λ(exterior) ⊗ F_p{generators}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub poly_base: Option<NamedClass>,
    pub exterior: Vec<NamedClass>,
    pub generators: Vec<NamedClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedModuleTable {
    pub name: String,
    pub p: u64,
    pub summands: Vec<Summand>,
    pub singletons: Vec<NamedClass>,
}

/// Degrees of the named classes at the prime `p`.
struct Classes {
    p: i64,
}

impl Classes {
    fn class(&self, name: impl Into<String>, deg: i64, wt: i64) -> NamedClass {
        NamedClass {
            name: name.into(),
            deg,
            wt: wt.rem_euclid(self.p - 1),
        }
    }
    fn b(&self) -> i64 {
        2 * self.p + 2
    }
    fn lambda1(&self) -> i64 {
        2 * self.p - 1
    }
    fn a1(&self) -> i64 {
        2 * self.p + 3
    }
    fn lambda2(&self) -> i64 {
        2 * self.p * self.p - 1
    }
    fn s(&self) -> i64 {
        2 * self.p - 3
    }
    const DEL: i64 = -1;
    const T: i64 = -2;
    fn sigma(n: i64) -> i64 {
        2 * n + 1
    }

    fn unit(&self) -> NamedClass {
        self.class("1", 0, 0)
    }

    /// `t^d λ1` for `0 < d < p`.
    fn t_lambda1(&self) -> Vec<NamedClass> {
        (1..self.p)
            .map(|d| {
                let t = power_label("t", d).expect("d > 0");
                self.class(format!("{t}λ1"), d * Self::T + self.lambda1(), 0)
            })
            .collect()
    }

    fn lambda2_t(&self) -> NamedClass {
        let e = self.p * self.p - self.p;
        self.class(format!("λ2t^{e}"), self.lambda2() + e * Self::T, 0)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::SmallPrime(p));
    }
    Ok(())
}

/// `V(1)_*K(ku_p)`, weights in `Z/(p−1)`.
pub fn table_k_ku(p: u64) -> Result<NamedModuleTable> {
    check_prime(p)?;
    let c = Classes { p: p as i64 };
    let b = c.class("b", c.b(), 1);
    let lambda1 = c.class("λ1", c.lambda1(), 0);
    let a1 = c.class("a1", c.a1(), 1);
    let del = Classes::DEL;
    let mut line4 = (1..=c.p - 2)
        .map(|n| c.class(format!("σ{n}"), Classes::sigma(n), n))
        .collect::<Vec<_>>();
    line4.push(c.lambda2_t());
    let summands = vec![
        Summand {
            poly_base: Some(b.clone()),
            exterior: vec![lambda1.clone(), a1.clone()],
            generators: vec![c.unit()],
        },
        Summand {
            poly_base: Some(b.clone()),
            exterior: vec![],
            generators: vec![
                c.class("∂λ1", del + c.lambda1(), 0),
                c.class("∂b", del + c.b(), 1),
                c.class("∂a1", del + c.a1(), 1),
                c.class("∂λ1a1", del + c.lambda1() + c.a1(), 1),
            ],
        },
        Summand {
            poly_base: Some(b.clone()),
            exterior: vec![a1],
            generators: c.t_lambda1(),
        },
        Summand {
            poly_base: Some(b),
            exterior: vec![lambda1],
            generators: line4,
        },
    ];
    Ok(NamedModuleTable {
        name: format!("K(ku_{p})"),
        p,
        summands,
        singletons: vec![c.class("s", c.s(), 0)],
    })
}

/// `V(1)_*K(ko_p)`, weights in `Z/(p−1)` before any relabelling.
pub fn table_k_ko(p: u64) -> Result<NamedModuleTable> {
    check_prime(p)?;
    let c = Classes { p: p as i64 };
    let b2 = c.class("b^2", 2 * c.b(), 2);
    let lambda1 = c.class("λ1", c.lambda1(), 0);
    let ba1 = c.class("ba1", c.b() + c.a1(), 2);
    let del = Classes::DEL;
    let mut line4 = (1..=c.p - 2)
        .map(|n| {
            if n % 2 == 1 {
                c.class(format!("bσ{n}"), c.b() + Classes::sigma(n), n + 1)
            } else {
                c.class(format!("σ{n}"), Classes::sigma(n), n)
            }
        })
        .collect::<Vec<_>>();
    line4.push(c.lambda2_t());
    let summands = vec![
        Summand {
            poly_base: Some(b2.clone()),
            exterior: vec![lambda1.clone(), ba1.clone()],
            generators: vec![c.unit()],
        },
        Summand {
            poly_base: Some(b2.clone()),
            exterior: vec![],
            generators: vec![
                c.class("∂λ1", del + c.lambda1(), 0),
                c.class("b∂b", 2 * c.b() + del, 2),
                c.class("b∂a1", c.b() + del + c.a1(), 2),
                c.class("b∂λ1a1", c.b() + del + c.lambda1() + c.a1(), 2),
            ],
        },
        Summand {
            poly_base: Some(b2.clone()),
            exterior: vec![ba1],
            generators: c.t_lambda1(),
        },
        Summand {
            poly_base: Some(b2),
            exterior: vec![lambda1],
            generators: line4,
        },
    ];
    Ok(NamedModuleTable {
        name: format!("K(ko_{p})"),
        p,
        summands,
        singletons: vec![c.class("s", c.s(), 0)],
    })
}

fn power_label(base: &str, j: i64) -> Option<String> {
    match j {
        0 => None,
        1 => Some(base.to_string()),
        _ if base.contains('^') => Some(format!("({base})^{j}")),
        _ => Some(format!("{base}^{j}")),
    }
}

impl NamedModuleTable {
    pub fn modulus(&self) -> u64 {
        self.p - 1
    }

    /// Every named class, in display order.
    pub fn classes(&self) -> Vec<&NamedClass> {
        let mut out: Vec<&NamedClass> = Vec::new();
        for s in &self.summands {
            for c in s.poly_base.iter().chain(&s.exterior).chain(&s.generators) {
                if c.name != "1" && !out.iter().any(|o| o.name == c.name) {
                    out.push(c);
                }
            }
        }
        out.extend(&self.singletons);
        out
    }

    /// Every basis element `base^j · (exterior subset) · generator` with
    /// degree in `window`, plus the singletons.
    pub fn enumerate(&self, window: (i64, i64)) -> BasisTable {
        let m = self.modulus() as i64;
        let mut out = BasisTable::new(window, self.modulus());
        for s in &self.summands {
            let n = s.exterior.len();
            for mask in 0..(1u32 << n) {
                let chosen: Vec<&NamedClass> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &s.exterior[i]).collect();
                for g in &s.generators {
                    let mut deg = g.deg + chosen.iter().map(|c| c.deg).sum::<i64>();
                    let mut wt = g.wt + chosen.iter().map(|c| c.wt).sum::<i64>();
                    let mut j = 0;
                    loop {
                        if deg > window.1 {
                            break;
                        }
                        if deg >= window.0 {
                            let mut factors: Vec<String> = Vec::new();
                            if let Some(b) = &s.poly_base {
                                factors.extend(power_label(&b.name, j));
                            }
                            factors.extend(chosen.iter().map(|c| c.name.clone()));
                            if g.name != "1" || factors.is_empty() {
                                factors.push(g.name.clone());
                            }
                            out.push(Bidegree::new(deg, wt.rem_euclid(m)), factors.join("·"));
                        }
                        match &s.poly_base {
                            Some(b) => {
                                deg += b.deg;
                                wt += b.wt;
                                j += 1;
                            }
                            None => break,
                        }
                    }
                }
            }
        }
        for c in &self.singletons {
            out.push(Bidegree::new(c.deg, c.wt), c.name.clone());
        }
        out
    }

    /// Aligned columns `class  degree  weight`, in display order.
    pub fn render_text(&self) -> String {
        let classes = self.classes();
        let width = classes.iter().map(|c| c.name.chars().count()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "# {} at p = {}, weights in Z/{}", self.name, self.p, self.modulus());
        let _ = writeln!(out, "{:<width$}  {:>6}  {:>6}", "class", "deg", "wt");
        for c in classes {
            let pad = width - c.name.chars().count();
            let _ = writeln!(out, "{}{}  {:>6}  {:>6}", c.name, " ".repeat(pad), c.deg, c.wt);
        }
        out
    }
}

pub fn enumerate_table(t: &NamedModuleTable, window: (i64, i64)) -> BasisTable {
    t.enumerate(window)
}

fn check_weight(t: &NamedModuleTable, i: i64) -> Result<()> {
    if !(0..t.modulus() as i64).contains(&i) {
        return Err(Error::BadWeight(format!(
            "{i} is not a weight in Z/{}",
            t.modulus()
        )));
    }
    Ok(())
}

pub fn weight_piece(t: &NamedModuleTable, i: i64, window: (i64, i64)) -> Result<BasisTable> {
    check_weight(t, i)?;
    Ok(t.enumerate(window).weight_slice(i))
}

/// The sum of the chosen weight pieces. When every chosen weight is even
/// the weights are relabelled `2i ↦ i` into `Z/((p−1)/2)`; otherwise the
/// `Z/(p−1)` labels are kept.
pub fn reassemble(t: &NamedModuleTable, weights: &[i64], window: (i64, i64)) -> Result<BasisTable> {
    for &w in weights {
        check_weight(t, w)?;
    }
    let full = t.enumerate(window);
    let halve = weights.iter().all(|w| w % 2 == 0);
    let modulus = if halve { t.modulus() / 2 } else { t.modulus() };
    let mut out = BasisTable::new(window, modulus);
    for (b, labels) in &full.entries {
        if weights.contains(&b.wt) {
            let wt = if halve { b.wt / 2 } else { b.wt };
            out.extend(Bidegree::new(b.deg, wt), labels.iter().cloned());
        }
    }
    Ok(out)
}

pub fn even_weights(p: u64) -> Vec<i64> {
    (0..(p as i64 - 1)).step_by(2).collect()
}

/// Even-weight reassembly of the `K(ku_p)` table against the `K(ko_p)`
/// table, plus the parity of every `K(ko_p)` basis element.
pub fn ko_check(p: u64, window: (i64, i64)) -> Result<CheckReport> {
    let ku = table_k_ku(p)?;
    let ko = table_k_ko(p)?;
    let evens = even_weights(p);
    let lhs = reassemble(&ku, &evens, window)?;
    let ko_full = ko.enumerate(window);
    let odd: Vec<Bidegree> = ko_full.entries.keys().filter(|b| b.wt % 2 != 0).copied().collect();
    let rhs = reassemble(&ko, &evens, window)?;
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
            ok: lhs.rank(b) == rhs.rank(b),
        })
        .collect();
    let notes = odd
        .iter()
        .map(|b| format!("K(ko_{p}) class of odd weight at ({}, {})", b.deg, b.wt))
        .collect();
    Ok(CheckReport::new(
        "ko-check",
        json!({"p": p}),
        window,
        rows,
        odd.is_empty(),
        notes,
    ))
}

/// One-line summary in the form used by the CLI.
pub fn ko_check_summary(p: u64, report: &CheckReport) -> String {
    if report.passed() {
        format!(
            "PASS: even-weight reassembly of K(ku_{p}) table matches K(ko_{p}) table at all {} bidegrees checked",
            report.per_bidegree.len()
        )
    } else {
        format!(
            "FAIL: even-weight reassembly of K(ku_{p}) table differs from K(ko_{p}) table at {} of {} bidegrees",
            report.failures().count(),
            report.per_bidegree.len()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum T2Table {
    Ku,
    Ko,
}

impl std::str::FromStr for T2Table {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ku" => Ok(T2Table::Ku),
            "ko" => Ok(T2Table::Ko),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }
}

/// `T(2)_*K(−)` as a formal quotient of `T(2)_*K(ℓ_p)`; `b^{p−1} = −v2`
/// is recorded as metadata, never used as a rewrite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T2Presentation {
    pub p: u64,
    pub table: T2Table,
    pub adjoined: String,
    pub exponent: u64,
    pub relation: String,
    pub presentation: String,
}

pub fn t2_presentation(p: u64, table: T2Table) -> Result<T2Presentation> {
    check_prime(p)?;
    let (adjoined, exponent, name) = match table {
        T2Table::Ku => ("b", p - 1, "ku"),
        T2Table::Ko => ("b^2", (p - 1) / 2, "ko"),
    };
    let power = power_label(adjoined, exponent as i64).expect("exponent is positive");
    let relation = format!("{power} + v2 = 0");
    Ok(T2Presentation {
        p,
        table,
        adjoined: adjoined.to_string(),
        exponent,
        presentation: format!("T(2)_*K({name}_{p}) ≅ T(2)_*K(ℓ_{p})[{adjoined}]/({power} + v2)"),
        relation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(t: &'a NamedModuleTable, name: &str) -> &'a NamedClass {
        t.classes().into_iter().find(|c| c.name == name).unwrap()
    }

    #[test]
    fn ku_class_bidegrees() {
        let t = table_k_ku(5).unwrap();
        assert_eq!((find(&t, "b").deg, find(&t, "b").wt), (12, 1));
        assert_eq!((find(&t, "λ1").deg, find(&t, "λ1").wt), (9, 0));
        assert_eq!((find(&t, "s").deg, find(&t, "s").wt), (7, 0));
        assert_eq!((find(&t, "σ3").deg, find(&t, "σ3").wt), (7, 3));
        let t7 = table_k_ku(7).unwrap();
        assert_eq!((find(&t7, "t^2λ1").deg, find(&t7, "t^2λ1").wt), (9, 0));
        assert_eq!(table_k_ku(3).unwrap_err(), Error::SmallPrime(3));
    }

    #[test]
    fn ko_class_bidegrees() {
        let t = table_k_ko(5).unwrap();
        assert_eq!((find(&t, "b^2").deg, find(&t, "b^2").wt), (24, 2));
        assert_eq!((find(&t, "bσ3").deg, find(&t, "bσ3").wt), (19, 0));
        assert!(t.enumerate((-10, 200)).entries.keys().all(|b| b.wt % 2 == 0));
    }

    #[test]
    fn small_windows() {
        let t = table_k_ku(5).unwrap();
        let unit = t.enumerate((0, 0));
        assert_eq!(unit.total_rank(), 1);
        assert_eq!(unit.labels(Bidegree::ZERO), ["1"]);
        let seven = t.enumerate((7, 7));
        // t·λ1 also lives in degree 7 at p = 5
        assert_eq!(seven.labels(Bidegree::new(7, 0)), ["tλ1", "s"]);
        assert_eq!(seven.labels(Bidegree::new(7, 3)), ["σ3"]);
    }

    #[test]
    fn weight_zero_piece() {
        let t = table_k_ku(5).unwrap();
        let w0 = weight_piece(&t, 0, (0, 200)).unwrap();
        let labels: Vec<&String> = w0.entries.values().flatten().collect();
        for name in ["λ1", "∂λ1", "s", "tλ1", "λ2t^20"] {
            assert!(labels.iter().any(|l| l.as_str() == name), "{name}");
        }
        assert!(!labels.iter().any(|l| l.as_str() == "b"));
        assert_eq!(weight_piece(&t, 4, (0, 10)).unwrap_err().name(), "BadWeight");
    }

    #[test]
    fn reassembly() {
        let t = table_k_ku(5).unwrap();
        assert_eq!(reassemble(&t, &[0, 1, 2, 3], (0, 200)).unwrap(), t.enumerate((0, 200)));
        for p in [5, 7] {
            let r = ko_check(p, (-10, 200)).unwrap();
            assert!(r.passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn t2_relations() {
        assert_eq!(t2_presentation(5, T2Table::Ko).unwrap().relation, "(b^2)^2 + v2 = 0");
        assert_eq!(t2_presentation(5, T2Table::Ku).unwrap().relation, "b^4 + v2 = 0");
        assert_eq!(t2_presentation(7, T2Table::Ko).unwrap().relation, "(b^2)^3 + v2 = 0");
    }
}
