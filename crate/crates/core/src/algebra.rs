//! Presented graded-commutative algebras.
//!
//! An algebra is a free graded-commutative algebra on an ordered list of
//! generators (polynomial, Laurent, exterior or truncated) over `F_p` or
//! `Z_(p)`, together with root relations `z^m = a` that are applied as rewrite
//! rules. Elements are finite sums of monomials; a monomial is an exponent
//! vector read as the ordered product `g_0^{e_0} g_1^{e_1} ...`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffs::{fmt_scalar, CoefficientRing, Scalar};
use crate::error::{Error, Result};
use crate::grading::{Bidegree, WeightMonoid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    Polynomial,
    Laurent,
    Exterior,
    /// `g^e = 0`
    Truncated(u32),
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::Polynomial => write!(f, "polynomial"),
            GeneratorKind::Laurent => write!(f, "laurent"),
            GeneratorKind::Exterior => write!(f, "exterior"),
            GeneratorKind::Truncated(e) => write!(f, "truncated({e})"),
        }
    }
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "polynomial" => return Ok(GeneratorKind::Polynomial),
            "laurent" => return Ok(GeneratorKind::Laurent),
            "exterior" => return Ok(GeneratorKind::Exterior),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix("truncated(").and_then(|r| r.strip_suffix(')')) {
            let e = inner
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad truncation height in `{s}`")))?;
            return Ok(GeneratorKind::Truncated(e));
        }
        Err(Error::Parse(format!("unknown generator kind `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub bidegree: Bidegree,
    pub kind: GeneratorKind,
    /// Exponent cap used by basis enumeration (`|e| <= cap` for Laurent).
    pub cap: Option<u32>,
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, deg: i64, wt: i64, kind: GeneratorKind) -> Self {
        GeneratorSpec {
            name: name.into(),
            bidegree: Bidegree::new(deg, wt),
            kind,
            cap: None,
        }
    }

    pub fn polynomial(name: impl Into<String>, deg: i64, wt: i64) -> Self {
        Self::new(name, deg, wt, GeneratorKind::Polynomial)
    }

    pub fn laurent(name: impl Into<String>, deg: i64, wt: i64) -> Self {
        Self::new(name, deg, wt, GeneratorKind::Laurent)
    }

    pub fn exterior(name: impl Into<String>, deg: i64, wt: i64) -> Self {
        Self::new(name, deg, wt, GeneratorKind::Exterior)
    }

    pub fn truncated(name: impl Into<String>, deg: i64, wt: i64, height: u32) -> Self {
        Self::new(name, deg, wt, GeneratorKind::Truncated(height))
    }

    pub fn with_cap(mut self, cap: u32) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn is_odd(&self) -> bool {
        self.bidegree.is_odd()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn unit(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The single term of a one-term element.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Sums raw terms without any ring reduction; zero coefficients are
    /// dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            *out.entry(m).or_insert_with(Scalar::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        Element { terms: out }
    }

    /// Appends zero exponents so the element lives in an algebra with more
    /// generators appended at the end.
    pub fn padded(&self, len: usize) -> Element {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(len, 0);
                (Monomial(e), c.clone())
            })
            .collect();
        Element { terms }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRelation {
    pub generator: usize,
    pub exponent: u32,
    pub target: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedAlgebra {
    coeffs: CoefficientRing,
    weights: WeightMonoid,
    gens: Vec<GeneratorSpec>,
    roots: Vec<RootRelation>,
}

impl PresentedAlgebra {
    /// Validates a presentation. Root relations may be given in any order;
    /// they are installed in generator order so that each target is
    /// normalized against the relations of earlier generators.
    pub fn new(
        coeffs: CoefficientRing,
        weights: WeightMonoid,
        gens: Vec<GeneratorSpec>,
        roots: Vec<RootRelation>,
    ) -> Result<Self> {
        let coeffs = coeffs.validated()?;
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(gens.len());
        let rooted: HashSet<usize> = roots.iter().map(|r| r.generator).collect();
        for (i, g) in gens.into_iter().enumerate() {
            if !valid_identifier(&g.name) {
                return Err(Error::Parse(format!("`{}` is not a valid generator name", g.name)));
            }
            if !seen.insert(g.name.clone()) {
                return Err(Error::DuplicateName(g.name));
            }
            let deg = g.bidegree.deg;
            match g.kind {
                GeneratorKind::Exterior if !g.is_odd() => {
                    return Err(Error::EvenDegreeExterior { name: g.name, deg });
                }
                GeneratorKind::Exterior => {}
                _ if g.is_odd() => {
                    return Err(Error::OddDegreeNonExterior { name: g.name, deg });
                }
                GeneratorKind::Truncated(e) if e < 2 => {
                    return Err(Error::BadTruncation {
                        name: g.name,
                        height: e,
                    });
                }
                GeneratorKind::Polynomial | GeneratorKind::Laurent
                    if deg == 0 && g.cap.is_none() && !rooted.contains(&i) =>
                {
                    return Err(Error::MissingCap(g.name));
                }
                _ => {}
            }
            normalized.push(GeneratorSpec {
                bidegree: g.bidegree.in_monoid(weights),
                ..g
            });
        }

        let mut alg = PresentedAlgebra {
            coeffs,
            weights,
            gens: normalized,
            roots: Vec::new(),
        };
        let mut roots = roots;
        roots.sort_by_key(|r| r.generator);
        for r in roots {
            alg.install_root(r)?;
        }
        Ok(alg)
    }

    fn install_root(&mut self, r: RootRelation) -> Result<()> {
        let n = self.gens.len();
        let z = r.generator;
        if z >= n {
            return Err(Error::BadRootRelation(format!("generator index {z} out of range")));
        }
        let name = self.gens[z].name.clone();
        if self.root_of(z).is_some() {
            return Err(Error::BadRootRelation(format!("`{name}` has two root relations")));
        }
        if self.gens[z].kind != GeneratorKind::Polynomial {
            return Err(Error::BadRootRelation(format!(
                "`{name}` must be a polynomial generator to carry a root relation"
            )));
        }
        if r.exponent == 0 {
            return Err(Error::BadRootRelation(format!("`{name}`: exponent must be positive")));
        }
        for (m, _) in r.target.terms() {
            if m.0.len() != n {
                return Err(Error::BadRootRelation(format!(
                    "`{name}`: target has exponent vectors of the wrong length"
                )));
            }
            if m.0[z..].iter().any(|&e| e != 0) {
                return Err(Error::BadRootRelation(format!(
                    "`{name}`: target may only involve earlier generators"
                )));
            }
        }
        let target = self.normalize(r.target);
        let bideg = self.bidegree(&target).ok_or_else(|| {
            Error::BadRootRelation(format!("`{name}`: target must be nonzero and homogeneous"))
        })?;
        let expected = self.gens[z].bidegree.scale(r.exponent as i64).in_monoid(self.weights);
        if bideg != expected {
            return Err(Error::BadRootRelation(format!(
                "`{name}`^{} has bidegree {expected} but the target has {bideg}",
                r.exponent
            )));
        }
        self.roots.push(RootRelation {
            generator: z,
            exponent: r.exponent,
            target,
        });
        Ok(())
    }

    /// Generators only, no validation. For intermediate algebras whose
    /// final form is validated by [`PresentedAlgebra::new`].
    pub(crate) fn bare(
        coeffs: CoefficientRing,
        weights: WeightMonoid,
        gens: Vec<GeneratorSpec>,
    ) -> Self {
        PresentedAlgebra {
            coeffs,
            weights,
            gens,
            roots: Vec::new(),
        }
    }

    pub fn builder(coeffs: CoefficientRing) -> AlgebraBuilder {
        AlgebraBuilder {
            coeffs,
            modulus: 0,
            gens: Vec::new(),
            roots: Vec::new(),
        }
    }

    pub fn coeffs(&self) -> CoefficientRing {
        self.coeffs
    }

    pub fn prime(&self) -> u64 {
        self.coeffs.prime()
    }

    pub fn weights(&self) -> WeightMonoid {
        self.weights
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.gens
    }

    pub fn roots(&self) -> &[RootRelation] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn root_of(&self, gen: usize) -> Option<&RootRelation> {
        self.roots.iter().find(|r| r.generator == gen)
    }

    /// Inclusive exponent bounds used for enumeration; `None` is unbounded.
    pub fn exponent_bounds(&self, i: usize) -> (Option<i64>, Option<i64>) {
        let g = &self.gens[i];
        let cap = g.cap.map(|c| c as i64);
        match g.kind {
            GeneratorKind::Exterior => (Some(0), Some(1)),
            GeneratorKind::Truncated(e) => (Some(0), Some(e as i64 - 1)),
            GeneratorKind::Polynomial => {
                let from_root = self.root_of(i).map(|r| r.exponent as i64 - 1);
                let hi = match (from_root, cap) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (Some(0), hi)
            }
            GeneratorKind::Laurent => (cap.map(|c| -c), cap),
        }
    }

    // ---- elements ----

    pub fn one(&self) -> Element {
        self.monomial_element(Monomial::unit(self.len()), Scalar::one())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        self.monomial_element(Monomial::unit(self.len()), c)
    }

    pub fn generator(&self, name: &str) -> Result<Element> {
        let i = self.gen_index(name)?;
        Ok(self.generator_at(i))
    }

    pub fn generator_at(&self, i: usize) -> Element {
        let mut e = vec![0; self.len()];
        e[i] = 1;
        self.normalize(self.raw_term(Monomial(e), Scalar::one()))
    }

    /// A single normalized term `c * m`.
    pub fn monomial_element(&self, m: Monomial, c: Scalar) -> Element {
        self.normalize(self.raw_term(m, c))
    }

    fn raw_term(&self, m: Monomial, c: Scalar) -> Element {
        assert_eq!(m.0.len(), self.len(), "monomial length does not match algebra");
        let mut terms = BTreeMap::new();
        terms.insert(m, c);
        Element { terms }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let mut terms = x.terms.clone();
        for (m, c) in &y.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *slot = self.coeffs.add(slot, c);
        }
        terms.retain(|_, c| !self.coeffs.is_zero(c));
        Element { terms }
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        let terms = x
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.coeffs.mul(c, a)))
            .filter(|(_, a)| !self.coeffs.is_zero(a))
            .collect();
        Element { terms }
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.scale(&-Scalar::one(), x)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> Bidegree {
        let mut b = Bidegree::ZERO;
        for (g, &e) in self.gens.iter().zip(&m.0) {
            b = b + g.bidegree.scale(e);
        }
        b.in_monoid(self.weights)
    }

    /// Common bidegree of all terms; `None` for zero or inhomogeneous input.
    pub fn bidegree(&self, x: &Element) -> Option<Bidegree> {
        let mut it = x.terms.keys().map(|m| self.monomial_bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn homogeneous_bidegree(&self, x: &Element) -> Result<Bidegree> {
        self.bidegree(x)
            .ok_or_else(|| Error::NotHomogeneous(self.format_element(x)))
    }

    /// Product of two basis monomials with the Koszul sign, before root
    /// rewriting. `None` when an exterior square or truncation kills it.
    fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let mut out = Vec::with_capacity(a.0.len());
        let mut swaps = 0u64;
        // odd generators of `a` with index > j that `b`'s odd factor j must pass
        let mut odd_in_a_after = 0u64;
        for j in (0..self.len()).rev() {
            let g = &self.gens[j];
            if g.is_odd() {
                if b.0[j] % 2 != 0 {
                    swaps += odd_in_a_after;
                }
                if a.0[j] % 2 != 0 {
                    odd_in_a_after += 1;
                }
            }
        }
        for (j, g) in self.gens.iter().enumerate() {
            let e = a.0[j] + b.0[j];
            match g.kind {
                GeneratorKind::Exterior if e > 1 => return None,
                GeneratorKind::Truncated(h) if e >= h as i64 => return None,
                _ => {}
            }
            out.push(e);
        }
        Some((swaps % 2 == 1, Monomial(out)))
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &x.terms {
            for (mb, cb) in &y.terms {
                if let Some((negate, m)) = self.multiply_monomials(ma, mb) {
                    let mut c = ca * cb;
                    if negate {
                        c = -c;
                    }
                    let slot = terms.entry(m).or_insert_with(Scalar::zero);
                    *slot += c;
                }
            }
        }
        self.normalize(Element { terms })
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, x);
        }
        acc
    }

    /// Inverse of a unit multiple of a monomial in Laurent generators.
    pub fn invert_monomial(&self, x: &Element) -> Option<Element> {
        let (m, c) = x.as_single_term()?;
        let invertible = m
            .0
            .iter()
            .zip(&self.gens)
            .all(|(&e, g)| e == 0 || g.kind == GeneratorKind::Laurent);
        if !invertible {
            return None;
        }
        let c_inv = self.coeffs.inverse(c)?;
        let inv = Monomial(m.0.iter().map(|e| -e).collect());
        Some(self.monomial_element(inv, c_inv))
    }

    /// Reduces coefficients, drops zero terms, kills exterior squares and
    /// truncations, and rewrites `z^e` with `e >= m` to `z^{e mod m} a^{e div m}`.
    pub fn normalize(&self, x: Element) -> Element {
        let mut out = Element::zero();
        let mut pending: Vec<(Monomial, Scalar)> = Vec::new();
        for (m, c) in x.terms {
            let c = self.coeffs.reduce(c);
            if c.is_zero() {
                continue;
            }
            let dead = self.gens.iter().zip(&m.0).any(|(g, &e)| match g.kind {
                GeneratorKind::Exterior => !(0..=1).contains(&e),
                GeneratorKind::Truncated(h) => e >= h as i64 || e < 0,
                GeneratorKind::Polynomial => e < 0,
                GeneratorKind::Laurent => false,
            });
            if dead {
                continue;
            }
            pending.push((m, c));
        }
        for (m, c) in pending {
            let reducible = self
                .roots
                .iter()
                .rev()
                .find(|r| m.0[r.generator] >= r.exponent as i64);
            match reducible {
                None => {
                    let slot = out.terms.entry(m).or_insert_with(Scalar::zero);
                    *slot = self.coeffs.add(slot, &c);
                }
                Some(r) => {
                    let e = m.0[r.generator];
                    let q = e / r.exponent as i64;
                    let mut rest = m.0.clone();
                    rest[r.generator] = e % r.exponent as i64;
                    let head = self.raw_term(Monomial(rest), c);
                    let tail = self.pow(&r.target, q as u32);
                    let reduced = self.multiply(&head, &tail);
                    out = self.add(&out, &reduced);
                }
            }
        }
        out.terms.retain(|_, c| !self.coeffs.is_zero(c));
        out
    }

    // ---- rendering and parsing ----

    pub fn monomial_label(&self, m: &Monomial) -> String {
        let factors: Vec<String> = self
            .gens
            .iter()
            .zip(&m.0)
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn format_element(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in x.terms.iter().enumerate() {
            let negative = *c < Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let label = self.monomial_label(m);
            if abs.is_one() {
                out.push_str(&label);
            } else if m.is_unit() {
                out.push_str(&fmt_scalar(&abs));
            } else {
                out.push_str(&format!("{}*{}", fmt_scalar(&abs), label));
            }
        }
        out
    }

    /// Parses expressions such as `2*v1^2*ds2 - 1/3*u^-1 + 1`. Factors are
    /// separated by `*` or whitespace; exponents may be negative.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        ElementParser::new(self, s).parse()
    }
}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub struct AlgebraBuilder {
    coeffs: CoefficientRing,
    modulus: u64,
    gens: Vec<GeneratorSpec>,
    roots: Vec<(String, u32, String)>,
}

impl AlgebraBuilder {
    pub fn modulus(mut self, m: u64) -> Self {
        self.modulus = m;
        self
    }

    pub fn gen(mut self, g: GeneratorSpec) -> Self {
        self.gens.push(g);
        self
    }

    /// `gen^exponent = target`, with `target` written in the earlier generators.
    pub fn root(mut self, gen: &str, exponent: u32, target: &str) -> Self {
        self.roots.push((gen.to_string(), exponent, target.to_string()));
        self
    }

    pub fn build(self) -> Result<PresentedAlgebra> {
        let weights = WeightMonoid::new(self.modulus);
        let bare = PresentedAlgebra::new(self.coeffs, weights, self.gens.clone(), Vec::new())
            .or_else(|e| match e {
                // generators bounded by a root relation are allowed in degree 0
                Error::MissingCap(_) if !self.roots.is_empty() => {
                    Ok(PresentedAlgebra::bare(self.coeffs, weights, self.gens.clone()))
                }
                e => Err(e),
            })?;
        let mut roots = Vec::new();
        for (name, exponent, target) in &self.roots {
            let generator = bare.gen_index(name)?;
            let target = bare.parse_element(target)?;
            roots.push(RootRelation {
                generator,
                exponent: *exponent,
                target,
            });
        }
        PresentedAlgebra::new(self.coeffs, weights, self.gens, roots)
    }
}

struct ElementParser<'a> {
    alg: &'a PresentedAlgebra,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> ElementParser<'a> {
    fn new(alg: &'a PresentedAlgebra, s: &str) -> Self {
        ElementParser {
            alg,
            chars: s.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in `{s}`", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Element> {
        let mut acc = Element::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut negative = false;
            match self.peek() {
                None if !first => break,
                Some('+') if !first => self.pos += 1,
                Some('-') => {
                    negative = true;
                    self.pos += 1;
                }
                _ if first => {}
                _ => return Err(self.err("expected `+` or `-`")),
            }
            first = false;
            let mut term = self.parse_term()?;
            if negative {
                term = self.alg.neg(&term);
            }
            acc = self.alg.add(&acc, &term);
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Element> {
        let mut term = self.alg.one();
        let mut factors = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') if factors > 0 => {
                    self.pos += 1;
                    continue;
                }
                Some(c) if c.is_ascii_digit() => {
                    let q = self.parse_number()?;
                    let q = self.alg.coeffs.check(q)?;
                    term = self.alg.scale(&q, &term);
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let f = self.parse_power()?;
                    term = self.alg.multiply(&term, &f);
                }
                _ => break,
            }
            factors += 1;
        }
        if factors == 0 {
            return Err(self.err("expected a term"));
        }
        Ok(term)
    }

    fn parse_number(&mut self) -> Result<Scalar> {
        let num = self.parse_digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.parse_digits()?;
            if den == 0 {
                return Err(self.err("zero denominator"));
            }
            return Ok(BigRational::new(num.into(), den.into()));
        }
        Ok(BigRational::from_integer(num.into()))
    }

    fn parse_digits(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>().map_err(|_| self.err("expected a number"))
    }

    fn parse_power(&mut self) -> Result<Element> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let i = self.alg.gen_index(&name)?;
        let mut exp = 1i64;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let negative = self.peek() == Some('-');
            if negative {
                self.pos += 1;
            }
            exp = self.parse_digits()?;
            if negative {
                exp = -exp;
            }
        }
        let g = self.alg.generator_at(i);
        if exp >= 0 {
            Ok(self.alg.pow(&g, exp as u32))
        } else {
            let inv = self
                .alg
                .invert_monomial(&g)
                .ok_or_else(|| self.err(&format!("`{name}` is not invertible")))?;
            Ok(self.alg.pow(&inv, (-exp) as u32))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(p: u64) -> CoefficientRing {
        CoefficientRing::zp_local(p).unwrap()
    }

    #[test]
    fn validation_errors() {
        let err = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::exterior("s", 2, 1))
            .build()
            .unwrap_err();
        assert_eq!(err.name(), "EvenDegreeExterior");

        let err = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::polynomial("x", 3, 0))
            .build()
            .unwrap_err();
        assert_eq!(err.name(), "OddDegreeNonExterior");

        let err = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::polynomial("x", 2, 0))
            .gen(GeneratorSpec::polynomial("x", 4, 0))
            .build()
            .unwrap_err();
        assert_eq!(err, Error::DuplicateName("x".into()));

        let err = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::polynomial("u1", 0, 0))
            .build()
            .unwrap_err();
        assert_eq!(err, Error::MissingCap("u1".into()));

        let err = PresentedAlgebra::builder(zp(5))
            .gen(GeneratorSpec::polynomial("v1", 8, 0))
            .gen(GeneratorSpec::polynomial("z", 4, 1))
            .modulus(4)
            .root("z", 4, "v1")
            .build()
            .unwrap_err();
        assert_eq!(err.name(), "BadRootRelation");
    }

    #[test]
    fn root_rewrite() {
        let alg = PresentedAlgebra::builder(zp(5))
            .modulus(4)
            .gen(GeneratorSpec::polynomial("v1", 8, 0))
            .gen(GeneratorSpec::polynomial("z", 2, 1))
            .root("z", 4, "v1")
            .build()
            .unwrap();
        let z = alg.generator("z").unwrap();
        let v1 = alg.generator("v1").unwrap();
        let z3 = alg.pow(&z, 3);
        assert_eq!(alg.multiply(&z3, &z), v1);
        let z6 = alg.pow(&z, 6);
        assert_eq!(alg.format_element(&z6), "v1*z^2");
    }

    #[test]
    fn exterior_square_and_unit() {
        let alg = PresentedAlgebra::builder(zp(5))
            .gen(GeneratorSpec::exterior("lambda", 9, 0))
            .build()
            .unwrap();
        let l = alg.generator("lambda").unwrap();
        assert!(alg.multiply(&l, &l).is_zero());
        assert_eq!(alg.multiply(&alg.one(), &l), l);
    }

    #[test]
    fn koszul_sign_on_odd_pairs() {
        let alg = PresentedAlgebra::builder(zp(3))
            .gen(GeneratorSpec::exterior("a", 1, 0))
            .gen(GeneratorSpec::exterior("b", 3, 0))
            .build()
            .unwrap();
        let a = alg.generator("a").unwrap();
        let b = alg.generator("b").unwrap();
        let ab = alg.multiply(&a, &b);
        let ba = alg.multiply(&b, &a);
        assert_eq!(ba, alg.neg(&ab));
    }

    #[test]
    fn parse_and_format_round_trip() {
        let alg = PresentedAlgebra::builder(zp(5))
            .gen(GeneratorSpec::laurent("u", 2, 1))
            .gen(GeneratorSpec::exterior("du", 3, 1))
            .build()
            .unwrap();
        let x = alg.parse_element("2*u^2*du - 1/3 u^-1 + 1").unwrap();
        let shown = alg.format_element(&x);
        assert_eq!(alg.parse_element(&shown).unwrap(), x);
        assert!(alg.parse_element("u^").is_err());
        assert!(alg.parse_element("w").is_err());
        assert_eq!(
            alg.parse_element("1/5").unwrap_err().name(),
            "NotPLocal",
        );
    }
}
