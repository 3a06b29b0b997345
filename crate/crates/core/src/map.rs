//! Maps of presented algebras, determined by generator images.

use crate::algebra::{Element, GeneratorKind, PresentedAlgebra};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    source: PresentedAlgebra,
    target: PresentedAlgebra,
    /// Image of each source generator, in generator order.
    images: Vec<Element>,
    /// Inverse images of Laurent generators (`None` for the other kinds).
    inverses: Vec<Option<Element>>,
}

impl AlgebraMap {
    /// Checks bidegrees, invertibility of Laurent images, truncation
    /// heights, and that root relations `z^m = a` map to true identities.
    pub fn new(
        source: PresentedAlgebra,
        target: PresentedAlgebra,
        assignment: Vec<(String, Element)>,
    ) -> Result<Self> {
        if source.prime() != target.prime() {
            return Err(Error::MapError(format!(
                "source is over p = {} but target over p = {}",
                source.prime(),
                target.prime()
            )));
        }
        let mut images: Vec<Option<Element>> = vec![None; source.len()];
        for (name, img) in assignment {
            let i = source.gen_index(&name)?;
            images[i] = Some(target.normalize(img));
        }
        let mut full = Vec::with_capacity(source.len());
        let mut inverses = Vec::with_capacity(source.len());
        for (i, img) in images.into_iter().enumerate() {
            let g = &source.generators()[i];
            let img = img.ok_or_else(|| {
                Error::MapError(format!("no image assigned to `{}`", g.name))
            })?;
            let expected = g.bidegree.in_monoid(target.weights());
            if !img.is_zero() {
                let found = target.homogeneous_bidegree(&img)?;
                if found != expected {
                    return Err(Error::DegreeMismatch {
                        name: g.name.clone(),
                        expected,
                        found,
                    });
                }
            }
            let inverse = match g.kind {
                GeneratorKind::Laurent => Some(target.invert_monomial(&img).ok_or_else(|| {
                    Error::MapError(format!(
                        "image `{}` of invertible `{}` is not a unit monomial",
                        target.format_element(&img),
                        g.name
                    ))
                })?),
                GeneratorKind::Truncated(h) => {
                    if !target.pow(&img, h).is_zero() {
                        return Err(Error::MapError(format!(
                            "`{}`^{h} = 0 is not respected",
                            g.name
                        )));
                    }
                    None
                }
                GeneratorKind::Exterior => {
                    if !target.multiply(&img, &img).is_zero() {
                        return Err(Error::MapError(format!(
                            "image of exterior `{}` does not square to zero",
                            g.name
                        )));
                    }
                    None
                }
                GeneratorKind::Polynomial => None,
            };
            full.push(img);
            inverses.push(inverse);
        }
        let map = AlgebraMap {
            source,
            target,
            images: full,
            inverses,
        };
        for r in map.source.roots() {
            let lhs = map
                .target
                .pow(&map.images[r.generator], r.exponent);
            let rhs = map.apply(&r.target);
            if lhs != rhs {
                let name = &map.source.generators()[r.generator].name;
                return Err(Error::MapError(format!(
                    "root relation `{name}`^{} is not respected",
                    r.exponent
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(alg: &PresentedAlgebra) -> Self {
        let assignment = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| (g.name.clone(), alg.generator_at(i)))
            .collect();
        AlgebraMap::new(alg.clone(), alg.clone(), assignment).expect("identity map is valid")
    }

    pub fn source(&self) -> &PresentedAlgebra {
        &self.source
    }

    pub fn target(&self) -> &PresentedAlgebra {
        &self.target
    }

    pub fn image_of(&self, name: &str) -> Result<&Element> {
        Ok(&self.images[self.source.gen_index(name)?])
    }

    /// Multiplicative, coefficient-linear extension of the generator images.
    /// Factors are multiplied in generator order, so Koszul signs come out
    /// of the target's multiplication.
    pub fn apply(&self, x: &Element) -> Element {
        let t = &self.target;
        let mut acc = Element::zero();
        for (m, c) in x.terms() {
            let mut term = t.scalar(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = if e > 0 {
                    t.pow(&self.images[i], e as u32)
                } else {
                    let inv = self.inverses[i]
                        .as_ref()
                        .expect("negative exponents only occur on Laurent generators");
                    t.pow(inv, (-e) as u32)
                };
                term = t.multiply(&term, &factor);
            }
            acc = t.add(&acc, &term);
        }
        acc
    }
}

/// Convenience alias matching the operation name used in the docs.
pub fn apply_map(f: &AlgebraMap, x: &Element) -> Element {
    f.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;
    use crate::coeffs::CoefficientRing;

    fn sigma(deg: i64, wt: i64) -> PresentedAlgebra {
        PresentedAlgebra::builder(CoefficientRing::zp_local(3).unwrap())
            .gen(GeneratorSpec::polynomial(format!("s{deg}"), deg, wt))
            .build()
            .unwrap()
    }

    #[test]
    fn sigma_power_map() {
        let src = sigma(4, 0);
        let tgt = sigma(2, 0);
        let img = tgt.parse_element("s2^2").unwrap();
        let f = AlgebraMap::new(src.clone(), tgt.clone(), vec![("s4".into(), img)]).unwrap();
        let x = src.parse_element("s4^3").unwrap();
        assert_eq!(tgt.format_element(&f.apply(&x)), "s2^6");
        let y = src.parse_element("2*s4 + 1").unwrap();
        assert_eq!(f.apply(&y), tgt.parse_element("2*s2^2 + 1").unwrap());
    }

    #[test]
    fn identity_is_identity() {
        let a = sigma(2, 1);
        let f = AlgebraMap::identity(&a);
        let x = a.parse_element("s2^5 - 3*s2").unwrap();
        assert_eq!(f.apply(&x), x);
    }

    #[test]
    fn degree_mismatch_is_caught_at_construction() {
        let src = sigma(4, 0);
        let tgt = sigma(2, 0);
        let img = tgt.parse_element("s2").unwrap();
        let err = AlgebraMap::new(src, tgt, vec![("s4".into(), img)]).unwrap_err();
        assert_eq!(err.name(), "DegreeMismatch");
    }
}
