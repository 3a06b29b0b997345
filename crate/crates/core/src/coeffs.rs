//! Exact coefficient rings: the prime field `F_p` and the local ring `Z_(p)`.
//!
//! Scalars are stored as [`BigRational`] in both cases. Elements of `F_p` are
//! kept as integer residues `0..p`, elements of `Z_(p)` as reduced fractions
//! whose denominator is prime to `p`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p")]
pub enum CoefficientRing {
    Fp(u64),
    ZpLocal(u64),
}

impl CoefficientRing {
    pub fn fp(p: u64) -> Result<Self> {
        Self::validate(p)?;
        Ok(CoefficientRing::Fp(p))
    }

    pub fn zp_local(p: u64) -> Result<Self> {
        Self::validate(p)?;
        Ok(CoefficientRing::ZpLocal(p))
    }

    fn validate(p: u64) -> Result<()> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(())
    }

    /// Re-runs the constructor checks; used after deserialization.
    pub fn validated(self) -> Result<Self> {
        Self::validate(self.prime())?;
        Ok(self)
    }

    pub fn prime(&self) -> u64 {
        match *self {
            CoefficientRing::Fp(p) | CoefficientRing::ZpLocal(p) => p,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, CoefficientRing::Fp(_))
    }

    fn p_big(&self) -> BigInt {
        BigInt::from(self.prime())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.reduce(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    /// Checks that an externally supplied rational lies in the ring and
    /// returns its canonical representative.
    pub fn check(&self, q: Scalar) -> Result<Scalar> {
        if (q.denom() % self.p_big()).is_zero() {
            return Err(Error::NotPLocal {
                value: q.to_string(),
                p: self.prime(),
            });
        }
        Ok(self.reduce(q))
    }

    /// Canonical representative of a value already known to be p-local.
    pub fn reduce(&self, q: Scalar) -> Scalar {
        match self {
            CoefficientRing::ZpLocal(_) => q,
            CoefficientRing::Fp(_) => BigRational::from_integer(BigInt::from(self.residue(&q))),
        }
    }

    /// Image of a p-local rational in `F_p`.
    pub fn residue(&self, q: &Scalar) -> u64 {
        let p = self.p_big();
        let num = q.numer().mod_floor(&p);
        let den = q.denom().mod_floor(&p);
        let den_inv = den.modpow(&(&p - BigInt::from(2)), &p);
        (num * den_inv)
            .mod_floor(&p)
            .to_u64()
            .expect("residue fits in u64")
    }

    pub fn is_zero(&self, q: &Scalar) -> bool {
        self.reduce(q.clone()).is_zero()
    }

    /// `x` is a unit iff `p` does not divide its numerator.
    pub fn is_unit(&self, q: &Scalar) -> bool {
        self.residue(q) != 0
    }

    pub fn inverse(&self, q: &Scalar) -> Option<Scalar> {
        if !self.is_unit(q) {
            return None;
        }
        Some(self.reduce(q.recip()))
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    /// Renders `q` as `n` or `n/d`, with residues for `F_p`; also used to
    /// describe a coefficient modulo `p`, e.g. `3 ≡ 0`.
    pub fn describe(&self, q: &Scalar) -> String {
        let shown = fmt_scalar(q);
        format!("{shown} ≡ {} mod {}", self.residue(q), self.prime())
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Fp(p) => write!(f, "F_{p}"),
            CoefficientRing::ZpLocal(p) => write!(f, "Z_({p})"),
        }
    }
}

pub fn fmt_scalar(q: &Scalar) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn scalar_abs_is_one(q: &Scalar) -> bool {
    q.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rejects_even_and_composite_primes() {
        assert_eq!(CoefficientRing::fp(2), Err(Error::InvalidPrime(2)));
        assert_eq!(CoefficientRing::zp_local(9), Err(Error::InvalidPrime(9)));
        assert!(CoefficientRing::zp_local(7).is_ok());
    }

    #[test]
    fn zp_local_units_are_numerators_prime_to_p() {
        let r = CoefficientRing::zp_local(5).unwrap();
        assert!(r.is_unit(&q(3, 7)));
        assert!(r.is_unit(&q(-1, 1)));
        assert!(!r.is_unit(&q(10, 3)));
        assert!(!r.is_unit(&q(0, 1)));
        assert_eq!(r.inverse(&q(3, 7)), Some(q(7, 3)));
        assert!(r.check(q(1, 5)).is_err());
        assert_eq!(r.check(q(2, 4)).unwrap(), q(1, 2));
    }

    #[test]
    fn fp_residues() {
        let r = CoefficientRing::fp(5).unwrap();
        assert_eq!(r.reduce(q(-1, 1)), q(4, 1));
        // 1/2 = 3 in F_5
        assert_eq!(r.check(q(1, 2)).unwrap(), q(3, 1));
        assert!(r.is_zero(&q(10, 1)));
        assert_eq!(r.inverse(&q(2, 1)), Some(q(3, 1)));
        assert_eq!(r.describe(&q(3, 1)), "3 ≡ 3 mod 5");
    }
}
