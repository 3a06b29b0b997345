//! Weights and bidegrees.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Weights live in `Z` (`modulus == 0`) or in `Z/m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightMonoid {
    pub modulus: u64,
}

impl WeightMonoid {
    pub const INTEGERS: WeightMonoid = WeightMonoid { modulus: 0 };

    pub fn new(modulus: u64) -> Self {
        WeightMonoid { modulus }
    }

    pub fn is_integral(&self) -> bool {
        self.modulus == 0
    }

    /// Representative in `0..m` for `m > 0`; the integer itself for `m = 0`.
    pub fn normalize(&self, wt: i64) -> i64 {
        if self.modulus == 0 {
            wt
        } else {
            wt.rem_euclid(self.modulus as i64)
        }
    }

    pub fn add(&self, a: i64, b: i64) -> i64 {
        self.normalize(a + b)
    }

    pub fn scale(&self, n: i64, wt: i64) -> i64 {
        self.normalize(n * wt)
    }

    /// `wt >= 0` only makes sense for integer weights.
    pub fn is_nonnegative(&self, wt: i64) -> Option<bool> {
        self.is_integral().then_some(wt >= 0)
    }
}

impl fmt::Display for WeightMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

/// (homotopy degree, weight). Ordered by degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub deg: i64,
    pub wt: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { deg: 0, wt: 0 };

    pub fn new(deg: i64, wt: i64) -> Self {
        Bidegree { deg, wt }
    }

    pub fn in_monoid(self, weights: WeightMonoid) -> Self {
        Bidegree {
            deg: self.deg,
            wt: weights.normalize(self.wt),
        }
    }

    pub fn is_odd(&self) -> bool {
        self.deg.rem_euclid(2) == 1
    }

    pub fn scale(self, n: i64) -> Self {
        Bidegree {
            deg: n * self.deg,
            wt: n * self.wt,
        }
    }

    pub fn shift_deg(self, by: i64) -> Self {
        Bidegree {
            deg: self.deg + by,
            wt: self.wt,
        }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree {
            deg: self.deg + rhs.deg,
            wt: self.wt + rhs.wt,
        }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.deg, self.wt)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_addition() {
        let w = WeightMonoid::new(4);
        assert_eq!(w.add(3, 2), 1);
        assert_eq!(w.normalize(-1), 3);
        assert_eq!(w.is_nonnegative(1), None);
        assert_eq!(WeightMonoid::INTEGERS.normalize(-7), -7);
        assert_eq!(WeightMonoid::INTEGERS.is_nonnegative(-1), Some(false));
    }

    #[test]
    fn parity_ignores_weight() {
        assert!(Bidegree::new(-3, 0).is_odd());
        assert!(!Bidegree::new(4, 1).is_odd());
        assert_eq!(Bidegree::new(2, 1) + Bidegree::new(3, 1), Bidegree::new(5, 2));
    }
}
