//! Exact rank and determinant for the small matrices the checks build.

use num::{One, Zero};

use crate::coeffs::{CoefficientRing, Scalar};

/// Rank over the residue field `F_p`.
pub fn rank_mod_p(ring: CoefficientRing, rows: &[Vec<Scalar>]) -> usize {
    let p = ring.prime();
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| ring.residue(x)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for x in &mut m[rank] {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Determinant over `Q` by Gaussian elimination. Panics on non-square input.
pub fn determinant(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut m = rows.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= pv.clone();
        let pivot_row = m[col].clone();
        for row in &mut m[col + 1..] {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone() / pv.clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f.clone() * y.clone();
            }
        }
    }
    det
}
