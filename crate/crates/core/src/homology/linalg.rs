//! Exact rank of integer matrices over `Q` and over `F_p`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::FieldSpec;

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// `self * other`, panicking on dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field.characteristic() {
            0 => self.rank_rational(),
            p => self.rank_mod(p),
        }
    }

    fn rank_mod(&self, p: u64) -> usize {
        let modulus = p as u128;
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| (self.get(r, c) as i128).rem_euclid(p as i128) as u64)
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_pow(m[rank][col], p - 2, p);
            for c in col..self.cols {
                m[rank][c] = ((m[rank][c] as u128 * inv as u128) % modulus) as u64;
            }
            for r in 0..self.rows {
                if r == rank || m[r][col] == 0 {
                    continue;
                }
                let factor = m[r][col] as u128;
                for c in col..self.cols {
                    let sub = (factor * m[rank][c] as u128) % modulus;
                    m[r][c] = ((m[r][c] as u128 + modulus - sub) % modulus) as u64;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Fraction-free (Bareiss) elimination: `i128` first, arbitrary
    /// precision if an intermediate overflows.
    fn rank_rational(&self) -> usize {
        let small: Vec<Vec<i128>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as i128).collect())
            .collect();
        if let Some(rank) = bareiss(small) {
            return rank;
        }
        let big: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| BigInt::from(self.get(r, c))).collect())
            .collect();
        bareiss(big).expect("arbitrary precision never overflows")
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Ring operations needed by Bareiss elimination; `None` signals overflow.
trait ExactScalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a * d - b * c) / e`, where the division is exact.
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self>;
}

impl ExactScalar for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?;
        Some(num / e)
    }
}

impl ExactScalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        let num = a * d - b * c;
        debug_assert!(Zero::is_zero(&(&num % e)));
        Some(num / e)
    }
}

fn bareiss<T: ExactScalar>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            for c in col + 1..cols {
                row[c] = T::cross_div(&pivot_row[col], &row[c], &row[col], &pivot_row[c], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: full rank over Q and F_3, rank 1 over F_2.
        let m = from_rows(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(FieldSpec::RATIONALS), 2);
        assert_eq!(m.rank(FieldSpec::GF2), 1);
        assert_eq!(m.rank(FieldSpec::new(3).unwrap()), 2);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(FieldSpec::RATIONALS), 2);
        assert_eq!(m.rank(FieldSpec::new(5).unwrap()), 2);
        assert_eq!(IntMatrix::zeros(3, 0).rank(FieldSpec::RATIONALS), 0);
    }

    #[test]
    fn bigint_fallback_handles_large_entries() {
        // 3x3 minors of these entries exceed i128, forcing the BigInt path.
        let a: [i64; 4] = [1_000_000_000_000_000_007, 999_999_999_999_999_989, 3, 7];
        let b: [i64; 4] = [5, 1_000_000_000_000_000_009, 999_999_999_999_999_877, 11];
        let c: [i64; 4] = [13, 17, 1_000_000_000_000_000_003, 999_999_999_999_999_967];
        let sum: Vec<i64> = (0..4).map(|k| a[k] / 2 + b[k] / 2).collect();
        let dependent = from_rows(&[&a, &b, &c, &[a[0] - c[0], a[1] - c[1], a[2] - c[2], a[3] - c[3]]]);
        assert_eq!(dependent.rank(FieldSpec::RATIONALS), 3);
        let generic = from_rows(&[&a, &b, &c, &sum]);
        assert_eq!(generic.rank(FieldSpec::RATIONALS), 4);
    }
}
