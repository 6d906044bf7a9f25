//! Exact arithmetic substrate: GF(2) linear algebra and binomial residues.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense bit-packed matrix over GF(2). Rows are stored as contiguous
/// 64-bit words so row operations are word-parallel XORs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

/// Result of bringing a matrix into reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub reduced: F2Matrix,
}

impl F2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let w = self.bits[r * self.words_per_row + c / 64];
        (w >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.words_per_row + c / 64;
        let mask = 1u64 << (c % 64);
        if v {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    pub fn from_rows(rows: &[Vec<bool>], cols: usize) -> Self {
        let mut m = F2Matrix::zero(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            debug_assert!(row.len() <= cols);
            for (c, &v) in row.iter().enumerate() {
                if v {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = F2Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        let (a, b) = (src * w, dst * w);
        for k in 0..w {
            let v = self.bits[a + k];
            self.bits[b + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.bits.swap(a * w + k, b * w + k);
        }
    }

    pub fn rank(&self) -> usize {
        row_reduce(self).rank
    }
}

/// Reduced row-echelon form over GF(2) by Gaussian elimination.
pub fn row_reduce(m: &F2Matrix) -> RowEchelon {
    let mut red = m.clone();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0;
    for col in 0..red.cols {
        let found = (pivot_row..red.rows).find(|&r| red.get(r, col));
        let Some(r) = found else { continue };
        red.swap_rows(pivot_row, r);
        for other in 0..red.rows {
            if other != pivot_row && red.get(other, col) {
                red.xor_row_into(pivot_row, other);
            }
        }
        pivot_columns.push(col);
        pivot_row += 1;
        if pivot_row == red.rows {
            break;
        }
    }
    RowEchelon {
        rank: pivot_row,
        pivot_columns,
        reduced: red,
    }
}

/// Span of a set of GF(2) row vectors, kept in reduced form for cheap
/// membership queries.
#[derive(Clone, Debug)]
pub struct F2Span {
    cols: usize,
    basis: Vec<Vec<u64>>, // reduced rows, each with a recorded pivot
    pivots: Vec<usize>,
}

impl F2Span {
    pub fn new(cols: usize) -> Self {
        F2Span {
            cols,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn reduce(&self, row: &mut [u64]) {
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if (row[p / 64] >> (p % 64)) & 1 == 1 {
                for (r, v) in row.iter_mut().zip(b) {
                    *r ^= v;
                }
            }
        }
    }

    /// Inserts a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, row_bits: &[u64]) -> bool {
        let mut row = row_bits.to_vec();
        self.reduce(&mut row);
        let pivot = (0..self.cols).find(|&c| (row[c / 64] >> (c % 64)) & 1 == 1);
        match pivot {
            None => false,
            Some(p) => {
                self.basis.push(row);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, row_bits: &[u64]) -> bool {
        let mut row = row_bits.to_vec();
        self.reduce(&mut row);
        row.iter().all(|&w| w == 0)
    }
}

/// Packs a boolean vector into words, for use with [`F2Span`].
pub fn pack_bits(v: &[bool]) -> Vec<u64> {
    let mut out = vec![0u64; v.len().div_ceil(64).max(1)];
    for (i, &b) in v.iter().enumerate() {
        if b {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

/// A residue class modulo 2, 4, or 0 (plain integer).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(matches!(modulus, 0 | 2 | 4), "modulus must be 0, 2 or 4");
        let value = if modulus == 0 { value } else { value % modulus };
        Residue { value, modulus }
    }
}

/// C(n, k) mod 2 by the Lucas criterion: odd iff every base-2 digit of k
/// is at most the corresponding digit of n.
pub fn binom_mod2(n: u64, k: u64) -> bool {
    k & !n == 0
}

/// C(n, k) mod 4, by exact big-integer evaluation.
pub fn binom_mod4(n: u64, k: u64) -> Residue {
    if k > n {
        return Residue::new(0, 4);
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    let four = BigUint::from(4u8);
    let rem = acc % four;
    let value = if rem.is_zero() {
        0
    } else {
        rem.to_u64_digits()[0]
    };
    Residue::new(value, 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_reduce_identity() {
        let mut m = F2Matrix::zero(3, 3);
        for i in 0..3 {
            m.set(i, i, true);
        }
        let e = row_reduce(&m);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivot_columns, vec![0, 1, 2]);
    }

    #[test]
    fn row_reduce_zero() {
        let e = row_reduce(&F2Matrix::zero(2, 5));
        assert_eq!(e.rank, 0);
        assert!(e.pivot_columns.is_empty());
    }

    #[test]
    fn row_reduce_dependent_rows() {
        // row3 = row1 + row2
        let m = F2Matrix::from_rows(
            &[
                vec![true, true, false],
                vec![false, true, true],
                vec![true, false, true],
            ],
            3,
        );
        assert_eq!(row_reduce(&m).rank, 2);
    }

    #[test]
    fn row_reduce_idempotent() {
        let m = F2Matrix::from_rows(
            &[
                vec![true, true, false, true],
                vec![false, true, true, false],
                vec![true, false, true, true],
            ],
            4,
        );
        let e = row_reduce(&m);
        let e2 = row_reduce(&e.reduced);
        assert_eq!(e.rank, e2.rank);
        assert_eq!(e.reduced, e2.reduced);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let rows = rng.gen_range(1..=64);
            let cols = rng.gen_range(1..=64);
            let mut m = F2Matrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen::<bool>() {
                        m.set(r, c, true);
                    }
                }
            }
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn binom_mod2_examples() {
        assert!(!binom_mod2(5, 2)); // C(5,2)=10
        for n in 0..40 {
            assert!(binom_mod2(n, 0));
        }
        assert!(binom_mod2(7, 3)); // C(7,3)=35
        assert!(!binom_mod2(2, 5)); // k > n
    }

    #[test]
    fn binom_mod4_examples() {
        assert_eq!(binom_mod4(4, 2).value, 2); // 6
        assert_eq!(binom_mod4(2, 1).value, 2);
        assert_eq!(binom_mod4(6, 3).value, 0); // 20
    }

    #[test]
    fn binom_mod4_matches_mod2() {
        for n in 0..=200u64 {
            for k in 0..=n {
                let m4 = binom_mod4(n, k).value;
                assert_eq!(m4 % 2 == 1, binom_mod2(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binom_mod4_pascal() {
        for n in 1..=200u64 {
            for k in 1..n {
                let lhs = binom_mod4(n, k).value;
                let rhs = (binom_mod4(n - 1, k - 1).value + binom_mod4(n - 1, k).value) % 4;
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }
}
