//! Exact linear algebra over the two-element field.
//!
//! Two representations are provided. [`F2Matrix`] packs 64 entries per
//! machine word and is used for everything chain-level where explicit bases
//! and solves are needed. [`sparse_rank`] reduces a column-major sparse
//! matrix without materializing it densely; boundary matrices of
//! barycentrically subdivided complexes reach 10^5 rows and columns and stay
//! a few entries per column, which dense elimination cannot touch.

use std::collections::HashMap;

/// A bit vector over F2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Index of the highest set bit, if any.
    pub fn highest_one(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate().rev() {
            if word != 0 {
                return Some(w * 64 + 63 - word.leading_zeros() as usize);
            }
        }
        None
    }

    fn words(&self) -> &[u64] {
        &self.words
    }
}

/// A dense bit-packed matrix over F2, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        F2Matrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks column vectors: the result has `columns[j]` as its j-th column.
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for i in col.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let mask = 1u64 << (j % 64);
        let w = i * self.words + j / 64;
        if value {
            self.data[w] |= mask;
        } else {
            self.data[w] &= !mask;
        }
    }

    pub fn column(&self, j: usize) -> F2Vector {
        let mut v = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            let row = &self.data[i * self.words..(i + 1) * self.words];
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let j = w * 64 + b;
                    if j < self.cols {
                        t.set(j, i, true);
                    }
                }
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = F2Vector::zeros(self.rows);
        for i in 0..self.rows {
            let row = &self.data[i * self.words..(i + 1) * self.words];
            let mut acc = 0u64;
            for (a, b) in row.iter().zip(v.words()) {
                acc ^= a & b;
            }
            if acc.count_ones() % 2 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Matrix product; intended for the small matrices of induced maps.
    pub fn mul(&self, rhs: &F2Matrix) -> F2Matrix {
        debug_assert_eq!(self.cols, rhs.rows);
        let mut out = F2Matrix::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let col = self.mul_vec(&rhs.column(j));
            for i in col.ones() {
                out.set(i, j, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn xor_row_into(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let (s, d) = (src * self.words, dst * self.words);
        for w in from_word..self.words {
            let bits = self.data[s + w];
            self.data[d + w] ^= bits;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.words {
            self.data.swap(a * self.words + w, b * self.words + w);
        }
    }

    /// Row reduction in place. With `reduce_up` the result is the reduced
    /// echelon form. Returns the pivot columns (their count is the rank).
    fn echelonize(&mut self, reduce_up: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (w, b) = (c / 64, c % 64);
            let pivot_row = (r..self.rows).find(|&i| self.data[i * self.words + w] >> b & 1 == 1);
            let Some(i) = pivot_row else { continue };
            self.swap_rows(i, r);
            let lo = if reduce_up { 0 } else { r + 1 };
            for i2 in lo..self.rows {
                if i2 != r && self.data[i2 * self.words + w] >> b & 1 == 1 {
                    self.xor_row_into(r, i2, w);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// F2 rank by dense elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.echelonize(false).len()
    }

    /// rows − rank: the dimension of the cokernel.
    pub fn coker_dim(&self) -> usize {
        self.rows - self.rank()
    }

    /// A basis of `{v : Mv = 0}`, one vector per non-pivot column.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let mut work = self.clone();
        let pivots = work.echelonize(true);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = F2Vector::zeros(self.cols);
            v.set(f, true);
            for (row, &pc) in pivots.iter().enumerate() {
                if work.get(row, f) {
                    v.set(pc, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Solves `A x = b` for a fixed matrix `A` with linearly independent
/// columns, after a one-time factorization. Used to read off homology-class
/// coordinates of cycles against a chosen `[boundaries | representatives]`
/// frame.
pub struct ColumnSolver {
    cols: usize,
    rank: usize,
    pivots: Vec<usize>,
    /// Reduced `[A | I]`: the left block is the RREF of A, the right block
    /// the accumulated row transform.
    reduced: F2Matrix,
}

impl ColumnSolver {
    pub fn new(rows: usize, columns: &[F2Vector]) -> Self {
        let cols = columns.len();
        let mut aug = F2Matrix::zeros(rows, cols + rows);
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for i in col.ones() {
                aug.set(i, j, true);
            }
        }
        for i in 0..rows {
            aug.set(i, cols + i, true);
        }
        // restrict pivots to the A block
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == aug.rows {
                break;
            }
            let hit = (r..aug.rows).find(|&i| aug.get(i, c));
            let Some(i) = hit else { continue };
            aug.swap_rows(i, r);
            for i2 in 0..aug.rows {
                if i2 != r && aug.get(i2, c) {
                    aug.xor_row_into(r, i2, 0);
                }
            }
            pivots.push(c);
            r += 1;
        }
        assert_eq!(pivots.len(), cols, "columns must be independent");
        ColumnSolver {
            cols,
            rank: pivots.len(),
            pivots,
            reduced: aug,
        }
    }

    /// The unique solution of `A x = b`, or `None` when `b` is outside the
    /// column span.
    pub fn solve(&self, b: &F2Vector) -> Option<F2Vector> {
        debug_assert_eq!(b.len(), self.reduced.rows);
        // c = E b, where E is the stored row transform
        let mut x = F2Vector::zeros(self.cols);
        for row in 0..self.reduced.rows {
            let mut acc = false;
            for i in b.ones() {
                acc ^= self.reduced.get(row, self.cols + i);
            }
            if acc {
                if row < self.rank {
                    x.set(self.pivots[row], true);
                } else {
                    return None; // inconsistent: b not in the span
                }
            }
        }
        Some(x)
    }
}

/// Rank of a sparse matrix over F2 given by columns of strictly increasing
/// row indices. Left-to-right reduction against the lowest nonzero entry,
/// the standard boundary-matrix algorithm; fill-in stays low on the
/// boundary matrices this crate produces.
pub fn sparse_rank(mut columns: Vec<Vec<u32>>) -> usize {
    let mut pivot_of_row: HashMap<u32, usize> = HashMap::new();
    let mut rank = 0;
    for j in 0..columns.len() {
        while let Some(&low) = columns[j].last() {
            match pivot_of_row.get(&low) {
                Some(&k) => {
                    let merged = xor_sorted(&columns[j], &columns[k]);
                    columns[j] = merged;
                }
                None => {
                    pivot_of_row.insert(low, j);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Symmetric difference of two ascending index lists.
fn xor_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
