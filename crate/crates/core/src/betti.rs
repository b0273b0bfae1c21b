//! F2 Betti vectors.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite sequence of nonnegative integers: the F2 Betti numbers of a
/// space, indexed from degree 0.
///
/// Degrees outside the stored range read as 0, matching the usual
/// convention that `β_i = 0` for `i < 0` or `i` above the dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<u64>);

impl BettiVector {
    pub fn new(values: Vec<u64>) -> Self {
        BettiVector(values)
    }

    pub fn zeros(len: usize) -> Self {
        BettiVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// β_k, with 0 for any degree outside the stored range.
    pub fn get(&self, degree: usize) -> u64 {
        self.0.get(degree).copied().unwrap_or(0)
    }

    /// β_k for a possibly negative index.
    pub fn get_signed(&self, degree: i64) -> u64 {
        if degree < 0 {
            0
        } else {
            self.get(degree as usize)
        }
    }

    /// Total Betti number `β_* = Σ_k β_k`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Σ over even degrees.
    pub fn beta_even(&self) -> u64 {
        self.0.iter().step_by(2).sum()
    }

    /// Σ over odd degrees.
    pub fn beta_odd(&self) -> u64 {
        self.0.iter().skip(1).step_by(2).sum()
    }

    /// Alternating sum Σ (−1)^k β_k.
    pub fn euler(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Σ_{k=lo}^{hi} β_k (inclusive, empty when lo > hi).
    pub fn sum_range(&self, lo: i64, hi: i64) -> u64 {
        if lo > hi {
            return 0;
        }
        (lo.max(0)..=hi).map(|k| self.get_signed(k)).sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl From<Vec<u64>> for BettiVector {
    fn from(v: Vec<u64>) -> Self {
        BettiVector(v)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_and_parity_sums() {
        let b = BettiVector::new(vec![1, 0, 7, 0, 1]);
        assert_eq!(b.total(), 9);
        assert_eq!(b.beta_even(), 9);
        assert_eq!(b.beta_odd(), 0);
        assert_eq!(b.euler(), 9);
        assert!(b.is_palindromic());
    }

    #[test]
    fn out_of_range_reads_zero() {
        let b = BettiVector::new(vec![1, 2]);
        assert_eq!(b.get(5), 0);
        assert_eq!(b.get_signed(-1), 0);
        assert_eq!(b.sum_range(-3, 0), 1);
        assert_eq!(b.sum_range(2, 1), 0);
    }
}
