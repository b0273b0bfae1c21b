//! Exact topological invariants of nonsingular projective complete
//! intersections: Euler characteristic, Betti numbers, Hodge numbers, and
//! the constant d(n) controlling Hilbert-square deficiencies.
//!
//! The Euler characteristic comes from coefficient extraction on the total
//! Chern class, the Hodge numbers from the χ_y-genus generating function
//!
//! ```text
//!   Σ_n χ_y(X_n(d_1,…,d_r)) z^{n+r}
//!     = 1/((1+zy)(1−z)) · Π_j A_j/B_j,
//!   A_j = ((1+zy)^{d_j} − (1−z)^{d_j})/(1+y),
//!   B_j = ((1+zy)^{d_j} + y(1−z)^{d_j})/(1+y),
//! ```
//!
//! everything in exact big-integer arithmetic truncated at order N+1.

use crate::betti::BettiVector;
use crate::error::{Error, Result};
use crate::poly::{
    binomial_series, geometric_inverse, int_series_mul, ip_add, ip_const, ip_div_one_plus_y,
    ip_sub, to_i64, to_u64, IntPoly, ZSeries,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A nonsingular complete intersection of multidegree (d_1,…,d_r) in
/// projective space P^N; its dimension is n = N − r.
///
/// Canonical form: degrees sorted ascending with all 1s removed (a linear
/// section lowers N and r together without changing any invariant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CiData")]
pub struct CompleteIntersection {
    ambient: u32,
    degrees: Vec<u32>,
}

#[derive(Deserialize)]
struct CiData {
    ambient: u32,
    degrees: Vec<u32>,
}

impl TryFrom<CiData> for CompleteIntersection {
    type Error = Error;
    fn try_from(d: CiData) -> Result<Self> {
        CompleteIntersection::new(d.ambient, d.degrees)
    }
}

impl CompleteIntersection {
    pub fn new(ambient: u32, degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::Structure("degree 0 is not allowed".into()));
        }
        let ones = degrees.iter().filter(|&&d| d == 1).count() as u32;
        if ones > ambient {
            return Err(Error::Structure(
                "more linear sections than the ambient dimension".into(),
            ));
        }
        let ambient = ambient - ones;
        let mut degrees: Vec<u32> = degrees.into_iter().filter(|&d| d > 1).collect();
        degrees.sort_unstable();
        if degrees.len() as u32 > ambient {
            return Err(Error::Structure(format!(
                "codimension {} exceeds ambient dimension {ambient}",
                degrees.len()
            )));
        }
        Ok(CompleteIntersection { ambient, degrees })
    }

    /// Ambient projective dimension N (after canonicalization).
    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// Complex dimension n = N − r.
    pub fn dim(&self) -> usize {
        self.ambient as usize - self.degrees.len()
    }

    /// Π d_j, the degree of the embedded variety.
    pub fn total_degree(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }
}

impl std::fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degrees.is_empty() {
            write!(f, "P^{}", self.ambient)
        } else {
            let ds: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
            write!(f, "({}) in P^{}", ds.join(","), self.ambient)
        }
    }
}

/// Topological Euler characteristic of the complex locus: the degree-n
/// Chern coefficient of (1+h)^{N+1}/Π(1+d_j h) times Π d_j.
pub fn euler_characteristic(ci: &CompleteIntersection) -> i64 {
    let n = ci.dim();
    let trunc = n + 1;
    let mut series = binomial_series(1, ci.ambient as u64 + 1, trunc);
    for &d in ci.degrees() {
        series = int_series_mul(&series, &geometric_inverse(d as i64, trunc), trunc);
    }
    let total = &series[n] * BigInt::from(ci.total_degree());
    to_i64(&total)
}

/// F2 (equivalently rational) Betti numbers of the complex locus. Integral
/// cohomology of a complete intersection is torsion-free, so the two
/// coincide; all the cohomology off the middle degree is that of P^n.
pub fn complex_betti(ci: &CompleteIntersection) -> Result<BettiVector> {
    let n = ci.dim();
    if n < 1 {
        return Err(Error::Precondition(
            "complex_betti requires dimension n ≥ 1".into(),
        ));
    }
    let chi = euler_characteristic(ci) as i128;
    let off_middle = if n % 2 == 0 { n as i128 } else { n as i128 + 1 };
    let middle = if n % 2 == 0 {
        chi - off_middle
    } else {
        off_middle - chi
    };
    if middle < 0 {
        return Err(Error::Inconsistent(format!(
            "negative middle Betti number for {ci}"
        )));
    }
    let mut b = vec![0u64; 2 * n + 1];
    for (k, slot) in b.iter_mut().enumerate() {
        if k % 2 == 0 && k != n {
            *slot = 1;
        }
    }
    b[n] = middle as u64;
    Ok(BettiVector::new(b))
}

/// The full Hodge diamond of a complete intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    n: usize,
    /// entries[p][q] = h^{p,q}
    entries: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self, p: usize, q: usize) -> u64 {
        if p <= self.n && q <= self.n {
            self.entries[p][q]
        } else {
            0
        }
    }

    /// The middle row h^{p, n−p} for p = 0..=n.
    pub fn middle_row(&self) -> Vec<u64> {
        (0..=self.n).map(|p| self.entries[p][self.n - p]).collect()
    }

    /// b_k = Σ_{p+q=k} h^{p,q} for k = 0..=2n.
    pub fn betti_from_rows(&self) -> BettiVector {
        let b = (0..=2 * self.n)
            .map(|k| {
                (0..=k.min(self.n))
                    .filter(|&p| k - p <= self.n)
                    .map(|p| self.entries[p][k - p])
                    .sum()
            })
            .collect();
        BettiVector::new(b)
    }
}

/// χ_y genus as a polynomial in y: coefficient of y^p is
/// χ_p = Σ_q (−1)^q h^{p,q}.
fn chi_y(ci: &CompleteIntersection) -> IntPoly {
    let big_n = ci.ambient as usize;
    let trunc = big_n + 1;
    // base factor 1/((1+zy)(1−z))
    let one_plus_zy = ZSeries::from_coeffs(
        trunc,
        vec![ip_const(1), vec![BigInt::zero(), BigInt::one()]],
    );
    let one_minus_z = ZSeries::from_coeffs(trunc, vec![ip_const(1), ip_const(-1)]);
    let mut f = one_plus_zy.mul(&one_minus_z).inverse();
    for &d in ci.degrees() {
        let p = one_plus_zy.pow(d); // (1+zy)^d
        let q = one_minus_z.pow(d); // (1−z)^d
        let mut a = ZSeries::zero(trunc);
        let mut b = ZSeries::zero(trunc);
        for k in 0..trunc {
            // y·(1−z)^d coefficient: shift the pure-number q up by one power of y
            let mut yq = vec![BigInt::zero()];
            yq.extend(q.coeffs[k].iter().cloned());
            a.coeffs[k] = ip_div_one_plus_y(&ip_sub(&p.coeffs[k], &q.coeffs[k]));
            b.coeffs[k] = ip_div_one_plus_y(&ip_add(&p.coeffs[k], &yq));
        }
        f = f.mul(&a).mul(&b.inverse());
    }
    f.coeffs[big_n].clone()
}

/// Hodge numbers of a complete intersection of dimension n ≥ 1. Entries off
/// the middle anti-diagonal are forced by Lefschetz; the middle row is read
/// off the χ_p values.
pub fn hodge_numbers(ci: &CompleteIntersection) -> Result<HodgeDiamond> {
    let n = ci.dim();
    if n < 1 {
        return Err(Error::Precondition(
            "hodge_numbers requires dimension n ≥ 1".into(),
        ));
    }
    let chi = chi_y(ci);
    let chi_p = |p: usize| -> BigInt { chi.get(p).cloned().unwrap_or_else(BigInt::zero) };
    let mut entries = vec![vec![0u64; n + 1]; n + 1];
    for p in 0..=n {
        for q in 0..=n {
            if p + q != n && p == q {
                entries[p][q] = 1;
            }
        }
    }
    for p in 0..=n {
        let q = n - p;
        // χ_p = Σ_t (−1)^t h^{p,t}; off-middle terms contribute (−1)^p·[2p ≠ n]
        let off = if 2 * p != n {
            if p % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        } else {
            BigInt::zero()
        };
        let signed = chi_p(p) - off;
        let value = if q % 2 == 0 { signed } else { -signed };
        entries[p][q] = to_u64(&value);
    }
    let diamond = HodgeDiamond { n, entries };
    // internal coherence: symmetry and row sums against the Betti vector
    for p in 0..=n {
        if diamond.h(p, n - p) != diamond.h(n - p, p) {
            return Err(Error::Inconsistent(format!(
                "Hodge symmetry failed for {ci}"
            )));
        }
    }
    if diamond.betti_from_rows() != complex_betti(ci)? {
        return Err(Error::Inconsistent(format!(
            "Hodge row sums disagree with Betti numbers for {ci}"
        )));
    }
    Ok(diamond)
}

/// Whether h^{k,k} = b_2k for an even-dimensional complete intersection of
/// dimension n = 2k; true exactly for linear spaces, quadrics,
/// intersections of two quadrics, and cubic surfaces.
pub fn hkk_equals_b2k(ci: &CompleteIntersection) -> Result<bool> {
    let n = ci.dim();
    if n < 2 || n % 2 != 0 {
        return Err(Error::Precondition(
            "hkk_equals_b2k requires even dimension n = 2k ≥ 2".into(),
        ));
    }
    let k = n / 2;
    let hodge = hodge_numbers(ci)?;
    let betti = complex_betti(ci)?;
    Ok(hodge.h(k, k) == betti.get(n))
}

/// The constant d(n): n(n+2)/8 for n even, (n²−1)/8 for n odd, which is
/// the triangular number of ⌊n/2⌋.
pub fn d_of_n(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Precondition("d(n) requires n ≥ 2".into()));
    }
    let n = n as u64;
    Ok(if n % 2 == 0 {
        n * (n + 2) / 8
    } else {
        (n * n - 1) / 8
    })
}
