//! Cohomological profiles of real algebraic varieties: the data model,
//! validation against the Smith inequality and Poincaré duality, and the
//! combinatorial Betti identities forced on maximal varieties.

use crate::betti::BettiVector;
use crate::ci::{complex_betti, CompleteIntersection};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Structural flags of a profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileFlags {
    /// The variety is maximal (an M-variety): total real Betti equals total
    /// complex Betti.
    pub maximal: bool,
    /// A complete-intersection description, when the variety is one.
    pub ci: Option<CompleteIntersection>,
    /// The complex locus has no odd-degree cohomology.
    pub h_odd_zero: bool,
    /// H_*(X; Z) has no 2-torsion.
    pub torsion2_free: bool,
    /// Every H_k(X(R)) is generated by fundamental classes of real loci of
    /// real smooth algebraic submanifolds.
    pub real_algebraic_generation: bool,
}

/// The cohomological profile of a real variety: complex dimension, complex
/// Betti vector, and the real locus as a list of per-component Betti
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealVarietyProfile {
    pub n: usize,
    pub complex_betti: BettiVector,
    pub real_components: Vec<BettiVector>,
    pub flags: ProfileFlags,
}

/// A violated profile invariant. Violations are data, not failures:
/// `validate` returns all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DimensionZero,
    ComplexBettiLength {
        expected: usize,
        found: usize,
    },
    ComplexEndsNotOne,
    ComponentLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    ComponentNotConnected {
        index: usize,
    },
    ComponentNotPalindromic {
        index: usize,
    },
    SmithInequality {
        real_total: u64,
        complex_total: u64,
    },
    MaximalFlagMismatch {
        flagged: bool,
        real_total: u64,
        complex_total: u64,
    },
    CiBettiMismatch,
    CiDimensionMismatch {
        profile_n: usize,
        ci_n: usize,
    },
    OddCohomologyPresent,
    TorsionFlagInconsistent,
    HyperplaneBound {
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionZero => write!(f, "dimension n must be at least 1"),
            Violation::ComplexBettiLength { expected, found } => write!(
                f,
                "complex Betti vector has length {found}, expected 2n+1 = {expected}"
            ),
            Violation::ComplexEndsNotOne => {
                write!(f, "β_0(X) and β_2n(X) must both be 1 (X connected projective)")
            }
            Violation::ComponentLength { index, expected, found } => write!(
                f,
                "component {index} has length {found}, expected n+1 = {expected}"
            ),
            Violation::ComponentNotConnected { index } => {
                write!(f, "component {index} has β_0 ≠ 1")
            }
            Violation::ComponentNotPalindromic { index } => write!(
                f,
                "component {index} is not palindromic (violates F2 Poincaré duality)"
            ),
            Violation::SmithInequality { real_total, complex_total } => write!(
                f,
                "Smith inequality violated: total real Betti {real_total} > total complex Betti {complex_total}"
            ),
            Violation::MaximalFlagMismatch { flagged, real_total, complex_total } => write!(
                f,
                "maximal flag is {flagged} but totals are {real_total} (real) vs {complex_total} (complex)"
            ),
            Violation::CiBettiMismatch => write!(
                f,
                "complex Betti vector differs from that of the declared complete intersection"
            ),
            Violation::CiDimensionMismatch { profile_n, ci_n } => write!(
                f,
                "profile dimension {profile_n} differs from complete-intersection dimension {ci_n}"
            ),
            Violation::OddCohomologyPresent => {
                write!(f, "h_odd_zero flag set but an odd complex Betti number is nonzero")
            }
            Violation::TorsionFlagInconsistent => write!(
                f,
                "h_odd_zero implies torsion2_free, but torsion2_free is not set"
            ),
            Violation::HyperplaneBound { degree } => write!(
                f,
                "maximal complete intersection needs β_{degree}(X(R)) ≥ 1 (hyperplane-class bound)"
            ),
        }
    }
}

impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl RealVarietyProfile {
    /// Component-wise sum of the real components: the Betti vector of the
    /// whole real locus, of length n+1.
    pub fn aggregate_real(&self) -> BettiVector {
        let mut total = vec![0u64; self.n + 1];
        for comp in &self.real_components {
            for (k, slot) in total.iter_mut().enumerate() {
                *slot += comp.get(k);
            }
        }
        BettiVector::new(total)
    }

    pub fn real_total(&self) -> u64 {
        self.real_components.iter().map(|c| c.total()).sum()
    }

    /// β_* of the complex locus.
    pub fn beta_star(&self) -> u64 {
        self.complex_betti.total()
    }

    /// β_odd of the complex locus.
    pub fn beta_odd(&self) -> u64 {
        self.complex_betti.beta_odd()
    }

    /// Checks every structural invariant and, for maximal complete
    /// intersections, the hyperplane-class lower bound
    /// β_r(X(R)) ≥ 1 for r ≤ ⌊n/2⌋. Returns all violations found.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n == 0 {
            out.push(Violation::DimensionZero);
            return out;
        }
        let expected = 2 * self.n + 1;
        if self.complex_betti.len() != expected {
            out.push(Violation::ComplexBettiLength {
                expected,
                found: self.complex_betti.len(),
            });
        }
        if self.complex_betti.get(0) != 1 || self.complex_betti.get(2 * self.n) != 1 {
            out.push(Violation::ComplexEndsNotOne);
        }
        for (index, comp) in self.real_components.iter().enumerate() {
            if comp.len() != self.n + 1 {
                out.push(Violation::ComponentLength {
                    index,
                    expected: self.n + 1,
                    found: comp.len(),
                });
                continue;
            }
            if comp.get(0) != 1 {
                out.push(Violation::ComponentNotConnected { index });
            }
            if !comp.is_palindromic() {
                out.push(Violation::ComponentNotPalindromic { index });
            }
        }
        let real_total = self.real_total();
        let complex_total = self.beta_star();
        if real_total > complex_total {
            out.push(Violation::SmithInequality {
                real_total,
                complex_total,
            });
        }
        if self.flags.maximal != (real_total == complex_total) {
            out.push(Violation::MaximalFlagMismatch {
                flagged: self.flags.maximal,
                real_total,
                complex_total,
            });
        }
        if let Some(ci) = &self.flags.ci {
            if ci.dim() != self.n {
                out.push(Violation::CiDimensionMismatch {
                    profile_n: self.n,
                    ci_n: ci.dim(),
                });
            } else if complex_betti(ci)
                .map(|b| b != self.complex_betti)
                .unwrap_or(true)
            {
                out.push(Violation::CiBettiMismatch);
            }
        }
        if self.flags.h_odd_zero {
            if self.complex_betti.beta_odd() != 0 {
                out.push(Violation::OddCohomologyPresent);
            }
            if !self.flags.torsion2_free {
                out.push(Violation::TorsionFlagInconsistent);
            }
        }
        if self.flags.maximal && self.flags.ci.is_some() {
            let aggregate = self.aggregate_real();
            for r in 0..=self.n / 2 {
                if aggregate.get(r) == 0 {
                    out.push(Violation::HyperplaneBound { degree: r });
                }
            }
        }
        out
    }

    /// The Betti identities of maximal varieties, evaluated exactly on the
    /// aggregate real vector (all comparisons are ×4 to stay integral).
    ///
    /// For odd n: Σ_{l≤(n−1)/2} Σ_{i+j=2l} β_iβ_j = β_*²/4, and
    /// Σ_{l≤(n−1)/2} β_l = β_*/2, and Σ_{l≤(n−1)/2} Σ_{i<2l} β_i = (n−1)β_*/4.
    /// For even n: Σ_{l≤n/2} Σ_{a+b=2l−1, a<b} β_aβ_b = β_even(R)·β_odd(R)/2,
    /// and Σ_{l≤n/2} Σ_{i≤2l−2} β_i = nβ_*/4 − β_odd(R)/2.
    ///
    /// `β_*` is the total complex Betti number, as in the statements.
    pub fn check_betti_identities(&self) -> Result<bool> {
        if !self.flags.maximal {
            return Err(Error::Precondition(
                "Betti identities are stated for maximal profiles".into(),
            ));
        }
        let a = self.aggregate_real();
        let n = self.n;
        let beta_star = self.beta_star() as i128;
        let conv = |m: i64| -> i128 {
            (0..=m)
                .map(|i| a.get_signed(i) as i128 * a.get_signed(m - i) as i128)
                .sum()
        };
        let conv_lt = |m: i64| -> i128 {
            let mut s = 0i128;
            let mut x = 0i64;
            while 2 * x < m {
                s += a.get_signed(x) as i128 * a.get_signed(m - x) as i128;
                x += 1;
            }
            s
        };
        if n % 2 == 1 {
            let half = (n as i64 - 1) / 2;
            let lhs_a: i128 = (0..=half).map(|l| conv(2 * l)).sum();
            let lhs_b: i128 = (0..=half).map(|l| a.get_signed(l) as i128).sum();
            let lhs_c: i128 = (0..=half).map(|l| a.sum_range(0, 2 * l - 1) as i128).sum();
            Ok(4 * lhs_a == beta_star * beta_star
                && 2 * lhs_b == beta_star
                && 4 * lhs_c == (n as i128 - 1) * beta_star)
        } else {
            let half = n as i64 / 2;
            let lhs_a: i128 = (1..=half).map(|l| conv_lt(2 * l - 1)).sum();
            let lhs_d: i128 = (1..=half).map(|l| a.sum_range(0, 2 * l - 2) as i128).sum();
            let even_odd = a.beta_even() as i128 * a.beta_odd() as i128;
            Ok(2 * lhs_a == even_odd
                && 4 * lhs_d == n as i128 * beta_star - 2 * a.beta_odd() as i128)
        }
    }
}
