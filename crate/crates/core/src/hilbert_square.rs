//! Closed-form invariants of the Hilbert square X^\[2\] of a real variety,
//! evaluated exactly from a cohomological profile.
//!
//! The real locus of X^\[2\] decomposes into a main component glued from the
//! quotient piece ℍ_0, one piece ℍ_i per real component (its symmetric
//! square off the diagonal), and products F_s × F_t as extra components;
//! E(R) = P_R(T*X(R)) is the common gluing boundary. Every formula here is
//! gated by the hypotheses under which it is established: out-of-range
//! queries are errors, never extrapolations. Half-integral intermediates
//! are computed doubled and halved only after an evenness check.

use crate::betti::BettiVector;
use crate::ci::d_of_n;
use crate::error::{Error, Result};
use crate::profile::RealVarietyProfile;
use serde::Serialize;
use std::collections::BTreeMap;

/// Per-degree Betti numbers of one stratum together with its total.
///
/// For ℍ_0 the per-degree vector covers only degrees 0..n−1 (the range the
/// duality argument determines) while the total counts all degrees, so the
/// total may exceed the sum of the listed entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumBetti {
    pub per_degree: BettiVector,
    pub total: u64,
}

/// The strata of X^\[2\](R): ℍ_0, the ℍ_i, the gluing locus E(R), and the
/// Künneth vector of the extra components.
#[derive(Clone, Debug, Serialize)]
pub struct StrataReport {
    pub h0: StratumBetti,
    pub hi: Vec<StratumBetti>,
    pub er: StratumBetti,
    pub extra: BettiVector,
}

/// Maximality verdict for the Hilbert square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Maximal,
    NotMaximal,
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Maximal => "maximal",
            Verdict::NotMaximal => "not_maximal",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// A verdict together with the reason codes of the criteria that decided it.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Deficiency data of the Hilbert square of a maximal complete intersection.
#[derive(Clone, Debug, Serialize)]
pub struct DeficiencyReport {
    /// defi(X^\[2\]) = 4(Σ_{l=1}^{⌊n/2⌋} Σ_{i<l} β_i(X(R)) − d(n)).
    pub deficiency: u64,
    /// β_k(X^\[2\](R)) in the degrees the duality arguments determine:
    /// even k ≤ n−1 for odd n, odd k ≤ n−1 for even n.
    pub per_degree_real_betti: BTreeMap<usize, u64>,
    /// β_*(X^\[2\]) of the complex locus, or a lower bound when 2-torsion is
    /// not excluded.
    pub total_square_complex: u64,
    pub total_square_is_exact: bool,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// χ(X^\[2\](R)) = β_*/2 − β_odd + χ(X(R))²/2 − χ(X(R)).
///
/// For even n the Euler characteristic of the real locus is derived from
/// the aggregate real Betti vector; for odd n it is 0 (a closed
/// odd-dimensional manifold). A supplied value must agree with the derived
/// one.
pub fn euler_char_square_real(p: &RealVarietyProfile, chi_real: Option<i64>) -> Result<i64> {
    let derived: i64 = if p.n % 2 == 0 {
        p.aggregate_real().euler()
    } else {
        0
    };
    if let Some(given) = chi_real {
        if given != derived {
            return Err(Error::Inconsistent(format!(
                "supplied χ(X(R)) = {given} but the profile forces {derived}"
            )));
        }
    }
    let chi = derived as i128;
    let doubled = p.beta_star() as i128 - 2 * p.beta_odd() as i128 + chi * chi - 2 * chi;
    if doubled % 2 != 0 {
        return Err(Error::Inconsistent(
            "χ(X^[2](R)) came out half-integral; the profile is invalid".into(),
        ));
    }
    Ok((doubled / 2) as i64)
}

/// β_*(X^\[2\]) = β_*(β_*−1)/2 + nβ_* − β_odd, exact when H_*(X; Z) has no
/// 2-torsion and a lower bound otherwise.
pub fn betti_total_square_complex(n: usize, b: &BettiVector, torsion2_free: bool) -> (u64, bool) {
    let beta_star = b.total() as u128;
    let value = beta_star * (beta_star - 1) / 2 + n as u128 * beta_star - b.beta_odd() as u128;
    (value as u64, torsion2_free)
}

/// β_k(ℍ_0) = Σ_{i=2n−k}^{2n} β_i(X) for 0 ≤ k ≤ n−1, with total
/// β_*(ℍ_0) = (n/2)·β_*. Requires a maximal profile.
pub fn betti_h0(p: &RealVarietyProfile) -> Result<StratumBetti> {
    require_maximal(p, "β_*(ℍ_0)")?;
    let n = p.n;
    let per: Vec<u64> = (0..n)
        .map(|k| p.complex_betti.sum_range((2 * n - k) as i64, 2 * n as i64))
        .collect();
    let doubled = n as u128 * p.beta_star() as u128;
    if doubled % 2 != 0 {
        return Err(Error::Inconsistent(
            "n·β_* is odd; a maximal profile cannot have this".into(),
        ));
    }
    Ok(StratumBetti {
        per_degree: BettiVector::new(per),
        total: (doubled / 2) as u64,
    })
}

/// Betti numbers of ℍ_i, the symmetric square of a closed n-manifold F
/// minus its diagonal, compactified by P_R(T*F):
///
/// * β_2k   = Σ_{a+b=2k, a<b} f_a f_b + f_k(f_k−1)/2 + Σ_{l=2k−n+1}^{k} f_l,
/// * β_2k+1 = Σ_{a+b=2k+1, a<b} f_a f_b + Σ_{l=2k+2−n}^{k} f_l,
/// * total  = f_*(f_*−1)/2 + Σ_k (n−k) f_k.
///
/// The per-degree sum is checked against the closed-form total.
pub fn betti_hi(f: &BettiVector, n: usize) -> Result<StratumBetti> {
    if f.len() != n + 1 {
        return Err(Error::Precondition(format!(
            "component vector must have length n+1 = {}, got {}",
            n + 1,
            f.len()
        )));
    }
    if !f.is_palindromic() {
        return Err(Error::Precondition(
            "component vector must be palindromic (F2 Poincaré duality)".into(),
        ));
    }
    let conv_lt = |m: i64| -> u128 {
        let mut s = 0u128;
        let mut a = 0i64;
        while 2 * a < m {
            s += f.get_signed(a) as u128 * f.get_signed(m - a) as u128;
            a += 1;
        }
        s
    };
    let per: Vec<u64> = (0..=2 * n as i64)
        .map(|deg| {
            let val = if deg % 2 == 0 {
                let k = deg / 2;
                let fk = f.get_signed(k) as u128;
                conv_lt(deg)
                    + fk * fk.saturating_sub(1) / 2
                    + f.sum_range(deg - n as i64 + 1, k) as u128
            } else {
                let k = (deg - 1) / 2;
                conv_lt(deg) + f.sum_range(deg - n as i64 + 1, k) as u128
            };
            val as u64
        })
        .collect();
    let f_star = f.total() as u128;
    let total = f_star * (f_star - 1) / 2
        + (0..=n as i64)
            .map(|k| (n as i64 - k) as u128 * f.get_signed(k) as u128)
            .sum::<u128>();
    let per_sum: u128 = per.iter().map(|&v| v as u128).sum();
    if per_sum != total {
        return Err(Error::Inconsistent(format!(
            "per-degree ℍ_i sum {per_sum} disagrees with closed-form total {total}"
        )));
    }
    Ok(StratumBetti {
        per_degree: BettiVector::new(per),
        total: total as u64,
    })
}

/// Betti numbers of E(R) = P_R(T*X(R)): the Leray–Hirsch convolution of
/// the aggregate real vector with the n ones of P^{n−1}(R), with total
/// n·β_*(X(R)).
pub fn betti_er(p: &RealVarietyProfile) -> StratumBetti {
    let a = p.aggregate_real();
    let n = p.n;
    let per: Vec<u64> = (0..2 * n as i64)
        .map(|k| a.sum_range(k - n as i64 + 1, k))
        .collect();
    let total = n as u64 * a.total();
    debug_assert_eq!(per.iter().sum::<u64>(), total);
    StratumBetti {
        per_degree: BettiVector::new(per),
        total,
    }
}

/// β_k of the extra components ⨆_{s<t} F_s × F_t by Künneth.
pub fn betti_extra(p: &RealVarietyProfile, k: usize) -> u64 {
    let comps = &p.real_components;
    let mut sum = 0u64;
    for i in 0..=k {
        let j = k - i;
        for s in 0..comps.len() {
            for t in s + 1..comps.len() {
                sum += comps[s].get(i) * comps[t].get(j);
            }
        }
    }
    sum
}

/// The whole Künneth vector of the extra components, degrees 0..=2n.
pub fn betti_extra_vector(p: &RealVarietyProfile) -> BettiVector {
    BettiVector::new((0..=2 * p.n).map(|k| betti_extra(p, k)).collect())
}

/// rank(inc_0^k) = Σ_{i=0}^{k} β_i(X) for k < n, on a maximal profile.
pub fn rank_inc0(k: usize, p: &RealVarietyProfile) -> Result<u64> {
    require_maximal(p, "rank(inc_0)")?;
    if k >= p.n {
        return Err(Error::OutOfRange(format!(
            "rank(inc_0^k) is established for k < n = {} only, got k = {k}",
            p.n
        )));
    }
    Ok(p.complex_betti.sum_range(0, k as i64))
}

/// rank(inc^m) = Σ_{⌊m/2⌋ ≥ k ≥ m−n+1} β_k(X(R)) for 0 ≤ m ≤ 2n.
pub fn rank_inc(m: usize, p: &RealVarietyProfile) -> Result<u64> {
    if m > 2 * p.n {
        return Err(Error::OutOfRange(format!(
            "rank(inc^m) needs 0 ≤ m ≤ 2n = {}, got m = {m}",
            2 * p.n
        )));
    }
    let a = p.aggregate_real();
    Ok(a.sum_range(m as i64 - p.n as i64 + 1, (m / 2) as i64))
}

/// rank(μ_k) = Σ_{i=0}^{⌊k/2⌋} β_i(X(R)) for 0 ≤ k ≤ n−1, on a maximal
/// complete intersection.
pub fn rank_mu(k: usize, p: &RealVarietyProfile) -> Result<u64> {
    require_maximal_ci(p, "rank(μ_k)")?;
    if k >= p.n {
        return Err(Error::OutOfRange(format!(
            "rank(μ_k) is established for k ≤ n−1 = {} only, got k = {k}",
            p.n - 1
        )));
    }
    Ok(p.aggregate_real().sum_range(0, (k / 2) as i64))
}

/// β_k(X^\[2\](R)) in the degrees the Mayer–Vietoris bookkeeping determines
/// for a maximal complete intersection: for odd n the even degrees
/// k = 2l ≤ n−1, for even n the odd degrees k = 2l−1 ≤ n−1.
pub fn betti_square_real(p: &RealVarietyProfile, k: usize) -> Result<u64> {
    require_maximal_ci(p, "β_k(X^[2](R))")?;
    let n = p.n;
    if k >= n {
        return Err(Error::OutOfRange(format!(
            "β_k(X^[2](R)) is determined for k ≤ n−1 = {} only, got k = {k}",
            n - 1
        )));
    }
    let a = p.aggregate_real();
    if n % 2 == 1 {
        if k % 2 != 0 {
            return Err(Error::OutOfRange(format!(
                "for odd n only even degrees are determined, got k = {k}"
            )));
        }
        let l = (k / 2) as i64;
        let conv: i128 = (0..=2 * l)
            .map(|i| a.get_signed(i) as i128 * a.get_signed(2 * l - i) as i128)
            .sum();
        let doubled = 2 * (l as i128 + 1) + conv + 2 * a.sum_range(0, 2 * l - 1) as i128
            - a.get_signed(l) as i128
            - 2 * a.sum_range(0, l - 1) as i128;
        if doubled % 2 != 0 || doubled < 0 {
            return Err(Error::Inconsistent(format!(
                "β_{k}(X^[2](R)) evaluated to {doubled}/2; the profile is invalid"
            )));
        }
        Ok((doubled / 2) as u64)
    } else {
        if k % 2 != 1 {
            return Err(Error::OutOfRange(format!(
                "for even n only odd degrees are determined, got k = {k}"
            )));
        }
        let l = ((k + 1) / 2) as i64;
        let conv_lt: i128 = {
            let mut s = 0i128;
            let mut x = 0i64;
            while 2 * x < 2 * l - 1 {
                s += a.get_signed(x) as i128 * a.get_signed(2 * l - 1 - x) as i128;
                x += 1;
            }
            s
        };
        let value =
            l as i128 + conv_lt + a.sum_range(0, 2 * l - 2) as i128 - a.sum_range(0, l - 1) as i128;
        if value < 0 {
            return Err(Error::Inconsistent(format!(
                "β_{k}(X^[2](R)) evaluated negative; the profile is invalid"
            )));
        }
        Ok(value as u64)
    }
}

/// defi(X^\[2\]) = 4(Σ_{l=1}^{⌊n/2⌋} Σ_{i=0}^{l−1} β_i(X(R)) − d(n)) for a
/// maximal complete intersection of dimension n ≥ 2, with the equivalent
/// criterion — β_i(X(R)) = 1 for all i ≤ ⌊n/2⌋−1 — computed independently
/// and required to agree.
pub fn deficiency_square(p: &RealVarietyProfile) -> Result<DeficiencyReport> {
    require_maximal_ci(p, "deficiency of the Hilbert square")?;
    if p.n < 2 {
        return Err(Error::Precondition(
            "the deficiency formula needs dimension n ≥ 2".into(),
        ));
    }
    let a = p.aggregate_real();
    let half = p.n / 2;
    let sum: i128 = (1..=half as i64)
        .map(|l| a.sum_range(0, l - 1) as i128)
        .sum();
    let quarter = sum - d_of_n(p.n)? as i128;
    if quarter < 0 {
        return Err(Error::Inconsistent(
            "negative deficiency: the profile violates the hyperplane-class bound".into(),
        ));
    }
    let deficiency = 4 * quarter as u64;
    let ones = (0..half).all(|i| a.get(i) == 1);
    if ones != (deficiency == 0) {
        return Err(Error::Inconsistent(
            "the deficiency formula and the β_i = 1 criterion disagree; \
             the profile violates the hyperplane-class bound"
                .into(),
        ));
    }
    let mut per_degree = BTreeMap::new();
    let degrees: Vec<usize> = if p.n % 2 == 1 {
        (0..p.n).step_by(2).collect()
    } else {
        (1..p.n).step_by(2).collect()
    };
    for k in degrees {
        per_degree.insert(k, betti_square_real(p, k)?);
    }
    let (total, exact) = betti_total_square_complex(p.n, &p.complex_betti, p.flags.torsion2_free);
    let verdict = if deficiency == 0 {
        Verdict::Maximal
    } else {
        Verdict::NotMaximal
    };
    Ok(DeficiencyReport {
        deficiency,
        per_degree_real_betti: per_degree,
        total_square_complex: total,
        total_square_is_exact: exact,
        verdict,
        reasons: vec!["defect-odd".into(), "odd-coro".into()],
    })
}

/// defi(X^\[2\]) = 2(rank μ_* − (n/2)β_* − β_odd/2), as a pure formula over a
/// caller-supplied total Mayer–Vietoris rank.
pub fn deficiency_via_mu(rank_mu_total: u64, n: usize, beta_star: u64, beta_odd: u64) -> i64 {
    (2 * rank_mu_total as i128 - n as i128 * beta_star as i128 - beta_odd as i128) as i64
}

/// The inverse of [`deficiency_via_mu`]: the rank μ_* a given deficiency
/// implies. Errors when the result would be half-integral.
pub fn implied_rank_mu(defi: i64, n: usize, beta_star: u64, beta_odd: u64) -> Result<u64> {
    let doubled = defi as i128 + n as i128 * beta_star as i128 + beta_odd as i128;
    if doubled % 2 != 0 || doubled < 0 {
        return Err(Error::Inconsistent(format!(
            "rank μ_* would be {doubled}/2, which is not a nonnegative integer"
        )));
    }
    Ok((doubled / 2) as u64)
}

/// Decision procedure for the maximality of X^\[2\], first match wins:
///
/// (a) empty real locus (n ≥ 2) → not maximal;
/// (b) X itself not maximal (n ≥ 2) → not maximal;
/// (c) complete intersection (n ≥ 2) → exact verdict from the deficiency
///     formula;
/// (d) H_odd(X) = 0 and some β_k(X(R)) ≠ β_2k(X) (n ≥ 2) → not maximal;
/// (e) H_odd(X) = 0, X maximal, β_k(X(R)) = β_2k(X) for all k, and
///     H_*(X(R)) generated by real algebraic fundamental classes → maximal;
/// (f) otherwise undetermined.
///
/// The n ≥ 2 gates mirror the hypotheses of the theorems behind (a), (b)
/// and (d); P¹ without real points genuinely escapes them.
pub fn maximality_verdict(p: &RealVarietyProfile) -> Result<VerdictReport> {
    let n = p.n;
    let report = |verdict, reasons: &[&str]| VerdictReport {
        verdict,
        reasons: reasons.iter().map(|s| s.to_string()).collect(),
    };
    if n >= 2 && p.real_components.is_empty() {
        return Ok(report(Verdict::NotMaximal, &["nonemptyness"]));
    }
    if n >= 2 && !p.flags.maximal {
        return Ok(report(Verdict::NotMaximal, &["converse"]));
    }
    if n >= 2 && p.flags.maximal && p.flags.ci.is_some() {
        let defi = deficiency_square(p)?;
        return Ok(report(defi.verdict, &["defect-odd", "odd-coro"]));
    }
    let a = p.aggregate_real();
    let agrees = (0..=n).all(|k| a.get(k) == p.complex_betti.get(2 * k));
    if n >= 2 && p.flags.h_odd_zero && !agrees {
        return Ok(report(Verdict::NotMaximal, &["connected"]));
    }
    if p.flags.h_odd_zero && p.flags.maximal && agrees && p.flags.real_algebraic_generation {
        return Ok(report(Verdict::Maximal, &["Pn"]));
    }
    Ok(report(Verdict::Undetermined, &["no-applicable-criterion"]))
}

/// For a cubic hypersurface of dimension n the deficiencies of X, X^\[2\]
/// and the Fano variety of lines F(X) satisfy
/// defi(X^\[2\]) = (n+1)·defi(X) + defi(F(X)); this solves for defi(F(X)).
pub fn cubic_fano_deficiency(n: usize, defi_x: u64, defi_square: u64) -> Result<u64> {
    let fano = defi_square as i128 - (n as i128 + 1) * defi_x as i128;
    if fano < 0 {
        return Err(Error::Inconsistent(format!(
            "defi(F(X)) = {fano} is negative; the supplied deficiencies are inconsistent"
        )));
    }
    Ok(fano as u64)
}

/// All strata invariants in one report; needs a maximal profile for the
/// ℍ_0 part.
pub fn strata_report(p: &RealVarietyProfile) -> Result<StrataReport> {
    let h0 = betti_h0(p)?;
    let hi = p
        .real_components
        .iter()
        .map(|f| betti_hi(f, p.n))
        .collect::<Result<Vec<_>>>()?;
    Ok(StrataReport {
        h0,
        hi,
        er: betti_er(p),
        extra: betti_extra_vector(p),
    })
}

fn require_maximal(p: &RealVarietyProfile, what: &str) -> Result<()> {
    if p.flags.maximal {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} is established for maximal profiles only"
        )))
    }
}

fn require_maximal_ci(p: &RealVarietyProfile, what: &str) -> Result<()> {
    require_maximal(p, what)?;
    if p.flags.ci.is_some() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} is established for complete intersections only"
        )))
    }
}
