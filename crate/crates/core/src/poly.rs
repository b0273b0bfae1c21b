//! Exact big-integer polynomial and truncated power-series arithmetic.
//!
//! Two flavors are used: plain integer series in one variable for Euler
//! characteristics, and series in `z` whose coefficients are polynomials in
//! `y` for the χ_y computation. Everything is exact; there are no
//! tolerances anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in one variable, coefficient of degree i at index i.
pub type IntPoly = Vec<BigInt>;

pub fn ip_zero() -> IntPoly {
    Vec::new()
}

pub fn ip_const(c: i64) -> IntPoly {
    if c == 0 {
        Vec::new()
    } else {
        vec![BigInt::from(c)]
    }
}

pub fn ip_is_zero(p: &IntPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn ip_trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn ip_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    ip_trim(out)
}

pub fn ip_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    ip_trim(out)
}

pub fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    ip_trim(out)
}

/// Exact division by (1 + y); panics when the division is not exact.
pub fn ip_div_one_plus_y(p: &IntPoly) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    // p = (1+y) q  ⇒  q_i = p_i − q_{i−1}
    let mut q = vec![BigInt::zero(); p.len()];
    let mut prev = BigInt::zero();
    for i in 0..p.len() {
        q[i] = &p[i] - &prev;
        prev = q[i].clone();
    }
    assert!(
        q.last().is_some_and(|c| c.is_zero()),
        "polynomial is not divisible by 1 + y"
    );
    q.pop();
    ip_trim(q)
}

/// Truncated power series in `z` with `IntPoly` coefficients.
/// Coefficient of `z^i` lives at index i; length is the truncation order.
#[derive(Clone, Debug)]
pub struct ZSeries {
    pub coeffs: Vec<IntPoly>,
}

impl ZSeries {
    pub fn zero(trunc: usize) -> Self {
        ZSeries {
            coeffs: vec![ip_zero(); trunc],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if trunc > 0 {
            s.coeffs[0] = ip_const(1);
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    /// Series from explicit low-order coefficients, zero-padded/truncated.
    pub fn from_coeffs(trunc: usize, coeffs: Vec<IntPoly>) -> Self {
        let mut s = Self::zero(trunc);
        for (i, c) in coeffs.into_iter().enumerate().take(trunc) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        let trunc = self.trunc();
        debug_assert_eq!(trunc, other.trunc());
        let mut out = ZSeries::zero(trunc);
        for i in 0..trunc {
            if ip_is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..trunc - i {
                if ip_is_zero(&other.coeffs[j]) {
                    continue;
                }
                let prod = ip_mul(&self.coeffs[i], &other.coeffs[j]);
                out.coeffs[i + j] = ip_add(&out.coeffs[i + j], &prod);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> ZSeries {
        let mut out = ZSeries::one(self.trunc());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Multiplicative inverse; the constant term must be the polynomial 1.
    pub fn inverse(&self) -> ZSeries {
        let trunc = self.trunc();
        assert!(trunc > 0 && self.coeffs[0] == ip_const(1));
        let mut inv = ZSeries::zero(trunc);
        inv.coeffs[0] = ip_const(1);
        for k in 1..trunc {
            let mut acc = ip_zero();
            for i in 1..=k {
                if ip_is_zero(&self.coeffs[i]) {
                    continue;
                }
                acc = ip_add(&acc, &ip_mul(&self.coeffs[i], &inv.coeffs[k - i]));
            }
            inv.coeffs[k] = ip_sub(&ip_zero(), &acc);
        }
        inv
    }
}

/// Plain integer series: (1 + c·h)^e truncated, e ≥ 0, via binomials.
pub fn binomial_series(c: i64, e: u64, trunc: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); trunc];
    let mut coeff = BigInt::one();
    let c = BigInt::from(c);
    for (k, slot) in out.iter_mut().enumerate() {
        if (k as u64) > e {
            break;
        }
        *slot = coeff.clone();
        // next binomial: C(e, k+1) c^{k+1} = C(e, k) c^k · (e−k)/(k+1) · c
        coeff =
            coeff * (BigInt::from(e) - BigInt::from(k as u64)) * &c / BigInt::from(k as u64 + 1);
    }
    out
}

/// Geometric series (1 + c·h)^{-1} truncated.
pub fn geometric_inverse(c: i64, trunc: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); trunc];
    let mut cur = BigInt::one();
    let step = BigInt::from(-c);
    for slot in out.iter_mut() {
        *slot = cur.clone();
        cur *= &step;
    }
    out
}

pub fn int_series_mul(a: &[BigInt], b: &[BigInt], trunc: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); trunc];
    for (i, ca) in a.iter().enumerate().take(trunc) {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate().take(trunc - i) {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Converts a BigInt known to fit in i64; panics otherwise with the value.
pub fn to_i64(v: &BigInt) -> i64 {
    i64::try_from(v).unwrap_or_else(|_| panic!("integer {v} exceeds the supported i64 range"))
}

/// Converts a nonnegative BigInt known to fit in u64.
pub fn to_u64(v: &BigInt) -> u64 {
    assert!(!v.is_negative(), "expected a nonnegative integer, got {v}");
    u64::try_from(v).unwrap_or_else(|_| panic!("integer {v} exceeds the supported u64 range"))
}
