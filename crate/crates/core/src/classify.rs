//! Enumeration of even-dimensional complete intersections and the
//! comparison h^{k,k} vs b_2k that governs whether a maximal real form can
//! have a maximal Hilbert square.

use crate::betti::BettiVector;
use crate::ci::{complex_betti, hodge_numbers, CompleteIntersection};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Bounds of a classification scan. Only even dimensions ≥ 2 are scanned.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ScanRange {
    pub max_dim: usize,
    pub max_codim: usize,
    pub max_degree: u32,
}

/// One scanned complete intersection.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub ambient: u32,
    pub degrees: Vec<u32>,
    pub n: usize,
    pub h_kk: u64,
    pub b_2k: u64,
    pub equal: bool,
    pub verdict: &'static str,
}

/// Scans all canonical complete intersections (degrees in [2, max_degree],
/// at most max_codim of them, plus the linear case) of even dimension up to
/// max_dim. Rows are computed in parallel and sorted by (n, degrees) for a
/// deterministic table.
pub fn scan(range: &ScanRange) -> Result<Vec<ScanRow>> {
    if range.max_dim < 2 || range.max_codim < 1 || range.max_degree < 1 {
        return Err(Error::Precondition(
            "scan bounds must satisfy max_dim ≥ 2, max_codim ≥ 1, max_degree ≥ 1".into(),
        ));
    }
    let mut degree_lists = vec![Vec::new()];
    degree_lists.extend(multisets(2, range.max_degree, range.max_codim));
    let mut jobs = Vec::new();
    for n in (2..=range.max_dim).step_by(2) {
        for degrees in &degree_lists {
            jobs.push((n, degrees.clone()));
        }
    }
    let mut rows = jobs
        .into_par_iter()
        .map(|(n, degrees)| {
            let ambient = n as u32 + degrees.len() as u32;
            let ci = CompleteIntersection::new(ambient, degrees)?;
            let k = n / 2;
            let h_kk = hodge_numbers(&ci)?.h(k, k);
            let b_2k = complex_betti(&ci)?.get(n);
            let equal = h_kk == b_2k;
            Ok(ScanRow {
                ambient,
                degrees: ci.degrees().to_vec(),
                n,
                h_kk,
                b_2k,
                equal,
                verdict: if equal {
                    "admits_maximal_square"
                } else {
                    "square_never_maximal"
                },
            })
        })
        .collect::<Result<Vec<ScanRow>>>()?;
    rows.sort_by(|a, b| (a.n, &a.degrees).cmp(&(b.n, &b.degrees)));
    Ok(rows)
}

/// Non-decreasing degree tuples from [lo, hi] of length 1..=max_len.
fn multisets(lo: u32, hi: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &stack {
            let start = prefix.last().copied().unwrap_or(lo);
            for d in start..=hi {
                let mut t = prefix.clone();
                t.push(d);
                out.push(t.clone());
                next.push(t);
            }
        }
        stack = next;
    }
    out
}

/// The Lefschetz-trace step of the even-dimensional classification: a
/// maximal Hilbert square forces β_k(X(R)) = h^{k,k}, while maximality of X
/// and duality force β_k(X(R)) = b_2k. For a hypothetical real locus with
/// β_i = 1 below the middle, returns whether both constraints can hold.
pub fn lefschetz_trace_check(ci: &CompleteIntersection, real_betti: &BettiVector) -> Result<bool> {
    let n = ci.dim();
    if n < 2 || n % 2 != 0 {
        return Err(Error::Precondition(
            "the Lefschetz trace step applies to even dimension n = 2k ≥ 2".into(),
        ));
    }
    let k = n / 2;
    if real_betti.len() != n + 1 || !real_betti.is_palindromic() {
        return Err(Error::Precondition(
            "real Betti vector must be palindromic of length n+1".into(),
        ));
    }
    if (0..k).any(|i| real_betti.get(i) != 1) {
        return Err(Error::Precondition(
            "the step assumes β_i(X(R)) = 1 below the middle degree".into(),
        ));
    }
    let h_kk = hodge_numbers(ci)?.h(k, k);
    let b_2k = complex_betti(ci)?.get(n);
    let beta_k = real_betti.get(k);
    Ok(beta_k == h_kk && beta_k == b_2k)
}

/// Renders rows as CSV with columns ambient, degrees, n, h_kk, b_2k,
/// equal, verdict.
pub fn rows_to_csv(rows: &[ScanRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "ambient", "degrees", "n", "h_kk", "b_2k", "equal", "verdict",
    ])
    .expect("csv write");
    for r in rows {
        let degrees = r
            .degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        w.write_record([
            r.ambient.to_string(),
            degrees,
            r.n.to_string(),
            r.h_kk.to_string(),
            r.b_2k.to_string(),
            r.equal.to_string(),
            r.verdict.to_string(),
        ])
        .expect("csv write");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}
