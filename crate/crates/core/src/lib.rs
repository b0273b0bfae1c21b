//! Exact Smith theory over F2 and Smith–Thom deficiency calculators for
//! Hilbert squares of real algebraic varieties.
//!
//! The crate has two computational layers:
//!
//! * a chain-level engine ([`smith`]) that takes a finite simplicial
//!   complex with involution, regularizes it by barycentric subdivision,
//!   and computes fixed sets, quotients, the long exact Smith sequence and
//!   the Smith–Thom deficiency from explicit F2 boundary matrices; and
//! * a formula layer ([`ci`], [`profile`], [`hilbert_square`],
//!   [`classify`]) that evaluates the closed-form Betti, rank, Euler and
//!   deficiency expressions for Hilbert squares X^\[2\] of real projective
//!   varieties directly from a cohomological profile, entirely in exact
//!   integer arithmetic.
//!
//! Start with the `examples/` directory: each file is a runnable tour of
//! one capability (`cargo run --example hilbert_square_deficiency`, …).
//! The thin `smith-thom` binary exposes the same operations on JSON files.

pub mod betti;
pub mod ci;
pub mod classify;
pub mod error;
pub mod f2;
pub mod gallery;
pub mod hilbert_square;
mod poly;
pub mod profile;
pub mod simplicial;
pub mod smith;

pub use betti::BettiVector;
pub use ci::{
    complex_betti, d_of_n, euler_characteristic, hkk_equals_b2k, hodge_numbers,
    CompleteIntersection, HodgeDiamond,
};
pub use classify::{lefschetz_trace_check, scan, ScanRange, ScanRow};
pub use error::{Error, Result};
pub use hilbert_square::{
    betti_er, betti_extra, betti_h0, betti_hi, betti_square_real, betti_total_square_complex,
    cubic_fano_deficiency, deficiency_square, deficiency_via_mu, euler_char_square_real,
    implied_rank_mu, maximality_verdict, rank_inc, rank_inc0, rank_mu, strata_report,
    DeficiencyReport, StrataReport, Verdict, VerdictReport,
};
pub use profile::{ProfileFlags, RealVarietyProfile, Violation};
pub use simplicial::{betti, relative_betti, SimplicialComplex};
pub use smith::{
    fixed_subcomplex, quotient_complex, regularize, smith_report, verify_relative_quotient,
    SimplicialInvolution, SmithReport,
};
