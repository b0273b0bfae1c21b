//! Reproduces the classification of even-dimensional complete
//! intersections admitting a maximal Hilbert square: h^{k,k} = b_2k holds
//! exactly for linear subspaces, quadrics, intersections of two quadrics,
//! and cubic surfaces.
//!
//! Run with `cargo run --example classification_scan`.

use smith_thom::CompleteIntersection;
use smith_thom::{classify::rows_to_csv, lefschetz_trace_check, scan, BettiVector, ScanRange};

fn main() {
    let range = ScanRange {
        max_dim: 6,
        max_codim: 3,
        max_degree: 4,
    };
    let rows = scan(&range).unwrap();
    println!("{}", rows_to_csv(&rows));

    let equal: Vec<String> = rows
        .iter()
        .filter(|r| r.equal)
        .map(|r| format!("n={} degrees={:?}", r.n, r.degrees))
        .collect();
    println!("equality rows ({} of {}):", equal.len(), rows.len());
    for e in equal {
        println!("  {e}");
    }

    // the Lefschetz-trace step behind the classification, on two test cases
    let quadric = CompleteIntersection::new(3, vec![2]).unwrap();
    let cubic4 = CompleteIntersection::new(5, vec![3]).unwrap();
    println!(
        "\nLefschetz step, quadric surface with real locus (1,2,1): {}",
        lefschetz_trace_check(&quadric, &BettiVector::new(vec![1, 2, 1])).unwrap()
    );
    println!(
        "Lefschetz step, cubic fourfold with hypothetical (1,1,21,1,1): {}",
        lefschetz_trace_check(&cubic4, &BettiVector::new(vec![1, 1, 21, 1, 1])).unwrap()
    );
}
