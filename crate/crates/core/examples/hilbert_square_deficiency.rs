//! Deficiency of the Hilbert square X^[2] for maximal complete
//! intersections, straight from the profile of the real locus.
//!
//! The real locus X^[2](R) is glued from the quotient piece ℍ_0, the
//! punctured symmetric squares ℍ_i of the real components, and product
//! components; the example prints the strata Betti numbers alongside the
//! final deficiency and verdict.
//!
//! Run with `cargo run --example hilbert_square_deficiency`.

use smith_thom::{
    deficiency_square, euler_char_square_real, gallery, maximality_verdict, strata_report,
};

fn main() {
    let profiles = [
        ("maximal cubic surface", gallery::cubic_surface_max()),
        (
            "maximal quadric surface with torus real locus",
            gallery::quadric_surface_torus(),
        ),
        (
            "maximal (2,2) intersection in P^4",
            gallery::two_quadrics_surface_max(),
        ),
        (
            "maximal cubic threefold, connected real locus",
            gallery::cubic_threefold_max(),
        ),
        (
            "maximal quartic K3 with two real components",
            gallery::quartic_k3_two_sheets(),
        ),
        ("maximal cubic fourfold", gallery::cubic_fourfold_max()),
    ];

    for (name, p) in profiles {
        assert!(p.validate().is_empty());
        let report = deficiency_square(&p).expect("maximal complete intersection");
        println!("{name}");
        println!("  defi(X^[2])      {}", report.deficiency);
        println!("  verdict          {}", report.verdict);
        println!(
            "  β_*(X^[2])       {} ({})",
            report.total_square_complex,
            if report.total_square_is_exact {
                "exact"
            } else {
                "lower bound"
            }
        );
        for (k, b) in &report.per_degree_real_betti {
            println!("  β_{k}(X^[2](R))   {b}");
        }
        let chi = euler_char_square_real(&p, None).unwrap();
        println!("  χ(X^[2](R))      {chi}");
        let strata = strata_report(&p).unwrap();
        println!(
            "  strata totals    ℍ0: {}  ℍi: {:?}  E(R): {}",
            strata.h0.total,
            strata.hi.iter().map(|h| h.total).collect::<Vec<_>>(),
            strata.er.total
        );
        println!();
    }

    // varieties beyond the exact complete-intersection criterion
    for (name, p) in [
        (
            "quadric with empty real locus",
            gallery::quadric_surface_empty_real(),
        ),
        (
            "maximal quadric fourfold via the generation criterion",
            gallery::quadric_p5_max(),
        ),
        (
            "P^1 without real points (the low-dimensional exception)",
            gallery::p1_empty_real(),
        ),
    ] {
        let v = maximality_verdict(&p).unwrap();
        println!("{name}: {} (reasons: {})", v.verdict, v.reasons.join(", "));
    }
}
