//! Validation of real-variety profiles and the combinatorial Betti
//! identities that maximality forces.
//!
//! Run with `cargo run --example profile_checks`.

use smith_thom::{gallery, BettiVector, ProfileFlags, RealVarietyProfile};

fn main() {
    // a valid profile and the identities it must satisfy
    let cubic = gallery::cubic_surface_max();
    println!("maximal cubic surface: violations = {:?}", cubic.validate());
    println!(
        "  Betti identities hold: {}",
        cubic.check_betti_identities().unwrap()
    );

    let threefold = gallery::cubic_threefold_max();
    println!(
        "maximal cubic threefold: identities hold: {}",
        threefold.check_betti_identities().unwrap()
    );

    // breaking the Smith inequality by adding a spurious component
    let mut broken = gallery::cubic_surface_max();
    broken.real_components.push(BettiVector::new(vec![1, 0, 1]));
    println!("\nafter adding a spurious sphere component:");
    for v in broken.validate() {
        println!("  violation: {v}");
    }

    // a maximal complete intersection missing the hyperplane-class bound
    let quadric4 = RealVarietyProfile {
        n: 4,
        complex_betti: BettiVector::new(vec![1, 0, 1, 0, 2, 0, 1, 0, 1]),
        real_components: vec![BettiVector::new(vec![1, 2, 0, 2, 1])],
        flags: ProfileFlags {
            maximal: true,
            ci: smith_thom::CompleteIntersection::new(5, vec![2]).ok(),
            h_odd_zero: true,
            torsion2_free: true,
            real_algebraic_generation: false,
        },
    };
    println!("\nquadric fourfold profile with β_2(X(R)) = 0:");
    for v in quadric4.validate() {
        println!("  violation: {v}");
    }

    // the documented JSON wire format round-trips
    let json = serde_json::to_string_pretty(&cubic).unwrap();
    println!("\nprofile JSON:\n{json}");
    let back: RealVarietyProfile = serde_json::from_str(&json).unwrap();
    assert_eq!(back, cubic);
}
