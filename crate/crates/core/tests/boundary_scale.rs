//! The rank kernel must handle boundary matrices of repeatedly subdivided
//! complexes at the 10^5 × 10^5 scale in seconds, exactly.

use smith_thom::betti::BettiVector;
use smith_thom::simplicial::{betti, sphere};
use std::time::Instant;

#[test]
fn subdivided_sphere_homology_at_scale() {
    // two subdivisions of the minimal 3-sphere: 2 880 tetrahedra
    let mut complex = sphere(3);
    for _ in 0..2 {
        complex = complex.barycentric_subdivision().0;
    }
    let start = Instant::now();
    assert_eq!(betti(&complex), BettiVector::new(vec![1, 0, 0, 1]));
    println!("Sd² of ∂Δ⁴: homology in {:?}", start.elapsed());
}

#[test]
fn boundary_rank_at_1e5_scale() {
    // a third subdivision: 69 120 tetrahedra, ∂₃ is 138 240 × 69 120
    let mut complex = sphere(3);
    for _ in 0..3 {
        complex = complex.barycentric_subdivision().0;
    }
    let start = Instant::now();
    let b = betti(&complex);
    let elapsed = start.elapsed();
    assert_eq!(b, BettiVector::new(vec![1, 0, 0, 1]));
    println!("Sd³ of ∂Δ⁴: all boundary ranks in {elapsed:?}");
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "boundary reduction too slow: {elapsed:?}"
    );
}
