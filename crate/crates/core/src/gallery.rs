//! Ready-made cohomological profiles of classical real varieties, used by
//! the examples, the command-line tool's documentation, and the test
//! suites.

use crate::betti::BettiVector;
use crate::ci::CompleteIntersection;
use crate::profile::{ProfileFlags, RealVarietyProfile};

fn profile(
    n: usize,
    complex: Vec<u64>,
    components: Vec<Vec<u64>>,
    ci: Option<CompleteIntersection>,
    h_odd_zero: bool,
    generation: bool,
) -> RealVarietyProfile {
    let complex_betti = BettiVector::new(complex);
    let real_components: Vec<BettiVector> = components.into_iter().map(BettiVector::new).collect();
    let maximal = real_components.iter().map(|c| c.total()).sum::<u64>() == complex_betti.total();
    RealVarietyProfile {
        n,
        complex_betti,
        real_components,
        flags: ProfileFlags {
            maximal,
            ci,
            h_odd_zero,
            torsion2_free: true,
            real_algebraic_generation: generation,
        },
    }
}

fn ci(ambient: u32, degrees: &[u32]) -> Option<CompleteIntersection> {
    Some(CompleteIntersection::new(ambient, degrees.to_vec()).unwrap())
}

/// A maximal real cubic surface: the blow-up of P² at six real points,
/// X(R) = N₇.
pub fn cubic_surface_max() -> RealVarietyProfile {
    profile(
        2,
        vec![1, 0, 7, 0, 1],
        vec![vec![1, 7, 1]],
        ci(3, &[3]),
        true,
        true,
    )
}

/// A maximal quadric surface whose real locus is a torus (the product real
/// structure on P¹ × P¹).
pub fn quadric_surface_torus() -> RealVarietyProfile {
    profile(
        2,
        vec![1, 0, 2, 0, 1],
        vec![vec![1, 2, 1]],
        ci(3, &[2]),
        true,
        true,
    )
}

/// A quadric surface with empty real locus.
pub fn quadric_surface_empty_real() -> RealVarietyProfile {
    profile(2, vec![1, 0, 2, 0, 1], vec![], ci(3, &[2]), true, false)
}

/// A maximal cubic threefold with connected real locus, β(X(R)) = (1,6,6,1).
pub fn cubic_threefold_max() -> RealVarietyProfile {
    profile(
        3,
        vec![1, 0, 1, 10, 1, 0, 1],
        vec![vec![1, 6, 6, 1]],
        ci(4, &[3]),
        false,
        false,
    )
}

/// A maximal quartic K3 surface with two real components, one of genus 10
/// and one sphere.
pub fn quartic_k3_two_sheets() -> RealVarietyProfile {
    profile(
        2,
        vec![1, 0, 22, 0, 1],
        vec![vec![1, 20, 1], vec![1, 0, 1]],
        ci(3, &[4]),
        true,
        false,
    )
}

/// A maximal intersection of two quadrics in P⁴ (a degree-4 Del Pezzo
/// surface), connected real locus.
pub fn two_quadrics_surface_max() -> RealVarietyProfile {
    profile(
        2,
        vec![1, 0, 6, 0, 1],
        vec![vec![1, 6, 1]],
        ci(4, &[2, 2]),
        true,
        true,
    )
}

/// A maximal intersection of two quadrics in P⁶ (dimension 4) whose real
/// locus has β_1 = 2; its Hilbert square is not maximal.
pub fn two_quadrics_fourfold_beta1_2() -> RealVarietyProfile {
    profile(
        4,
        vec![1, 0, 1, 0, 8, 0, 1, 0, 1],
        vec![vec![1, 2, 6, 2, 1]],
        ci(6, &[2, 2]),
        true,
        false,
    )
}

/// A maximal cubic fourfold, real locus with β = (1,2,21,2,1).
pub fn cubic_fourfold_max() -> RealVarietyProfile {
    profile(
        4,
        vec![1, 0, 1, 0, 23, 0, 1, 0, 1],
        vec![vec![1, 2, 21, 2, 1]],
        ci(5, &[3]),
        true,
        false,
    )
}

/// A maximal quadric fourfold in P⁵ presented without its
/// complete-intersection structure: β_k(X(R)) = β_2k(X), no odd
/// cohomology, and H_*(X(R)) generated by real algebraic classes. This
/// exercises the sufficiency criterion rather than the exact
/// complete-intersection formula.
pub fn quadric_p5_max() -> RealVarietyProfile {
    profile(
        4,
        vec![1, 0, 1, 0, 2, 0, 1, 0, 1],
        vec![vec![1, 1, 2, 1, 1]],
        None,
        true,
        true,
    )
}

/// The projective plane with its standard real structure, X(R) = RP².
pub fn p2_max() -> RealVarietyProfile {
    profile(
        2,
        vec![1, 0, 1, 0, 1],
        vec![vec![1, 1, 1]],
        ci(2, &[]),
        true,
        true,
    )
}

/// A maximal plane cubic curve: an elliptic curve with two real circles.
pub fn elliptic_curve_two_circles() -> RealVarietyProfile {
    profile(
        1,
        vec![1, 2, 1],
        vec![vec![1, 1], vec![1, 1]],
        ci(2, &[3]),
        false,
        false,
    )
}

/// P¹ with a real structure without real points: the one genuine low-
/// dimensional exception to the emptiness and converse criteria.
pub fn p1_empty_real() -> RealVarietyProfile {
    profile(1, vec![1, 0, 1], vec![], ci(1, &[]), true, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gallery_profiles_validate() {
        for (name, p) in [
            ("cubic surface", cubic_surface_max()),
            ("quadric torus", quadric_surface_torus()),
            ("quadric empty", quadric_surface_empty_real()),
            ("cubic threefold", cubic_threefold_max()),
            ("quartic K3", quartic_k3_two_sheets()),
            ("two quadrics surface", two_quadrics_surface_max()),
            ("two quadrics fourfold", two_quadrics_fourfold_beta1_2()),
            ("cubic fourfold", cubic_fourfold_max()),
            ("quadric P5", quadric_p5_max()),
            ("P2", p2_max()),
            ("elliptic curve", elliptic_curve_two_circles()),
            ("P1 empty", p1_empty_real()),
        ] {
            let violations = p.validate();
            assert!(violations.is_empty(), "{name}: {violations:?}");
        }
    }
}
