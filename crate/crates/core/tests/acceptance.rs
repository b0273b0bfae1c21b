//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Every expected value is either computed here by an independent oracle
//! (direct quotients, graded symmetric algebra counts, monomial counting)
//! or verified by hand and frozen. Run with
//! `cargo test --test acceptance -- --nocapture` to see the summary lines.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smith_thom::betti::BettiVector;
use smith_thom::ci::{
    complex_betti, d_of_n, euler_characteristic, hodge_numbers, CompleteIntersection,
};
use smith_thom::classify::{scan, ScanRange};
use smith_thom::gallery;
use smith_thom::hilbert_square::{
    betti_er, betti_h0, betti_hi, betti_total_square_complex, deficiency_square, deficiency_via_mu,
    euler_char_square_real, implied_rank_mu, rank_mu,
};
use smith_thom::profile::{ProfileFlags, RealVarietyProfile};
use smith_thom::simplicial::octahedron;
use smith_thom::smith::{
    antipodal_polygon, octahedron_antipodal, octahedron_reflection, reflection_polygon,
    segment_swap, smith_report, torus_16_reflection, torus_7_central, torus_9_transpose,
    verify_relative_quotient, SimplicialInvolution,
};
use std::time::Instant;

// ---------------------------------------------------------------------------
// criterion 1: fixed-suite oracle equivalence

struct SuiteCase {
    name: &'static str,
    involution: SimplicialInvolution,
    betti_x: Vec<u64>,
    betti_f: Vec<u64>,
    betti_rel: Vec<u64>,
    deficiency: u64,
}

fn fixed_suite() -> Vec<SuiteCase> {
    vec![
        SuiteCase {
            name: "hexagon + antipodal",
            involution: antipodal_polygon(6),
            betti_x: vec![1, 1],
            betti_f: vec![],
            betti_rel: vec![1, 1], // quotient is the triangle circle
            deficiency: 2,
        },
        SuiteCase {
            name: "hexagon + reflection",
            involution: reflection_polygon(6),
            betti_x: vec![1, 1],
            betti_f: vec![2],      // two fixed vertices
            betti_rel: vec![0, 1], // (interval, endpoints)
            deficiency: 0,
        },
        SuiteCase {
            name: "octahedron + antipodal",
            involution: octahedron_antipodal(),
            betti_x: vec![1, 0, 1],
            betti_f: vec![],
            betti_rel: vec![1, 1, 1], // RP²
            deficiency: 2,
        },
        SuiteCase {
            name: "octahedron + equatorial reflection",
            involution: octahedron_reflection(),
            betti_x: vec![1, 0, 1],
            betti_f: vec![1, 1],      // square equator circle
            betti_rel: vec![0, 0, 1], // (disk, boundary)
            deficiency: 0,
        },
        SuiteCase {
            name: "torus (mirror 16-vertex) + reflection with two fixed circles",
            involution: torus_16_reflection(),
            betti_x: vec![1, 2, 1],
            betti_f: vec![2, 2],
            betti_rel: vec![0, 1, 1], // (annulus, both boundary circles)
            deficiency: 0,
        },
        SuiteCase {
            name: "torus (7-vertex) + central symmetry",
            involution: torus_7_central(),
            betti_x: vec![1, 2, 1],
            betti_f: vec![4],         // one vertex + three edge midpoints
            betti_rel: vec![0, 3, 1], // (S², four points)
            deficiency: 0,
        },
        SuiteCase {
            name: "torus (9-vertex) + diagonal transpose",
            involution: torus_9_transpose(),
            betti_x: vec![1, 2, 1],
            betti_f: vec![1, 1], // single fixed circle on an odd grid
            betti_rel: vec![0, 1, 1],
            deficiency: 2,
        },
        SuiteCase {
            name: "segment + swap",
            involution: segment_swap(),
            betti_x: vec![1, 0],
            betti_f: vec![1], // the midpoint
            betti_rel: vec![0, 0],
            deficiency: 0,
        },
        SuiteCase {
            name: "octahedron + identity",
            involution: SimplicialInvolution::identity(&octahedron()),
            betti_x: vec![1, 0, 1],
            betti_f: vec![1, 0, 1],
            betti_rel: vec![0, 0, 0],
            deficiency: 0,
        },
    ]
}

#[test]
fn criterion_1_smith_engine_oracle_equivalence() {
    let start = Instant::now();
    for case in fixed_suite() {
        let r = smith_report(&case.involution).unwrap();
        assert_eq!(
            r.betti_x,
            BettiVector::new(case.betti_x.clone()),
            "{}",
            case.name
        );
        assert_eq!(
            r.betti_f,
            BettiVector::new(case.betti_f.clone()),
            "{}",
            case.name
        );
        assert_eq!(
            r.betti_rel,
            BettiVector::new(case.betti_rel.clone()),
            "{}",
            case.name
        );
        assert_eq!(r.deficiency, case.deficiency, "{}", case.name);
        assert_eq!(r.maximal, case.deficiency == 0, "{}", case.name);
        assert!(
            r.exactness_verified,
            "{}: Smith sequence not exact",
            case.name
        );
        assert_eq!(
            r.betti_f.total() + r.deficiency,
            r.betti_x.total(),
            "{}: Smith-dims identity",
            case.name
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "fixed suite took {elapsed:?}");
    println!("ACCEPTANCE 1 (Smith engine oracle equivalence): PASS in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// criterion 2 + 3: randomized involutions

fn random_complex(rng: &mut ChaCha8Rng, vertices: u32, max_dim: usize) -> Vec<Vec<u32>> {
    let facet_count = rng.gen_range(1..=6);
    let mut facets = Vec::new();
    for _ in 0..facet_count {
        let size = rng
            .gen_range(2..=(max_dim + 1).min(vertices as usize))
            .max(2);
        let mut f: Vec<u32> = (0..vertices).collect();
        for i in (1..f.len()).rev() {
            let j = rng.gen_range(0..=i);
            f.swap(i, j);
        }
        f.truncate(size);
        f.sort_unstable();
        facets.push(f);
    }
    facets
}

/// Two disjoint copies of a random complex with the swap involution.
fn doubled(rng: &mut ChaCha8Rng) -> SimplicialInvolution {
    let v = rng.gen_range(2..=6);
    let base = random_complex(rng, v, 3);
    let mut facets = base.clone();
    facets.extend(base.iter().map(|f| f.iter().map(|x| x + v).collect()));
    let involution = (0..2 * v).map(|x| (x + v) % (2 * v)).collect();
    SimplicialInvolution::new(2 * v as usize, facets, involution).unwrap()
}

/// Cone over a doubled complex with the apex fixed; contractible, F = point.
fn cone_over_doubled(rng: &mut ChaCha8Rng) -> SimplicialInvolution {
    let v = rng.gen_range(2..=5);
    let base = random_complex(rng, v, 2);
    let apex = 2 * v;
    let mut facets = Vec::new();
    for f in &base {
        let mut a = f.clone();
        a.push(apex);
        facets.push(a);
        let mut b: Vec<u32> = f.iter().map(|x| x + v).collect();
        b.push(apex);
        facets.push(b);
    }
    let mut involution: Vec<u32> = (0..2 * v).map(|x| (x + v) % (2 * v)).collect();
    involution.push(apex);
    SimplicialInvolution::new(apex as usize + 1, facets, involution).unwrap()
}

/// Suspension of a pointwise-fixed random complex with the two apexes
/// swapped; always maximal.
fn suspension_swapped_poles(rng: &mut ChaCha8Rng) -> SimplicialInvolution {
    let v = rng.gen_range(2..=6);
    let base = random_complex(rng, v, 2);
    let (a1, a2) = (v, v + 1);
    let mut facets = Vec::new();
    for f in &base {
        let mut one = f.clone();
        one.push(a1);
        facets.push(one);
        let mut two = f.clone();
        two.push(a2);
        facets.push(two);
    }
    let mut involution: Vec<u32> = (0..v).collect();
    involution.push(a2);
    involution.push(a1);
    SimplicialInvolution::new(v as usize + 2, facets, involution).unwrap()
}

/// A random complex symmetrized under a random involutive vertex
/// permutation; typically needs barycentric regularization.
fn mirrored(rng: &mut ChaCha8Rng) -> SimplicialInvolution {
    let v: u32 = rng.gen_range(3..=7);
    let mut involution: Vec<u32> = (0..v).collect();
    let mut free: Vec<u32> = (0..v).collect();
    while free.len() >= 2 && rng.gen_bool(0.7) {
        let i = free.swap_remove(rng.gen_range(0..free.len()));
        let j = free.swap_remove(rng.gen_range(0..free.len()));
        involution[i as usize] = j;
        involution[j as usize] = i;
    }
    let base = random_complex(rng, v, 2);
    let mut facets = base.clone();
    for f in &base {
        let mut img: Vec<u32> = f.iter().map(|&x| involution[x as usize]).collect();
        img.sort_unstable();
        facets.push(img);
    }
    SimplicialInvolution::new(v as usize, facets, involution).unwrap()
}

fn identity_on_random(rng: &mut ChaCha8Rng) -> SimplicialInvolution {
    let v = rng.gen_range(2..=12);
    let facets = random_complex(rng, v, 3);
    SimplicialInvolution::new(v as usize, facets, (0..v).collect()).unwrap()
}

fn fuzz_suite() -> Vec<SimplicialInvolution> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5317_7401);
    let mut suite = Vec::new();
    for _ in 0..150 {
        suite.push(doubled(&mut rng));
    }
    for _ in 0..100 {
        suite.push(cone_over_doubled(&mut rng));
    }
    for _ in 0..100 {
        suite.push(suspension_swapped_poles(&mut rng));
    }
    for _ in 0..100 {
        suite.push(identity_on_random(&mut rng));
    }
    for _ in 0..50 {
        suite.push(mirrored(&mut rng));
    }
    suite
}

#[test]
fn criterion_2_smith_fuzzing() {
    let start = Instant::now();
    let suite = fuzz_suite();
    assert!(suite.len() >= 500);
    let mut maximal_count = 0;
    for (i, k) in suite.iter().enumerate() {
        let r = smith_report(k).unwrap_or_else(|e| panic!("fuzz case {i}: {e}"));
        // eq. Smith-dims, exactly
        assert_eq!(
            r.betti_f.total() + 2 * r.coker_dims.iter().sum::<u64>(),
            r.betti_x.total(),
            "fuzz case {i}: Smith-dims"
        );
        // Smith inequality
        assert!(
            r.betti_f.total() <= r.betti_x.total(),
            "fuzz case {i}: Smith inequality"
        );
        assert!(r.exactness_verified, "fuzz case {i}: exactness");
        assert_eq!(r.deficiency % 2, 0, "fuzz case {i}: deficiency parity");
        if r.maximal {
            maximal_count += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "fuzzing took {elapsed:?}");
    println!(
        "ACCEPTANCE 2 (Smith fuzzing): PASS on {} cases ({} maximal) in {elapsed:?}",
        suite.len(),
        maximal_count
    );
}

#[test]
fn criterion_3_relative_quotient_identities() {
    let start = Instant::now();
    let mut checked = 0;
    for case in fixed_suite() {
        if case.deficiency == 0 {
            assert!(
                verify_relative_quotient(&case.involution, None).unwrap(),
                "{}",
                case.name
            );
            checked += 1;
        }
    }
    for (i, k) in fuzz_suite().iter().enumerate() {
        let r = smith_report(k).unwrap();
        if r.maximal {
            assert!(
                verify_relative_quotient(k, None).unwrap(),
                "fuzz case {i}: relative-quotient identity"
            );
            checked += 1;
        }
    }
    assert!(
        checked > 100,
        "expected plenty of maximal instances, got {checked}"
    );
    println!(
        "ACCEPTANCE 3 (relative-quotient identities): PASS on {checked} maximal instances in {:?}",
        start.elapsed()
    );
}

// ---------------------------------------------------------------------------
// criterion 4: complete-intersection invariants

/// Monomial-counting (Griffiths residue) oracle for the middle Hodge row of
/// a degree-d hypersurface of dimension n: the primitive h^{n−q,q} counts
/// monomials in n+2 variables with exponents ≤ d−2 of degree (q+1)d−(n+2).
fn hypersurface_middle_oracle(n: usize, d: u32) -> Vec<u64> {
    let vars = n + 2;
    let cap = d as usize - 1; // exponent values 0..=d−2
    let mut counts = vec![1u128];
    for _ in 0..vars {
        let mut next = vec![0u128; counts.len() + cap - 1];
        for (i, &c) in counts.iter().enumerate() {
            for e in 0..cap {
                next[i + e] += c;
            }
        }
        counts = next;
    }
    (0..=n)
        .map(|q| {
            let p = n - q;
            let target = (q as i64 + 1) * d as i64 - (n as i64 + 2);
            let prim = if target < 0 || target as usize >= counts.len() {
                0
            } else {
                counts[target as usize] as u64
            };
            prim + u64::from(p == q)
        })
        .collect()
}

#[test]
fn criterion_4_complete_intersection_invariants() {
    let start = Instant::now();
    let ci = |a: u32, d: &[u32]| CompleteIntersection::new(a, d.to_vec()).unwrap();
    let euler_cases = [
        (ci(3, &[2]), 4i64),
        (ci(3, &[3]), 9),
        (ci(4, &[3]), -6),
        (ci(5, &[3]), 27),
        (ci(4, &[2, 2]), 8),
    ];
    for (x, chi) in &euler_cases {
        assert_eq!(euler_characteristic(x), *chi, "{x}");
    }
    // Hodge values, cross-checked against the monomial-counting oracle
    assert_eq!(
        hodge_numbers(&ci(5, &[3])).unwrap().middle_row(),
        vec![0, 1, 21, 1, 0]
    );
    assert_eq!(hodge_numbers(&ci(3, &[3])).unwrap().h(1, 1), 7);
    assert_eq!(hodge_numbers(&ci(3, &[2])).unwrap().h(1, 1), 2);
    for (n, d) in [
        (4usize, 3u32),
        (2, 3),
        (2, 2),
        (3, 3),
        (2, 4),
        (3, 4),
        (5, 3),
    ] {
        let x = ci(n as u32 + 1, &[d]);
        assert_eq!(
            hodge_numbers(&x).unwrap().middle_row(),
            hypersurface_middle_oracle(n, d),
            "degree {d} hypersurface of dimension {n}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "CI invariants took {elapsed:?}"
    );
    println!("ACCEPTANCE 4 (complete-intersection invariants): PASS in {elapsed:?}");
}

// ---------------------------------------------------------------------------
// criterion 5: Hilbert-square totals against the direct count

/// Independent count of β_*(X^[2]) for torsion-free X: the graded symmetric
/// square of H^*(X) plus n−1 shifted copies of H^*(X) from the exceptional
/// divisor.
fn square_betti_direct(n: usize, b: &BettiVector) -> u64 {
    let top = 2 * n;
    let mut total = 0u64;
    for k in 0..=2 * top {
        // graded symmetric square in degree k
        let mut sym = 0u64;
        for i in 0..=k / 2 {
            let j = k - i;
            if i == j {
                let m = b.get(i);
                sym += if i % 2 == 0 {
                    m * (m + 1) / 2
                } else {
                    m * m.saturating_sub(1) / 2
                };
            } else if j <= top {
                sym += b.get(i) * b.get(j);
            }
        }
        total += sym;
        // exceptional P^{n−1}-bundle contributes shifts by 2, ..., 2(n−1)
        for j in 1..n {
            if k >= 2 * j && k - 2 * j <= top {
                total += b.get(k - 2 * j);
            }
        }
    }
    total
}

#[test]
fn criterion_5_hilbert_square_totals() {
    let cases = [
        ("P^2", 2usize, vec![1, 0, 1, 0, 1], 9u64),
        ("quadric surface", 2, vec![1, 0, 2, 0, 1], 14),
        ("cubic surface", 2, vec![1, 0, 7, 0, 1], 54),
        ("genus-1 curve", 1, vec![1, 2, 1], 8),
    ];
    for (name, n, betti, expected) in cases {
        let b = BettiVector::new(betti);
        let (formula, exact) = betti_total_square_complex(n, &b, true);
        assert!(exact);
        assert_eq!(formula, expected, "{name}: formula");
        assert_eq!(square_betti_direct(n, &b), expected, "{name}: direct count");
    }
    println!("ACCEPTANCE 5 (Hilbert-square totals): PASS");
}

// ---------------------------------------------------------------------------
// criterion 6: the deficiency theorem

/// Random admissible maximal profile over a fixed complete intersection:
/// palindromic connected components summing to β_*, with the aggregate
/// satisfying the hyperplane-class bound.
fn random_maximal_ci_profile(
    rng: &mut ChaCha8Rng,
    ci: &CompleteIntersection,
) -> RealVarietyProfile {
    let n = ci.dim();
    let betti = complex_betti(ci).unwrap();
    let beta_star = betti.total();
    let half = n / 2;
    'attempt: loop {
        let m = rng.gen_range(1..=3usize);
        let mut comps = vec![vec![0u64; n + 1]; m];
        for c in comps.iter_mut() {
            c[0] = 1;
            c[n] = 1;
        }
        if n == 0 {
            unreachable!("scanned complete intersections have n ≥ 2");
        }
        let mut used = (2 * m) as u64;
        if n == 1 {
            unreachable!();
        }
        // hyperplane bound on the aggregate for degrees 1..=⌊n/2⌋
        for r in 1..=half {
            let cost = if 2 * r == n { 1 } else { 2 };
            comps[0][r] += 1;
            if 2 * r != n {
                comps[0][n - r] += 1;
            }
            used += cost as u64;
        }
        if used > beta_star {
            continue 'attempt;
        }
        let mut budget = beta_star - used;
        // spend the remaining budget with palindromic increments
        let mut guard = 0;
        while budget > 0 {
            guard += 1;
            if guard > 10_000 {
                continue 'attempt;
            }
            let c = rng.gen_range(0..m);
            let r = rng.gen_range(1..=half.max(1));
            let cost = if 2 * r == n { 1 } else { 2 };
            if cost as u64 > budget {
                if n % 2 == 0 && budget == 1 {
                    comps[rng.gen_range(0..m)][n / 2] += 1;
                    budget = 0;
                }
                continue;
            }
            comps[c][r] += 1;
            if 2 * r != n {
                comps[c][n - r] += 1;
            }
            budget -= cost as u64;
        }
        let profile = RealVarietyProfile {
            n,
            complex_betti: betti.clone(),
            real_components: comps.into_iter().map(BettiVector::new).collect(),
            flags: ProfileFlags {
                maximal: true,
                ci: Some(ci.clone()),
                h_odd_zero: n % 2 == 0,
                torsion2_free: true,
                real_algebraic_generation: false,
            },
        };
        if profile.validate().is_empty() {
            return profile;
        }
    }
}

fn ci_pool() -> Vec<CompleteIntersection> {
    [
        (3u32, vec![2u32]),
        (3, vec![3]),
        (3, vec![4]),
        (4, vec![2, 2]),
        (4, vec![3]),
        (4, vec![4]),
        (5, vec![2, 3]),
        (5, vec![3]),
        (6, vec![2, 2]),
        (5, vec![2]),
        (7, vec![3]),
    ]
    .into_iter()
    .map(|(a, d)| CompleteIntersection::new(a, d).unwrap())
    .collect()
}

#[test]
fn criterion_6_deficiency_theorem() {
    // the named profiles
    for (name, p, expected) in [
        ("maximal cubic surface", gallery::cubic_surface_max(), 0u64),
        (
            "maximal quadric, torus real locus",
            gallery::quadric_surface_torus(),
            0,
        ),
        (
            "maximal (2,2) intersection",
            gallery::two_quadrics_surface_max(),
            0,
        ),
        ("maximal cubic threefold", gallery::cubic_threefold_max(), 0),
        (
            "maximal quartic K3, two components",
            gallery::quartic_k3_two_sheets(),
            4,
        ),
    ] {
        assert!(p.validate().is_empty(), "{name}");
        let r = deficiency_square(&p).unwrap();
        assert_eq!(r.deficiency, expected, "{name}");
    }

    // fuzz: the closed formula and the odd-coro criterion agree
    let mut rng = ChaCha8Rng::seed_from_u64(0xDEF1_C1EC);
    let pool = ci_pool();
    let mut count = 0;
    let mut maximal_squares = 0;
    while count < 1000 {
        let ci = &pool[rng.gen_range(0..pool.len())];
        let p = random_maximal_ci_profile(&mut rng, ci);
        let r = deficiency_square(&p).unwrap();
        let a = p.aggregate_real();
        let ones = (0..p.n / 2).all(|i| a.get(i) == 1);
        assert_eq!(r.deficiency == 0, ones, "formula vs odd-coro on {ci}");
        assert_eq!(r.deficiency % 4, 0, "deficiency divisible by 4 on {ci}");
        // third route: Theorem defect-odd evaluated straight off the sums
        let direct: u64 = 4
            * ((1..=(p.n / 2) as i64)
                .map(|l| a.sum_range(0, l - 1))
                .sum::<u64>()
                - d_of_n(p.n).unwrap());
        assert_eq!(r.deficiency, direct);
        if r.deficiency == 0 {
            maximal_squares += 1;
        }
        count += 1;
    }
    println!(
        "ACCEPTANCE 6 (deficiency theorem): PASS on 5 named + {count} fuzz profiles \
         ({maximal_squares} with maximal square)"
    );
}

// ---------------------------------------------------------------------------
// criterion 7: classification regression

#[test]
fn criterion_7_classification_regression() {
    let start = Instant::now();
    let small = scan(&ScanRange {
        max_dim: 6,
        max_codim: 3,
        max_degree: 4,
    })
    .unwrap();
    let equal_patterns: Vec<(usize, Vec<u32>)> = small
        .iter()
        .filter(|r| r.equal)
        .map(|r| (r.n, r.degrees.clone()))
        .collect();
    for n in [2usize, 4, 6] {
        assert!(equal_patterns.contains(&(n, vec![])), "linear at n={n}");
        assert!(equal_patterns.contains(&(n, vec![2])), "quadric at n={n}");
        assert!(equal_patterns.contains(&(n, vec![2, 2])), "(2,2) at n={n}");
    }
    assert!(equal_patterns.contains(&(2, vec![3])), "cubic surface");
    assert_eq!(equal_patterns.len(), 10, "exactly the four families");

    let larger = scan(&ScanRange {
        max_dim: 8,
        max_codim: 3,
        max_degree: 5,
    })
    .unwrap();
    for row in &larger {
        assert!(
            row.h_kk <= row.b_2k,
            "h^kk exceeds b_2k: n={} {:?}",
            row.n,
            row.degrees
        );
        if row.equal {
            let family_ok = row.degrees.is_empty()
                || row.degrees == vec![2]
                || row.degrees == vec![2, 2]
                || (row.n == 2 && row.degrees == vec![3]);
            assert!(
                family_ok,
                "unexpected equality row: n={} {:?}",
                row.n, row.degrees
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "classification scans took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE 7 (classification regression): PASS, {} + {} rows in {elapsed:?}",
        small.len(),
        larger.len()
    );
}

// ---------------------------------------------------------------------------
// criterion 8: identity suite

/// Random admissible maximal profile without any complete-intersection
/// structure: components are palindromic and connected, and the complex
/// vector is synthesized to match the real total.
fn random_maximal_profile(rng: &mut ChaCha8Rng, n: usize) -> RealVarietyProfile {
    let m = rng.gen_range(1..=3usize);
    let mut comps = vec![vec![0u64; n + 1]; m];
    for c in comps.iter_mut() {
        c[0] = 1;
        c[n] = 1;
        for _ in 0..rng.gen_range(0..6) {
            let r = rng.gen_range(1..=n / 2 + usize::from(n % 2 == 1));
            let r = r.min(n - r);
            c[r] += 1;
            if r != n - r {
                c[n - r] += 1;
            }
        }
    }
    let total: u64 = comps.iter().flatten().sum();
    let mut complex = vec![0u64; 2 * n + 1];
    complex[0] = 1;
    complex[2 * n] = 1;
    complex[n] += total - 2;
    RealVarietyProfile {
        n,
        complex_betti: BettiVector::new(complex),
        real_components: comps.into_iter().map(BettiVector::new).collect(),
        flags: ProfileFlags {
            maximal: true,
            ci: None,
            h_odd_zero: false,
            torsion2_free: false,
            real_algebraic_generation: false,
        },
    }
}

#[test]
fn criterion_8_identity_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1DE2_7173);
    let mut per_parity = [0usize; 2];
    for i in 0..1200 {
        let n = rng.gen_range(2..=7usize);
        let p = random_maximal_profile(&mut rng, n);
        assert!(
            p.validate().is_empty(),
            "case {i}: generator made an invalid profile"
        );
        assert!(
            p.check_betti_identities().unwrap(),
            "case {i}: identities failed for n={n}, aggregate {}",
            p.aggregate_real()
        );
        per_parity[n % 2] += 1;
    }
    assert!(per_parity[0] >= 300 && per_parity[1] >= 300);
    println!(
        "ACCEPTANCE 8 (identity suite): PASS on {} even-n and {} odd-n maximal profiles",
        per_parity[0], per_parity[1]
    );
}

// ---------------------------------------------------------------------------
// criterion 9: cross-formula coherence

#[test]
fn criterion_9_cross_formula_coherence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0_43E2);

    // betti_hi: per-degree sums equal the closed-form total on fuzz vectors
    let mut hi_checked = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(1..=6usize);
        let mut f = vec![0u64; n + 1];
        f[0] = 1;
        f[n] = 1;
        for _ in 0..rng.gen_range(0..8) {
            let r = rng.gen_range(0..=n / 2);
            f[r] += 1;
            if r != n - r {
                f[n - r] += 1;
            }
        }
        let f = BettiVector::new(f);
        let hi = betti_hi(&f, n).unwrap(); // errs internally on any mismatch
        assert_eq!(hi.per_degree.total(), hi.total);
        hi_checked += 1;
    }

    // betti_er: total is always n·β_*(X(R)), and betti_h0 doubles to n·β_*
    let pool = ci_pool();
    for _ in 0..200 {
        let ci = &pool[rng.gen_range(0..pool.len())];
        let p = random_maximal_ci_profile(&mut rng, ci);
        let er = betti_er(&p);
        assert_eq!(er.total, p.n as u64 * p.aggregate_real().total());
        assert_eq!(er.per_degree.total(), er.total);
        let h0 = betti_h0(&p).unwrap();
        assert_eq!(2 * h0.total, p.n as u64 * p.beta_star());
        // maximal profiles: Σ β_*(ℍ_i) = (Σ β_*²(F_i) + (n−1)β_*)/2
        let hi_totals: u64 = p
            .real_components
            .iter()
            .map(|f| betti_hi(f, p.n).unwrap().total)
            .sum();
        let squares: u64 = p
            .real_components
            .iter()
            .map(|f| f.total() * f.total())
            .sum();
        assert_eq!(2 * hi_totals, squares + (p.n as u64 - 1) * p.beta_star());
        // χ(X^[2](R)) comes out integral on every validated profile
        euler_char_square_real(&p, None).unwrap();
        // a rank is bounded by source and target dimensions
        for k in 0..p.n {
            let mu = rank_mu(k, &p).unwrap();
            let hi_sum: u64 = p
                .real_components
                .iter()
                .map(|f| betti_hi(f, p.n).unwrap().per_degree.get(k))
                .sum();
            assert!(mu <= er.per_degree.get(k));
            assert!(mu <= h0.per_degree.get(k) + hi_sum, "k={k}");
        }
    }

    // deficiency_via_mu ∘ implied_rank_mu is the identity on a grid
    // (β_odd kept even so n·β_* + β_odd + defi is even: rank μ_* integral)
    let mut grid = 0;
    for defi in (0..10i64).map(|d| 2 * d) {
        for n in 1..=10usize {
            for beta in 1..=10u64 {
                let beta_star = 2 * beta;
                let beta_odd = 2 * (beta % 3);
                let rank = implied_rank_mu(defi, n, beta_star, beta_odd).unwrap();
                assert_eq!(deficiency_via_mu(rank, n, beta_star, beta_odd), defi);
                grid += 1;
            }
        }
    }
    // the parity guard itself
    assert!(implied_rank_mu(0, 1, 1, 0).is_err());
    assert!(grid >= 1000);
    println!(
        "ACCEPTANCE 9 (cross-formula coherence): PASS ({hi_checked} strata vectors, {grid} grid triples)"
    );
}
