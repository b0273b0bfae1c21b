//! Exact invariants of projective complete intersections: Euler
//! characteristics by Chern-class coefficient extraction, Betti numbers,
//! and Hodge diamonds from the χ_y generating function.
//!
//! Run with `cargo run --example complete_intersections`.

use smith_thom::{
    complex_betti, d_of_n, euler_characteristic, hodge_numbers, CompleteIntersection,
};

fn ci(ambient: u32, degrees: &[u32]) -> CompleteIntersection {
    CompleteIntersection::new(ambient, degrees.to_vec()).unwrap()
}

fn main() {
    let varieties = [
        ("quadric surface", ci(3, &[2])),
        ("cubic surface", ci(3, &[3])),
        ("quartic K3 surface", ci(3, &[4])),
        ("cubic threefold", ci(4, &[3])),
        ("cubic fourfold", ci(5, &[3])),
        ("intersection of two quadrics in P^4", ci(4, &[2, 2])),
        ("intersection of two quadrics in P^6", ci(6, &[2, 2])),
        ("projective plane", ci(2, &[])),
    ];

    for (name, x) in varieties {
        let chi = euler_characteristic(&x);
        let betti = complex_betti(&x).unwrap();
        let hodge = hodge_numbers(&x).unwrap();
        println!("{name}  [{x}]");
        println!("  χ       {chi}");
        println!("  betti   {betti}  (total {})", betti.total());
        println!("  middle Hodge row  {:?}", hodge.middle_row());
        if x.dim() % 2 == 0 {
            let k = x.dim() / 2;
            println!(
                "  h^{{{k},{k}}} = {}  vs  b_{} = {}",
                hodge.h(k, k),
                x.dim(),
                betti.get(x.dim())
            );
        }
        println!();
    }

    // the deficiency constant d(n) equals the triangular number of ⌊n/2⌋
    let ds: Vec<u64> = (2..=10).map(|n| d_of_n(n).unwrap()).collect();
    println!("d(n) for n = 2..10: {ds:?}");
}
