//! For a real cubic hypersurface X of dimension n the deficiencies of X,
//! its Hilbert square, and its Fano variety of lines F(X) satisfy
//! defi(X^[2]) = (n+1)·defi(X) + defi(F(X)). Combined with the deficiency
//! formula this shows the Fano variety of a maximal even-dimensional cubic
//! (dimension ≥ 4) is never maximal.
//!
//! Run with `cargo run --example fano_variety_of_lines`.

use smith_thom::{cubic_fano_deficiency, deficiency_square, gallery};

fn main() {
    // maximal cubic threefold: everything vanishes together
    let threefold = gallery::cubic_threefold_max();
    let defi_square = deficiency_square(&threefold).unwrap().deficiency;
    let fano = cubic_fano_deficiency(3, 0, defi_square).unwrap();
    println!("maximal cubic threefold: defi(X^[2]) = {defi_square}, defi(F(X)) = {fano}");

    // maximal cubic fourfold: the square misses maximality, and the gap
    // lands on the Fano variety of lines
    let fourfold = gallery::cubic_fourfold_max();
    let defi_square = deficiency_square(&fourfold).unwrap().deficiency;
    let fano = cubic_fano_deficiency(4, 0, defi_square).unwrap();
    println!("maximal cubic fourfold:  defi(X^[2]) = {defi_square}, defi(F(X)) = {fano}");
    assert!(
        fano > 0,
        "the Fano variety of a maximal cubic fourfold is not maximal"
    );

    // exact cancellation for a non-maximal cubic
    let fano = cubic_fano_deficiency(4, 2, 10).unwrap();
    println!("defi(X) = 2, defi(X^[2]) = 10 in dimension 4: defi(F(X)) = {fano}");
}
