//! Euler characteristic of the image of a generic surface.
//!
//! When a closed surface F maps generically into a 3-manifold, its image
//! gains χ at the singular values: each of the `t` triple values
//! contributes +1 and each of the `b` branch values +1/2, so
//!
//!     χ(image) = χ(F) + t + b/2 .
//!
//! The result is a half-integer, held exactly (no floats) by `HalfInt`.
//!
//! Run with: cargo run --example euler_characteristic

use daisy::model::euler_char_of_image;

fn main() {
    println!("surface            chi(F)   t   b   chi(image)");
    for (name, chi_f, t, b) in [
        ("embedded sphere", 2, 0, 0),
        ("sphere, 2 branch", 2, 0, 2),
        ("torus, 3 triple", 0, 3, 0),
        ("torus, 3t + 1b", 0, 3, 1),
        ("genus 3, 1t + 3b", -4, 1, 3),
    ] {
        let chi = euler_char_of_image(chi_f, t, b);
        let integer = if chi.is_integer() { "" } else { "  (half-integral)" };
        println!("{name:<18} {chi_f:>6} {t:>3} {b:>3}   {chi}{integer}");
    }

    // The doubled value is always exact.
    let chi = euler_char_of_image(0, 3, 1);
    assert_eq!(chi.twice(), 7);
    println!("\ntwice chi(torus, 3t + 1b) = {}", chi.twice());
}
