//! Euler characteristics of HNN extensions and amalgams over finite groups.
use gogchi::calculus::{chi_amalgam, chi_hnn};
use gogchi::Rational;

fn main() {
    let third = Rational::unit_fraction(3);
    let half = Rational::unit_fraction(2);
    println!("Z/2 * Z/3: {}", chi_amalgam(half, third, 1));
    println!("Z/4 *_Z/2 Z/6: {}", chi_amalgam(Rational::unit_fraction(4), Rational::unit_fraction(6), 2));
    println!("Z/6 *_Z/2 (HNN): {}", chi_hnn(Rational::unit_fraction(6), 2));
    // SL(2, Z) = Z/4 *_Z/2 Z/6
    let sl2 = chi_amalgam(Rational::unit_fraction(4), Rational::unit_fraction(6), 2);
    println!("index-12 torsion-free subgroup: chi = {}", sl2 * Rational::from(12u64));
}
